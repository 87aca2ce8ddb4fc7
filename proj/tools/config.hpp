#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gfix/gfix.hpp"

namespace gfix::cli {

/// Bad flags, config files or catalog keys. Mapped to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Flat key=value settings; keys are flag names without the leading dashes.
using Settings = std::map<std::string, std::string>;

Settings default_settings();
bool is_known_key(std::string_view key);

/// Reads `key = value` lines. Blank lines, `#`/`;` comments and `[section]`
/// headers are skipped; unknown keys are a ConfigError.
Settings load_config_file(const std::filesystem::path& path);

/// "1.5" (broadcast to every coordinate) or a list "1,2,3" / "1/2/3".
Point parse_point(std::string_view text, std::size_t dim);

/// "affine:k=0.5,center=0", "identity", "translate:shift=1", "constant:value=2".
Mapping parse_mapping(std::string_view text, std::size_t dim);

/// "constant" (step from `alpha`), "constant:0.5", "harmonic", "power:2",
/// "explicit:0.5/0.25".
StepSchedule parse_schedule(std::string_view text, std::string_view alpha);

/// Condition name plus "a=0.5,b=0.1" style coefficients.
ContractionSpec parse_contraction(std::string_view condition, std::string_view coeff);

/// Settings after defaults, GFIX_SEED, config file and flags were layered,
/// with every value parsed into its domain type.
struct ExperimentConfig {
  Settings raw;

  SpaceCatalogEntry space;
  std::optional<ContractionSpec> condition;
  StepSchedule schedule = StepSchedule::constant(0.5);
  StoppingRule stop;
  SamplePlan plan;
  double tol = kDefaultTolerance;
  std::string structure;
  std::string mapping;
  std::string x0;
  std::string out;

  static ExperimentConfig resolve(const Settings& raw);
};

}  // namespace gfix::cli
