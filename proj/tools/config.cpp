#include "config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

namespace gfix::cli {

namespace {

constexpr std::array<std::string_view, 19> kKeys = {
    "space",   "mapping",   "condition",  "coeff",          "schedule",     "alpha",  "x0",
    "max-iters", "residual-tol", "error-tol", "seed",       "samples",      "tol",    "min-separation",
    "box-low", "box-high",  "structure",  "out",            "config",
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find_first_of(seps, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(std::string_view text, std::string_view what) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value)) {
    throw ConfigError(std::string(what) + ": '" + std::string(text) + "' is not a finite real");
  }
  return value;
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(what) + ": '" + std::string(text) + "' is not an unsigned integer");
  }
  return value;
}

/// "k=0.5,center=0" -> {{"k","0.5"},{"center","0"}}.
std::map<std::string, std::string> parse_params(std::string_view text, std::string_view what) {
  std::map<std::string, std::string> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split(text, ",")) {
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(what) + ": expected name=value, got '" + std::string(item) + "'");
    }
    out[std::string(trim(item.substr(0, eq)))] = std::string(trim(item.substr(eq + 1)));
  }
  return out;
}

void reject_extra(const std::map<std::string, std::string>& params,
                  std::initializer_list<std::string_view> allowed, std::string_view what) {
  for (const auto& [name, value] : params) {
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      throw ConfigError(std::string(what) + " has no parameter '" + name + "'");
    }
  }
}

}  // namespace

Settings default_settings() {
  return {
      {"space", "perimeter-1"},
      {"mapping", "affine:k=0.5,center=0"},
      {"condition", ""},
      {"coeff", ""},
      {"schedule", "constant"},
      {"alpha", "0.5"},
      {"x0", "1"},
      {"max-iters", "10000"},
      {"residual-tol", "1e-10"},
      {"error-tol", ""},
      {"seed", "0"},
      {"samples", "1000"},
      {"tol", "1e-09"},
      {"min-separation", "0.001"},
      {"box-low", "-10"},
      {"box-high", "10"},
      {"structure", "linear"},
      {"out", ""},
  };
}

bool is_known_key(std::string_view key) {
  return std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end();
}

Settings load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  Settings out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#' || s.front() == ';' || s.front() == '[') continue;
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key(trim(s.substr(0, eq)));
    if (!is_known_key(key) || key == "config") {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    out[key] = std::string(trim(s.substr(eq + 1)));
  }
  return out;
}

Point parse_point(std::string_view text, std::size_t dim) {
  const auto parts = split(text, ",/");
  std::vector<double> coords;
  if (parts.size() == 1) {
    coords.assign(dim, parse_real(parts.front(), "point"));
  } else {
    if (parts.size() != dim) {
      throw ConfigError("point '" + std::string(text) + "' has " + std::to_string(parts.size()) +
                        " coordinates, space dimension is " + std::to_string(dim));
    }
    for (auto p : parts) coords.push_back(parse_real(p, "point"));
  }
  return Point(std::move(coords));
}

Mapping parse_mapping(std::string_view text, std::size_t dim) {
  const std::size_t colon = text.find(':');
  const std::string_view kind = trim(text.substr(0, colon));
  const auto params =
      parse_params(colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1), "mapping");
  const auto get = [&](const std::string& name, std::string_view fallback) -> std::string {
    auto it = params.find(name);
    return it == params.end() ? std::string(fallback) : it->second;
  };

  if (kind == "affine") {
    reject_extra(params, {"k", "center"}, "affine mapping");
    const double k = parse_real(get("k", "0.5"), "affine k");
    if (k < 0.0) throw ConfigError("affine k must be nonnegative");
    return make_affine_contraction(parse_point(get("center", "0"), dim), k);
  }
  if (kind == "identity") {
    reject_extra(params, {}, "identity mapping");
    return make_identity_map();
  }
  if (kind == "translate") {
    reject_extra(params, {"shift"}, "translate mapping");
    return make_translation(parse_point(get("shift", "1"), dim));
  }
  if (kind == "constant") {
    reject_extra(params, {"value"}, "constant mapping");
    return make_constant_map(parse_point(get("value", "0"), dim));
  }
  throw ConfigError("unknown mapping '" + std::string(kind) + "'");
}

StepSchedule parse_schedule(std::string_view text, std::string_view alpha) {
  const std::size_t colon = text.find(':');
  const std::string_view kind = trim(text.substr(0, colon));
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  try {
    if (kind == "constant") {
      return StepSchedule::constant(parse_real(arg.empty() ? alpha : arg, "constant schedule"));
    }
    if (kind == "harmonic") return StepSchedule::harmonic();
    if (kind == "power") return StepSchedule::power(parse_real(arg, "power schedule exponent"));
    if (kind == "explicit") {
      std::vector<double> values;
      for (auto part : split(arg, "/,")) values.push_back(parse_real(part, "explicit schedule"));
      return StepSchedule::explicit_list(std::move(values));
    }
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown schedule '" + std::string(kind) + "'");
}

ContractionSpec parse_contraction(std::string_view condition, std::string_view coeff) {
  ContractionSpec spec;
  try {
    spec.kind = parse_condition(trim(condition));
    for (const auto& [name, value] : parse_params(coeff, "coefficients")) {
      if (name.size() != 1) throw ConfigError("unknown coefficient '" + name + "'");
      spec.set(name.front(), parse_real(value, "coefficient " + name));
    }
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

ExperimentConfig ExperimentConfig::resolve(const Settings& raw) {
  ExperimentConfig cfg;
  cfg.raw = raw;
  const auto at = [&](const std::string& key) -> const std::string& { return raw.at(key); };

  try {
    cfg.space = parse_space_key(at("space"));
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  if (!at("condition").empty()) cfg.condition = parse_contraction(at("condition"), at("coeff"));
  else if (!at("coeff").empty()) throw ConfigError("--coeff given without --condition");
  cfg.schedule = parse_schedule(at("schedule"), at("alpha"));

  cfg.stop.max_iters = parse_unsigned(at("max-iters"), "max-iters");
  cfg.stop.residual_tol = parse_real(at("residual-tol"), "residual-tol");
  if (!at("error-tol").empty()) cfg.stop.error_tol = parse_real(at("error-tol"), "error-tol");
  try {
    cfg.stop.validate();
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }

  cfg.plan.seed = parse_unsigned(at("seed"), "seed");
  cfg.plan.count = parse_unsigned(at("samples"), "samples");
  cfg.plan.min_separation = parse_real(at("min-separation"), "min-separation");
  cfg.plan.box = {Interval{parse_real(at("box-low"), "box-low"), parse_real(at("box-high"), "box-high")}};
  try {
    cfg.plan.validate();
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }

  cfg.tol = parse_real(at("tol"), "tol");
  if (cfg.tol < 0.0) throw ConfigError("tol must be nonnegative");
  cfg.structure = at("structure");
  cfg.mapping = at("mapping");
  cfg.x0 = at("x0");
  cfg.out = at("out");
  return cfg;
}

}  // namespace gfix::cli
