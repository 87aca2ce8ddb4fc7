#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfix/gmetric.hpp"

namespace gfix {

/// Which contractive inequality bounds G(Tx, Ty, Tz).
enum class ConditionKind {
  FourTerm,     // a G(x,y,z) + b G(x,Tx,Tx) + c G(y,Ty,Ty) + d G(z,Tz,Tz)
  FourTermAlt,  // a G(x,y,z) + b G(x,x,Tx) + c G(y,y,Ty) + d G(z,z,Tz)
  Sum,          // a G(x,y,z) + b {G(x,Tx,Tx) + G(y,Ty,Ty) + G(z,Tz,Tz)}
  Max,          // a G(x,y,z) + b max{G(x,Tx,Tx), G(y,Ty,Ty), G(z,Tz,Tz)}
  ThreeTerm,    // a G(x,Tx,Tx) + b G(y,Ty,Ty) + c G(z,Tz,Tz)
  KSum,         // k {G(x,Tx,Tx) + G(y,Ty,Ty) + G(z,Tz,Tz)}
};

/// CLI spelling: "four-term", "four-term-alt", "sum", "max", "three-term", "k-sum".
std::string_view condition_name(ConditionKind kind);
ConditionKind parse_condition(std::string_view name);

/// Coefficient names a kind accepts, in positional order.
std::vector<char> coefficient_names(ConditionKind kind);

struct ContractionSpec {
  ConditionKind kind = ConditionKind::FourTerm;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double k = 0.0;

  /// Sets coefficient `name`; throws InputError if the kind has no such
  /// coefficient or the value is negative or not finite.
  void set(char name, double value);
  double get(char name) const;
  /// Throws InputError unless every coefficient is finite and nonnegative.
  void validate() const;
};

/// Self-map T of a space.
struct Mapping {
  using Evaluator = std::function<Point(const Point&)>;

  std::string name;
  Evaluator t;
  std::optional<Point> known_fixed_point;

  Point operator()(const Point& x) const { return t(x); }
};

/// T x = center + factor (x - center). The center is recorded as the known
/// fixed point when factor < 1.
Mapping make_affine_contraction(const Point& center, double factor);
/// T x = x + shift; has no fixed point when shift != 0.
Mapping make_translation(const Point& shift);
/// T x = value.
Mapping make_constant_map(const Point& value);
Mapping make_identity_map();

/// True when the mapping's fixed point satisfies G(Tu, u, u) <= 1e-9.
bool fixed_point_consistent(const GSpace& space, const Mapping& mapping);

struct ApplicabilityVerdict {
  std::string theorem;
  bool satisfied = false;
  /// Named slacks of the theorem's strict constraints; satisfied iff all > 0.
  std::vector<std::pair<std::string, double>> residuals;
  /// Reported alongside but not part of `satisfied` (the existence theorem's
  /// a+b+c+d < 1 for the four-term kinds).
  std::vector<std::pair<std::string, double>> informational;
  std::string caveat;
};

/// Right-hand side of the condition at (x, y, z).
double rhs_value(const ContractionSpec& spec, const GSpace& space, const Mapping& mapping,
                 const Point& x, const Point& y, const Point& z);

/// Checks G(Tx,Ty,Tz) <= rhs (rule "C") on sampled triples; worst_ratio is
/// lhs / max(rhs, 1e-15).
CheckReport check_condition(const ContractionSpec& spec, const GSpace& space,
                            const Mapping& mapping, const SamplePlan& plan,
                            double tol = kDefaultTolerance);

/// Coefficient constraints of the convergence result that covers `spec.kind`.
ApplicabilityVerdict check_applicability(const ContractionSpec& spec);

}  // namespace gfix
