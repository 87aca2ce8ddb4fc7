#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfix/point.hpp"

namespace gfix {

/// Relative slack for non-strict inequalities: lhs <= rhs + tol * max(1, |rhs|).
inline constexpr double kDefaultTolerance = 1e-9;
/// A value must exceed this to witness a strict positivity axiom.
inline constexpr double kStrictFloor = 1e-12;
inline constexpr double kDefaultMinSeparation = 1e-3;
/// Number of worst violations retained in a CheckReport.
inline constexpr std::size_t kMaxReportedViolations = 10;

/// Per-coordinate sampling bounds.
struct Interval {
  double low = -10.0;
  double high = 10.0;
};
using Box = std::vector<Interval>;

Box uniform_box(std::size_t dim, double low, double high);

/// A G-metric over fixed-dimension points.
///
/// `g` receives points that already passed `in_domain`. `admits` is the
/// sampling filter: it may be stricter than the domain (the sign space keeps
/// samples at least `min_separation` away from 0).
struct GSpace {
  using Evaluator = std::function<double(const Point&, const Point&, const Point&)>;
  using DomainPredicate = std::function<bool(const Point&)>;
  using SamplingFilter = std::function<bool(const Point&, double min_separation)>;

  std::string name;
  std::size_t dimension = 1;
  Evaluator g;
  DomainPredicate in_domain;  // empty means every finite point
  SamplingFilter admits;      // empty means in_domain

  bool contains(const Point& p) const;

  /// Draws `count` admissible points uniformly from `box` using a stream
  /// seeded with `seed`; inadmissible draws are rejected and redrawn.
  std::vector<Point> sample(std::uint64_t seed, std::size_t count, const Box& box,
                            double min_separation) const;
};

struct SamplePlan {
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  Box box;  // empty means [-10, 10] in every coordinate
  double min_separation = kDefaultMinSeparation;

  /// Throws InputError unless count >= 1, min_separation >= 0 and every
  /// interval has low < high.
  void validate() const;
  /// Box resolved against a space dimension (default box filled in).
  Box resolved_box(std::size_t dim) const;
};

struct Violation {
  std::string rule;             // axiom or inequality identifier
  std::vector<Point> witness;   // operands in rule order
  std::optional<double> weight; // lambda for convexity rules
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;          // amount by which the rule is broken (> 0)
};

struct CheckReport {
  std::size_t total_checks = 0;
  std::vector<Violation> violations;  // worst first, at most kMaxReportedViolations
  std::size_t violation_count = 0;    // including those not retained
  double worst_margin = 0.0;          // max over all checks; <= 0 when passed
  std::optional<double> worst_ratio;  // lhs / max(rhs, 1e-15), contraction checks only
  bool passed = true;
};

/// Accumulates check outcomes into a CheckReport. Margins are defined as
/// `lhs - rhs - allowance`; positive margins are violations.
class ReportBuilder {
 public:
  /// Records lhs <= rhs + tol * max(1, |rhs|). Returns true when it holds.
  bool check_le(std::string_view rule, double lhs, double rhs, double tol,
                std::vector<Point> witness, std::optional<double> weight = std::nullopt);
  /// Records |lhs - rhs| <= tol * max(1, |rhs|).
  bool check_eq(std::string_view rule, double lhs, double rhs, double tol,
                std::vector<Point> witness, std::optional<double> weight = std::nullopt);
  /// Records value > floor.
  bool check_gt(std::string_view rule, double value, double floor, std::vector<Point> witness);

  void note_ratio(double lhs, double rhs);
  CheckReport finish() &&;

 private:
  bool record(std::string_view rule, double lhs, double rhs, double margin,
              std::vector<Point>&& witness, std::optional<double> weight);

  CheckReport report_;
  bool any_check_ = false;
};

/// Merges `other` into `into`, keeping the worst violations.
void merge_reports(CheckReport& into, const CheckReport& other);

/// G(x, y, z). Throws InputError if a point lies outside the domain or has
/// the wrong dimension.
double eval_g(const GSpace& space, const Point& x, const Point& y, const Point& z);

/// Samples the plan and checks the five defining axioms:
///   G1  G(p,p,p) = 0
///   G2  G(x,x,y) > 0 for separated x, y
///   G3  G(x,x,y) <= G(x,y,z) for separated z, y
///   G4  symmetry under all six argument permutations
///   G5  G(x,y,z) <= G(x,a,a) + G(a,y,z)
/// A deterministic structured pass over box anchors (corners, midpoints and
/// every coincident combination of them) runs in addition to the random draws.
CheckReport check_axioms(const GSpace& space, const SamplePlan& plan,
                         double tol = kDefaultTolerance);

/// Checks the inequalities every G-metric inherits from its axioms:
///   P1  G = 0 at x=y=z, and no separated triple has G <= kStrictFloor
///   P2  G(x,y,z) <= G(x,x,y) + G(x,x,z)
///   P3  G(x,y,y) <= 2 G(y,x,x)
///   P4  G(x,y,z) <= G(x,a,z) + G(a,y,z)
///   P5  G(x,y,z) <= 2/3 (G(x,y,a) + G(x,a,z) + G(a,y,z))
///   P6  G(x,y,z) <= G(x,a,a) + G(y,a,a) + G(z,a,a)
CheckReport check_derived(const GSpace& space, const SamplePlan& plan,
                          double tol = kDefaultTolerance);

}  // namespace gfix
