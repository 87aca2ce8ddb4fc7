#include "gfix/gmetric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "gfix/errors.hpp"
#include "gfix/rng.hpp"
#include "gfix/sampling.hpp"

namespace gfix {

Box uniform_box(std::size_t dim, double low, double high) { return Box(dim, Interval{low, high}); }

bool GSpace::contains(const Point& p) const {
  if (p.dim() != dimension) return false;
  return !in_domain || in_domain(p);
}

std::vector<Point> GSpace::sample(std::uint64_t seed, std::size_t count, const Box& box,
                                  double min_separation) const {
  if (box.size() != dimension) {
    throw InputError("sampling box has " + std::to_string(box.size()) + " intervals, space " +
                     name + " has dimension " + std::to_string(dimension));
  }
  constexpr std::size_t kMaxRejections = 100000;
  SplitMix64 rng(seed);
  std::vector<Point> out;
  out.reserve(count);
  std::size_t rejected = 0;
  std::vector<double> c(dimension);
  while (out.size() < count) {
    for (std::size_t i = 0; i < dimension; ++i) c[i] = rng.uniform(box[i].low, box[i].high);
    Point p(c);
    const bool ok = admits ? admits(p, min_separation) : contains(p);
    if (ok) {
      out.push_back(std::move(p));
    } else if (++rejected > kMaxRejections) {
      throw InputError("sampling box for " + name + " contains no admissible points");
    }
  }
  return out;
}

void SamplePlan::validate() const {
  if (count < 1) throw InputError("sample count must be at least 1");
  if (!(min_separation >= 0.0) || !std::isfinite(min_separation)) {
    throw InputError("min_separation must be a finite nonnegative real");
  }
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (!(box[i].low < box[i].high) || !std::isfinite(box[i].low) || !std::isfinite(box[i].high)) {
      throw InputError("sampling interval " + std::to_string(i) + " must satisfy low < high");
    }
  }
}

Box SamplePlan::resolved_box(std::size_t dim) const {
  if (box.empty()) return uniform_box(dim, -10.0, 10.0);
  if (box.size() == 1 && dim > 1) return Box(dim, box.front());
  return box;
}

// ---------------------------------------------------------------------------
// ReportBuilder

bool ReportBuilder::record(std::string_view rule, double lhs, double rhs, double margin,
                           std::vector<Point>&& witness, std::optional<double> weight) {
  ++report_.total_checks;
  if (!any_check_ || margin > report_.worst_margin) report_.worst_margin = margin;
  any_check_ = true;
  // NaN margins count as violations.
  if (margin <= 0.0) return true;

  ++report_.violation_count;
  auto& v = report_.violations;
  if (v.size() < kMaxReportedViolations || margin > v.back().margin) {
    Violation entry{std::string(rule), std::move(witness), weight, lhs, rhs, margin};
    auto pos = std::upper_bound(v.begin(), v.end(), margin,
                                [](double m, const Violation& e) { return m > e.margin; });
    v.insert(pos, std::move(entry));
    if (v.size() > kMaxReportedViolations) v.pop_back();
  }
  return false;
}

bool ReportBuilder::check_le(std::string_view rule, double lhs, double rhs, double tol,
                             std::vector<Point> witness, std::optional<double> weight) {
  const double allowance = tol * std::max(1.0, std::abs(rhs));
  double margin = lhs - rhs - allowance;
  if (std::isnan(margin)) margin = std::numeric_limits<double>::infinity();
  return record(rule, lhs, rhs, margin, std::move(witness), weight);
}

bool ReportBuilder::check_eq(std::string_view rule, double lhs, double rhs, double tol,
                             std::vector<Point> witness, std::optional<double> weight) {
  const double allowance = tol * std::max(1.0, std::abs(rhs));
  double margin = std::abs(lhs - rhs) - allowance;
  if (std::isnan(margin)) margin = std::numeric_limits<double>::infinity();
  return record(rule, lhs, rhs, margin, std::move(witness), weight);
}

bool ReportBuilder::check_gt(std::string_view rule, double value, double floor,
                             std::vector<Point> witness) {
  // Margin is how far `value` falls short of clearing the floor; a value
  // exactly at the floor counts as broken.
  double margin = floor - value;
  if (margin == 0.0) margin = std::numeric_limits<double>::denorm_min();
  if (std::isnan(margin)) margin = std::numeric_limits<double>::infinity();
  return record(rule, floor, value, margin, std::move(witness), std::nullopt);
}

void ReportBuilder::note_ratio(double lhs, double rhs) {
  const double ratio = lhs / std::max(rhs, 1e-15);
  if (!report_.worst_ratio || ratio > *report_.worst_ratio) report_.worst_ratio = ratio;
}

CheckReport ReportBuilder::finish() && {
  report_.passed = report_.violation_count == 0;
  return std::move(report_);
}

void merge_reports(CheckReport& into, const CheckReport& other) {
  const bool into_empty = into.total_checks == 0;
  into.total_checks += other.total_checks;
  into.violation_count += other.violation_count;
  if (other.total_checks > 0 && (into_empty || other.worst_margin > into.worst_margin)) {
    into.worst_margin = other.worst_margin;
  }
  if (other.worst_ratio && (!into.worst_ratio || *other.worst_ratio > *into.worst_ratio)) {
    into.worst_ratio = other.worst_ratio;
  }
  into.violations.insert(into.violations.end(), other.violations.begin(), other.violations.end());
  std::stable_sort(into.violations.begin(), into.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.margin > b.margin; });
  if (into.violations.size() > kMaxReportedViolations) {
    into.violations.resize(kMaxReportedViolations);
  }
  into.passed = into.violation_count == 0;
}

// ---------------------------------------------------------------------------

double eval_g(const GSpace& space, const Point& x, const Point& y, const Point& z) {
  for (const Point* p : {&x, &y, &z}) {
    if (p->dim() != space.dimension) {
      throw InputError("point " + to_string(*p) + " has dimension " + std::to_string(p->dim()) +
                       ", space " + space.name + " expects " + std::to_string(space.dimension));
    }
    if (space.in_domain && !space.in_domain(*p)) {
      throw InputError("point " + to_string(*p) + " lies outside the domain of " + space.name);
    }
  }
  return space.g(x, y, z);
}

CheckReport check_axioms(const GSpace& space, const SamplePlan& plan, double tol) {
  plan.validate();
  ReportBuilder rb;
  const double sep = plan.min_separation;

  for_each_tuple(space, plan, 3, [&](const SampledTuple& t) {
    const Point& x = t.points[0];
    const Point& y = t.points[1];
    const Point& z = t.points[2];
    const auto g = [&](const Point& p, const Point& q, const Point& r) {
      return eval_g(space, p, q, r);
    };

    rb.check_le("G1", g(x, x, x), 0.0, tol, {x});

    if (separation(x, y) >= sep) rb.check_gt("G2", g(x, x, y), kStrictFloor, {x, y});

    if (separation(z, y) >= sep) rb.check_le("G3", g(x, x, y), g(x, y, z), tol, {x, y, z});

    const double base = g(x, y, z);
    const std::array<double, 5> perms = {g(x, z, y), g(y, x, z), g(y, z, x), g(z, x, y),
                                         g(z, y, x)};
    // Only the worst permutation is recorded per triple.
    const auto worst = std::max_element(perms.begin(), perms.end(), [&](double a, double b) {
      return std::abs(a - base) < std::abs(b - base);
    });
    rb.check_eq("G4", *worst, base, tol, {x, y, z});
  });

  // Rectangle inequality needs a fourth point.
  for_each_tuple(space, plan, 4, [&](const SampledTuple& t) {
    const Point& x = t.points[0];
    const Point& y = t.points[1];
    const Point& z = t.points[2];
    const Point& a = t.points[3];
    rb.check_le("G5", eval_g(space, x, y, z), eval_g(space, x, a, a) + eval_g(space, a, y, z), tol,
                {x, y, z, a});
  });

  return std::move(rb).finish();
}

CheckReport check_derived(const GSpace& space, const SamplePlan& plan, double tol) {
  plan.validate();
  ReportBuilder rb;
  const double sep = plan.min_separation;

  for_each_tuple(space, plan, 4, [&](const SampledTuple& t) {
    const Point& x = t.points[0];
    const Point& y = t.points[1];
    const Point& z = t.points[2];
    const Point& a = t.points[3];
    const auto g = [&](const Point& p, const Point& q, const Point& r) {
      return eval_g(space, p, q, r);
    };
    const double gxyz = g(x, y, z);

    // Constructive half of "G = 0 implies x = y = z".
    rb.check_le("P1", g(x, x, x), 0.0, tol, {x});
    if (separation(x, y) >= sep || separation(y, z) >= sep || separation(x, z) >= sep) {
      rb.check_gt("P1", gxyz, kStrictFloor, {x, y, z});
    }

    rb.check_le("P2", gxyz, g(x, x, y) + g(x, x, z), tol, {x, y, z});
    rb.check_le("P3", g(x, y, y), 2.0 * g(y, x, x), tol, {x, y});
    rb.check_le("P4", gxyz, g(x, a, z) + g(a, y, z), tol, {x, y, z, a});
    rb.check_le("P5", gxyz, (2.0 / 3.0) * (g(x, y, a) + g(x, a, z) + g(a, y, z)), tol,
                {x, y, z, a});
    rb.check_le("P6", gxyz, g(x, a, a) + g(y, a, a) + g(z, a, a), tol, {x, y, z, a});
  });

  return std::move(rb).finish();
}

}  // namespace gfix
