#include "gfix/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gfix/errors.hpp"

namespace gfix {

namespace {

constexpr double kLogSpaceThreshold = 1e-8;

RateBound cumulative_products(double delta, std::span<const double> alphas, ProductMode mode) {
  RateBound rb;
  rb.delta = delta;
  rb.factors.reserve(alphas.size());
  for (double alpha : alphas) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw InputError("step size " + format_real(alpha) + " lies outside [0, 1]");
    }
    rb.factors.push_back((1.0 - alpha) + alpha * delta);
  }

  rb.log_space = mode == ProductMode::LogSpace ||
                 (mode == ProductMode::Auto &&
                  std::any_of(rb.factors.begin(), rb.factors.end(),
                              [](double f) { return f < kLogSpaceThreshold; }));

  rb.products.resize(rb.factors.size() + 1);
  rb.products[0] = 1.0;
  if (rb.log_space) {
    double log_sum = 0.0;
    for (std::size_t k = 0; k < rb.factors.size(); ++k) {
      log_sum += std::log(rb.factors[k]);  // -inf for a zero factor
      rb.products[k + 1] = std::exp(log_sum);
    }
  } else {
    for (std::size_t k = 0; k < rb.factors.size(); ++k) {
      rb.products[k + 1] = rb.products[k] * rb.factors[k];
    }
  }
  return rb;
}

void require_unit_delta(double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InputError("contraction factor " + format_real(delta) + " lies outside [0, 1)");
  }
}

}  // namespace

double delta_four_term(double a, double b) {
  if (!(a >= 0.0)) throw InputError("delta_four_term requires a >= 0");
  if (!(b >= 0.0)) throw InputError("delta_four_term requires b >= 0");
  if (!(a + 3.0 * b < 1.0)) throw InputError("delta_four_term requires a + 3b < 1");
  return (a + b) / (1.0 - 2.0 * b);
}

ContractionFactor delta_three_term(double a) {
  if (!(a >= 0.0)) throw InputError("delta_three_term requires a >= 0");
  if (!(a < 0.5)) throw InputError("delta_three_term requires a < 1/2");
  const double delta = a / (1.0 - 2.0 * a);
  // a/(1-2a) >= 1 exactly when 3a >= 1; test that directly so a = 1/3
  // is not rounded to just under 1.
  return {delta, delta >= 1.0 || 3.0 * a >= 1.0};
}

ContractionFactor contraction_factor(const ContractionSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ConditionKind::FourTerm:
    case ConditionKind::FourTermAlt:
    case ConditionKind::Sum:
    case ConditionKind::Max:
      return {delta_four_term(spec.a, spec.b), false};
    case ConditionKind::ThreeTerm:
      return delta_three_term(spec.a);
    case ConditionKind::KSum:
      return delta_three_term(spec.k);
  }
  throw InputError("unhandled condition kind");
}

RateBound product_bound(double delta, const StepSchedule& sched, std::size_t n, ProductMode mode) {
  require_unit_delta(delta);
  const std::vector<double> alphas = schedule_values(sched, n);
  return cumulative_products(delta, alphas, mode);
}

RateBound product_bound(double delta, std::span<const double> alphas, ProductMode mode) {
  require_unit_delta(delta);
  return cumulative_products(delta, alphas, mode);
}

BoundReport verify_bound(const IterationTrace& trace, double delta, double tol) {
  if (!trace.has_true_error()) {
    throw InputError("bound verification needs a trace with true errors (known fixed point)");
  }
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw InputError("contraction factor must be a finite nonnegative real");
  }

  const auto& recs = trace.records;
  std::vector<double> alphas;
  alphas.reserve(recs.size() - 1);
  for (std::size_t i = 0; i + 1 < recs.size(); ++i) alphas.push_back(recs[i].alpha);
  const RateBound rb = cumulative_products(delta, alphas, ProductMode::Auto);

  BoundReport report;
  report.delta = delta;
  report.vacuous = delta >= 1.0;
  const double e0 = *recs.front().true_error;
  report.bounds.resize(recs.size());
  report.slack.resize(recs.size());
  report.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < recs.size(); ++n) {
    report.bounds[n] = rb.products[n] * e0;
    report.slack[n] = report.bounds[n] - *recs[n].true_error;
    report.min_slack = std::min(report.min_slack, report.slack[n]);
    if (!report.first_violation && report.slack[n] < -tol) report.first_violation = n;
  }
  report.holds = !report.vacuous && report.min_slack >= -tol;
  return report;
}

void attach_bounds(IterationTrace& trace, const BoundReport& report) {
  const std::size_t n = std::min(trace.records.size(), report.bounds.size());
  for (std::size_t i = 0; i < n; ++i) trace.records[i].bound = report.bounds[i];
}

ConvergenceReport convergence_diagnostics(const IterationTrace& trace, const GSpace& space,
                                          const Point& limit, std::size_t tail, double tol) {
  const auto& recs = trace.records;
  if (tail < 1 || tail > recs.size()) {
    throw InputError("tail window " + std::to_string(tail) + " does not fit a trace of " +
                     std::to_string(recs.size()) + " records");
  }

  ConvergenceReport out;
  ReportBuilder rb;
  const std::size_t first = recs.size() - tail;
  for (std::size_t n = first; n < recs.size(); ++n) {
    const Point& xn = recs[n].point;
    const double near = eval_g(space, xn, xn, limit);
    const double far = eval_g(space, xn, limit, limit);
    out.max_near = std::max(out.max_near, near);
    out.max_far = std::max(out.max_far, far);
    rb.check_le("D-near", near, tol, 0.0, {xn, limit});
    rb.check_le("D-far", far, tol, 0.0, {xn, limit});
    for (std::size_t m = first; m <= n; ++m) {
      const double pair = eval_g(space, recs[m].point, xn, limit);
      out.max_pairwise = std::max(out.max_pairwise, pair);
      rb.check_le("D-pair", pair, tol, 0.0, {recs[m].point, xn, limit});
    }
  }
  out.report = std::move(rb).finish();
  out.converged = out.max_near < tol && out.max_far < tol && out.max_pairwise < tol;
  return out;
}

}  // namespace gfix
