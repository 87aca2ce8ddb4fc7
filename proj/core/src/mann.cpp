#include "gfix/mann.hpp"

#include <algorithm>
#include <cmath>

#include "gfix/errors.hpp"

namespace gfix {

namespace {

void require_step(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InputError("step size " + format_real(alpha) + " lies outside [0, 1]");
  }
}

}  // namespace

std::string_view to_string(SumDivergence s) {
  switch (s) {
    case SumDivergence::Divergent: return "true";
    case SumDivergence::Convergent: return "false";
    case SumDivergence::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::ResidualTolerance: return "residual-tolerance";
    case Termination::ErrorTolerance: return "error-tolerance";
    case Termination::MaxIterations: return "max-iterations";
    case Termination::Divergence: return "divergence";
  }
  return "unknown";
}

StepSchedule StepSchedule::constant(double alpha) {
  require_step(alpha);
  return {Kind::Constant, alpha, {}};
}

StepSchedule StepSchedule::harmonic() { return {Kind::Harmonic, 1.0, {}}; }

StepSchedule StepSchedule::power(double p) {
  if (!std::isfinite(p) || p < 0.0) throw InputError("power schedule exponent must be >= 0");
  return {Kind::Power, p, {}};
}

StepSchedule StepSchedule::explicit_list(std::vector<double> values) {
  if (values.empty()) throw InputError("explicit schedule needs at least one value");
  for (double v : values) require_step(v);
  return {Kind::Explicit, 0.0, std::move(values)};
}

double StepSchedule::at(std::size_t n) const {
  const double m = static_cast<double>(n) + 1.0;
  switch (kind_) {
    case Kind::Constant: return param_;
    case Kind::Harmonic: return 1.0 / m;
    case Kind::Power: return 1.0 / std::pow(m, param_);
    case Kind::Explicit: return values_[std::min(n, values_.size() - 1)];
  }
  return 0.0;
}

SumDivergence StepSchedule::divergent_sum() const noexcept {
  switch (kind_) {
    case Kind::Constant: return param_ > 0.0 ? SumDivergence::Divergent : SumDivergence::Convergent;
    case Kind::Harmonic: return SumDivergence::Divergent;
    case Kind::Power: return param_ > 1.0 ? SumDivergence::Convergent : SumDivergence::Divergent;
    case Kind::Explicit: return SumDivergence::Unknown;
  }
  return SumDivergence::Unknown;
}

std::string StepSchedule::describe() const {
  switch (kind_) {
    case Kind::Constant: return "constant:" + format_real(param_);
    case Kind::Harmonic: return "harmonic";
    case Kind::Power: return "power:" + format_real(param_);
    case Kind::Explicit: {
      std::string out = "explicit:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i != 0) out += "/";
        out += format_real(values_[i]);
      }
      return out;
    }
  }
  return "unknown";
}

std::vector<double> schedule_values(const StepSchedule& sched, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = sched.at(i);
  return out;
}

void StoppingRule::validate() const {
  if (max_iters < 1) throw InputError("max_iters must be at least 1");
  if (!(residual_tol >= 0.0)) throw InputError("residual_tol must be nonnegative");
  if (error_tol && !(*error_tol >= 0.0)) throw InputError("error_tol must be nonnegative");
}

bool IterationTrace::has_true_error() const {
  return !records.empty() &&
         std::all_of(records.begin(), records.end(), [](const auto& r) { return r.true_error.has_value(); });
}

Point mann_step(const ConvexGSpace& cs, const Mapping& mapping, const Point& x, double alpha) {
  require_step(alpha);
  return combine(cs, x, mapping(x), 1.0 - alpha);
}

IterationTrace run_mann(const ConvexGSpace& cs, const Mapping& mapping, const Point& x0,
                        const StepSchedule& sched, const StoppingRule& stop) {
  stop.validate();
  if (!cs.space.contains(x0)) {
    throw InputError("initial point " + to_string(x0) + " is not a point of " + cs.space.name);
  }
  const std::optional<Point>& u = mapping.known_fixed_point;

  IterationTrace trace;
  Point x = x0;
  for (std::size_t n = 0;; ++n) {
    const Point tx = mapping(x);
    TraceRecord rec;
    rec.n = n;
    rec.alpha = sched.at(n);
    rec.residual = eval_g(cs.space, x, tx, tx);
    if (u) rec.true_error = eval_g(cs.space, x, *u, *u);
    rec.point = x;
    trace.records.push_back(std::move(rec));
    const TraceRecord& last = trace.records.back();

    if (last.residual <= stop.residual_tol) {
      trace.status = Termination::ResidualTolerance;
      break;
    }
    if (stop.error_tol && last.true_error && *last.true_error <= *stop.error_tol) {
      trace.status = Termination::ErrorTolerance;
      break;
    }
    if (n >= stop.max_iters) {
      trace.status = Termination::MaxIterations;
      break;
    }

    Point next = combine(cs, x, tx, 1.0 - last.alpha);
    if (!(next.max_abs() <= kOverflowGuard)) {
      trace.status = Termination::Divergence;
      break;
    }
    x = std::move(next);
  }
  return trace;
}

}  // namespace gfix
