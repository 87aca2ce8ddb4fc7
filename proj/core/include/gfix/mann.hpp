#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gfix/contractions.hpp"
#include "gfix/convexity.hpp"

namespace gfix {

/// Iterates whose largest coordinate magnitude exceeds this end the run
/// with Termination::Divergence.
inline constexpr double kOverflowGuard = 1e150;

/// Whether the step sizes have an infinite sum, decided from the schedule's
/// closed form rather than numerically.
enum class SumDivergence { Divergent, Convergent, Unknown };

std::string_view to_string(SumDivergence s);

/// Step sizes alpha_0, alpha_1, ... in [0, 1].
class StepSchedule {
 public:
  enum class Kind { Constant, Harmonic, Power, Explicit };

  /// alpha_n = alpha.
  static StepSchedule constant(double alpha);
  /// alpha_n = 1 / (n + 1).
  static StepSchedule harmonic();
  /// alpha_n = 1 / (n + 1)^p, p >= 0.
  static StepSchedule power(double p);
  /// alpha_n = values[n]; the last value repeats past the end of the list.
  static StepSchedule explicit_list(std::vector<double> values);

  Kind kind() const noexcept { return kind_; }
  double at(std::size_t n) const;
  SumDivergence divergent_sum() const noexcept;
  /// "constant:0.5", "harmonic", "power:2", "explicit:0.5/0.25".
  std::string describe() const;

 private:
  StepSchedule(Kind kind, double param, std::vector<double> values)
      : kind_(kind), param_(param), values_(std::move(values)) {}

  Kind kind_;
  double param_;
  std::vector<double> values_;
};

/// alpha_0 .. alpha_{n-1}.
std::vector<double> schedule_values(const StepSchedule& sched, std::size_t n);

struct StoppingRule {
  std::size_t max_iters = 10000;
  double residual_tol = 1e-10;          // on G(x_n, Tx_n, Tx_n)
  std::optional<double> error_tol;      // on G(x_n, u, u), needs a known fixed point

  void validate() const;
};

enum class Termination { ResidualTolerance, ErrorTolerance, MaxIterations, Divergence };

std::string_view to_string(Termination t);

struct TraceRecord {
  std::size_t n = 0;
  double alpha = 0.0;  // alpha_n, the weight used to step from x_n
  Point point;
  double residual = 0.0;
  std::optional<double> true_error;
  std::optional<double> bound;
};

struct IterationTrace {
  std::vector<TraceRecord> records;
  Termination status = Termination::MaxIterations;

  bool has_true_error() const;
};

/// x_{n+1} = W(x_n, T x_n; 1 - alpha, alpha), i.e. combine(x, Tx, 1 - alpha):
/// weight 1 - alpha stays on x, alpha moves onto Tx.
Point mann_step(const ConvexGSpace& cs, const Mapping& mapping, const Point& x, double alpha);

/// Runs the Mann process from x0 until a stopping criterion fires. x_n is
/// recorded before the rules are checked, so the trace holds at most
/// max_iters + 1 records.
IterationTrace run_mann(const ConvexGSpace& cs, const Mapping& mapping, const Point& x0,
                        const StepSchedule& sched, const StoppingRule& stop);

}  // namespace gfix
