#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gfix/contractions.hpp"
#include "gfix/gmetric.hpp"
#include "gfix/mann.hpp"

namespace gfix {

/// A contraction factor with a flag for the region where the geometric
/// bound stops contracting (delta >= 1).
struct ContractionFactor {
  double delta = 0.0;
  bool vacuous = false;
};

/// (a + b) / (1 - 2b) for the four-term condition. Throws InputError naming
/// the failing constraint unless a >= 0, b >= 0 and a + 3b < 1; under those
/// constraints the result lies in [0, 1).
double delta_four_term(double a, double b);

/// a / (1 - 2a) for the three-term condition. Throws InputError for a < 0 or
/// a >= 1/2. For a in [1/3, 1/2) the value is returned with vacuous = true:
/// the claimed delta < 1 only follows from a < 1/3.
ContractionFactor delta_three_term(double a);

/// Factor matching a condition: four-term, four-term-alt, sum and max use
/// delta_four_term(a, b); three-term uses delta_three_term(a); k-sum uses
/// delta_three_term(k). Throws InputError when the formula's precondition fails.
ContractionFactor contraction_factor(const ContractionSpec& spec);

enum class ProductMode {
  Auto,    // log-space only when some factor is below 1e-8
  Direct,
  LogSpace,
};

/// Cumulative product bound B_m = prod_{k<m} (1 - alpha_k (1 - delta)), B_0 = 1.
/// B_m pairs with x_m: it bounds G(x_m,u,u) / G(x_0,u,u).
struct RateBound {
  double delta = 0.0;
  std::vector<double> factors;   // 1 - alpha_k (1 - delta), k = 0..n-1
  std::vector<double> products;  // B_0 .. B_n
  bool log_space = false;
};

/// B_0 .. B_n for a schedule. Throws InputError unless delta is in [0, 1).
RateBound product_bound(double delta, const StepSchedule& sched, std::size_t n,
                        ProductMode mode = ProductMode::Auto);

/// Same, from recorded step sizes; B has alphas.size() + 1 entries.
RateBound product_bound(double delta, std::span<const double> alphas,
                        ProductMode mode = ProductMode::Auto);

struct BoundReport {
  double delta = 0.0;
  std::vector<double> bounds;  // B_n * G(x_0, u, u)
  std::vector<double> slack;   // bounds[n] - G(x_n, u, u)
  double min_slack = 0.0;
  std::optional<std::size_t> first_violation;
  /// delta >= 1: the bound is still tabulated but `holds` is never claimed.
  bool vacuous = false;
  /// !vacuous and min_slack >= -tol.
  bool holds = false;
};

/// Checks G(x_n,u,u) <= B_n G(x_0,u,u) + tol at every record, rebuilding
/// B_n from the step sizes stored in the trace. Throws InputError if the
/// trace lacks true errors or delta is negative.
BoundReport verify_bound(const IterationTrace& trace, double delta, double tol);

/// Copies report.bounds into the trace records' bound fields.
void attach_bounds(IterationTrace& trace, const BoundReport& report);

struct ConvergenceReport {
  double max_near = 0.0;      // max G(x_n, x_n, x) over the tail
  double max_far = 0.0;       // max G(x_n, x, x)
  double max_pairwise = 0.0;  // max G(x_m, x_n, x) over tail pairs
  bool converged = false;     // all three below tol
  CheckReport report;         // rules D-near, D-far, D-pair
};

/// Evaluates the three equivalent G-convergence criteria over the last
/// `tail` iterates against `limit`. Throws InputError unless
/// 1 <= tail <= trace length.
ConvergenceReport convergence_diagnostics(const IterationTrace& trace, const GSpace& space,
                                          const Point& limit, std::size_t tail, double tol);

}  // namespace gfix
