#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's evaluators or iteration code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace gfix::oracle {

/// Dim-1 perimeter G-metric: |x-y| + |y-z| + |x-z| = 2 (max - min).
inline double perimeter_1d(double x, double y, double z) {
  return 2.0 * (std::max({x, y, z}) - std::min({x, y, z}));
}

inline double max_1d(double x, double y, double z) {
  return std::max({x, y, z}) - std::min({x, y, z});
}

/// Sign-sensitive G-metric written out by cases.
inline double sign_example(double x, double y, double z) {
  const double spread = std::abs(x - y) + std::abs(y - z) + std::abs(x - z);
  const bool all_pos = x > 0 && y > 0 && z > 0;
  const bool all_neg = x < 0 && y < 0 && z < 0;
  return (all_pos || all_neg) ? spread : spread + 1.0;
}

/// Exhaustive check of the five axioms of a dim-1 G over a grid. Returns
/// the number of failed checks.
template <class G>
std::size_t grid_axiom_failures(const std::vector<double>& grid, G g, double tol) {
  std::size_t failures = 0;
  for (double x : grid) {
    if (g(x, x, x) != 0.0) ++failures;
    for (double y : grid) {
      if (x != y && !(g(x, x, y) > 0.0)) ++failures;
      for (double z : grid) {
        const double v = g(x, y, z);
        if (z != y && g(x, x, y) > v + tol) ++failures;
        for (double p : {g(x, z, y), g(y, x, z), g(y, z, x), g(z, x, y), g(z, y, x)}) {
          if (std::abs(p - v) > tol) ++failures;
        }
        for (double a : grid) {
          if (v > g(x, a, a) + g(a, y, z) + tol) ++failures;
        }
      }
    }
  }
  return failures;
}

/// prod_{k<n} (1 - alpha_k (1 - delta)) in long double.
template <class Alpha>
long double product(double delta, std::size_t n, Alpha alpha) {
  long double p = 1.0L;
  for (std::size_t k = 0; k < n; ++k) p *= 1.0L - static_cast<long double>(alpha(k)) * (1.0L - delta);
  return p;
}

}  // namespace gfix::oracle
