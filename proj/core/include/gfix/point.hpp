#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gfix {

/// Element of a space: a fixed-dimension vector of finite reals.
///
/// Construction rejects NaN and infinities with InputError, so every Point
/// that exists is finite. Domain restrictions beyond finiteness (the sign
/// space excludes 0) belong to the space, not the point.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  /// Point with `dim` coordinates all equal to `value`.
  static Point filled(std::size_t dim, double value);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  /// Largest coordinate magnitude (0 for the empty point).
  double max_abs() const noexcept;

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

/// Chebyshev distance, used as the separation measure by the samplers.
double separation(const Point& a, const Point& b);

/// Euclidean distance; naive sqrt of the sum of squares.
double euclidean_distance(const Point& a, const Point& b);

/// "(c0, c1, ...)" with 17 significant digits per coordinate.
std::string to_string(const Point& p);

/// Formats a real with 17 significant digits (round-trip exact for doubles).
std::string format_real(double value);

}  // namespace gfix
