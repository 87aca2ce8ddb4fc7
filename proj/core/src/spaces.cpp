#include "gfix/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "gfix/errors.hpp"

namespace gfix {

namespace {

void require_dimension(std::size_t dim) {
  if (dim == 0) throw InputError("space dimension must be at least 1");
}

std::size_t parse_dimension(std::string_view key, std::string_view digits) {
  std::size_t dim = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dim);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw InputError("unknown space key '" + std::string(key) + "'");
  }
  if (dim == 0 || dim > kMaxCatalogDimension) {
    throw InputError("space dimension in '" + std::string(key) + "' must be in [1, " +
                     std::to_string(kMaxCatalogDimension) + "]");
  }
  return dim;
}

}  // namespace

SpaceCatalogEntry parse_space_key(std::string_view key) {
  if (key == "sign-example") return {std::string(key), SpaceKind::SignExample, std::nullopt};
  constexpr std::string_view kPerimeter = "perimeter-";
  constexpr std::string_view kMax = "max-";
  if (key.starts_with(kPerimeter)) {
    return {std::string(key), SpaceKind::Perimeter,
            parse_dimension(key, key.substr(kPerimeter.size()))};
  }
  if (key.starts_with(kMax)) {
    return {std::string(key), SpaceKind::Max, parse_dimension(key, key.substr(kMax.size()))};
  }
  throw InputError("unknown space key '" + std::string(key) + "'");
}

ConvexGSpace make_perimeter_space(std::size_t dim) {
  require_dimension(dim);
  GSpace space;
  space.name = "perimeter-" + std::to_string(dim);
  space.dimension = dim;
  space.g = [](const Point& x, const Point& y, const Point& z) {
    return euclidean_distance(x, y) + euclidean_distance(y, z) + euclidean_distance(x, z);
  };
  return {std::move(space), linear_structure()};
}

ConvexGSpace make_max_space(std::size_t dim) {
  require_dimension(dim);
  GSpace space;
  space.name = "max-" + std::to_string(dim);
  space.dimension = dim;
  space.g = [](const Point& x, const Point& y, const Point& z) {
    return std::max({euclidean_distance(x, y), euclidean_distance(y, z), euclidean_distance(x, z)});
  };
  return {std::move(space), linear_structure()};
}

GSpace make_sign_example_space() {
  GSpace space;
  space.name = "sign-example";
  space.dimension = 1;
  space.g = [](const Point& px, const Point& py, const Point& pz) {
    const double x = px[0], y = py[0], z = pz[0];
    const double spread = std::abs(x - y) + std::abs(y - z) + std::abs(x - z);
    const bool same_sign = (x > 0) == (y > 0) && (y > 0) == (z > 0);
    return same_sign ? spread : 1.0 + spread;
  };
  space.in_domain = [](const Point& p) { return p[0] != 0.0; };
  // Keep samples clear of the excluded point and the sign discontinuity.
  space.admits = [](const Point& p, double min_separation) {
    return p.dim() == 1 && std::abs(p[0]) >= std::max(min_separation, 0.0) && p[0] != 0.0;
  };
  return space;
}

GSpace make_space(const SpaceCatalogEntry& entry) {
  switch (entry.kind) {
    case SpaceKind::Perimeter:
      return make_perimeter_space(entry.dimension.value_or(0)).space;
    case SpaceKind::Max:
      return make_max_space(entry.dimension.value_or(0)).space;
    case SpaceKind::SignExample:
      return make_sign_example_space();
  }
  throw InputError("unhandled space kind");
}

ConvexGSpace make_convex_space(const SpaceCatalogEntry& entry) {
  switch (entry.kind) {
    case SpaceKind::Perimeter:
      return make_perimeter_space(entry.dimension.value_or(0));
    case SpaceKind::Max:
      return make_max_space(entry.dimension.value_or(0));
    case SpaceKind::SignExample:
      break;
  }
  throw InputError("space '" + entry.key + "' carries no convex structure");
}

}  // namespace gfix
