#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gfix/convexity.hpp"
#include "gfix/gmetric.hpp"

namespace gfix {

inline constexpr std::size_t kMaxCatalogDimension = 64;

enum class SpaceKind { Perimeter, Max, SignExample };

/// Parsed catalog key: "perimeter-<dim>", "max-<dim>" or "sign-example".
struct SpaceCatalogEntry {
  std::string key;
  SpaceKind kind = SpaceKind::Perimeter;
  std::optional<std::size_t> dimension;  // absent for sign-example

  bool has_convex_structure() const { return kind != SpaceKind::SignExample; }
};

/// Throws InputError for unknown keys, dimension 0 or dimensions above
/// kMaxCatalogDimension.
SpaceCatalogEntry parse_space_key(std::string_view key);

/// G(x,y,z) = d(x,y) + d(y,z) + d(x,z) with Euclidean d, linear W.
ConvexGSpace make_perimeter_space(std::size_t dim);

/// G(x,y,z) = max{d(x,y), d(y,z), d(x,z)} with Euclidean d, linear W.
ConvexGSpace make_max_space(std::size_t dim);

/// The sign-sensitive G-metric on the nonzero reals:
///   |x-y| + |y-z| + |x-z|       if x, y, z share a sign,
///   1 + |x-y| + |y-z| + |x-z|   otherwise.
/// Its domain is not convex, so no structure is attached.
GSpace make_sign_example_space();

GSpace make_space(const SpaceCatalogEntry& entry);

/// Throws InputError for entries without a convex structure.
ConvexGSpace make_convex_space(const SpaceCatalogEntry& entry);

}  // namespace gfix
