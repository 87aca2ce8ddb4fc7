#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gfix/gmetric.hpp"

namespace gfix {

/// Deterministic anchor points of a box: both corners, the midpoint, an
/// alternating corner (dim >= 2) and the quarter points of the diagonal,
/// filtered through the space's sampling filter.
std::vector<Point> box_anchors(const GSpace& space, const Box& box, double min_separation);

/// One tuple handed to a checker. `stream` seeds any extra per-tuple
/// randomness (a mixing weight, say) so it stays schedule-independent.
struct SampledTuple {
  std::span<const Point> points;
  std::uint64_t stream = 0;
  bool structured = false;
};

/// Calls `visit` on `arity`-tuples: first every tuple over the anchor set
/// (the anchor set is trimmed so this pass stays near a thousand tuples),
/// which covers the coincident cases x=y, y=z, x=z and x=y=z; then
/// `plan.count` random tuples, tuple i drawn from stream_seed(seed, i).
void for_each_tuple(const GSpace& space, const SamplePlan& plan, std::size_t arity,
                    const std::function<void(const SampledTuple&)>& visit);

}  // namespace gfix
