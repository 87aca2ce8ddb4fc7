#include "gfix/sampling.hpp"

#include <cmath>

#include "gfix/rng.hpp"

namespace gfix {

namespace {

constexpr std::size_t kStructuredBudget = 1000;

Point lerp_box(const Box& box, double t) {
  std::vector<double> c(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) c[i] = box[i].low + t * (box[i].high - box[i].low);
  return Point(std::move(c));
}

std::size_t anchors_within_budget(std::size_t available, std::size_t arity) {
  std::size_t n = available;
  while (n > 1 && std::pow(static_cast<double>(n), static_cast<double>(arity)) > kStructuredBudget) --n;
  return n;
}

}  // namespace

std::vector<Point> box_anchors(const GSpace& space, const Box& box, double min_separation) {
  std::vector<Point> candidates;
  candidates.push_back(lerp_box(box, 0.0));
  candidates.push_back(lerp_box(box, 1.0));
  candidates.push_back(lerp_box(box, 0.5));
  if (box.size() >= 2) {
    std::vector<double> c(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) c[i] = (i % 2 == 0) ? box[i].low : box[i].high;
    candidates.emplace_back(std::move(c));
  }
  candidates.push_back(lerp_box(box, 0.25));
  candidates.push_back(lerp_box(box, 0.75));

  std::vector<Point> anchors;
  for (auto& p : candidates) {
    const bool ok = space.admits ? space.admits(p, min_separation) : space.contains(p);
    if (ok) anchors.push_back(std::move(p));
  }
  return anchors;
}

void for_each_tuple(const GSpace& space, const SamplePlan& plan, std::size_t arity,
                    const std::function<void(const SampledTuple&)>& visit) {
  const Box box = plan.resolved_box(space.dimension);
  std::vector<Point> anchors = box_anchors(space, box, plan.min_separation);
  anchors.resize(anchors_within_budget(anchors.size(), arity));

  std::vector<Point> tuple(arity);
  if (!anchors.empty()) {
    std::vector<std::size_t> idx(arity, 0);
    std::uint64_t serial = 0;
    while (true) {
      for (std::size_t k = 0; k < arity; ++k) tuple[k] = anchors[idx[k]];
      visit(SampledTuple{tuple, stream_seed(~plan.seed, serial++), true});
      std::size_t k = 0;
      while (k < arity && ++idx[k] == anchors.size()) idx[k++] = 0;
      if (k == arity) break;
    }
  }

  for (std::size_t i = 0; i < plan.count; ++i) {
    const std::uint64_t s = stream_seed(plan.seed, i);
    std::vector<Point> drawn = space.sample(s, arity, box, plan.min_separation);
    visit(SampledTuple{drawn, stream_seed(s, 1), false});
  }
}

}  // namespace gfix
