#pragma once

#include <functional>
#include <string>

#include "gfix/gmetric.hpp"

namespace gfix {

/// Two-point convex structure W(x, y; lambda, 1 - lambda).
///
/// Only lambda is stored; the partner weight is always 1 - lambda, so the
/// "weights sum to one" constraint cannot be broken by callers. lambda is the
/// weight of the FIRST argument: w(x, y, 1) = x and w(x, y, 0) = y.
struct ConvexStructure {
  using Combiner = std::function<Point(const Point&, const Point&, double lambda)>;

  std::string name;
  Combiner w;
};

/// G(W(x,y;l,1-l), u, v) <= l G(x,u,v) + (1-l) G(y,u,v) for all x, y, u, v.
struct ConvexGSpace {
  GSpace space;
  ConvexStructure structure;
};

/// Three-point structure W(x, y, z, lambda) with lambda in (0, 1], the
/// earlier convexity notion whose inequality splits lambda into thirds.
struct ModiStructure {
  using Combiner = std::function<Point(const Point&, const Point&, const Point&, double lambda)>;

  std::string name;
  Combiner w3;
};

/// lambda x + (1 - lambda) y, coordinatewise.
ConvexStructure linear_structure();

/// (x + y + z) / 3 regardless of lambda.
ModiStructure centroid_structure();

/// W(x, y; lambda) with lambda weighting x. Throws InputError when lambda is
/// outside [0, 1], when x or y lies outside the domain, or when the result does.
Point combine(const ConvexGSpace& cs, const Point& x, const Point& y, double lambda);

/// Samples (x, y, u, v) and checks rule "W" at a random lambda and at
/// lambda in {0, 0.5, 1}.
CheckReport check_convexity(const ConvexGSpace& cs, const SamplePlan& plan,
                            double tol = kDefaultTolerance);

/// Samples (x, y, z, u, v) and checks rule "M":
///   G(u, v, W(x,y,z,l)) <= l/3 (G(u,v,x) + G(u,v,y) + G(u,v,z))
/// at a random lambda in (0, 1] and at lambda in {0.01, 0.5, 1}.
CheckReport check_modi_convexity(const GSpace& space, const ModiStructure& m,
                                 const SamplePlan& plan, double tol = kDefaultTolerance);

}  // namespace gfix
