#include "gfix/convexity.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "gfix/errors.hpp"
#include "gfix/rng.hpp"
#include "gfix/sampling.hpp"

namespace gfix {

namespace {

void require_member(const GSpace& space, const Point& p, const char* role) {
  if (!space.contains(p)) {
    throw InputError(std::string(role) + " " + to_string(p) + " is not a point of " + space.name);
  }
}

}  // namespace

ConvexStructure linear_structure() {
  return {"linear", [](const Point& x, const Point& y, double lambda) {
            std::vector<double> c(x.dim());
            for (std::size_t i = 0; i < x.dim(); ++i) c[i] = lambda * x[i] + (1.0 - lambda) * y[i];
            return Point(std::move(c));
          }};
}

ModiStructure centroid_structure() {
  return {"centroid", [](const Point& x, const Point& y, const Point& z, double) {
            std::vector<double> c(x.dim());
            for (std::size_t i = 0; i < x.dim(); ++i) c[i] = (x[i] + y[i] + z[i]) / 3.0;
            return Point(std::move(c));
          }};
}

Point combine(const ConvexGSpace& cs, const Point& x, const Point& y, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("convex weight " + format_real(lambda) + " lies outside [0, 1]");
  }
  require_member(cs.space, x, "first argument");
  require_member(cs.space, y, "second argument");
  Point w = cs.structure.w(x, y, lambda);
  require_member(cs.space, w, "combination");
  return w;
}

CheckReport check_convexity(const ConvexGSpace& cs, const SamplePlan& plan, double tol) {
  plan.validate();
  ReportBuilder rb;
  const GSpace& sp = cs.space;

  for_each_tuple(sp, plan, 4, [&](const SampledTuple& t) {
    const Point& x = t.points[0];
    const Point& y = t.points[1];
    const Point& u = t.points[2];
    const Point& v = t.points[3];
    const double gx = eval_g(sp, x, u, v);
    const double gy = eval_g(sp, y, u, v);

    SplitMix64 rng(t.stream);
    const std::array<double, 4> lambdas = {rng.uniform(), 0.0, 0.5, 1.0};
    for (double lambda : lambdas) {
      const Point w = cs.structure.w(x, y, lambda);
      if (!sp.contains(w)) {
        // A combination outside the space breaks the contract outright.
        rb.check_le("W", std::numeric_limits<double>::infinity(), 0.0, tol, {x, y, u, v, w},
                    lambda);
        continue;
      }
      rb.check_le("W", eval_g(sp, w, u, v), lambda * gx + (1.0 - lambda) * gy, tol,
                  {x, y, u, v, w}, lambda);
    }
  });

  return std::move(rb).finish();
}

CheckReport check_modi_convexity(const GSpace& space, const ModiStructure& m,
                                 const SamplePlan& plan, double tol) {
  plan.validate();
  ReportBuilder rb;

  for_each_tuple(space, plan, 5, [&](const SampledTuple& t) {
    const Point& x = t.points[0];
    const Point& y = t.points[1];
    const Point& z = t.points[2];
    const Point& u = t.points[3];
    const Point& v = t.points[4];
    const double sum = eval_g(space, u, v, x) + eval_g(space, u, v, y) + eval_g(space, u, v, z);

    SplitMix64 rng(t.stream);
    // 1 - uniform() lies in (0, 1].
    const std::array<double, 4> lambdas = {1.0 - rng.uniform(), 0.01, 0.5, 1.0};
    for (double lambda : lambdas) {
      const Point w = m.w3(x, y, z, lambda);
      if (!space.contains(w)) {
        rb.check_le("M", std::numeric_limits<double>::infinity(), 0.0, tol, {x, y, z, u, v, w},
                    lambda);
        continue;
      }
      rb.check_le("M", eval_g(space, u, v, w), lambda / 3.0 * sum, tol, {x, y, z, u, v, w},
                  lambda);
    }
  });

  return std::move(rb).finish();
}

}  // namespace gfix
