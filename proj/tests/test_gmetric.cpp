#include <gtest/gtest.h>

#include <algorithm>

#include "gfix/gfix.hpp"
#include "oracles.hpp"

namespace gfix {
namespace {

SamplePlan plan_with(std::uint64_t seed, std::size_t count, double min_sep = kDefaultMinSeparation) {
  SamplePlan p;
  p.seed = seed;
  p.count = count;
  p.min_separation = min_sep;
  return p;
}

TEST(EvalG, SignExampleSameSign) {
  const GSpace s = make_sign_example_space();
  EXPECT_DOUBLE_EQ(eval_g(s, {1.0}, {2.0}, {3.0}), 4.0);
}

TEST(EvalG, SignExampleMixedSigns) {
  const GSpace s = make_sign_example_space();
  EXPECT_DOUBLE_EQ(eval_g(s, {1.0}, {-1.0}, {2.0}), 7.0);
}

TEST(EvalG, CoincidentPointsGiveZero) {
  const Point p{0.3, -1.25};
  EXPECT_EQ(eval_g(make_perimeter_space(2).space, p, p, p), 0.0);
  EXPECT_EQ(eval_g(make_max_space(2).space, p, p, p), 0.0);
  EXPECT_EQ(eval_g(make_sign_example_space(), {-4.5}, {-4.5}, {-4.5}), 0.0);
}

TEST(EvalG, ZeroIsOutsideSignDomain) {
  const GSpace s = make_sign_example_space();
  EXPECT_THROW(eval_g(s, {0.0}, {1.0}, {2.0}), InputError);
}

TEST(EvalG, DimensionMismatchRejected) {
  EXPECT_THROW(eval_g(make_perimeter_space(2).space, {1.0}, {1.0, 2.0}, {0.0, 0.0}), InputError);
}

TEST(PointTest, RejectsNonFinite) {
  EXPECT_THROW(Point({1.0, std::nan("")}), InputError);
  EXPECT_THROW(Point({HUGE_VAL}), InputError);
}

TEST(SamplePlanTest, Validation) {
  SamplePlan p;
  p.count = 0;
  EXPECT_THROW(p.validate(), InputError);
  p.count = 1;
  p.min_separation = -1.0;
  EXPECT_THROW(p.validate(), InputError);
  p.min_separation = 0.0;
  p.box = {Interval{1.0, 1.0}};
  EXPECT_THROW(p.validate(), InputError);
  p.box = {Interval{-1.0, 1.0}};
  EXPECT_NO_THROW(p.validate());
}

// The grid sweep is the oracle for the sampler: it decides the axioms
// exhaustively with an independent closed form before the sampled checker
// is trusted on the same space.
TEST(CheckAxioms, PerimeterGridOracle) {
  const std::vector<double> grid = {-2.0, -0.5, 0.0, 1.0, 3.0};
  EXPECT_EQ(oracle::grid_axiom_failures(grid, oracle::perimeter_1d, 1e-12), 0u);

  const GSpace s = make_perimeter_space(1).space;
  for (double x : grid)
    for (double y : grid)
      for (double z : grid) EXPECT_DOUBLE_EQ(eval_g(s, {x}, {y}, {z}), oracle::perimeter_1d(x, y, z));
}

TEST(CheckAxioms, SignExampleGridOracle) {
  const std::vector<double> grid = {-3.0, -0.5, 0.25, 1.0, 2.0};
  EXPECT_EQ(oracle::grid_axiom_failures(grid, oracle::sign_example, 1e-12), 0u);
  const GSpace s = make_sign_example_space();
  for (double x : grid)
    for (double y : grid)
      for (double z : grid) EXPECT_DOUBLE_EQ(eval_g(s, {x}, {y}, {z}), oracle::sign_example(x, y, z));
}

TEST(CheckAxioms, PerimeterDim2Passes) {
  const CheckReport r = check_axioms(make_perimeter_space(2).space, plan_with(7, 1000));
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_GT(r.total_checks, 4000u);
  EXPECT_LE(r.worst_margin, 0.0);
}

TEST(CheckAxioms, SignExamplePasses) {
  const CheckReport r = check_axioms(make_sign_example_space(), plan_with(7, 1000, 0.01));
  EXPECT_TRUE(r.passed);
}

TEST(CheckAxioms, BrokenEvaluatorFails) {
  GSpace broken;
  broken.name = "signed-difference";
  broken.dimension = 1;
  broken.g = [](const Point& x, const Point& y, const Point&) { return x[0] - y[0]; };

  const CheckReport r = check_axioms(broken, plan_with(7, 1000));
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.violations.empty());
  const auto has_rule = [&](const char* rule) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation& v) { return v.rule == rule; });
  };
  EXPECT_TRUE(has_rule("G2") || has_rule("G4"));
  EXPECT_FALSE(r.violations.front().witness.empty());
}

TEST(CheckAxioms, ViolationsCappedAndSortedByMargin) {
  GSpace broken;
  broken.name = "constant-one";
  broken.dimension = 1;
  broken.g = [](const Point&, const Point&, const Point&) { return 1.0; };  // breaks G1 everywhere

  const CheckReport r = check_axioms(broken, plan_with(3, 200));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.violations.size(), kMaxReportedViolations);
  EXPECT_GT(r.violation_count, kMaxReportedViolations);
  EXPECT_TRUE(std::is_sorted(r.violations.begin(), r.violations.end(),
                             [](const Violation& a, const Violation& b) { return a.margin > b.margin; }));
  for (const Violation& v : r.violations) EXPECT_GT(v.margin, 0.0);
  EXPECT_DOUBLE_EQ(r.worst_margin, r.violations.front().margin);
}

TEST(CheckAxioms, StrictAxiomNeedsSeparation) {
  // G vanishing on distinct points is caught when they are separated.
  GSpace degenerate;
  degenerate.name = "first-coordinate-blind";
  degenerate.dimension = 2;
  degenerate.g = [](const Point& x, const Point& y, const Point& z) {
    return std::abs(x[1] - y[1]) + std::abs(y[1] - z[1]) + std::abs(x[1] - z[1]);
  };
  const CheckReport r = check_axioms(degenerate, plan_with(5, 500));
  EXPECT_FALSE(r.passed);
}

TEST(CheckAxioms, ReproducibleReports) {
  const GSpace s = make_max_space(3).space;
  const CheckReport a = check_axioms(s, plan_with(99, 300));
  const CheckReport b = check_axioms(s, plan_with(99, 300));
  EXPECT_EQ(a.total_checks, b.total_checks);
  EXPECT_EQ(a.worst_margin, b.worst_margin);
  EXPECT_EQ(a.passed, b.passed);
}

TEST(CheckDerived, PerimeterPasses) {
  EXPECT_TRUE(check_derived(make_perimeter_space(2).space, plan_with(11, 1000)).passed);
}

TEST(CheckDerived, MaxDim3Passes) {
  EXPECT_TRUE(check_derived(make_max_space(3).space, plan_with(11, 1000)).passed);
}

TEST(CheckDerived, HandValueForDoublingBound) {
  // G(0,1,1) = 2 <= 2 G(1,0,0) = 4 on the dim-1 perimeter space.
  const GSpace s = make_perimeter_space(1).space;
  EXPECT_DOUBLE_EQ(eval_g(s, {0.0}, {1.0}, {1.0}), 2.0);
  EXPECT_DOUBLE_EQ(2.0 * eval_g(s, {1.0}, {0.0}, {0.0}), 4.0);
}

TEST(CheckDerived, DegenerateTripleHolds) {
  // A box far narrower than min_separation makes every tuple coincide up
  // to rounding, so all six inequalities compare values near 0.
  SamplePlan p = plan_with(1, 50);
  p.box = {Interval{2.0, 2.0 + 1e-9}};
  const CheckReport r = check_derived(make_perimeter_space(1).space, p);
  EXPECT_TRUE(r.passed);
}

TEST(CheckDerived, BrokenRectangleDetected) {
  // Squared distances violate the rectangle-type inequalities.
  GSpace squared;
  squared.name = "squared-perimeter";
  squared.dimension = 1;
  squared.g = [](const Point& x, const Point& y, const Point& z) {
    const double s = oracle::perimeter_1d(x[0], y[0], z[0]);
    return s * s;
  };
  EXPECT_FALSE(check_derived(squared, plan_with(11, 500)).passed);
  EXPECT_FALSE(check_axioms(squared, plan_with(11, 500)).passed);
}

TEST(ReportBuilderTest, MergeKeepsWorst) {
  ReportBuilder a;
  a.check_le("X", 2.0, 1.0, 0.0, {});
  ReportBuilder b;
  b.check_le("Y", 5.0, 1.0, 0.0, {});
  b.check_le("Y", 0.0, 1.0, 0.0, {});
  CheckReport ra = std::move(a).finish();
  merge_reports(ra, std::move(b).finish());
  EXPECT_EQ(ra.total_checks, 3u);
  EXPECT_EQ(ra.violation_count, 2u);
  EXPECT_FALSE(ra.passed);
  EXPECT_EQ(ra.violations.front().rule, "Y");
  EXPECT_DOUBLE_EQ(ra.worst_margin, 4.0);
}

}  // namespace
}  // namespace gfix
