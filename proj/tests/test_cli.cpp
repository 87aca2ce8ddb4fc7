#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gfix/gfix.hpp"

namespace gfix::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gfix_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv("GFIX_SEED");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("GFIX_SEED");
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  static std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckAxiomsSignExamplePasses) {
  const auto r = run_cli({"check-axioms", "--space", "sign-example", "--samples", "1000", "--seed", "7"});
  EXPECT_EQ(r.code, kExitPassed) << r.err;
  EXPECT_NE(r.out.find("result=pass"), std::string::npos);
}

TEST_F(CliTest, CheckAxiomsPerimeterDefaults) {
  EXPECT_EQ(run_cli({"check-axioms", "--space", "perimeter-3"}).code, kExitPassed);
}

TEST_F(CliTest, UnknownSpaceIsConfigError) {
  const auto r = run_cli({"check-axioms", "--space", "nosuch"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("nosuch"), std::string::npos);
}

TEST_F(CliTest, BadFlagsAreConfigErrors) {
  EXPECT_EQ(run_cli({"check-axioms", "--bogus", "1"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"check-axioms", "--samples", "zero"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"iterate", "--schedule", "fibonacci"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"iterate", "--mapping", "rotate"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"check-condition", "--condition", "sum", "--coeff", "k=0.1"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"iterate", "--space", "sign-example"}).code, kExitConfigError);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, kExitPassed); }

TEST_F(CliTest, CheckDerivedAndConvexity) {
  EXPECT_EQ(run_cli({"check-derived", "--space", "max-2"}).code, kExitPassed);
  EXPECT_EQ(run_cli({"check-convexity", "--space", "perimeter-2"}).code, kExitPassed);
  const auto sum = run_cli({"check-convexity", "--space", "perimeter-1", "--structure", "sum"});
  EXPECT_EQ(sum.code, kExitViolations);
  EXPECT_NE(sum.out.find("violation.1=rule=W"), std::string::npos);
  const auto modi = run_cli({"check-convexity", "--space", "perimeter-1", "--structure", "modi-centroid"});
  EXPECT_EQ(modi.code, kExitViolations);
  EXPECT_EQ(run_cli({"check-convexity", "--space", "sign-example"}).code, kExitConfigError);
}

TEST_F(CliTest, CheckConditionExamples) {
  EXPECT_EQ(run_cli({"check-condition", "--space", "perimeter-1", "--mapping", "affine:k=0.5,center=0",
                     "--condition", "four-term", "--coeff", "a=0.5"}).code,
            kExitPassed);

  const auto bad = run_cli({"check-condition", "--space", "perimeter-1", "--mapping", "affine:k=2,center=0",
                            "--condition", "four-term", "--coeff", "a=0.5", "--samples", "1000"});
  EXPECT_EQ(bad.code, kExitViolations);
  EXPECT_NE(bad.out.find("witness=("), std::string::npos);
  EXPECT_NE(bad.out.find("worst_ratio="), std::string::npos);

  EXPECT_EQ(run_cli({"check-condition", "--space", "max-2", "--mapping", "constant:value=3",
                     "--condition", "k-sum", "--coeff", "k=0.2"}).code,
            kExitPassed);
}

TEST_F(CliTest, IterateExactLinearCase) {
  const std::string csv = path("trace.csv");
  const auto r = run_cli({"iterate", "--space", "perimeter-1", "--mapping", "affine:k=0.5,center=0",
                          "--schedule", "constant", "--alpha", "0.5", "--condition", "four-term",
                          "--coeff", "a=0.5", "--x0", "1", "--max-iters", "20", "--out", csv});
  EXPECT_EQ(r.code, kExitPassed) << r.err;
  const auto rows = lines(slurp(csv));
  ASSERT_EQ(rows.size(), 22u);
  EXPECT_EQ(rows[0], "n,alpha_n,residual,true_error,bound,slack");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> cells;
    std::istringstream in(rows[i]);
    for (std::string c; std::getline(in, c, ',');) cells.push_back(c);
    ASSERT_EQ(cells.size(), 6u) << rows[i];
    const double err = std::stod(cells[3]);
    const double bound = std::stod(cells[4]);
    EXPECT_NEAR(err, bound, 1e-12 * bound);
    EXPECT_NEAR(err, 2.0 * std::pow(0.75, static_cast<double>(i - 1)), 1e-12);
  }
  EXPECT_NE(r.out.find("bound_verdict=holds"), std::string::npos);
  EXPECT_NE(r.out.find("delta=0.5"), std::string::npos);
}

TEST_F(CliTest, IterateIdentityOmitsBounds) {
  const std::string csv = path("id.csv");
  const auto r = run_cli({"iterate", "--space", "perimeter-1", "--mapping", "affine:k=1,center=0",
                          "--condition", "four-term", "--coeff", "a=1", "--out", csv});
  EXPECT_EQ(r.code, kExitPassed);
  const auto rows = lines(slurp(csv));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], "0,0.5,0,,,");
  EXPECT_NE(r.out.find("warning="), std::string::npos);
  EXPECT_NE(r.err.find("warning:"), std::string::npos);
}

TEST_F(CliTest, IteratePowerScheduleNotesFiniteSum) {
  const std::string csv = path("p2.csv");
  const auto r = run_cli({"iterate", "--space", "perimeter-1", "--mapping", "affine:k=0.5,center=0",
                          "--schedule", "power:2", "--condition", "four-term", "--coeff", "a=0.5",
                          "--max-iters", "2000", "--out", csv});
  EXPECT_EQ(r.code, kExitPassed);
  EXPECT_NE(r.out.find("divergent_sum=false"), std::string::npos);
  EXPECT_NE(r.out.find("status=max-iterations"), std::string::npos);
  const auto rows = lines(slurp(csv));
  std::istringstream last(rows.back());
  std::string n, alpha, residual;
  std::getline(last, n, ',');
  std::getline(last, alpha, ',');
  std::getline(last, residual, ',');
  EXPECT_GT(std::stod(residual), 1e-6);
}

TEST_F(CliTest, IterateWithoutOutWritesCsvToStdout) {
  const auto r = run_cli({"iterate", "--max-iters", "3"});
  EXPECT_EQ(r.code, kExitPassed);
  EXPECT_EQ(lines(r.out).front(), kTraceHeader);
  EXPECT_NE(r.err.find("status="), std::string::npos);
}

TEST_F(CliTest, IterateDivergenceExitsOne) {
  const auto r = run_cli({"iterate", "--mapping", "affine:k=2,center=0", "--schedule", "constant:1",
                          "--out", path("div.csv")});
  EXPECT_EQ(r.code, kExitViolations);
  EXPECT_NE(r.out.find("status=divergence"), std::string::npos);
}

TEST_F(CliTest, IterateIsByteIdentical) {
  const std::vector<std::string> base = {"iterate", "--space", "max-3", "--mapping", "affine:k=0.3,center=1/2/3",
                                         "--schedule", "harmonic", "--condition", "sum", "--coeff", "a=0.3",
                                         "--x0", "4,-1,0.5", "--max-iters", "200"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", path("a.csv")});
  b.insert(b.end(), {"--out", path("b.csv")});
  ASSERT_EQ(run_cli(a).code, kExitPassed);
  ASSERT_EQ(run_cli(b).code, kExitPassed);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_FALSE(slurp(path("a.csv")).empty());
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  const std::string cfg = path("exp.cfg");
  std::ofstream(cfg) << "# experiment\n[check]\nspace = max-2\nsamples = 37\nseed=5\n";
  const auto r = run_cli({"check-axioms", "--config", cfg, "--seed", "9"});
  EXPECT_EQ(r.code, kExitPassed) << r.err;
  EXPECT_NE(r.out.find("# space=max-2"), std::string::npos);
  EXPECT_NE(r.out.find("# samples=37"), std::string::npos);
  EXPECT_NE(r.out.find("# seed=9"), std::string::npos);
}

TEST_F(CliTest, ConfigFileRejectsUnknownKeys) {
  const std::string cfg = path("bad.cfg");
  std::ofstream(cfg) << "spaceship = max-2\n";
  EXPECT_EQ(run_cli({"check-axioms", "--config", cfg}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"check-axioms", "--config", path("missing.cfg")}).code, kExitConfigError);
}

TEST_F(CliTest, EnvironmentSeedIsDefaultOnly) {
  setenv("GFIX_SEED", "1234", 1);
  const auto env = run_cli({"check-axioms", "--samples", "10"});
  EXPECT_NE(env.out.find("# seed=1234"), std::string::npos);
  const auto flag = run_cli({"check-axioms", "--samples", "10", "--seed", "8"});
  EXPECT_NE(flag.out.find("# seed=8"), std::string::npos);
}

TEST_F(CliTest, ReportWrittenToOutFile) {
  const std::string report = path("report.txt");
  EXPECT_EQ(run_cli({"check-derived", "--space", "perimeter-2", "--out", report}).code, kExitPassed);
  const std::string text = slurp(report);
  EXPECT_EQ(text.rfind("# gfix check-derived\n", 0), 0u);
  EXPECT_NE(text.find("result=pass"), std::string::npos);
}

TEST_F(CliTest, BoundCommand) {
  const std::string csv = path("bound.csv");
  const auto ok = run_cli({"bound", "--condition", "four-term", "--coeff", "a=0.5", "--schedule", "constant",
                           "--alpha", "0.5", "--max-iters", "4", "--out", csv});
  EXPECT_EQ(ok.code, kExitPassed) << ok.err;
  const auto rows = lines(slurp(csv));
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], kBoundHeader);
  EXPECT_EQ(rows[5], "4,0.5,,0.31640625");
  EXPECT_NE(ok.out.find("delta=0.5"), std::string::npos);

  const auto gap = run_cli({"bound", "--condition", "three-term", "--coeff", "a=0.4"});
  EXPECT_EQ(gap.code, kExitViolations);
  EXPECT_NE(gap.err.find("vacuous=true"), std::string::npos);

  EXPECT_EQ(run_cli({"bound", "--condition", "four-term", "--coeff", "a=0.9,b=0.1"}).code, kExitViolations);
  EXPECT_EQ(run_cli({"bound"}).code, kExitConfigError);
}

}  // namespace
}  // namespace gfix::cli
