#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fitts3d/regression.hpp"

namespace fitts3d {
namespace {

struct Data {
  DesignMatrix x;
  std::vector<double> y;
};

Data signal_and_decoy(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), 2);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    m(r, 0) = z(rng);
    m(r, 1) = z(rng);
    y[i] = 1 + 2 * m(r, 0) + 0.5 * z(rng);
  }
  return {DesignMatrix({"x1", "x2"}, m), y};
}

TEST(Stepwise, SelectsSignalOverNoise) {
  int picked_signal_only = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = signal_and_decoy(seed, 40);
    const auto report = stepwise(d.x, d.y);
    ASSERT_FALSE(report.selected.empty());
    EXPECT_EQ(report.selected.front(), "x1");
    if (report.selected == std::vector<std::string>{"x1"}) {
      ++picked_signal_only;
    }
    for (const auto& t : report.final_tests) {
      EXPECT_LE(t.p, 0.10);
    }
  }
  EXPECT_GE(picked_signal_only, 90);
}

TEST(Stepwise, ConstantResponseSelectsNothing) {
  const auto d = signal_and_decoy(1, 20);
  const std::vector<double> y(20, 3.0);
  const auto report = stepwise(d.x, y);
  EXPECT_TRUE(report.selected.empty());
  EXPECT_TRUE(report.steps.empty());
  EXPECT_EQ(report.r2, 0.0);
}

TEST(Stepwise, ExactTwoVariableLaw) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> z;
  Eigen::MatrixXd m(25, 3);
  std::vector<double> y(25);
  for (Eigen::Index r = 0; r < 25; ++r) {
    m(r, 0) = z(rng);
    m(r, 1) = z(rng);
    m(r, 2) = z(rng);
    y[static_cast<std::size_t>(r)] = 0.5 + 3 * m(r, 0) - 1.5 * m(r, 1);
  }
  const auto report = stepwise(DesignMatrix({"x1", "x2", "x3"}, m), y);
  EXPECT_NE(std::find(report.selected.begin(), report.selected.end(), "x1"),
            report.selected.end());
  EXPECT_NE(std::find(report.selected.begin(), report.selected.end(), "x2"),
            report.selected.end());
  EXPECT_NEAR(report.r2, 1.0, 1e-12);
}

TEST(Stepwise, ReportInvariants) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> z;
    Eigen::MatrixXd m(30, 4);
    std::vector<double> y(30);
    for (Eigen::Index r = 0; r < 30; ++r) {
      for (Eigen::Index c = 0; c < 4; ++c) {
        m(r, c) = z(rng);
      }
      y[static_cast<std::size_t>(r)] = m(r, 0) + 0.6 * m(r, 1) + 0.3 * m(r, 2) + z(rng);
    }
    const auto report = stepwise(DesignMatrix({"a", "b", "c", "d"}, m), y);
    double total = 0.0;
    for (const auto& c : report.contributions) {
      EXPECT_GE(c.percent, 0.0);
      total += c.percent;
    }
    EXPECT_LE(total, 100.0 + 1e-9);
    double previous = 0.0;
    for (const auto& step : report.steps) {
      if (step.action == StepAction::Enter) {
        EXPECT_GE(step.r2, previous - 1e-12);
      }
      previous = step.r2;
    }
    ASSERT_EQ(report.final_tests.size(), report.selected.size());
    for (const auto& t : report.final_tests) {
      EXPECT_LE(t.p, 0.10);
    }
  }
}

TEST(Stepwise, ConstantCandidateIsSkipped) {
  auto d = signal_and_decoy(3, 30);
  Eigen::MatrixXd m(30, 3);
  m << d.x.data(), Eigen::VectorXd::Constant(30, 4.0);
  const auto report = stepwise(DesignMatrix({"x1", "x2", "k"}, m), d.y);
  EXPECT_EQ(report.constant, std::vector<std::string>{"k"});
}

} // namespace
} // namespace fitts3d
