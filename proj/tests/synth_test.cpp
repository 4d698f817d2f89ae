#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "fitts3d/error.hpp"
#include "fitts3d/regression.hpp"
#include "fitts3d/synth.hpp"

namespace fitts3d {
namespace {

template <class F>
std::set<double> levels(const ExperimentGrid& g, F field) {
  std::set<double> out;
  for (const auto& t : g.variations) {
    out.insert(field(t));
  }
  return out;
}

TEST(BuildGrid, CountsAndRepetitions) {
  const std::pair<ExperimentId, std::pair<std::size_t, std::size_t>> expected[] = {
      {ExperimentId::E1, {48, 5}},
      {ExperimentId::E2, {48, 5}},
      {ExperimentId::E3, {48, 5}},
      {ExperimentId::E4, {64, 4}}};
  for (const auto& [id, counts] : expected) {
    const auto g = build_grid(id);
    EXPECT_EQ(g.id, id);
    EXPECT_EQ(g.variations.size(), counts.first);
    EXPECT_EQ(g.repetitions, counts.second);
    EXPECT_EQ(g.variations.size() * g.repetitions, id == ExperimentId::E4 ? 256u : 240u);
    for (std::size_t i = 0; i < g.variations.size(); ++i) {
      EXPECT_FALSE(check_task(g.variations[i]).has_value());
      for (std::size_t j = i + 1; j < g.variations.size(); ++j) {
        EXPECT_FALSE(g.variations[i] == g.variations[j]);
      }
    }
  }
}

TEST(BuildGrid, LevelSets) {
  using S = std::set<double>;
  const auto e1 = build_grid(ExperimentId::E1);
  EXPECT_EQ(levels(e1, [](auto& t) { return t.object_size; }), (S{3, 4, 5}));
  EXPECT_EQ(levels(e1, [](auto& t) { return t.target_width; }), (S{5, 7.5, 10, 12.5}));
  EXPECT_EQ(levels(e1, [](auto& t) { return t.separation; }), (S{12, 24, 36, 48}));
  EXPECT_EQ(levels(e1, [](auto& t) { return t.direction; }), (S{90}));
  EXPECT_EQ(levels(e1, [](auto& t) { return t.inclination; }), (S{0}));
  EXPECT_EQ(levels(e1, [](auto& t) { return t.rotation; }), (S{0}));
  EXPECT_EQ(levels(e1, [](auto& t) { return t.tolerance; }), (S{0}));

  const auto e2 = build_grid(ExperimentId::E2);
  EXPECT_EQ(levels(e2, [](auto& t) { return t.object_size; }), (S{5}));
  EXPECT_EQ(levels(e2, [](auto& t) { return t.target_width; }), (S{5, 10}));
  EXPECT_EQ(levels(e2, [](auto& t) { return t.separation; }), (S{12, 24}));
  EXPECT_EQ(levels(e2, [](auto& t) { return t.direction; }), (S{0, 90, 180, 270}));
  EXPECT_EQ(levels(e2, [](auto& t) { return t.inclination; }), (S{15, 30, 45}));
  EXPECT_EQ(levels(e2, [](auto& t) { return t.rotation; }), (S{0}));

  const auto e3 = build_grid(ExperimentId::E3);
  EXPECT_EQ(levels(e3, [](auto& t) { return t.object_size; }), (S{4, 5}));
  EXPECT_EQ(levels(e3, [](auto& t) { return t.target_width; }), (S{5, 10}));
  EXPECT_EQ(levels(e3, [](auto& t) { return t.separation; }), (S{0}));
  EXPECT_EQ(levels(e3, [](auto& t) { return t.rotation; }), (S{15, 30, 45}));
  EXPECT_EQ(levels(e3, [](auto& t) { return t.tolerance; }), (S{2.5, 5, 7.5, 10}));

  const auto e4 = build_grid(ExperimentId::E4);
  EXPECT_EQ(levels(e4, [](auto& t) { return t.object_size; }), (S{4}));
  EXPECT_EQ(levels(e4, [](auto& t) { return t.target_width; }), (S{4, 8}));
  EXPECT_EQ(levels(e4, [](auto& t) { return t.separation; }), (S{12, 24}));
  EXPECT_EQ(levels(e4, [](auto& t) { return t.direction; }), (S{0, 90}));
  EXPECT_EQ(levels(e4, [](auto& t) { return t.inclination; }), (S{15, 30}));
  EXPECT_EQ(levels(e4, [](auto& t) { return t.rotation; }), (S{30, 45}));
  EXPECT_EQ(levels(e4, [](auto& t) { return t.tolerance; }), (S{7.5, 15}));
}

GroundTruth fitts_truth(double noise, std::uint64_t seed) {
  GroundTruth truth;
  truth.kind = ModelKind::Fitts;
  truth.coefficients = {{"a", 0.4}, {"id_fitts", 0.3}};
  truth.noise_sd = noise;
  truth.seed = seed;
  return truth;
}

TEST(GenerateTrials, NoiselessEqualsPrediction) {
  const auto grid = build_grid(ExperimentId::E1);
  const auto truth = fitts_truth(0, 0);
  const auto trials = generate_trials(grid, truth, InteractionKind::Pointing);
  ASSERT_EQ(trials.size(), 240u);
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const auto& t = trials[i];
    EXPECT_TRUE(t.success);
    EXPECT_EQ(t.task, [&] {
      auto task = grid.variations[i / 5];
      task.interaction = InteractionKind::Pointing;
      return task;
    }());
    EXPECT_EQ(t.movement_time, 0.4 + 0.3 * std::log2(2 * t.task.separation / t.task.target_width));
  }
}

TEST(GenerateTrials, SameSeedIsBitIdentical) {
  for (auto id : {ExperimentId::E1, ExperimentId::E2, ExperimentId::E3, ExperimentId::E4}) {
    auto truth = reported_scale_defaults(id, InteractionKind::Manipulation);
    truth.seed = 42;
    const auto a = generate_trials(build_grid(id), truth, InteractionKind::Manipulation);
    const auto b = generate_trials(build_grid(id), truth, InteractionKind::Manipulation);
    EXPECT_EQ(a, b);
    truth.seed = 43;
    EXPECT_NE(a, generate_trials(build_grid(id), truth, InteractionKind::Manipulation));
  }
}

TEST(GenerateTrials, InvalidTruth) {
  const auto grid = build_grid(ExperimentId::E1);
  GroundTruth negative = fitts_truth(0, 0);
  negative.coefficients = {{"a", -5}, {"id_fitts", 0.3}};
  EXPECT_THROW(generate_trials(grid, negative, InteractionKind::Pointing), InvalidTruth);
  auto bad_rate = fitts_truth(0, 0);
  bad_rate.error_rate = 1.0;
  EXPECT_THROW(generate_trials(grid, bad_rate, InteractionKind::Pointing), InvalidTruth);
  auto bad_noise = fitts_truth(-0.1, 0);
  EXPECT_THROW(generate_trials(grid, bad_noise, InteractionKind::Pointing), InvalidTruth);
}

TEST(GenerateTrials, SuccessesStayWithinTimeout) {
  for (auto interaction : {InteractionKind::Pointing, InteractionKind::Manipulation}) {
    auto truth = fitts_truth(6.0, 5);
    truth.coefficients = {{"a", 10.0}, {"id_fitts", 1.0}};
    truth.error_rate = 0.1;
    const auto trials = generate_trials(build_grid(ExperimentId::E1), truth, interaction);
    std::size_t failures = 0;
    for (const auto& t : trials) {
      EXPECT_GE(t.movement_time, kMinNoisyMt);
      if (t.success) {
        EXPECT_LE(t.movement_time, timeout_seconds(interaction));
      } else {
        EXPECT_EQ(t.movement_time, timeout_seconds(interaction));
        ++failures;
      }
    }
    EXPECT_GT(failures, 0u);
  }
}

TEST(ReportedScale, GridMeanMatchesReportedMean) {
  for (auto id : {ExperimentId::E1, ExperimentId::E2, ExperimentId::E3, ExperimentId::E4}) {
    for (auto interaction : {InteractionKind::Pointing, InteractionKind::Manipulation}) {
      const auto truth = reported_scale_defaults(id, interaction);
      const auto grid = build_grid(id);
      double sum = 0.0;
      for (const auto& t : grid.variations) {
        const double mt = predict_mt(truth, t);
        EXPECT_GT(mt, 0.0);
        sum += mt;
      }
      const double mean = sum / static_cast<double>(grid.variations.size());
      const double reported = reported_mean_mt(id, interaction);
      EXPECT_LE(std::abs(mean - reported), 0.05 * reported);
      EXPECT_EQ(truth.kind, ModelKind::FinalModel);
      EXPECT_EQ(truth.noise_sd, 0.2);
      EXPECT_GE(truth.error_rate, 0.0);
      EXPECT_LT(truth.error_rate, 1.0);
    }
  }
  EXPECT_EQ(reported_mean_mt(ExperimentId::E1, InteractionKind::Pointing), 1.63);
  EXPECT_EQ(reported_mean_mt(ExperimentId::E3, InteractionKind::Pointing), 3.37);
  EXPECT_EQ(reported_mean_mt(ExperimentId::E4, InteractionKind::Manipulation), 3.10);
}

TEST(MonteCarlo, SlopeRecoveredWithinThreeStandardErrors) {
  const auto grid = build_grid(ExperimentId::E1);
  int covered = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto trials = generate_trials(grid, fitts_truth(0.2, seed), InteractionKind::Pointing);
    const auto fit = fit_model(ModelKind::Fitts, trials);
    double mean_x = 0.0;
    const auto conditions = aggregate_conditions(trials);
    for (const auto& c : conditions) {
      mean_x += id_fitts(c.task.separation, c.task.target_width).bits;
    }
    mean_x /= static_cast<double>(conditions.size());
    double sxx = 0.0;
    for (const auto& c : conditions) {
      const double d = id_fitts(c.task.separation, c.task.target_width).bits - mean_x;
      sxx += d * d;
    }
    const double se = std::sqrt(fit.ss_res / static_cast<double>(fit.residual_df()) / sxx);
    if (std::abs(fit.slope("id_fitts") - 0.3) <= 3 * se) {
      ++covered;
    }
  }
  EXPECT_GE(covered, 95);
}

TEST(Seeds, ConditionSeedsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 64; ++i) {
    seen.insert(derive_condition_seed(7, i));
  }
  EXPECT_EQ(seen.size(), 64u);
  EXPECT_EQ(derive_condition_seed(7, 3), derive_condition_seed(7, 3));
}

} // namespace
} // namespace fitts3d
