#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "fitts3d/metrics.hpp"
#include "fitts3d/regression.hpp"
#include "fitts3d/task.hpp"

namespace fitts3d {

enum class ExperimentId { E1, E2, E3, E4 };

std::string_view to_string(ExperimentId id) noexcept;
std::optional<ExperimentId> parse_experiment(std::string_view text) noexcept;

struct ExperimentGrid {
  ExperimentId id = ExperimentId::E1;
  std::vector<TaskSpec> variations; // interaction left at Pointing
  std::size_t repetitions = 0;
};

// Full Cartesian product of the study levels, F outermost and omega innermost.
ExperimentGrid build_grid(ExperimentId id);

// Planted movement-time law: MT = a + sum(slope_i * predictor_i) for the
// predictors of `kind`. Coefficient names are "a" followed by predictor_layout(kind).
struct GroundTruth {
  ModelKind kind = ModelKind::FinalModel;
  std::vector<Coefficient> coefficients;
  double noise_sd = 0.0;
  double error_rate = 0.0;
  std::uint64_t seed = 0;
};

double predict_mt(const GroundTruth& truth, const TaskSpec& task);

// Each condition draws from its own std::mt19937_64, seeded with
// derive_condition_seed(truth.seed, condition index). Per repetition the stream
// yields one uniform for the error decision then two uniforms for a Box-Muller
// normal, so streams are reproducible in any language with the same engine.
std::uint64_t derive_condition_seed(std::uint64_t seed, std::uint64_t condition) noexcept;

// Successful trials below this are clamped up to it when noise is applied.
inline constexpr double kMinNoisyMt = 0.05;

// Trials are ordered condition by condition, repetitions adjacent.
std::vector<Trial> generate_trials(const ExperimentGrid& grid, const GroundTruth& truth,
                                   InteractionKind interaction);

// Combined-model truth whose grid-mean prediction equals the reported mean
// movement time of that experiment and interaction. Error rates follow the
// reported exclusion rates; noise_sd defaults to 0.2 s.
GroundTruth reported_scale_defaults(ExperimentId id, InteractionKind interaction);

double reported_mean_mt(ExperimentId id, InteractionKind interaction) noexcept;

} // namespace fitts3d
