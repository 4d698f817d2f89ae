#include "fitts3d/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fitts3d/error.hpp"

namespace fitts3d {

namespace {

struct Levels {
  std::vector<double> object_size, width, separation, direction, inclination, rotation, tolerance;
  std::size_t repetitions;
};

Levels levels_for(ExperimentId id) {
  switch (id) {
  case ExperimentId::E1:
    return {{3, 4, 5}, {5, 7.5, 10, 12.5}, {12, 24, 36, 48}, {90}, {0}, {0}, {0}, 5};
  case ExperimentId::E2:
    return {{5}, {5, 10}, {12, 24}, {0, 90, 180, 270}, {15, 30, 45}, {0}, {0}, 5};
  case ExperimentId::E3:
    return {{4, 5}, {5, 10}, {0}, {0}, {0}, {15, 30, 45}, {2.5, 5, 7.5, 10}, 5};
  case ExperimentId::E4:
    return {{4}, {4, 8}, {12, 24}, {0, 90}, {15, 30}, {30, 45}, {7.5, 15}, 4};
  }
  return {};
}

std::uint64_t splitmix_finalize(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Top 53 bits mapped onto [0, 1).
double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& engine) {
  const double u1 = 1.0 - uniform01(engine); // (0, 1]
  const double u2 = uniform01(engine);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

struct Slopes {
  double translation;
  double rotation;
};

Slopes default_slopes(ExperimentId id, InteractionKind interaction) {
  const bool pointing = interaction == InteractionKind::Pointing;
  switch (id) {
  case ExperimentId::E1:
    return pointing ? Slopes{0.45, 0.60} : Slopes{0.50, 0.50};
  case ExperimentId::E2:
    return pointing ? Slopes{0.40, 0.60} : Slopes{0.35, 0.50};
  case ExperimentId::E3:
    return pointing ? Slopes{0.40, 0.90} : Slopes{0.40, 0.45};
  case ExperimentId::E4:
    return pointing ? Slopes{0.35, 0.90} : Slopes{0.45, 0.60};
  }
  return {0.0, 0.0};
}

void validate_coefficients(const GroundTruth& truth) {
  const auto layout = predictor_layout(truth.kind);
  if (truth.coefficients.size() != layout.size() + 1 || truth.coefficients.front().name != "a") {
    throw InvalidTruth("ground truth: expected coefficient a plus one slope per predictor of " +
                       std::string(to_string(truth.kind)));
  }
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (truth.coefficients[i + 1].name != layout[i]) {
      throw InvalidTruth("ground truth: coefficient " + std::to_string(i + 1) + " must be " +
                         std::string(layout[i]));
    }
  }
}

} // namespace

std::string_view to_string(ExperimentId id) noexcept {
  switch (id) {
  case ExperimentId::E1:
    return "e1";
  case ExperimentId::E2:
    return "e2";
  case ExperimentId::E3:
    return "e3";
  case ExperimentId::E4:
    return "e4";
  }
  return "unknown";
}

std::optional<ExperimentId> parse_experiment(std::string_view text) noexcept {
  for (ExperimentId id : {ExperimentId::E1, ExperimentId::E2, ExperimentId::E3, ExperimentId::E4}) {
    if (to_string(id) == text) {
      return id;
    }
  }
  return std::nullopt;
}

ExperimentGrid build_grid(ExperimentId id) {
  const Levels lv = levels_for(id);
  ExperimentGrid grid;
  grid.id = id;
  grid.repetitions = lv.repetitions;
  for (double f : lv.object_size) {
    for (double w : lv.width) {
      for (double a : lv.separation) {
        for (double phi : lv.direction) {
          for (double theta : lv.inclination) {
            for (double alpha : lv.rotation) {
              for (double omega : lv.tolerance) {
                grid.variations.push_back(
                    {f, w, a, phi, theta, alpha, omega, InteractionKind::Pointing});
              }
            }
          }
        }
      }
    }
  }
  return grid;
}

double predict_mt(const GroundTruth& truth, const TaskSpec& task) {
  validate_coefficients(truth);
  const PredictorVector pv = predictors_for(truth.kind, task);
  double mt = truth.coefficients.front().value;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    mt += truth.coefficients[i + 1].value * pv[i];
  }
  return mt;
}

std::uint64_t derive_condition_seed(std::uint64_t seed, std::uint64_t condition) noexcept {
  return splitmix_finalize(seed + (condition + 1) * 0x9E3779B97F4A7C15ULL);
}

std::vector<Trial> generate_trials(const ExperimentGrid& grid, const GroundTruth& truth,
                                   InteractionKind interaction) {
  if (!(truth.noise_sd >= 0.0) || !std::isfinite(truth.noise_sd)) {
    throw InvalidTruth("ground truth: noise_sd must be finite and >= 0");
  }
  if (!(truth.error_rate >= 0.0 && truth.error_rate < 1.0)) {
    throw InvalidTruth("ground truth: error_rate must lie in [0, 1)");
  }
  const double timeout = timeout_seconds(interaction);

  std::vector<double> predicted;
  predicted.reserve(grid.variations.size());
  for (std::size_t i = 0; i < grid.variations.size(); ++i) {
    const double mt = predict_mt(truth, grid.variations[i]);
    if (!(mt > 0.0) || !std::isfinite(mt)) {
      throw InvalidTruth("ground truth predicts non-positive movement time at condition #" +
                         std::to_string(i + 1));
    }
    predicted.push_back(mt);
  }

  std::vector<Trial> trials;
  trials.reserve(grid.variations.size() * grid.repetitions);
  for (std::size_t i = 0; i < grid.variations.size(); ++i) {
    TaskSpec task = grid.variations[i];
    task.interaction = interaction;
    std::mt19937_64 engine(derive_condition_seed(truth.seed, i));
    for (std::size_t rep = 0; rep < grid.repetitions; ++rep) {
      const double u = uniform01(engine);
      const double z = standard_normal(engine);
      Trial trial{task, predicted[i], true};
      if (truth.noise_sd > 0.0) {
        trial.movement_time = std::max(predicted[i] + truth.noise_sd * z, kMinNoisyMt);
      }
      if (u < truth.error_rate || trial.movement_time > timeout) {
        trial.success = false;
        trial.movement_time = timeout;
      }
      trials.push_back(trial);
    }
  }
  return trials;
}

double reported_mean_mt(ExperimentId id, InteractionKind interaction) noexcept {
  const bool pointing = interaction == InteractionKind::Pointing;
  switch (id) {
  case ExperimentId::E1:
    return pointing ? 1.63 : 2.13;
  case ExperimentId::E2:
    return pointing ? 1.47 : 2.11;
  case ExperimentId::E3:
    return pointing ? 3.37 : 2.79;
  case ExperimentId::E4:
    return pointing ? 2.71 : 3.10;
  }
  return 0.0;
}

GroundTruth reported_scale_defaults(ExperimentId id, InteractionKind interaction) {
  // Excluded error trials out of 4800 per experiment and interaction.
  static constexpr double kErrorTrials[4][2] = {{4, 44}, {3, 60}, {225, 64}, {120, 82}};
  const Slopes slopes = default_slopes(id, interaction);
  const ExperimentGrid grid = build_grid(id);

  double mean_term = 0.0;
  for (const TaskSpec& task : grid.variations) {
    const PredictorVector pv = predictors_for(ModelKind::FinalModel, task);
    mean_term += slopes.translation * pv[0] + slopes.rotation * pv[1];
  }
  mean_term /= static_cast<double>(grid.variations.size());

  GroundTruth truth;
  truth.kind = ModelKind::FinalModel;
  truth.coefficients = {{"a", reported_mean_mt(id, interaction) - mean_term},
                        {"id_t", slopes.translation},
                        {"id_r", slopes.rotation}};
  truth.noise_sd = 0.2;
  truth.error_rate =
      kErrorTrials[static_cast<int>(id)][interaction == InteractionKind::Pointing ? 0 : 1] /
      4800.0;
  return truth;
}

} // namespace fitts3d
