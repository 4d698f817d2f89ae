#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fitts3d/error.hpp"
#include "fitts3d/report.hpp"
#include "fitts3d/synth.hpp"
#include "fitts3d/trial_log.hpp"

namespace fitts3d {

// Bad command-line input. The CLI maps this to exit code 2.
class UsageError : public Error {
public:
  using Error::Error;
};

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct GenerateOptions {
  ExperimentId experiment = ExperimentId::E1;
  InteractionKind interaction = InteractionKind::Pointing;
  std::uint64_t seed = 0;
  // Planted law; defaults to the combined model at the reported scale.
  std::optional<ModelKind> model;
  // "a=0.4,id_fitts=0.3"; required when model is given.
  std::optional<std::string> coefficients;
  std::optional<double> noise_sd;
  std::optional<double> error_rate;
  std::filesystem::path out; // empty: do not write
};

std::vector<TrialRow> cmd_generate(const GenerateOptions& options);

// Parses "name=value,name=value" into coefficients matching the model's layout.
std::vector<Coefficient> parse_coefficients(ModelKind kind, std::string_view text);

struct FitCommandOptions {
  std::filesystem::path in;
  std::vector<ModelKind> models;
  FitOptions fit;
  bool points = false;
  bool with_stepwise = false;
};

ComparisonReport cmd_fit(const FitCommandOptions& options);

// Stepwise candidates: F, W, A, phi, theta, alpha, omega. phi enters as sin(phi);
// everything else enters raw.
inline constexpr std::string_view kStepwiseVariables[] = {"F",     "W",     "A",    "phi",
                                                          "theta", "alpha", "omega"};

std::pair<DesignMatrix, std::vector<double>>
stepwise_design(std::span<const Trial> trials, std::span<const std::string> candidates,
                bool aggregate);

struct StepwiseCommandOptions {
  std::filesystem::path in;
  std::vector<std::string> candidates; // empty: all
  bool aggregate = true;
};

StepwiseReport cmd_stepwise(const StepwiseCommandOptions& options);

enum class ClassifyMode { Translation, Rotation, Combined };

struct ClassifyOptions {
  Pose object;
  Pose target;
  double width = 0.0;
  double tolerance = 0.0;
  ClassifyMode mode = ClassifyMode::Combined;
};

bool cmd_classify(const ClassifyOptions& options);

// Comma-separated list helpers shared by the CLI.
std::vector<std::string> split_list(std::string_view text);
std::vector<ModelKind> parse_model_list(std::string_view text);
Pose parse_pose(std::string_view text); // "x,y,z,rx,ry,rz"

} // namespace fitts3d
