#include "fitts3d/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace fitts3d {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw UsageError(std::string(what) + ": not a number: '" + std::string(text) + "'");
  }
  return v;
}

double candidate_value(std::string_view name, const TaskSpec& t) {
  if (name == "F") {
    return t.object_size;
  }
  if (name == "W") {
    return t.target_width;
  }
  if (name == "A") {
    return t.separation;
  }
  if (name == "phi") {
    return sin_degrees(t.direction);
  }
  if (name == "theta") {
    return t.inclination;
  }
  if (name == "alpha") {
    return t.rotation;
  }
  return t.tolerance;
}

} // namespace

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, pos - start);
    while (!item.empty() && item.front() == ' ') {
      item.remove_prefix(1);
    }
    while (!item.empty() && item.back() == ' ') {
      item.remove_suffix(1);
    }
    if (!item.empty()) {
      out.emplace_back(item);
    }
    start = pos + 1;
  }
  return out;
}

std::vector<ModelKind> parse_model_list(std::string_view text) {
  if (text == "all") {
    return {kAllModels.begin(), kAllModels.end()};
  }
  std::vector<ModelKind> kinds;
  for (const auto& item : split_list(text)) {
    const auto kind = parse_model(item);
    if (!kind) {
      throw UsageError("unknown model '" + item +
                       "' (expected fitts, hoffmann, welford, shannon, murata-iwase, cha-myung, "
                       "final or all)");
    }
    if (std::find(kinds.begin(), kinds.end(), *kind) != kinds.end()) {
      throw UsageError("model listed twice: " + item);
    }
    kinds.push_back(*kind);
  }
  if (kinds.empty()) {
    throw UsageError("no models given");
  }
  return kinds;
}

Pose parse_pose(std::string_view text) {
  const auto parts = split_list(text);
  if (parts.size() != 6) {
    throw UsageError("pose must be x,y,z,rx,ry,rz");
  }
  double v[6];
  for (std::size_t i = 0; i < 6; ++i) {
    v[i] = parse_double(parts[i], "pose");
  }
  return {Vec3(v[0], v[1], v[2]), Vec3(v[3], v[4], v[5])};
}

std::vector<Coefficient> parse_coefficients(ModelKind kind, std::string_view text) {
  const auto layout = predictor_layout(kind);
  std::vector<Coefficient> coefficients;
  coefficients.push_back({"a", 0.0});
  for (auto name : layout) {
    coefficients.push_back({std::string(name), 0.0});
  }
  std::vector<bool> seen(coefficients.size(), false);
  for (const auto& item : split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("coefficient '" + item + "' must be name=value");
    }
    const std::string name = item.substr(0, eq);
    auto it = std::find_if(coefficients.begin(), coefficients.end(),
                           [&](const Coefficient& c) { return c.name == name; });
    if (it == coefficients.end()) {
      throw UsageError("model " + std::string(to_string(kind)) + " has no coefficient '" + name +
                       "'");
    }
    const auto idx = static_cast<std::size_t>(it - coefficients.begin());
    if (seen[idx]) {
      throw UsageError("coefficient given twice: " + name);
    }
    seen[idx] = true;
    it->value = parse_double(std::string_view(item).substr(eq + 1), "coefficient " + name);
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw UsageError("missing coefficient '" + coefficients[i].name + "'");
    }
  }
  return coefficients;
}

std::vector<TrialRow> cmd_generate(const GenerateOptions& options) {
  GroundTruth truth = reported_scale_defaults(options.experiment, options.interaction);
  if (options.model) {
    if (!options.coefficients) {
      throw UsageError("--coefficients is required when --model is given");
    }
    truth.kind = *options.model;
    truth.coefficients = parse_coefficients(*options.model, *options.coefficients);
  } else if (options.coefficients) {
    truth.coefficients = parse_coefficients(ModelKind::FinalModel, *options.coefficients);
  }
  if (options.noise_sd) {
    truth.noise_sd = *options.noise_sd;
  }
  if (options.error_rate) {
    truth.error_rate = *options.error_rate;
  }
  truth.seed = options.seed;

  const auto trials = generate_trials(build_grid(options.experiment), truth, options.interaction);
  std::vector<TrialRow> rows;
  rows.reserve(trials.size());
  for (const auto& trial : trials) {
    rows.push_back({std::string(to_string(options.experiment)), trial});
  }
  if (!options.out.empty()) {
    write_trials(options.out, rows);
  }
  return rows;
}

ComparisonReport cmd_fit(const FitCommandOptions& options) {
  const TrialLog log = read_trials(options.in);
  const auto trials = log.trials();

  ComparisonReport report;
  report.source = options.in.filename().string();
  report.experiment = log.experiment;
  report.interaction = log.interaction;
  report.aggregate = options.fit.aggregate;

  for (auto& row : compare_models(trials, options.models, options.fit)) {
    ModelReportRow out{row.kind, std::move(row.fit), std::move(row.error), {}};
    if (out.fit && options.points) {
      out.points = plot_points(out.kind, trials, options.fit);
    }
    report.models.push_back(std::move(out));
  }
  if (options.with_stepwise) {
    const std::vector<std::string> all(std::begin(kStepwiseVariables),
                                       std::end(kStepwiseVariables));
    auto [x, y] = stepwise_design(trials, all, options.fit.aggregate);
    report.stepwise = stepwise(x, y);
  }
  return report;
}

std::pair<DesignMatrix, std::vector<double>>
stepwise_design(std::span<const Trial> trials, std::span<const std::string> candidates,
                bool aggregate) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (std::find(std::begin(kStepwiseVariables), std::end(kStepwiseVariables), candidates[i]) ==
        std::end(kStepwiseVariables)) {
      throw UsageError("unknown stepwise variable '" + candidates[i] +
                       "' (expected F, W, A, phi, theta, alpha, omega)");
    }
    if (std::find(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                  candidates[i]) != candidates.end()) {
      throw UsageError("duplicate stepwise variable '" + candidates[i] + "'");
    }
  }

  std::vector<TaskSpec> tasks;
  std::vector<double> y;
  if (aggregate) {
    for (const auto& cond : aggregate_conditions(trials)) {
      tasks.push_back(cond.task);
      y.push_back(cond.mean_mt);
    }
  } else {
    for (const auto& trial : trials) {
      if (trial.success) {
        tasks.push_back(trial.task);
        y.push_back(trial.movement_time);
      }
    }
  }
  Eigen::MatrixXd data(static_cast<Eigen::Index>(tasks.size()),
                       static_cast<Eigen::Index>(candidates.size()));
  for (std::size_t r = 0; r < tasks.size(); ++r) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          candidate_value(candidates[c], tasks[r]);
    }
  }
  return {DesignMatrix({candidates.begin(), candidates.end()}, std::move(data)), std::move(y)};
}

StepwiseReport cmd_stepwise(const StepwiseCommandOptions& options) {
  std::vector<std::string> candidates = options.candidates;
  if (candidates.empty()) {
    candidates.assign(std::begin(kStepwiseVariables), std::end(kStepwiseVariables));
  }
  // Validate names before touching the file so usage errors win.
  stepwise_design({}, candidates, false);
  const auto trials = read_trials(options.in).trials();
  auto [x, y] = stepwise_design(trials, candidates, options.aggregate);
  return stepwise(x, y);
}

bool cmd_classify(const ClassifyOptions& options) {
  switch (options.mode) {
  case ClassifyMode::Translation:
    return classify_translation(options.object, options.target, options.width);
  case ClassifyMode::Rotation:
    return classify_rotation(options.object, options.target, options.tolerance);
  case ClassifyMode::Combined:
    return classify_combined(options.object, options.target, options.width, options.tolerance);
  }
  return false;
}

} // namespace fitts3d
