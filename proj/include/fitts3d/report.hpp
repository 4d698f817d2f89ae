#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fitts3d/regression.hpp"

namespace fitts3d {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Table, Json };

// One observation of a fitted model, for external plotting.
struct PlotPoint {
  std::vector<double> predictors; // same order as the model's predictor layout
  double mt = 0.0;
};

struct ModelReportRow {
  ModelKind kind = ModelKind::Fitts;
  std::optional<ModelFit> fit;
  std::string error;
  std::vector<PlotPoint> points;
};

struct ComparisonReport {
  std::string source;
  std::optional<std::string> experiment;
  std::optional<InteractionKind> interaction;
  bool aggregate = true;
  std::vector<ModelReportRow> models; // descending r², failures last
  std::optional<StepwiseReport> stepwise;

  bool all_failed() const;
};

// Observations in the same order fit_model uses, one PlotPoint each.
std::vector<PlotPoint> plot_points(ModelKind kind, std::span<const Trial> trials,
                                   const FitOptions& options);

std::string render_table(const ComparisonReport& report);
std::string render_json(const ComparisonReport& report);

std::string render_table(const StepwiseReport& report);
std::string render_json(const StepwiseReport& report);

} // namespace fitts3d
