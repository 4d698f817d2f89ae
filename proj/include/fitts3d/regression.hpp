#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "fitts3d/metrics.hpp"
#include "fitts3d/task.hpp"

namespace fitts3d {

// Observations x named predictors. The intercept column is implicit.
class DesignMatrix {
public:
  DesignMatrix() = default;
  DesignMatrix(std::vector<std::string> names, Eigen::MatrixXd data);

  static DesignMatrix from_rows(std::span<const PredictorVector> rows);

  std::size_t rows() const noexcept { return static_cast<std::size_t>(data_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(data_.cols()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Eigen::MatrixXd& data() const noexcept { return data_; }

  std::optional<std::size_t> index_of(std::string_view name) const noexcept;
  DesignMatrix select(std::span<const std::size_t> columns) const;
  bool is_constant(std::size_t column) const;

private:
  std::vector<std::string> names_;
  Eigen::MatrixXd data_;
};

struct Coefficient {
  std::string name;
  double value = 0.0;
};

struct ModelFit {
  std::optional<ModelKind> kind;
  // coefficients[0] is the intercept "a"; the rest follow the estimated predictors.
  std::vector<Coefficient> coefficients;
  // Predictors constant over the data. They are folded into the intercept and
  // carry an implicit slope of zero.
  std::vector<std::string> absorbed;
  double r2 = 0.0;
  bool degenerate_variance = false;
  std::vector<double> residuals;
  std::size_t n = 0;
  double ss_res = 0.0;
  double ss_tot = 0.0;

  double intercept() const;
  // Throws std::out_of_range for a name the model does not know.
  double slope(std::string_view name) const;
  std::vector<std::string> predictor_names() const;
  std::size_t predictor_count() const noexcept { return coefficients.size() - 1; }
  std::size_t residual_df() const noexcept { return n - coefficients.size(); }

  // "MT = a + b·ID" with four decimals. The combined model is written with its
  // superfluous scale fixed at one: "MT = a + 1.0000·[c·ID_t + d·ID_r]".
  std::string equation() const;
};

// Singular values below this fraction of the largest count as rank loss.
inline constexpr double kRankTolerance = 1e-10;

ModelFit ols_fit(const DesignMatrix& x, std::span<const double> y);

double r_squared(const ModelFit& fit, std::span<const double> y);

struct FTest {
  double f = 0.0;
  double p = 1.0;
  std::size_t df1 = 0;
  std::size_t df2 = 0;
};

FTest partial_f_test(const ModelFit& full, const ModelFit& reduced);

struct StepwiseOptions {
  double p_enter = 0.05;
  double p_remove = 0.10;
};

enum class StepAction { Enter, Remove };

struct StepwiseStep {
  StepAction action = StepAction::Enter;
  std::string name;
  double f = 0.0;
  double p = 1.0;
  double r2 = 0.0; // cumulative, after the step
};

struct Contribution {
  std::string name;
  double percent = 0.0; // r² gained at entry, times 100
};

struct StepwiseReport {
  std::vector<StepwiseStep> steps;
  std::vector<std::string> selected; // entry order
  std::vector<Contribution> contributions;
  std::vector<std::string> constant; // candidates skipped for zero variance
  double r2 = 0.0;

  // Partial-F p-value of each selected predictor against the final model without it.
  std::vector<FTest> final_tests;
};

StepwiseReport stepwise(const DesignMatrix& x, std::span<const double> y,
                        const StepwiseOptions& options = {});

struct FitOptions {
  bool aggregate = true;
  RotationHandling rotation = RotationHandling::Adapted;
};

// Per-condition mean movement time over successful trials, in order of first appearance.
struct ConditionMean {
  TaskSpec task;
  double mean_mt = 0.0;
  std::size_t count = 0;
};

std::vector<ConditionMean> aggregate_conditions(std::span<const Trial> trials);

ModelFit fit_model(ModelKind kind, std::span<const Trial> trials, const FitOptions& options = {});

struct ComparisonRow {
  ModelKind kind = ModelKind::Fitts;
  std::optional<ModelFit> fit;
  std::string error; // set when fit is empty
};

// Rows sorted by descending r², ties broken by ModelKind declaration order.
// Failed fits are kept as rows and listed last.
std::vector<ComparisonRow> compare_models(std::span<const Trial> trials,
                                          std::span<const ModelKind> kinds,
                                          const FitOptions& options = {});

} // namespace fitts3d
