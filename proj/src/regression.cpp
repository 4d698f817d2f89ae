#include "fitts3d/regression.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "fitts3d/error.hpp"
#include "fitts3d/fdist.hpp"

namespace fitts3d {

namespace {

// Residual sums below this fraction of the total sum of squares are treated as exact zero.
constexpr double kZeroResidual = 1e-13;

bool all_equal(std::span<const double> y) {
  return std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); });
}

std::string format_number(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << v;
  return out.str();
}

// " + 0.3000·ID" or " - 0.3000·ID"
std::string signed_term(double value, const std::string& label) {
  const double shown = std::abs(value) < 5e-5 ? 0.0 : value;
  return (shown < 0.0 ? " - " : " + ") + format_number(std::abs(shown)) + "·" + label;
}

} // namespace

DesignMatrix::DesignMatrix(std::vector<std::string> names, Eigen::MatrixXd data)
    : names_(std::move(names)), data_(std::move(data)) {
  if (names_.size() != static_cast<std::size_t>(data_.cols())) {
    throw std::invalid_argument("design matrix: one name per column required");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (std::find(names_.begin() + static_cast<std::ptrdiff_t>(i) + 1, names_.end(),
                  names_[i]) != names_.end()) {
      throw std::invalid_argument("design matrix: duplicate column name " + names_[i]);
    }
  }
  if (!data_.allFinite()) {
    throw std::invalid_argument("design matrix: entries must be finite");
  }
}

DesignMatrix DesignMatrix::from_rows(std::span<const PredictorVector> rows) {
  if (rows.empty()) {
    return {};
  }
  const auto& names = rows.front().names();
  Eigen::MatrixXd data(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(names.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].names() != names) {
      throw std::invalid_argument("design matrix: rows disagree on predictor layout");
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
      data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return {names, std::move(data)};
}

std::optional<std::size_t> DesignMatrix::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

DesignMatrix DesignMatrix::select(std::span<const std::size_t> columns) const {
  std::vector<std::string> names;
  Eigen::MatrixXd data(data_.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < columns.size(); ++i) {
    names.push_back(names_.at(columns[i]));
    data.col(static_cast<Eigen::Index>(i)) = data_.col(static_cast<Eigen::Index>(columns[i]));
  }
  return {std::move(names), std::move(data)};
}

bool DesignMatrix::is_constant(std::size_t column) const {
  const auto col = data_.col(static_cast<Eigen::Index>(column));
  return col.size() == 0 || (col.array() == col(0)).all();
}

double ModelFit::intercept() const { return coefficients.at(0).value; }

double ModelFit::slope(std::string_view name) const {
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    if (coefficients[i].name == name) {
      return coefficients[i].value;
    }
  }
  if (std::find(absorbed.begin(), absorbed.end(), name) != absorbed.end()) {
    return 0.0;
  }
  throw std::out_of_range("model has no predictor named " + std::string(name));
}

std::vector<std::string> ModelFit::predictor_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    names.push_back(coefficients[i].name);
  }
  return names;
}

std::string ModelFit::equation() const {
  std::string eq = "MT = " + format_number(intercept());
  if (kind == ModelKind::FinalModel) {
    const auto has = [&](std::string_view n) {
      const auto names = predictor_names();
      return std::find(names.begin(), names.end(), n) != names.end();
    };
    std::string inner;
    if (has("id_t")) {
      inner = format_number(slope("id_t")) + "·ID_t";
    }
    if (has("id_r")) {
      inner += inner.empty() ? format_number(slope("id_r")) + "·ID_r"
                             : signed_term(slope("id_r"), "ID_r");
    }
    if (!inner.empty()) {
      eq += " + 1.0000·[" + inner + "]";
    }
    return eq;
  }
  const bool single = kind && predictor_layout(*kind).size() == 1;
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    eq += signed_term(coefficients[i].value, single ? "ID" : coefficients[i].name);
  }
  return eq;
}

ModelFit ols_fit(const DesignMatrix& x, std::span<const double> y) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (y.size() != n) {
    throw std::invalid_argument("ols: response length does not match design rows");
  }
  if (n <= p || n < 2) {
    throw InsufficientData("ols: need more observations than predictors plus intercept (n=" +
                           std::to_string(n) + ", p=" + std::to_string(p) + ")");
  }
  for (double v : y) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("ols: response must be finite");
    }
  }

  Eigen::MatrixXd augmented(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p + 1));
  augmented.col(0).setOnes();
  augmented.rightCols(static_cast<Eigen::Index>(p)) = x.data();
  const Eigen::Map<const Eigen::VectorXd> response(y.data(), static_cast<Eigen::Index>(n));

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(augmented, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.minCoeff() < kRankTolerance * sv.maxCoeff()) {
    throw RankDeficient("ols: design columns are collinear with each other or the intercept");
  }

  ModelFit fit;
  fit.n = n;
  const double mean = response.mean();
  fit.ss_tot = (response.array() - mean).square().sum();
  fit.degenerate_variance = all_equal(y);

  Eigen::VectorXd beta;
  if (fit.degenerate_variance) {
    beta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p + 1));
    beta(0) = y.front();
    fit.ss_tot = 0.0;
  } else {
    beta = svd.solve(response);
  }

  const Eigen::VectorXd residuals = response - augmented * beta;
  fit.residuals.assign(residuals.begin(), residuals.end());
  fit.ss_res = residuals.squaredNorm();

  fit.coefficients.push_back({"a", beta(0)});
  for (std::size_t i = 0; i < p; ++i) {
    fit.coefficients.push_back({x.names()[i], beta(static_cast<Eigen::Index>(i + 1))});
  }
  fit.r2 = fit.degenerate_variance ? 0.0 : std::clamp(1.0 - fit.ss_res / fit.ss_tot, 0.0, 1.0);
  return fit;
}

double r_squared(const ModelFit& fit, std::span<const double> y) {
  if (y.size() != fit.residuals.size()) {
    throw std::invalid_argument("r_squared: response length does not match the fit");
  }
  if (y.empty() || all_equal(y)) {
    throw DegenerateVariance("r_squared: response has zero total variance");
  }
  double mean = 0.0;
  for (double v : y) {
    mean += v;
  }
  mean /= static_cast<double>(y.size());
  double ss_tot = 0.0;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    ss_tot += (y[i] - mean) * (y[i] - mean);
    ss_res += fit.residuals[i] * fit.residuals[i];
  }
  return 1.0 - ss_res / ss_tot;
}

FTest partial_f_test(const ModelFit& full, const ModelFit& reduced) {
  if (full.n != reduced.n) {
    throw InvalidNesting("partial F: models were fitted on different observation counts");
  }
  const auto full_names = full.predictor_names();
  for (const auto& name : reduced.predictor_names()) {
    if (std::find(full_names.begin(), full_names.end(), name) == full_names.end()) {
      throw InvalidNesting("partial F: reduced predictor " + name + " is not in the full model");
    }
  }
  FTest test;
  test.df1 = full.predictor_count() - reduced.predictor_count();
  test.df2 = full.residual_df();
  if (test.df1 == 0) {
    return test;
  }
  if (test.df2 == 0) {
    throw InsufficientData("partial F: full model leaves no residual degrees of freedom");
  }
  const double scale = std::max(reduced.ss_tot, full.ss_tot);
  const double zero = kZeroResidual * scale;
  const double ss_full = full.ss_res <= zero ? 0.0 : full.ss_res;
  const double gain = std::max(reduced.ss_res - full.ss_res, 0.0);
  if (ss_full == 0.0) {
    if (gain > zero) {
      test.f = std::numeric_limits<double>::infinity();
      test.p = 0.0;
    }
    return test;
  }
  test.f = (gain / static_cast<double>(test.df1)) / (ss_full / static_cast<double>(test.df2));
  test.p = f_survival(test.f, static_cast<double>(test.df1), static_cast<double>(test.df2));
  return test;
}

std::vector<ConditionMean> aggregate_conditions(std::span<const Trial> trials) {
  std::vector<ConditionMean> groups;
  std::vector<double> sums;
  for (const Trial& trial : trials) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const ConditionMean& g) { return g.task == trial.task; });
    if (it == groups.end()) {
      groups.push_back({trial.task, 0.0, 0});
      sums.push_back(0.0);
      it = groups.end() - 1;
    }
    if (trial.success) {
      const auto idx = static_cast<std::size_t>(it - groups.begin());
      sums[idx] += trial.movement_time;
      ++it->count;
    }
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].count == 0) {
      throw EmptyCondition("condition #" + std::to_string(i + 1) +
                           " has no successful trials after error exclusion");
    }
    groups[i].mean_mt = sums[i] / static_cast<double>(groups[i].count);
  }
  return groups;
}

ModelFit fit_model(ModelKind kind, std::span<const Trial> trials, const FitOptions& options) {
  std::vector<TaskSpec> tasks;
  std::vector<double> y;
  std::size_t distinct = 0;
  if (options.aggregate) {
    for (const auto& cond : aggregate_conditions(trials)) {
      tasks.push_back(cond.task);
      y.push_back(cond.mean_mt);
    }
    distinct = tasks.size();
  } else {
    std::vector<TaskSpec> seen;
    for (const Trial& trial : trials) {
      if (!trial.success) {
        continue;
      }
      tasks.push_back(trial.task);
      y.push_back(trial.movement_time);
      if (std::find(seen.begin(), seen.end(), trial.task) == seen.end()) {
        seen.push_back(trial.task);
      }
    }
    distinct = seen.size();
  }
  if (distinct < 2) {
    throw InsufficientData("fit: need at least two distinct conditions with successful trials");
  }

  std::vector<PredictorVector> rows;
  rows.reserve(tasks.size());
  for (const TaskSpec& task : tasks) {
    rows.push_back(predictors_for(kind, task, options.rotation));
  }
  const DesignMatrix full = DesignMatrix::from_rows(rows);

  std::vector<std::size_t> varying;
  std::vector<std::string> absorbed;
  for (std::size_t c = 0; c < full.cols(); ++c) {
    if (full.is_constant(c)) {
      absorbed.push_back(full.names()[c]);
    } else {
      varying.push_back(c);
    }
  }
  ModelFit fit = ols_fit(full.select(varying), y);
  fit.kind = kind;
  fit.absorbed = std::move(absorbed);
  return fit;
}

std::vector<ComparisonRow> compare_models(std::span<const Trial> trials,
                                          std::span<const ModelKind> kinds,
                                          const FitOptions& options) {
  std::vector<std::future<ComparisonRow>> pending;
  pending.reserve(kinds.size());
  for (ModelKind kind : kinds) {
    pending.push_back(std::async(std::launch::async, [kind, trials, options] {
      ComparisonRow row;
      row.kind = kind;
      try {
        row.fit = fit_model(kind, trials, options);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      return row;
    }));
  }
  std::vector<ComparisonRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) {
    rows.push_back(f.get());
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& l, const ComparisonRow& r) {
    if (l.fit.has_value() != r.fit.has_value()) {
      return l.fit.has_value();
    }
    if (l.fit && l.fit->r2 != r.fit->r2) {
      return l.fit->r2 > r.fit->r2;
    }
    return static_cast<int>(l.kind) < static_cast<int>(r.kind);
  });
  return rows;
}

} // namespace fitts3d
