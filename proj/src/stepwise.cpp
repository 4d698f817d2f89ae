#include <algorithm>

#include "fitts3d/error.hpp"
#include "fitts3d/regression.hpp"

namespace fitts3d {

namespace {

constexpr double kTieTolerance = 1e-12;

struct Candidate {
  std::size_t column = 0;
  FTest test;
  ModelFit fit;
};

// Fits y on the given columns; nullopt when they are collinear or leave no
// residual degrees of freedom.
std::optional<ModelFit> try_fit(const DesignMatrix& x, std::span<const double> y,
                                std::span<const std::size_t> columns) {
  if (x.rows() < columns.size() + 2) {
    return std::nullopt;
  }
  try {
    return ols_fit(x.select(columns), y);
  } catch (const RankDeficient&) {
    return std::nullopt;
  }
}

} // namespace

StepwiseReport stepwise(const DesignMatrix& x, std::span<const double> y,
                        const StepwiseOptions& options) {
  StepwiseReport report;
  const std::size_t n_cols = x.cols();
  if (y.size() != x.rows()) {
    throw std::invalid_argument("stepwise: response length does not match design rows");
  }
  // Surface InsufficientData the same way a plain fit would.
  ols_fit(DesignMatrix({}, Eigen::MatrixXd(static_cast<Eigen::Index>(x.rows()), 0)), y);

  std::vector<bool> eligible(n_cols, true);
  for (std::size_t c = 0; c < n_cols; ++c) {
    if (x.is_constant(c)) {
      eligible[c] = false;
      report.constant.push_back(x.names()[c]);
    }
  }
  if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); })) {
    return report;
  }

  std::vector<std::size_t> included;
  ModelFit current = *try_fit(x, y, included);
  const std::size_t max_steps = 4 * n_cols + 8;

  for (std::size_t iteration = 0; iteration < max_steps; ++iteration) {
    bool changed = false;

    std::optional<Candidate> best;
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (!eligible[c] || std::find(included.begin(), included.end(), c) != included.end()) {
        continue;
      }
      auto columns = included;
      columns.push_back(c);
      auto fit = try_fit(x, y, columns);
      if (!fit) {
        continue;
      }
      const FTest test = partial_f_test(*fit, current);
      if (!best || test.p < best->test.p - kTieTolerance) {
        best = Candidate{c, test, std::move(*fit)};
      }
    }
    if (best && best->test.p < options.p_enter) {
      included.push_back(best->column);
      current = std::move(best->fit);
      report.steps.push_back(
          {StepAction::Enter, x.names()[best->column], best->test.f, best->test.p, current.r2});
      changed = true;
    }

    std::optional<Candidate> worst;
    for (std::size_t i = 0; i < included.size(); ++i) {
      auto columns = included;
      columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(i));
      ModelFit reduced = *try_fit(x, y, columns);
      const FTest test = partial_f_test(current, reduced);
      if (!worst || test.p > worst->test.p + kTieTolerance) {
        worst = Candidate{i, test, std::move(reduced)};
      }
    }
    if (worst && worst->test.p > options.p_remove) {
      const std::size_t column = included[worst->column];
      included.erase(included.begin() + static_cast<std::ptrdiff_t>(worst->column));
      current = std::move(worst->fit);
      report.steps.push_back(
          {StepAction::Remove, x.names()[column], worst->test.f, worst->test.p, current.r2});
      changed = true;
    }

    if (!changed) {
      break;
    }
  }

  report.r2 = current.r2;
  double previous_r2 = 0.0;
  std::vector<std::size_t> prefix;
  for (std::size_t c : included) {
    prefix.push_back(c);
    const double r2 = try_fit(x, y, prefix)->r2;
    report.selected.push_back(x.names()[c]);
    report.contributions.push_back({x.names()[c], 100.0 * std::max(r2 - previous_r2, 0.0)});
    previous_r2 = r2;
  }
  for (std::size_t i = 0; i < included.size(); ++i) {
    auto columns = included;
    columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(i));
    report.final_tests.push_back(partial_f_test(current, *try_fit(x, y, columns)));
  }
  return report;
}

} // namespace fitts3d
