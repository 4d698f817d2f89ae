#include "fitts3d/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace fitts3d {

namespace {

using nlohmann::ordered_json;

std::string fixed(double v, int digits = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

ordered_json stepwise_json(const StepwiseReport& report) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"action", s.action == StepAction::Enter ? "enter" : "remove"},
                     {"variable", s.name},
                     {"F", std::isinf(s.f) ? ordered_json("inf") : ordered_json(s.f)},
                     {"p", s.p},
                     {"r2", s.r2}});
  }
  ordered_json contributions = ordered_json::array();
  for (const auto& c : report.contributions) {
    contributions.push_back({{"variable", c.name}, {"r2_percent", c.percent}});
  }
  return {{"selected", report.selected},
          {"r2", report.r2},
          {"steps", steps},
          {"contributions", contributions},
          {"constant", report.constant}};
}

} // namespace

bool ComparisonReport::all_failed() const {
  return std::none_of(models.begin(), models.end(),
                      [](const ModelReportRow& row) { return row.fit.has_value(); });
}

std::vector<PlotPoint> plot_points(ModelKind kind, std::span<const Trial> trials,
                                   const FitOptions& options) {
  std::vector<PlotPoint> points;
  auto add = [&](const TaskSpec& task, double mt) {
    points.push_back({predictors_for(kind, task, options.rotation).values(), mt});
  };
  if (options.aggregate) {
    for (const auto& cond : aggregate_conditions(trials)) {
      add(cond.task, cond.mean_mt);
    }
  } else {
    for (const Trial& trial : trials) {
      if (trial.success) {
        add(trial.task, trial.movement_time);
      }
    }
  }
  return points;
}

std::string render_table(const ComparisonReport& report) {
  std::ostringstream out;
  out << "source: " << report.source << "\n";
  if (report.experiment) {
    out << "experiment: " << *report.experiment << "\n";
  }
  if (report.interaction) {
    out << "interaction: " << to_string(*report.interaction) << "\n";
  }
  out << "observations: " << (report.aggregate ? "per-condition means" : "per trial") << "\n\n";

  out << std::left << std::setw(6) << "rank" << std::setw(14) << "model" << std::setw(8) << "r2"
      << std::setw(6) << "n"
      << "equation\n";
  std::size_t rank = 0;
  for (const auto& row : report.models) {
    if (row.fit) {
      out << std::left << std::setw(6) << ++rank << std::setw(14) << to_string(row.kind)
          << std::setw(8) << fixed(row.fit->r2) << std::setw(6) << row.fit->n
          << row.fit->equation();
      if (!row.fit->absorbed.empty()) {
        out << "  (constant:";
        for (const auto& name : row.fit->absorbed) {
          out << " " << name;
        }
        out << ")";
      }
      out << "\n";
    } else {
      out << std::left << std::setw(6) << "-" << std::setw(14) << to_string(row.kind)
          << "error: " << row.error << "\n";
    }
  }
  if (report.stepwise) {
    out << "\n" << render_table(*report.stepwise);
  }
  return out.str();
}

std::string render_json(const ComparisonReport& report) {
  ordered_json models = ordered_json::array();
  for (const auto& row : report.models) {
    ordered_json m;
    m["model"] = to_string(row.kind);
    if (row.fit) {
      m["status"] = "ok";
      ordered_json coefficients = ordered_json::object();
      for (const auto& c : row.fit->coefficients) {
        coefficients[c.name] = c.value;
      }
      if (row.kind == ModelKind::FinalModel) {
        coefficients["b"] = 1.0;
      }
      m["coefficients"] = coefficients;
      m["absorbed"] = row.fit->absorbed;
      m["r2"] = row.fit->r2;
      m["degenerate_variance"] = row.fit->degenerate_variance;
      m["n"] = row.fit->n;
      m["equation"] = row.fit->equation();
      if (!row.points.empty()) {
        ordered_json points = ordered_json::array();
        for (const auto& p : row.points) {
          points.push_back({{"predictors", p.predictors}, {"mt", p.mt}});
        }
        m["points"] = points;
      }
    } else {
      m["status"] = "error";
      m["error"] = row.error;
    }
    models.push_back(std::move(m));
  }

  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["source"] = report.source;
  doc["experiment"] = report.experiment ? ordered_json(*report.experiment) : ordered_json();
  doc["interaction"] =
      report.interaction ? ordered_json(to_string(*report.interaction)) : ordered_json();
  doc["aggregate"] = report.aggregate;
  doc["models"] = std::move(models);
  if (report.stepwise) {
    doc["stepwise"] = stepwise_json(*report.stepwise);
  }
  return doc.dump(2) + "\n";
}

std::string render_table(const StepwiseReport& report) {
  std::ostringstream out;
  out << "stepwise selection (enter p < .05, remove p > .10)\n";
  out << std::left << std::setw(8) << "step" << std::setw(8) << "action" << std::setw(10)
      << "variable" << std::setw(12) << "F" << std::setw(12) << "p"
      << "r2\n";
  std::size_t i = 0;
  for (const auto& s : report.steps) {
    out << std::left << std::setw(8) << ++i << std::setw(8)
        << (s.action == StepAction::Enter ? "enter" : "remove") << std::setw(10) << s.name
        << std::setw(12) << (std::isinf(s.f) ? std::string("inf") : fixed(s.f, 3))
        << std::setw(12) << fixed(s.p, 6) << fixed(s.r2) << "\n";
  }
  out << "selected:";
  if (report.selected.empty()) {
    out << " (none)";
  }
  for (const auto& name : report.selected) {
    out << " " << name;
  }
  out << "\ncontributions (r2 %):\n";
  for (const auto& c : report.contributions) {
    out << "  " << std::left << std::setw(10) << c.name << fixed(c.percent, 1) << "%\n";
  }
  if (!report.constant.empty()) {
    out << "constant (skipped):";
    for (const auto& name : report.constant) {
      out << " " << name;
    }
    out << "\n";
  }
  out << "final r2: " << fixed(report.r2) << "\n";
  return out.str();
}

std::string render_json(const StepwiseReport& report) {
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["stepwise"] = stepwise_json(report);
  return doc.dump(2) + "\n";
}

} // namespace fitts3d
