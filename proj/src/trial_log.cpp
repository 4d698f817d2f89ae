#include "fitts3d/trial_log.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fitts3d/error.hpp"

namespace fitts3d {

namespace {

constexpr std::size_t kFieldCount = 11;

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<double> parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

struct RowParser {
  std::size_t line;
  std::vector<ParseIssue>& issues;

  void fail(std::size_t column, std::string reason) {
    issues.push_back({line, column, std::move(reason)});
  }

  // Field index is 0-based here and reported 1-based.
  std::optional<double> number(std::span<const std::string_view> fields, std::size_t index,
                               const char* name) {
    auto v = parse_number(fields[index]);
    if (!v) {
      fail(index + 1, std::string(name) + " is not a finite decimal number: '" +
                          std::string(fields[index]) + "'");
    }
    return v;
  }
};

} // namespace

std::vector<Trial> TrialLog::trials() const {
  std::vector<Trial> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    out.push_back(row.trial);
  }
  return out;
}

std::string format_decimal(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) {
    throw std::runtime_error("format_decimal: conversion failed");
  }
  return {buf, ptr};
}

TrialLog parse_trials(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) {
    lines.pop_back();
  }
  if (lines.empty()) {
    throw SchemaError("trial log: missing header row");
  }
  if (lines.front() != kTrialCsvHeader) {
    throw SchemaError("trial log: unrecognized header (expected schema v" +
                      std::to_string(kTrialSchemaVersion) + ": " + std::string(kTrialCsvHeader) +
                      ")");
  }

  TrialLog log;
  std::vector<ParseIssue> issues;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    RowParser p{i + 1, issues};
    const std::size_t before = issues.size();
    const auto fields = split(lines[i], ',');
    if (fields.size() != kFieldCount) {
      p.fail(0, "expected " + std::to_string(kFieldCount) + " fields, found " +
                    std::to_string(fields.size()));
      continue;
    }

    TrialRow row;
    row.experiment = std::string(fields[0]);
    if (row.experiment.empty()) {
      p.fail(1, "experiment label is empty");
    }
    const auto interaction = parse_interaction(fields[1]);
    if (!interaction) {
      p.fail(2, "interaction must be 'pointing' or 'manipulation', got '" +
                    std::string(fields[1]) + "'");
    }
    const auto f = p.number(fields, 2, "F_cm");
    const auto w = p.number(fields, 3, "W_cm");
    const auto a = p.number(fields, 4, "A_cm");
    const auto phi = p.number(fields, 5, "phi_deg");
    const auto theta = p.number(fields, 6, "theta_deg");
    const auto alpha = p.number(fields, 7, "alpha_deg");
    const auto omega = p.number(fields, 8, "omega_deg");
    const auto mt = p.number(fields, 9, "mt_s");
    if (fields[10] != "0" && fields[10] != "1") {
      p.fail(11, "success must be 0 or 1, got '" + std::string(fields[10]) + "'");
    }

    if (f && !(*f > 0.0)) {
      p.fail(3, "constraint F_cm > 0 violated");
    }
    if (w && !(*w > 0.0)) {
      p.fail(4, "constraint W_cm > 0 violated");
    }
    if (a && *a < 0.0) {
      p.fail(5, "constraint A_cm >= 0 violated");
    }
    if (phi && (*phi < 0.0 || *phi >= 360.0)) {
      p.fail(6, "constraint 0 <= phi_deg < 360 violated");
    }
    if (theta && (*theta < 0.0 || *theta > 90.0)) {
      p.fail(7, "constraint 0 <= theta_deg <= 90 violated");
    }
    if (alpha && *alpha < 0.0) {
      p.fail(8, "constraint alpha_deg >= 0 violated");
    }
    if (omega && *omega < 0.0) {
      p.fail(9, "constraint omega_deg >= 0 violated");
    }
    if (mt && !(*mt > 0.0)) {
      p.fail(10, "constraint mt > 0 violated (got " + std::string(fields[9]) + ")");
    }
    if (issues.size() != before) {
      continue;
    }

    row.trial.task = {*f, *w, *a, *phi, *theta, *alpha, *omega, *interaction};
    row.trial.movement_time = *mt;
    row.trial.success = fields[10] == "1";
    if (row.trial.success && *mt > timeout_seconds(*interaction)) {
      p.fail(10, "constraint mt <= timeout violated for a successful " +
                     std::string(to_string(*interaction)) + " trial");
      continue;
    }
    log.rows.push_back(std::move(row));
  }
  if (!issues.empty()) {
    throw ParseError(std::move(issues));
  }

  if (log.rows.empty()) {
    log.warnings.emplace_back("trial log contains no rows");
  } else {
    log.experiment = log.rows.front().experiment;
    log.interaction = log.rows.front().trial.task.interaction;
    for (const auto& row : log.rows) {
      if (row.experiment != log.experiment) {
        log.experiment.reset();
      }
      if (row.trial.task.interaction != log.interaction) {
        log.interaction.reset();
      }
    }
  }
  return log;
}

TrialLog read_trials(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open trial log " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trials(buffer.str());
}

std::string format_trials(std::span<const TrialRow> rows) {
  std::string out(kTrialCsvHeader);
  out += '\n';
  for (const auto& row : rows) {
    const TaskSpec& t = row.trial.task;
    out += row.experiment;
    out += ',';
    out += to_string(t.interaction);
    for (double v : {t.object_size, t.target_width, t.separation, t.direction, t.inclination,
                     t.rotation, t.tolerance, row.trial.movement_time}) {
      out += ',';
      out += format_decimal(v);
    }
    out += row.trial.success ? ",1\n" : ",0\n";
  }
  return out;
}

void write_trials(const std::filesystem::path& path, std::span<const TrialRow> rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot write trial log " + path.string());
  }
  out << format_trials(rows);
  if (!out) {
    throw Error("failed while writing trial log " + path.string());
  }
}

} // namespace fitts3d
