#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fitts3d/task.hpp"

namespace fitts3d {

// Trial CSV, schema version 1: UTF-8, comma separated, '.' decimals, LF endings.
inline constexpr std::string_view kTrialCsvHeader =
    "experiment,interaction,F_cm,W_cm,A_cm,phi_deg,theta_deg,alpha_deg,omega_deg,mt_s,success";
inline constexpr int kTrialSchemaVersion = 1;

struct TrialRow {
  std::string experiment;
  Trial trial;

  friend bool operator==(const TrialRow&, const TrialRow&) = default;
};

struct TrialLog {
  int schema_version = kTrialSchemaVersion;
  // Set when every row carries the same value.
  std::optional<std::string> experiment;
  std::optional<InteractionKind> interaction;
  std::vector<TrialRow> rows;
  std::vector<std::string> warnings;

  std::vector<Trial> trials() const;
};

// Shortest decimal text that parses back to the same double.
std::string format_decimal(double value);

TrialLog parse_trials(std::string_view text);
TrialLog read_trials(const std::filesystem::path& path);

std::string format_trials(std::span<const TrialRow> rows);
void write_trials(const std::filesystem::path& path, std::span<const TrialRow> rows);

} // namespace fitts3d
