#include "fitts3d/task.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fitts3d/error.hpp"

namespace fitts3d {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string describe_issues(const std::vector<ParseIssue>& issues) {
  std::ostringstream out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i > 0) {
      out << "; ";
    }
    out << "line " << issues[i].line;
    if (issues[i].column > 0) {
      out << ", column " << issues[i].column;
    }
    out << ": " << issues[i].reason;
  }
  return out.str();
}

} // namespace

ParseError::ParseError(std::vector<ParseIssue> issues)
    : Error(describe_issues(issues)), issues_(std::move(issues)) {}

std::string_view to_string(InteractionKind kind) noexcept {
  return kind == InteractionKind::Pointing ? "pointing" : "manipulation";
}

std::optional<InteractionKind> parse_interaction(std::string_view text) noexcept {
  if (text == "pointing") {
    return InteractionKind::Pointing;
  }
  if (text == "manipulation") {
    return InteractionKind::Manipulation;
  }
  return std::nullopt;
}

std::optional<std::string> check_task(const TaskSpec& task) {
  const double fields[] = {task.object_size, task.target_width, task.separation, task.direction,
                           task.inclination, task.rotation,     task.tolerance};
  for (double v : fields) {
    if (!std::isfinite(v)) {
      return "all task fields must be finite";
    }
  }
  if (!(task.object_size > 0.0)) {
    return "object size F must be > 0";
  }
  if (!(task.target_width > 0.0)) {
    return "target width W must be > 0";
  }
  if (task.separation < 0.0) {
    return "separation A must be >= 0";
  }
  if (task.direction < 0.0 || task.direction >= 360.0) {
    return "direction phi must be in [0, 360)";
  }
  if (task.inclination < 0.0 || task.inclination > 90.0) {
    return "inclination theta must be in [0, 90]";
  }
  if (task.rotation < 0.0) {
    return "rotation alpha must be >= 0";
  }
  if (task.tolerance < 0.0) {
    return "tolerance omega must be >= 0";
  }
  return std::nullopt;
}

std::optional<std::string> check_trial(const Trial& trial) {
  if (auto bad = check_task(trial.task)) {
    return bad;
  }
  if (!std::isfinite(trial.movement_time) || !(trial.movement_time > 0.0)) {
    return "movement time mt must be > 0";
  }
  if (trial.success && trial.movement_time > timeout_seconds(trial.task.interaction)) {
    return "successful trial exceeds the interaction timeout";
  }
  return std::nullopt;
}

double wrap_degrees(double angle) noexcept {
  double r = std::fmod(angle, 360.0);
  if (r <= -180.0) {
    r += 360.0;
  } else if (r > 180.0) {
    r -= 360.0;
  }
  return r;
}

Pose::Pose(const Vec3& position, const Vec3& rotation)
    : position_(position),
      rotation_(wrap_degrees(rotation.x()), wrap_degrees(rotation.y()),
                wrap_degrees(rotation.z())) {}

Vec3 spherical_to_cartesian(double separation, double direction_deg, double inclination_deg) {
  const double phi = direction_deg * kDegToRad;
  const double theta = inclination_deg * kDegToRad;
  const double horizontal = separation * std::cos(theta);
  return {horizontal * std::cos(phi), separation * std::sin(theta), horizontal * std::sin(phi)};
}

double euclidean_distance(const Vec3& p, const Vec3& q) { return (p - q).norm(); }

double effective_separation(double measured, DistanceVariant variant, double target_width,
                            double object_size) {
  switch (variant) {
  case DistanceVariant::CenterCenter:
    return measured;
  case DistanceVariant::EdgeCenter:
    return measured + target_width / 2.0;
  case DistanceVariant::EdgeEdge:
    return measured + (target_width + object_size) / 2.0;
  }
  return measured;
}

Vec3 symmetric_rotation_error(const Pose& object, const Pose& target) {
  Vec3 err;
  for (int i = 0; i < 3; ++i) {
    double r = std::fmod(target.rotation()[i] - object.rotation()[i], 90.0);
    if (r > 45.0) {
      r -= 90.0;
    } else if (r < -45.0) {
      r += 90.0;
    }
    err[i] = r;
  }
  return err;
}

bool classify_translation(const Pose& object, const Pose& target, double target_width) {
  return euclidean_distance(object.position(), target.position()) <= target_width / 2.0;
}

bool classify_rotation(const Pose& object, const Pose& target, double tolerance_deg) {
  return symmetric_rotation_error(object, target).cwiseAbs().maxCoeff() <= tolerance_deg;
}

bool classify_combined(const Pose& object, const Pose& target, double target_width,
                       double tolerance_deg) {
  return classify_translation(object, target, target_width) &&
         classify_rotation(object, target, tolerance_deg);
}

} // namespace fitts3d
