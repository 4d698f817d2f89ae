#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace fitts3d {

using Vec3 = Eigen::Vector3d;

enum class InteractionKind { Pointing, Manipulation };

std::string_view to_string(InteractionKind kind) noexcept;
std::optional<InteractionKind> parse_interaction(std::string_view text) noexcept;

// Task time limit; a trial that runs past it is an error.
constexpr double timeout_seconds(InteractionKind kind) noexcept {
  return kind == InteractionKind::Pointing ? 15.0 : 20.0;
}

// One experimental condition. Lengths in cm, angles in degrees.
struct TaskSpec {
  double object_size = 0.0;  // F
  double target_width = 0.0; // W
  double separation = 0.0;   // A, center to center
  double direction = 0.0;    // phi, horizontal, 0 = forward, 90 = right
  double inclination = 0.0;  // theta, above horizontal
  double rotation = 0.0;     // alpha, angular distance to the target orientation
  double tolerance = 0.0;    // omega, per-axis rotation tolerance
  InteractionKind interaction = InteractionKind::Pointing;

  bool has_translation() const noexcept { return separation > 0.0; }
  bool has_rotation() const noexcept { return rotation > 0.0 || tolerance > 0.0; }

  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

// Returns a description of the first violated invariant, or nullopt.
std::optional<std::string> check_task(const TaskSpec& task);

struct Trial {
  TaskSpec task;
  double movement_time = 0.0; // seconds
  bool success = false;

  friend bool operator==(const Trial&, const Trial&) = default;
};

std::optional<std::string> check_trial(const Trial& trial);

// Wraps an angle in degrees into (-180, 180].
double wrap_degrees(double angle) noexcept;

// Position in cm; rotation holds per-axis angles in degrees, kept in (-180, 180].
class Pose {
public:
  Pose() = default;
  Pose(const Vec3& position, const Vec3& rotation);

  const Vec3& position() const noexcept { return position_; }
  const Vec3& rotation() const noexcept { return rotation_; }

private:
  Vec3 position_ = Vec3::Zero();
  Vec3 rotation_ = Vec3::Zero();
};

enum class DistanceVariant { CenterCenter, EdgeCenter, EdgeEdge };

// World axes are right-handed: x forward (view axis), y up, z to the user's right.
Vec3 spherical_to_cartesian(double separation, double direction_deg, double inclination_deg);

double euclidean_distance(const Vec3& p, const Vec3& q);

// Converts a separation measured under `variant` into the center-to-center form.
double effective_separation(double measured, DistanceVariant variant, double target_width,
                            double object_size);

// Per-axis rotation difference reduced by the cube's 90 degree symmetry, in [-45, 45].
Vec3 symmetric_rotation_error(const Pose& object, const Pose& target);

bool classify_translation(const Pose& object, const Pose& target, double target_width);
bool classify_rotation(const Pose& object, const Pose& target, double tolerance_deg);
bool classify_combined(const Pose& object, const Pose& target, double target_width,
                       double tolerance_deg);

} // namespace fitts3d
