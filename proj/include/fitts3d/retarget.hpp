#pragma once

#include <Eigen/Core>

#include "fitts3d/task.hpp"

namespace fitts3d {

using Vec6 = Eigen::Matrix<double, 6, 1>;

// Child bone direction and its parent's. Neither may be the zero vector.
struct BonePair {
  Vec3 bone;
  Vec3 parent;
};

// Gains are dimensionless; angles in radians.
struct JointState {
  double kp = 0.0;
  double kd = 0.0;
  double theta_desired = 0.0;
  double theta_current = 0.0;
  double theta_dot = 0.0;
};

// Angle between the two bone vectors, in [0, pi].
double joint_angle(const BonePair& pair);

// kp * (theta_desired - theta_current) - kd * theta_dot
double pd_torque(const JointState& state);

// Proportional 6-DoF palm command: linear part in cm/s, angular part in deg/s,
// each component clamped to +-max_speed. Angular error is the shortest signed
// per-axis difference.
Vec6 palm_velocity_command(const Pose& current, const Pose& target, double gain, double max_speed);

} // namespace fitts3d
