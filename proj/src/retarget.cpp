#include "fitts3d/retarget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fitts3d/error.hpp"

namespace fitts3d {

namespace {
constexpr double kMinBoneNorm = 1e-12;
}

double joint_angle(const BonePair& pair) {
  const double nb = pair.bone.norm();
  const double np = pair.parent.norm();
  if (!(nb > kMinBoneNorm) || !(np > kMinBoneNorm)) {
    throw DegenerateBone("joint_angle: bone vectors must have norm > 1e-12");
  }
  const double cosine = std::clamp(pair.bone.dot(pair.parent) / (nb * np), -1.0, 1.0);
  return std::acos(cosine);
}

double pd_torque(const JointState& state) {
  if (!(state.kp >= 0.0) || !(state.kd >= 0.0) || !std::isfinite(state.kp) ||
      !std::isfinite(state.kd)) {
    throw std::invalid_argument("pd_torque: gains must be finite and non-negative");
  }
  return state.kp * (state.theta_desired - state.theta_current) - state.kd * state.theta_dot;
}

Vec6 palm_velocity_command(const Pose& current, const Pose& target, double gain,
                           double max_speed) {
  if (!(gain > 0.0) || !(max_speed > 0.0)) {
    throw std::invalid_argument("palm_velocity_command: gain and max_speed must be positive");
  }
  Vec6 cmd;
  cmd.head<3>() = gain * (target.position() - current.position());
  for (int i = 0; i < 3; ++i) {
    cmd[3 + i] = gain * wrap_degrees(target.rotation()[i] - current.rotation()[i]);
  }
  return cmd.cwiseMax(-max_speed).cwiseMin(max_speed);
}

} // namespace fitts3d
