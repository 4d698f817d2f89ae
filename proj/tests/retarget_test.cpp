#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fitts3d/error.hpp"
#include "fitts3d/retarget.hpp"

namespace fitts3d {
namespace {

using std::numbers::pi;

TEST(JointAngle, Examples) {
  EXPECT_NEAR(joint_angle({Vec3(1, 0, 0), Vec3(2, 0, 0)}), 0.0, 1e-12);
  EXPECT_NEAR(joint_angle({Vec3(1, 0, 0), Vec3(0, 1, 0)}), pi / 2, 1e-12);
  EXPECT_NEAR(joint_angle({Vec3(1, 0, 0), Vec3(1, 1, 0)}), pi / 4, 1e-12);
  EXPECT_NEAR(joint_angle({Vec3(1, 0, 0), Vec3(-3, 0, 0)}), pi, 1e-12);
}

TEST(JointAngle, DegenerateBone) {
  EXPECT_THROW(joint_angle({Vec3::Zero(), Vec3(1, 0, 0)}), DegenerateBone);
  EXPECT_THROW(joint_angle({Vec3(1, 0, 0), Vec3(1e-13, 0, 0)}), DegenerateBone);
}

TEST(JointAngle, ScaleInvariantAndSymmetric) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> z;
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 a(z(rng), z(rng), z(rng));
    const Vec3 b(z(rng), z(rng), z(rng));
    const double angle = joint_angle({a, b});
    EXPECT_GE(angle, 0.0);
    EXPECT_LE(angle, pi);
    EXPECT_NEAR(joint_angle({scale(rng) * a, scale(rng) * b}), angle, 1e-9);
    EXPECT_EQ(joint_angle({b, a}), angle);
  }
}

TEST(PdTorque, Examples) {
  EXPECT_EQ(pd_torque({3, 2, 0.7, 0.7, 0}), 0.0);
  EXPECT_EQ(pd_torque({2, 0, 1, 0.5, 0}), 1.0);
  EXPECT_EQ(pd_torque({0, 1, 0, 0, 2}), -2.0);
  EXPECT_THROW(pd_torque({-1, 0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(pd_torque({1, NAN, 0, 0, 0}), std::invalid_argument);
}

TEST(PdTorque, LinearAndOdd) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3, 3), g(0, 5);
  for (int i = 0; i < 1000; ++i) {
    const double kp = g(rng);
    const double kd = g(rng);
    const double e = u(rng);
    const double c = u(rng);
    const double v = u(rng);
    EXPECT_EQ(pd_torque({kp, kd, e, 0, 0}), -pd_torque({kp, kd, -e, 0, 0}));
    EXPECT_NEAR(pd_torque({kp, kd, c + e, c, 0}), -pd_torque({kp, kd, c - e, c, 0}), 1e-12);
    EXPECT_NEAR(pd_torque({kp, kd, 2 * e, 0, v}) - pd_torque({kp, kd, e, 0, v}), kp * e, 1e-12);
  }
}

TEST(PalmVelocity, Examples) {
  const Pose p(Vec3(1, 2, 3), Vec3(10, 20, 30));
  EXPECT_EQ(palm_velocity_command(p, p, 1, 5), Vec6::Zero());

  const Vec6 lin = palm_velocity_command(Pose(), Pose(Vec3(10, 0, 0), Vec3::Zero()), 1, 5);
  EXPECT_EQ(lin, (Vec6() << 5, 0, 0, 0, 0, 0).finished());

  const Vec6 ang = palm_velocity_command(Pose(), Pose(Vec3::Zero(), Vec3(0, 4, 0)), 2, 100);
  EXPECT_EQ(ang, (Vec6() << 0, 0, 0, 0, 8, 0).finished());

  const Vec6 wrap =
      palm_velocity_command(Pose(Vec3::Zero(), Vec3(170, 0, 0)), Pose(Vec3::Zero(), Vec3(-170, 0, 0)), 1, 100);
  EXPECT_NEAR(wrap[3], 20, 1e-12);
}

TEST(PalmVelocity, Saturates) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> pos(-50, 50), ang(-180, 180), gain(0.1, 10), cap(0.5, 20);
  for (int i = 0; i < 2000; ++i) {
    const Pose a(Vec3(pos(rng), pos(rng), pos(rng)), Vec3(ang(rng), ang(rng), ang(rng)));
    const Pose b(Vec3(pos(rng), pos(rng), pos(rng)), Vec3(ang(rng), ang(rng), ang(rng)));
    const double m = cap(rng);
    const Vec6 v = palm_velocity_command(a, b, gain(rng), m);
    EXPECT_LE(v.cwiseAbs().maxCoeff(), m);
  }
}

} // namespace
} // namespace fitts3d
