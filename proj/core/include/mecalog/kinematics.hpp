// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>

namespace mecalog
{

// Body frame convention used everywhere in this library:
//   +y forward, +x to the right, yaw positive counter-clockwise (z up).
// At pose.theta == 0 the body axes coincide with the world axes, so a pure
// forward command moves the robot along world +y.

/// Body-frame velocity: lateral (v_x), forward (v_y), yaw rate (v_theta).
struct Twist
{
  double v_x{0.0};
  double v_y{0.0};
  double v_theta{0.0};

  bool finite() const;

  friend bool operator==(const Twist &, const Twist &) = default;
};

Twist operator+(const Twist & a, const Twist & b);
Twist operator-(const Twist & a, const Twist & b);
Twist operator*(double k, const Twist & t);

/// World-frame pose, theta kept in (-pi, pi].
struct Pose2
{
  double x{0.0};
  double y{0.0};
  double theta{0.0};

  friend bool operator==(const Pose2 &, const Pose2 &) = default;
};

/// Wraps an angle into (-pi, pi].
double normalize_angle(double a);

struct MecanumParams
{
  double wheel_radius{0.075};   ///< m
  double half_length{0.25};     ///< l_x, centre to axle (m)
  double half_width{0.27};      ///< l_y, centre to wheel contact (m)
  double max_body_speed{0.6};   ///< planar speed cap (m/s)
  double max_wheel_speed{8.5};  ///< rad/s

  /// Throws Error(InvalidParams) unless every field is finite and strictly positive.
  void validate() const;
};

enum Wheel : std::size_t { kFrontLeft = 0, kFrontRight = 1, kRearLeft = 2, kRearRight = 3 };

/// Wheel angular velocities (rad/s), indexed by Wheel.
struct WheelSpeeds
{
  std::array<double, 4> w{};

  bool finite() const;

  friend bool operator==(const WheelSpeeds &, const WheelSpeeds &) = default;
};

/**
 * Body twist to wheel speeds, w = (1/r) M [v_y, v_x, v_theta]^T with
 *
 *   | 1  -1  -(lx+ly) |   front-left
 *   | 1   1   (lx+ly) |   front-right
 *   | 1   1  -(lx+ly) |   rear-left
 *   | 1  -1   (lx+ly) |   rear-right
 *
 * Throws Error(InvalidTwist) on non-finite input.
 */
WheelSpeeds inverse_kinematics(const Twist & t, const MecanumParams & p);

/**
 * Wheel odometry: least-squares twist r M^+ w. The columns of M are mutually
 * orthogonal, so M^+ = diag(1/4, 1/4, 1/(4 k^2)) M^T with k = lx + ly.
 * Throws Error(InvalidWheelSpeeds) on non-finite input.
 */
Twist forward_kinematics(const WheelSpeeds & w, const MecanumParams & p);

/// Common scale factor in (0, 1] that brings t inside both the planar-speed and wheel-speed limits.
double saturation_scale(const Twist & t, const MecanumParams & p);

/// Scales all three components by saturation_scale(t, p); direction is preserved.
Twist saturate_twist(const Twist & t, const MecanumParams & p);

/// Exact constant-twist SE(2) integration over dt. Throws Error(InvalidTimestep) if dt <= 0.
Pose2 integrate_pose(const Pose2 & pose, const Twist & t, double dt);

/// Body-frame offset (m) of a robot rigidly attached to a formation.
struct Offset2
{
  double dx{0.0};  ///< to the right
  double dy{0.0};  ///< forward
};

/// Twist of a robot rigidly mounted at `offset` from the formation centre: v + w x r, same yaw rate.
Twist formation_twist_split(const Twist & body_twist, const Offset2 & offset);

/// World-frame velocity of the body-frame point `offset` on a body moving with twist t at heading theta.
std::array<double, 2> point_velocity_world(double theta, const Twist & t, const Offset2 & offset);

/// World position of the body-frame point `offset`.
std::array<double, 2> body_to_world(const Pose2 & pose, const Offset2 & offset);

}  // namespace mecalog
