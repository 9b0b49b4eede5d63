// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mecalog/error.hpp"

namespace mecalog
{

namespace
{

// Limits are treated as met when exceeded by less than this relative amount,
// which makes saturate_twist idempotent under rounding.
constexpr double kLimitSlack = 1e-12;

}  // namespace

bool Twist::finite() const
{
  return std::isfinite(v_x) && std::isfinite(v_y) && std::isfinite(v_theta);
}

Twist operator+(const Twist & a, const Twist & b)
{
  return {a.v_x + b.v_x, a.v_y + b.v_y, a.v_theta + b.v_theta};
}

Twist operator-(const Twist & a, const Twist & b)
{
  return {a.v_x - b.v_x, a.v_y - b.v_y, a.v_theta - b.v_theta};
}

Twist operator*(double k, const Twist & t)
{
  return {k * t.v_x, k * t.v_y, k * t.v_theta};
}

double normalize_angle(double a)
{
  constexpr double pi = std::numbers::pi;
  if (a > -pi && a <= pi) {
    return a;
  }
  double r = std::remainder(a, 2.0 * pi);  // [-pi, pi]
  if (r <= -pi) {
    r += 2.0 * pi;
  }
  return r;
}

void MecanumParams::validate() const
{
  for (double v : {wheel_radius, half_length, half_width, max_body_speed, max_wheel_speed}) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw Error(ErrorCode::InvalidParams, "mecanum parameters must be finite and > 0");
    }
  }
}

bool WheelSpeeds::finite() const
{
  return std::all_of(w.begin(), w.end(), [](double v) {return std::isfinite(v);});
}

WheelSpeeds inverse_kinematics(const Twist & t, const MecanumParams & p)
{
  if (!t.finite()) {
    throw Error(ErrorCode::InvalidTwist, "twist has non-finite component");
  }
  const double k = p.half_length + p.half_width;
  const double inv_r = 1.0 / p.wheel_radius;

  WheelSpeeds out;
  out.w[kFrontLeft] = inv_r * (t.v_y - t.v_x - k * t.v_theta);
  out.w[kFrontRight] = inv_r * (t.v_y + t.v_x + k * t.v_theta);
  out.w[kRearLeft] = inv_r * (t.v_y + t.v_x - k * t.v_theta);
  out.w[kRearRight] = inv_r * (t.v_y - t.v_x + k * t.v_theta);
  return out;
}

Twist forward_kinematics(const WheelSpeeds & ws, const MecanumParams & p)
{
  if (!ws.finite()) {
    throw Error(ErrorCode::InvalidWheelSpeeds, "wheel speeds have non-finite entry");
  }
  const auto & w = ws.w;
  const double k = p.half_length + p.half_width;
  const double r4 = 0.25 * p.wheel_radius;

  // Grouped as pairwise differences: a twist with v_x == 0 gives FL == RL and
  // FR == RR bit-for-bit, so the recovered v_x is exactly zero.
  Twist t;
  t.v_y = r4 * ((w[kFrontLeft] + w[kRearRight]) + (w[kFrontRight] + w[kRearLeft]));
  t.v_x = r4 * ((w[kFrontRight] - w[kFrontLeft]) + (w[kRearLeft] - w[kRearRight]));
  t.v_theta = (r4 / k) *
    ((w[kFrontRight] - w[kRearLeft]) + (w[kRearRight] - w[kFrontLeft]));
  return t;
}

double saturation_scale(const Twist & t, const MecanumParams & p)
{
  double scale = 1.0;

  const double planar = std::hypot(t.v_x, t.v_y);
  if (planar > p.max_body_speed * (1.0 + kLimitSlack)) {
    scale = std::min(scale, p.max_body_speed / planar);
  }

  const WheelSpeeds ws = inverse_kinematics(t, p);
  double peak = 0.0;
  for (double v : ws.w) {
    peak = std::max(peak, std::abs(v));
  }
  if (peak > p.max_wheel_speed * (1.0 + kLimitSlack)) {
    scale = std::min(scale, p.max_wheel_speed / peak);
  }
  return scale;
}

Twist saturate_twist(const Twist & t, const MecanumParams & p)
{
  const double scale = saturation_scale(t, p);
  if (scale == 1.0) {
    return t;
  }
  return scale * t;
}

Pose2 integrate_pose(const Pose2 & pose, const Twist & t, double dt)
{
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorCode::InvalidTimestep, "dt must be finite and > 0");
  }
  if (!t.finite()) {
    throw Error(ErrorCode::InvalidTwist, "twist has non-finite component");
  }

  // Body-frame displacement: integral over [0, dt] of R(w s) [v_x, v_y].
  //   sin_term = sin(phi) / w,  cos_term = (1 - cos(phi)) / w
  const double phi = t.v_theta * dt;
  double sin_term;
  double cos_term;
  if (std::abs(phi) < 1e-6) {
    const double phi2 = phi * phi;
    sin_term = dt * (1.0 - phi2 / 6.0 * (1.0 - phi2 / 20.0));
    cos_term = dt * phi * (0.5 - phi2 / 24.0);
  } else {
    sin_term = std::sin(phi) / t.v_theta;
    cos_term = (1.0 - std::cos(phi)) / t.v_theta;
  }
  const double dx_body = t.v_x * sin_term - t.v_y * cos_term;
  const double dy_body = t.v_x * cos_term + t.v_y * sin_term;

  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  return {
    pose.x + c * dx_body - s * dy_body,
    pose.y + s * dx_body + c * dy_body,
    normalize_angle(pose.theta + phi)};
}

Twist formation_twist_split(const Twist & body_twist, const Offset2 & offset)
{
  // w z x (dx, dy) = w (-dy, dx)
  return {
    body_twist.v_x - body_twist.v_theta * offset.dy,
    body_twist.v_y + body_twist.v_theta * offset.dx,
    body_twist.v_theta};
}

std::array<double, 2> point_velocity_world(double theta, const Twist & t, const Offset2 & offset)
{
  const Twist local = formation_twist_split(t, offset);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * local.v_x - s * local.v_y, s * local.v_x + c * local.v_y};
}

std::array<double, 2> body_to_world(const Pose2 & pose, const Offset2 & offset)
{
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  return {pose.x + c * offset.dx - s * offset.dy, pose.y + s * offset.dx + c * offset.dy};
}

}  // namespace mecalog
