// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/sim_engine.hpp"

#include <algorithm>
#include <cmath>

#include "mecalog/error.hpp"

namespace mecalog
{

namespace
{

bool finite_nonneg(double v) {return std::isfinite(v) && v >= 0.0;}
bool finite_pos(double v) {return std::isfinite(v) && v > 0.0;}

// Trailer heading rate for a given hook velocity.
double trailer_rate(double trailer_theta, const std::array<double, 2> & hook_vel, double length)
{
  return -(hook_vel[0] * std::cos(trailer_theta) + hook_vel[1] * std::sin(trailer_theta)) / length;
}

}  // namespace

void SimConfig::validate() const
{
  if (!finite_pos(dt)) {
    throw Error(ErrorCode::InvalidConfig, "dt must be > 0");
  }
  if (!finite_nonneg(actuator_lag_tau)) {
    throw Error(ErrorCode::InvalidConfig, "actuator_lag_tau must be >= 0");
  }
  if (!finite_nonneg(odometry_noise_std)) {
    throw Error(ErrorCode::InvalidConfig, "odometry_noise_std must be >= 0");
  }
  if (!finite_pos(hitch_length) || !finite_nonneg(hook_offset)) {
    throw Error(ErrorCode::InvalidConfig, "hitch_length must be > 0 and hook_offset >= 0");
  }
  if (trailer_substeps < 1) {
    throw Error(ErrorCode::InvalidConfig, "trailer_substeps must be >= 1");
  }
  if (!finite_nonneg(battery.drain_per_m) || !finite_pos(battery.charge_full_minutes) ||
    !std::isfinite(battery.initial_frac) || battery.initial_frac < 0.0 ||
    battery.initial_frac > 1.0)
  {
    throw Error(ErrorCode::InvalidConfig, "battery settings out of range");
  }
  try {
    mecanum.validate();
  } catch (const Error & e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  lift.validate();
}

std::array<double, 2> TrailerState::axle() const
{
  // Trailer forward axis is (-sin, cos); the axle trails the hook along it.
  return {
    hitch_x + hitch_length * std::sin(trailer_theta),
    hitch_y - hitch_length * std::cos(trailer_theta)};
}

SimState SimState::initial(const SimConfig & cfg)
{
  SimState s;
  s.mode_state = ModeState::initial(cfg.lift);
  s.battery_frac = cfg.battery.initial_frac;
  return s;
}

TrailerState make_trailer(const Pose2 & robot, const SimConfig & cfg)
{
  const auto hook = body_to_world(robot, {0.0, -cfg.hook_offset});
  return {hook[0], hook[1], robot.theta, cfg.hitch_length};
}

SimState sync_trailer(SimState state, const SimConfig & cfg)
{
  const bool towing = state.mode_state.mode == Mode::Towing;
  if (towing && !state.trailer) {
    state.trailer = make_trailer(state.pose, cfg);
  } else if (!towing) {
    state.trailer.reset();
  }
  return state;
}

TrailerState trailer_step(
  const TrailerState & trailer, const Pose2 & robot_pose, const Twist & robot_twist,
  double dt, double hook_offset, int substeps)
{
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::InvalidTimestep, "dt must be > 0");
  }
  const Offset2 hook{0.0, -hook_offset};
  const double length = trailer.hitch_length;

  auto rate = [&](double tau, double theta_t) {
      const double robot_theta = robot_pose.theta + robot_twist.v_theta * tau;
      return trailer_rate(theta_t, point_velocity_world(robot_theta, robot_twist, hook), length);
    };

  const int n = std::max(substeps, 1);
  const double h = dt / n;
  double theta_t = trailer.trailer_theta;
  for (int i = 0; i < n; ++i) {
    const double tau = i * h;
    const double k1 = rate(tau, theta_t);
    const double k2 = rate(tau + 0.5 * h, theta_t + 0.5 * h * k1);
    const double k3 = rate(tau + 0.5 * h, theta_t + 0.5 * h * k2);
    const double k4 = rate(tau + h, theta_t + h * k3);
    theta_t += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  const Pose2 end = integrate_pose(robot_pose, robot_twist, dt);
  const auto hook_world = body_to_world(end, hook);
  return {hook_world[0], hook_world[1], normalize_angle(theta_t), length};
}

Twist sample_odometry(const SimState & state, const SimConfig & cfg, std::mt19937_64 & rng)
{
  if (cfg.odometry_noise_std == 0.0) {
    return state.twist_actual;
  }
  WheelSpeeds w = inverse_kinematics(state.twist_actual, cfg.mecanum);
  std::normal_distribution<double> noise(0.0, cfg.odometry_noise_std);
  for (double & v : w.w) {
    v += noise(rng);
  }
  return forward_kinematics(w, cfg.mecanum);
}

double battery_update(
  double frac, double distance, bool charging, double dt, const BatteryConfig & cfg)
{
  if (charging) {
    return std::min(1.0, frac + dt / (cfg.charge_full_minutes * 60.0));
  }
  return std::max(0.0, frac - cfg.drain_per_m * distance);
}

SimState step(const SimState & state, const Twist & cmd, const SimConfig & cfg)
{
  if (!cmd.finite()) {
    throw Error(ErrorCode::InvalidTwist, "command has non-finite component");
  }
  SimState next = sync_trailer(state, cfg);
  next.tick = state.tick + 1;
  next.time = static_cast<double>(next.tick) * cfg.dt;

  if (state.battery_frac <= 0.0 && !state.charging) {
    next.stalled = true;
    next.twist_actual = {};
    return next;
  }
  next.stalled = false;

  const Twist shaped =
    saturate_twist(admissible_twist(state.mode_state, cmd), cfg.mecanum);

  if (cfg.actuator_lag_tau > 0.0) {
    const double alpha = std::min(1.0, cfg.dt / cfg.actuator_lag_tau);
    next.twist_actual = state.twist_actual + alpha * (shaped - state.twist_actual);
    // The lag must not leak lateral motion into a towing robot.
    next.twist_actual = admissible_twist(state.mode_state, next.twist_actual);
  } else {
    next.twist_actual = shaped;
  }

  next.pose = integrate_pose(state.pose, next.twist_actual, cfg.dt);
  if (next.trailer) {
    next.trailer = trailer_step(
      *next.trailer, state.pose, next.twist_actual, cfg.dt, cfg.hook_offset,
      cfg.trailer_substeps);
  }

  const double distance = std::hypot(next.twist_actual.v_x, next.twist_actual.v_y) * cfg.dt;
  next.battery_frac = battery_update(state.battery_frac, distance, state.charging, cfg.dt, cfg.battery);
  return next;
}

}  // namespace mecalog
