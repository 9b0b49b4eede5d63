// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "mecalog/kinematics.hpp"
#include "mecalog/modes.hpp"

namespace mecalog
{

struct BatteryConfig
{
  double initial_frac{1.0};          ///< state of charge at start
  double drain_per_m{0.001};         ///< fraction lost per metre driven
  double charge_full_minutes{50.0};  ///< empty to full on the wireless pad
};

struct SimConfig
{
  double dt{0.02};                   ///< s
  double actuator_lag_tau{0.2};      ///< s, 0 disables the lag
  double odometry_noise_std{0.05};   ///< rad/s per wheel encoder
  std::uint64_t rng_seed{42};
  BatteryConfig battery{};
  double hitch_length{0.6};          ///< hook to trailer axle (m)
  double hook_offset{0.39};          ///< hook sits this far behind the body centre (m)
  int trailer_substeps{8};           ///< RK4 substeps per tick for the trailer heading
  MecanumParams mecanum{};
  LiftGeometry lift{};

  /// Throws Error(InvalidConfig) when any field is out of range.
  void validate() const;
};

/// Fixed-axle trolley on the towing hook.
struct TrailerState
{
  double hitch_x{0.0};        ///< world position of the hook (m)
  double hitch_y{0.0};
  double trailer_theta{0.0};  ///< heading, same convention as Pose2::theta
  double hitch_length{0.6};

  /// World position of the trailer axle midpoint.
  std::array<double, 2> axle() const;
};

struct SimState
{
  Pose2 pose{};
  ModeState mode_state{};
  Twist twist_actual{};
  std::optional<TrailerState> trailer{};
  double battery_frac{1.0};
  double time{0.0};
  std::uint64_t tick{0};
  bool charging{false};
  bool stalled{false};  ///< battery was empty on the last tick

  static SimState initial(const SimConfig & cfg);
};

/// Trailer aligned with the robot and hanging straight back from the hook.
TrailerState make_trailer(const Pose2 & robot, const SimConfig & cfg);

/// Adds or drops the trailer so that it is present exactly when the mode is Towing.
SimState sync_trailer(SimState state, const SimConfig & cfg);

/**
 * One tick of the simulation:
 *   1. cmd  -> admissible_twist for the current mode
 *   2.      -> saturate_twist
 *   3. first-order lag toward the shaped command (tau = 0 means no lag)
 *   4. exact pose integration
 *   5. trailer update while towing
 *   6. battery drain by distance, or charge while docked
 *   7. time advances
 * An empty battery (not charging) stalls the robot: the twist is zeroed and
 * only time advances.
 */
SimState step(const SimState & state, const Twist & cmd, const SimConfig & cfg);

/**
 * Kinematic tractor-trailer update over dt. The robot moves from `robot_pose`
 * with constant `robot_twist`; the hook is the body point (0, -hook_offset).
 * The trailer heading obeys theta_t' = -(v_hook . n(theta_t)) / L, with n the
 * trailer's lateral axis, integrated by RK4 in `substeps` pieces.
 */
TrailerState trailer_step(
  const TrailerState & trailer, const Pose2 & robot_pose, const Twist & robot_twist,
  double dt, double hook_offset, int substeps = 8);

/**
 * Wheel-odometry measurement of the current twist. Gaussian noise is added to
 * each wheel speed and mapped back through forward_kinematics; with zero noise
 * the actual twist is returned exactly.
 */
Twist sample_odometry(const SimState & state, const SimConfig & cfg, std::mt19937_64 & rng);

/// Charging adds dt / (charge_full_minutes * 60) up to 1; otherwise drain_per_m * distance down to 0.
double battery_update(
  double frac, double distance, bool charging, double dt, const BatteryConfig & cfg);

}  // namespace mecalog
