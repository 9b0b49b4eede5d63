// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mecalog/kinematics.hpp"
#include "mecalog/sim_engine.hpp"

namespace mecalog
{

/// The four payload set-ups of the mobility tests.
enum class PayloadCase { NoPayload, Lifting170, Forklift20, Towing100 };

std::string_view to_string(PayloadCase c);
PayloadCase payload_case_from_string(std::string_view name);

/// Mock trolley used for a payload case, or nullopt for NoPayload.
std::optional<Trolley> payload_trolley(PayloadCase c);
Mode payload_mode(PayloadCase c);

struct Segment
{
  double duration{0.0};  ///< s
  Twist cmd{};
};

/// Partial SimConfig; unset fields keep the base value.
struct ConfigOverrides
{
  std::optional<double> dt;
  std::optional<double> actuator_lag_tau;
  std::optional<double> odometry_noise_std;
  std::optional<std::uint64_t> rng_seed;
  std::optional<double> hitch_length;

  SimConfig apply(SimConfig base) const;
};

struct Scenario
{
  std::string name;
  PayloadCase payload_case{PayloadCase::NoPayload};
  std::vector<Segment> segments;
  ConfigOverrides cfg_overrides{};
};

/// Throws ScenarioError naming the segment for non-positive durations,
/// non-finite commands, or lateral commands under Towing.
void validate(const Scenario & sc);

struct TraceSample
{
  double t{0.0};
  Twist cmd{};       ///< raw command as issued
  Twist measured{};  ///< wheel-odometry estimate
  Pose2 pose{};
};

struct Trace
{
  std::vector<TraceSample> samples;
};

struct RunOptions
{
  /// Skipping validation lets a test feed a deliberately inadmissible command
  /// sequence through the engine, e.g. lateral commands while towing.
  bool validate{true};
};

/// Initial engine state with the scenario's payload attached.
SimState prepare_state(PayloadCase c, const SimConfig & cfg);

/**
 * Replays the scenario through the engine at cfg.dt (after cfg_overrides) and
 * records one sample per tick. A segment lasts round(duration / dt) ticks.
 */
Trace run_scenario(const Scenario & sc, const SimConfig & cfg, RunOptions opts = {});

struct RmseReport
{
  double rmse_vx{0.0};
  double rmse_vy{0.0};
  double rmse_vtheta{0.0};

  friend bool operator==(const RmseReport &, const RmseReport &) = default;
};

/// Per-axis root-mean-square of (cmd - measured). Throws Error(EmptyTrace).
RmseReport rmse(const Trace & trace);

enum class Axis : std::size_t { Vx = 0, Vy = 1, Vtheta = 2 };

struct AxisVerdict
{
  bool checked{false};
  bool pass{true};
  double simulated{0.0};
  double reference{0.0};
};

struct CompareVerdict
{
  std::array<AxisVerdict, 3> axes{};
  bool pass() const;
};

/// Axis selection for compare_report; Test-1 covers v_x/v_y, Test-2 covers v_theta.
struct AxisMask
{
  bool vx{true};
  bool vy{true};
  bool vtheta{true};
};

/// Each checked axis passes when ref / band <= simulated <= ref * band. Requires band >= 1.
CompareVerdict compare_report(
  const RmseReport & report, const RmseReport & reference, double band, AxisMask mask = {});

/// Spread check across payload cases: max - min of rmse_vy below `limit`.
bool insensitive_to_payload(std::span<const RmseReport> reports, double limit = 0.02);

/// Hardware reference RMSE per payload case: v_y and v_x from Test-1, v_theta from Test-2.
RmseReport reference_rmse(PayloadCase c);

/// t,cmd_vx,cmd_vy,cmd_vtheta,meas_vx,meas_vy,meas_vtheta,x,y,theta
void write_trace_csv(std::ostream & os, const Trace & trace);

std::string report_to_json(const RmseReport & report);

/// Scenario file (JSON). Throws ScenarioError on malformed content.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::string & path);
std::string scenario_to_json(const Scenario & sc);

}  // namespace mecalog
