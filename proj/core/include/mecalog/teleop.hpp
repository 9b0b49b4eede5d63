// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "mecalog/sim_engine.hpp"
#include "mecalog/wire.hpp"

namespace mecalog
{

struct TeleopOptions
{
  double broadcast_hz{20.0};
  double deadman_s{0.5};  ///< command decays to zero after this long without a twist_cmd
};

/**
 * The simulation behind the teleoperation service, independent of any socket.
 *
 * The owner calls handle() for each client message and tick() at the sim rate,
 * both from one thread. Twist commands are latched and take effect on the next
 * tick (last writer wins within a tick). Mode and lift commands are applied at
 * once through the modes rules; a rejected command yields an error reply and
 * leaves the state untouched.
 */
class TeleopSession
{
public:
  TeleopSession(SimConfig cfg, std::vector<Trolley> catalog, TeleopOptions opts = {});

  /// Applies one client message; returns the error to send back, if any.
  std::optional<wire::ErrorMsg> handle(const wire::Message & msg);
  /// Decodes then applies one line; malformed input becomes an error reply.
  std::optional<wire::ErrorMsg> handle_line(std::string_view line);

  /// Advances one sim tick unless paused. Returns a snapshot on broadcast ticks.
  std::optional<wire::State> tick();

  wire::State snapshot() const;

  const SimState & state() const {return state_;}
  const SimConfig & config() const {return cfg_;}
  bool paused() const {return paused_;}

private:
  std::optional<wire::ErrorMsg> apply_mode(const wire::ModeCmd & cmd);
  std::optional<wire::ErrorMsg> apply_lift(const wire::LiftCmd & cmd);
  void reset();

  SimConfig cfg_;
  std::vector<Trolley> catalog_;
  TeleopOptions opts_;
  SimState state_;
  std::mt19937_64 rng_;
  Twist pending_cmd_{};
  Twist active_cmd_{};
  double last_twist_time_{0.0};
  bool have_twist_{false};
  Twist last_measured_{};
  double next_broadcast_{0.0};
  bool paused_{false};
};

}  // namespace mecalog
