// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/teleop.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "mecalog/error.hpp"
#include "mecalog/eval.hpp"

namespace mecalog
{

namespace
{

wire::ErrorMsg error_reply(const Error & e)
{
  return {std::string(to_string(e.code())), e.what()};
}

std::optional<Trolley> default_trolley(Mode m)
{
  switch (m) {
    case Mode::Lifting:
    case Mode::Nested:
      return payload_trolley(PayloadCase::Lifting170);
    case Mode::Forklifting:
      return payload_trolley(PayloadCase::Forklift20);
    case Mode::Towing:
      return payload_trolley(PayloadCase::Towing100);
    case Mode::Idle:
      break;
  }
  return std::nullopt;
}

}  // namespace

TeleopSession::TeleopSession(SimConfig cfg, std::vector<Trolley> catalog, TeleopOptions opts)
: cfg_(std::move(cfg)), catalog_(std::move(catalog)), opts_(opts)
{
  cfg_.validate();
  if (!(opts_.broadcast_hz > 0.0) || !(opts_.deadman_s > 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "broadcast rate and dead-man timeout must be > 0");
  }
  reset();
}

void TeleopSession::reset()
{
  // The clock survives a reset so the state stream stays monotonic.
  const double time = state_.time;
  const auto tick = state_.tick;
  state_ = SimState::initial(cfg_);
  state_.time = time;
  state_.tick = tick;
  rng_.seed(cfg_.rng_seed);
  pending_cmd_ = {};
  active_cmd_ = {};
  have_twist_ = false;
  last_twist_time_ = time;
  last_measured_ = {};
}

std::optional<wire::ErrorMsg> TeleopSession::handle_line(std::string_view line)
{
  try {
    return handle(wire::decode(line));
  } catch (const Error & e) {
    return error_reply(e);
  }
}

std::optional<wire::ErrorMsg> TeleopSession::handle(const wire::Message & msg)
{
  return std::visit([this](const auto & m) -> std::optional<wire::ErrorMsg> {
             using T = std::decay_t<decltype(m)>;
             if constexpr (std::is_same_v<T, wire::TwistCmd>) {
               if (!m.twist.finite()) {
                 return wire::ErrorMsg{"InvalidTwist", "twist has non-finite component"};
               }
               pending_cmd_ = m.twist;
               have_twist_ = true;
               last_twist_time_ = state_.time;
               return std::nullopt;
             } else if constexpr (std::is_same_v<T, wire::ModeCmd>) {
               return apply_mode(m);
             } else if constexpr (std::is_same_v<T, wire::LiftCmd>) {
               return apply_lift(m);
             } else if constexpr (std::is_same_v<T, wire::ScenarioCtl>) {
               switch (m.action) {
                 case wire::ScenarioAction::Reset: reset(); break;
                 case wire::ScenarioAction::Pause: paused_ = true; break;
                 case wire::ScenarioAction::Resume: paused_ = false; break;
                 case wire::ScenarioAction::ChargeOn: state_.charging = true; break;
                 case wire::ScenarioAction::ChargeOff: state_.charging = false; break;
               }
               return std::nullopt;
             } else {
               return wire::ErrorMsg{
                 "MalformedMessage", "clients may only send command messages"};
             }
           }, msg);
}

std::optional<wire::ErrorMsg> TeleopSession::apply_mode(const wire::ModeCmd & cmd)
{
  try {
    ModeState ms = state_.mode_state;
    if (cmd.mode == Mode::Idle) {
      if (ms.payload) {
        ms = detach_payload(ms);
      }
    } else {
      std::optional<Trolley> trolley = cmd.trolley;
      if (!trolley && cmd.trolley_name) {
        auto it = std::find_if(catalog_.begin(), catalog_.end(),
            [&](const Trolley & t) {return t.name == *cmd.trolley_name;});
        if (it == catalog_.end()) {
          throw Error(ErrorCode::InvalidTrolley, "no trolley named '" + *cmd.trolley_name + "'");
        }
        trolley = *it;
      }
      if (!trolley) {
        trolley = default_trolley(cmd.mode);
      }
      if (cmd.mode == Mode::Towing && !ms.payload && ms.lift.fork_extension < 1.0) {
        // The hook is at the tip of the fork.
        ms = set_fork_extension(ms, 1.0);
      }
      ms = attach_payload(ms, *trolley, cmd.mode);
    }
    state_.mode_state = ms;
    state_ = sync_trailer(state_, cfg_);
    return std::nullopt;
  } catch (const Error & e) {
    return error_reply(e);
  }
}

std::optional<wire::ErrorMsg> TeleopSession::apply_lift(const wire::LiftCmd & cmd)
{
  try {
    ModeState ms = state_.mode_state;
    if (cmd.fork_extension) {
      ms = set_fork_extension(ms, *cmd.fork_extension);
    }
    if (cmd.s) {
      ms = set_lift(ms, *cmd.s, cmd.powered);
    }
    state_.mode_state = ms;
    return std::nullopt;
  } catch (const Error & e) {
    return error_reply(e);
  }
}

std::optional<wire::State> TeleopSession::tick()
{
  if (paused_) {
    return std::nullopt;
  }
  const bool fresh = have_twist_ && state_.time - last_twist_time_ < opts_.deadman_s;
  active_cmd_ = fresh ? pending_cmd_ : Twist{};

  state_ = step(state_, active_cmd_, cfg_);

  constexpr double kEps = 1e-9;
  if (state_.time + kEps < next_broadcast_) {
    return std::nullopt;
  }
  const double period = 1.0 / opts_.broadcast_hz;
  while (next_broadcast_ <= state_.time + kEps) {
    next_broadcast_ += period;
  }
  last_measured_ = sample_odometry(state_, cfg_, rng_);
  return snapshot();
}

wire::State TeleopSession::snapshot() const
{
  wire::State s;
  s.t = state_.time;
  s.pose = state_.pose;
  s.cmd = state_.stalled ? Twist{} :
    saturate_twist(admissible_twist(state_.mode_state, active_cmd_), cfg_.mecanum);
  s.measured = last_measured_;
  s.mode = state_.mode_state.mode;
  s.lift_s = state_.mode_state.lift.s;
  s.fork_ext = state_.mode_state.lift.fork_extension;
  s.pad_height_mm = state_.mode_state.lift.pad_height;
  s.fork_height_mm = state_.mode_state.lift.fork_height;
  s.battery = state_.battery_frac;
  s.charging = state_.charging;
  s.stalled = state_.stalled;
  if (state_.mode_state.payload) {
    s.payload = state_.mode_state.payload->name;
  }
  if (state_.trailer) {
    s.trailer = wire::TrailerView{
      state_.trailer->trailer_theta, state_.trailer->hitch_x, state_.trailer->hitch_y,
      state_.trailer->hitch_length};
  }
  return s;
}

}  // namespace mecalog
