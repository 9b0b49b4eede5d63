// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/modes.hpp"

#include <cmath>
#include <sstream>

#include "mecalog/error.hpp"

namespace mecalog
{

namespace
{

bool carries_top_load(const ModeState & s)
{
  return s.payload.has_value() && (s.mode == Mode::Lifting || s.mode == Mode::Nested);
}

bool lift_mode(Mode m)
{
  return m == Mode::Lifting || m == Mode::Forklifting || m == Mode::Nested;
}

std::string kg(double v)
{
  std::ostringstream os;
  os << v << " kg";
  return os.str();
}

}  // namespace

std::string_view to_string(Mode m)
{
  switch (m) {
    case Mode::Idle: return "Idle";
    case Mode::Lifting: return "Lifting";
    case Mode::Forklifting: return "Forklifting";
    case Mode::Towing: return "Towing";
    case Mode::Nested: return "Nested";
  }
  return "Idle";
}

Mode mode_from_string(std::string_view name)
{
  for (Mode m : {Mode::Idle, Mode::Lifting, Mode::Forklifting, Mode::Towing, Mode::Nested}) {
    if (to_string(m) == name) {
      return m;
    }
  }
  throw Error(ErrorCode::InvalidMode, "unknown mode '" + std::string(name) + "'");
}

std::string_view to_string(CasterLayout c)
{
  return c == CasterLayout::FourSwivel ? "FourSwivel" : "TwoFixedTwoSwivel";
}

CasterLayout caster_from_string(std::string_view name)
{
  if (name == "FourSwivel") {
    return CasterLayout::FourSwivel;
  }
  if (name == "TwoFixedTwoSwivel") {
    return CasterLayout::TwoFixedTwoSwivel;
  }
  throw Error(ErrorCode::InvalidTrolley, "unknown caster layout '" + std::string(name) + "'");
}

void LiftGeometry::validate() const
{
  const bool ok =
    std::isfinite(pad_min_mm) && std::isfinite(pad_max_mm) &&
    std::isfinite(fork_min_mm) && std::isfinite(fork_max_mm) &&
    pad_min_mm >= 0.0 && fork_min_mm >= 0.0 &&
    pad_max_mm > pad_min_mm && fork_max_mm > fork_min_mm;
  if (!ok) {
    throw Error(ErrorCode::InvalidConfig, "lift geometry ranges must be non-negative and increasing");
  }
}

void Trolley::validate() const
{
  if (!std::isfinite(mass_kg) || mass_kg <= 0.0) {
    throw Error(ErrorCode::InvalidTrolley, "trolley '" + name + "': mass must be > 0");
  }
  if (!std::isfinite(ground_clearance_mm) || ground_clearance_mm < 0.0) {
    throw Error(ErrorCode::InvalidTrolley, "trolley '" + name + "': ground clearance must be >= 0");
  }
}

ModeState ModeState::initial(const LiftGeometry & geometry)
{
  ModeState s;
  s.geometry = geometry;
  s.lift.s = 0.0;
  s.lift.pad_height = geometry.pad_height(0.0);
  s.lift.fork_height = geometry.fork_height(0.0);
  return s;
}

ModeState set_lift(const ModeState & state, double s_target, bool powered)
{
  if (!std::isfinite(s_target) || s_target < 0.0 || s_target > 1.0) {
    throw Error(ErrorCode::InvalidActuatorCommand, "lift fraction must lie in [0, 1]");
  }
  ModeState next = state;
  next.lift.self_locked = !powered;
  if (!powered) {
    return next;
  }
  next.lift.s = s_target;
  next.lift.pad_height = state.geometry.pad_height(s_target);
  next.lift.fork_height = state.geometry.fork_height(s_target);
  return next;
}

ModeState set_fork_extension(const ModeState & state, double extension)
{
  if (!std::isfinite(extension) || extension < 0.0 || extension > 1.0) {
    throw Error(ErrorCode::InvalidActuatorCommand, "fork extension must lie in [0, 1]");
  }
  if (carries_top_load(state)) {
    throw Error(
      ErrorCode::ForkBlockedByLiftPayload,
      "fork cannot move while a payload is carried on the top lift");
  }
  ModeState next = state;
  next.lift.fork_extension = extension;
  return next;
}

ModeState attach_payload(const ModeState & state, const Trolley & trolley, Mode mode)
{
  if (state.payload) {
    throw Error(ErrorCode::AlreadyLoaded, "payload '" + state.payload->name + "' already attached");
  }
  if (mode == Mode::Idle) {
    throw Error(ErrorCode::InvalidMode, "a payload needs a transport mode, not Idle");
  }
  trolley.validate();

  switch (mode) {
    case Mode::Lifting:
    case Mode::Nested: {
      // Nested: two robots under one base, each carrying half.
      const double per_robot = mode == Mode::Nested ? trolley.mass_kg / 2.0 : trolley.mass_kg;
      if (per_robot > PayloadLimits::kLifting) {
        throw Error(
          ErrorCode::OverPayload,
          "lifting payload " + kg(per_robot) + " exceeds " + kg(PayloadLimits::kLifting));
      }
      if (trolley.ground_clearance_mm < PayloadLimits::kLiftClearanceMm) {
        std::ostringstream os;
        os << "trolley clearance " << trolley.ground_clearance_mm
           << " mm is below the " << PayloadLimits::kLiftClearanceMm << " mm lifting floor";
        throw Error(ErrorCode::InsufficientClearance, os.str());
      }
      break;
    }
    case Mode::Forklifting:
      if (trolley.mass_kg > PayloadLimits::kForklifting) {
        throw Error(
          ErrorCode::OverPayload,
          "forklift payload " + kg(trolley.mass_kg) + " exceeds " + kg(PayloadLimits::kForklifting));
      }
      break;
    case Mode::Towing:
      if (trolley.mass_kg > PayloadLimits::kTowing) {
        throw Error(
          ErrorCode::OverPayload,
          "towed payload " + kg(trolley.mass_kg) + " exceeds " + kg(PayloadLimits::kTowing));
      }
      break;
    case Mode::Idle:
      break;
  }

  ModeState next = state;
  next.mode = mode;
  next.payload = trolley;
  next.hitch_engaged = mode == Mode::Towing;
  return next;
}

ModeState detach_payload(const ModeState & state)
{
  if (!state.payload) {
    throw Error(ErrorCode::NotLoaded, "no payload attached");
  }
  if (lift_mode(state.mode) && state.lift.s > 0.0) {
    throw Error(ErrorCode::MustLowerFirst, "lower the lift to s = 0 before releasing the payload");
  }
  ModeState next = state;
  next.mode = Mode::Idle;
  next.payload.reset();
  next.hitch_engaged = false;
  return next;
}

Twist admissible_twist(const ModeState & state, const Twist & t)
{
  if (state.mode != Mode::Towing) {
    return t;
  }
  return {0.0, t.v_y, t.v_theta};
}

ModeRecommendation select_mode(const Trolley & trolley)
{
  const double m = trolley.mass_kg;
  const double gc = trolley.ground_clearance_mm;
  std::ostringstream why;

  if (!std::isfinite(m) || m <= 0.0 || !std::isfinite(gc) || gc < 0.0) {
    return {false, Mode::Idle, "invalid trolley attributes"};
  }
  if (gc >= PayloadLimits::kLiftClearanceMm) {
    if (m <= PayloadLimits::kLifting) {
      why << "clearance " << gc << " mm fits under the top lift";
      return {true, Mode::Lifting, why.str()};
    }
    why << kg(m) << " exceeds the " << kg(PayloadLimits::kLifting) << " lifting limit";
    return {false, Mode::Idle, why.str()};
  }
  if (m <= PayloadLimits::kForklifting) {
    why << "low clearance, " << kg(m) << " within the fork limit";
    return {true, Mode::Forklifting, why.str()};
  }
  if (m <= PayloadLimits::kTowing) {
    why << "low clearance and too heavy for the fork; tow by the hook";
    return {true, Mode::Towing, why.str()};
  }
  why << "low clearance and " << kg(m) << " exceeds the " << kg(PayloadLimits::kTowing)
      << " towing limit";
  return {false, Mode::Idle, why.str()};
}

}  // namespace mecalog
