// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mecalog/kinematics.hpp"
#include "mecalog/modes.hpp"

namespace mecalog::wire
{

// Newline-delimited JSON. Each message is one UTF-8 JSON object on one line
// with a "type" field; see docs/protocol.md.

struct TrailerView
{
  double theta{0.0};
  double hitch_x{0.0};
  double hitch_y{0.0};
  double hitch_length{0.0};

  friend bool operator==(const TrailerView &, const TrailerView &) = default;
};

/// Server -> client snapshot.
struct State
{
  double t{0.0};
  Pose2 pose{};
  Twist cmd{};
  Twist measured{};
  Mode mode{Mode::Idle};
  double lift_s{0.0};
  double fork_ext{0.0};
  double pad_height_mm{0.0};
  double fork_height_mm{0.0};
  double battery{1.0};
  bool charging{false};
  bool stalled{false};
  std::optional<std::string> payload{};
  std::optional<TrailerView> trailer{};

  friend bool operator==(const State &, const State &) = default;
};

struct TwistCmd
{
  Twist twist{};

  friend bool operator==(const TwistCmd &, const TwistCmd &) = default;
};

/// Switch transport mode. Idle releases the payload. The trolley is a catalog
/// name or an inline object; without either the mode's default test payload is used.
struct ModeCmd
{
  Mode mode{Mode::Idle};
  std::optional<std::string> trolley_name{};
  std::optional<Trolley> trolley{};

  friend bool operator==(const ModeCmd &, const ModeCmd &) = default;
};

struct LiftCmd
{
  std::optional<double> s{};
  bool powered{true};
  std::optional<double> fork_extension{};

  friend bool operator==(const LiftCmd &, const LiftCmd &) = default;
};

enum class ScenarioAction { Reset, Pause, Resume, ChargeOn, ChargeOff };

std::string_view to_string(ScenarioAction a);

struct ScenarioCtl
{
  ScenarioAction action{ScenarioAction::Reset};

  friend bool operator==(const ScenarioCtl &, const ScenarioCtl &) = default;
};

struct ErrorMsg
{
  std::string code;
  std::string message;

  friend bool operator==(const ErrorMsg &, const ErrorMsg &) = default;
};

using Message = std::variant<State, TwistCmd, ModeCmd, LiftCmd, ScenarioCtl, ErrorMsg>;

/// One JSON object followed by '\n'.
std::string encode(const Message & msg);

/// Parses one line (a trailing newline is allowed). Throws Error(MalformedMessage).
Message decode(std::string_view line);

}  // namespace mecalog::wire
