// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mecalog
{

enum class ErrorCode
{
  InvalidTwist,
  InvalidWheelSpeeds,
  InvalidTimestep,
  InvalidParams,
  InvalidActuatorCommand,
  ForkBlockedByLiftPayload,
  OverPayload,
  InsufficientClearance,
  AlreadyLoaded,
  NotLoaded,
  MustLowerFirst,
  InvalidMode,
  InvalidTrolley,
  InvalidConfig,
  InvalidScenario,
  EmptyTrace,
  InvalidSpec,
  InsufficientData,
  MalformedMessage,
  IoError,
};

/// Stable identifier used on the wire and in CLI diagnostics.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & what)
  : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept {return code_;}

private:
  ErrorCode code_;
};

/// Scenario validation failure; carries the offending segment when there is one.
class ScenarioError : public Error
{
public:
  ScenarioError(const std::string & what, std::optional<std::size_t> segment = std::nullopt)
  : Error(ErrorCode::InvalidScenario, what), segment_(segment) {}

  std::optional<std::size_t> segment() const noexcept {return segment_;}

private:
  std::optional<std::size_t> segment_;
};

}  // namespace mecalog
