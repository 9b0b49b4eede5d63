// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/error.hpp"

namespace mecalog
{

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidTwist: return "InvalidTwist";
    case ErrorCode::InvalidWheelSpeeds: return "InvalidWheelSpeeds";
    case ErrorCode::InvalidTimestep: return "InvalidTimestep";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidActuatorCommand: return "InvalidActuatorCommand";
    case ErrorCode::ForkBlockedByLiftPayload: return "ForkBlockedByLiftPayload";
    case ErrorCode::OverPayload: return "OverPayload";
    case ErrorCode::InsufficientClearance: return "InsufficientClearance";
    case ErrorCode::AlreadyLoaded: return "AlreadyLoaded";
    case ErrorCode::NotLoaded: return "NotLoaded";
    case ErrorCode::MustLowerFirst: return "MustLowerFirst";
    case ErrorCode::InvalidMode: return "InvalidMode";
    case ErrorCode::InvalidTrolley: return "InvalidTrolley";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    case ErrorCode::EmptyTrace: return "EmptyTrace";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::MalformedMessage: return "MalformedMessage";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mecalog
