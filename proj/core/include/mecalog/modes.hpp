// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mecalog/kinematics.hpp"

namespace mecalog
{

enum class Mode { Idle, Lifting, Forklifting, Towing, Nested };

std::string_view to_string(Mode m);
/// Throws Error(InvalidMode) for unknown names.
Mode mode_from_string(std::string_view name);

/// Per-mode payload limits (kg) and the top-lift clearance floor (mm).
struct PayloadLimits
{
  static constexpr double kLifting = 400.0;
  static constexpr double kForklifting = 90.0;
  static constexpr double kTowing = 300.0;
  static constexpr double kLiftClearanceMm = 320.0;
};

/// Travel of the shared screw-jack drive. Both the top pads and the rear fork
/// are affine in the same actuator fraction s.
struct LiftGeometry
{
  double pad_min_mm{206.0};
  double pad_max_mm{365.0};
  double fork_min_mm{60.0};
  double fork_max_mm{219.0};

  double pad_height(double s) const {return pad_min_mm + s * (pad_max_mm - pad_min_mm);}
  double fork_height(double s) const {return fork_min_mm + s * (fork_max_mm - fork_min_mm);}

  /// Throws Error(InvalidConfig) unless both ranges are finite, non-negative and increasing.
  void validate() const;
};

struct LiftState
{
  double s{0.0};               ///< actuator fraction in [0, 1]
  double pad_height{206.0};    ///< mm
  double fork_height{60.0};    ///< mm
  double fork_extension{0.0};  ///< fraction in [0, 1]
  bool self_locked{true};      ///< true while the drive is unpowered
};

enum class CasterLayout { FourSwivel, TwoFixedTwoSwivel };

std::string_view to_string(CasterLayout c);
CasterLayout caster_from_string(std::string_view name);

struct Trolley
{
  std::string name;
  double mass_kg{0.0};
  double ground_clearance_mm{0.0};
  CasterLayout casters{CasterLayout::FourSwivel};
  double footprint_length_m{0.0};
  double footprint_width_m{0.0};

  /// Throws Error(InvalidTrolley) unless mass > 0 and clearance >= 0 (both finite).
  void validate() const;

  friend bool operator==(const Trolley &, const Trolley &) = default;
};

struct ModeState
{
  Mode mode{Mode::Idle};
  LiftGeometry geometry{};
  LiftState lift{};
  std::optional<Trolley> payload{};
  bool hitch_engaged{false};

  /// Idle, lowered, retracted, using `geometry`.
  static ModeState initial(const LiftGeometry & geometry = {});
};

/**
 * Drives the shared lift actuator. When powered, s moves to s_target and both
 * pad and fork heights follow; when unpowered the screw jacks hold and the
 * state is returned unchanged apart from the self_locked flag.
 * Throws Error(InvalidActuatorCommand) if s_target is outside [0, 1].
 */
ModeState set_lift(const ModeState & state, double s_target, bool powered);

/**
 * Moves the horizontal fork actuator. Refused with ForkBlockedByLiftPayload
 * while a top-lifted payload is carried (Lifting or Nested with payload).
 */
ModeState set_fork_extension(const ModeState & state, double extension);

/**
 * Takes on `trolley` in `mode`. Checks, in order: AlreadyLoaded, InvalidMode
 * (Idle), InvalidTrolley, OverPayload, InsufficientClearance.
 * Nested splits the mass across two robots, each held to the lifting limit.
 */
ModeState attach_payload(const ModeState & state, const Trolley & trolley, Mode mode);

/// Releases the payload and returns to Idle. Top and fork lifts must be lowered first.
ModeState detach_payload(const ModeState & state);

/// Towing forbids lateral motion: v_x is forced to exactly zero.
Twist admissible_twist(const ModeState & state, const Twist & t);

struct ModeRecommendation
{
  bool feasible{false};
  Mode mode{Mode::Idle};
  std::string reason;
};

/// Picks the transport mode for a trolley from its clearance and mass.
ModeRecommendation select_mode(const Trolley & trolley);

}  // namespace mecalog
