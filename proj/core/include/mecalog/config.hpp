// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mecalog/modes.hpp"
#include "mecalog/sim_engine.hpp"

namespace mecalog
{

/**
 * Config file layout (every key optional, defaults from SimConfig):
 *
 *   {
 *     "sim":     {"dt", "actuator_lag_tau", "odometry_noise_std", "rng_seed",
 *                 "hitch_length", "hook_offset", "trailer_substeps",
 *                 "battery": {"capacity_frac", "drain_per_m", "charge_full_minutes"}},
 *     "mecanum": {"wheel_radius", "half_length", "half_width",
 *                 "max_body_speed", "max_wheel_speed"},
 *     "fork":    {"min_mm", "max_mm"}
 *   }
 *
 * Unknown keys are rejected so typos do not silently fall back to defaults.
 */
SimConfig parse_config(std::string_view json_text);
SimConfig load_config(const std::string & path);
std::string config_to_json(const SimConfig & cfg);

/// Trolley catalog: JSON array of {name, mass_kg, ground_clearance_mm, casters, footprint_m: [l, w]}.
std::vector<Trolley> parse_catalog(std::string_view json_text);
std::vector<Trolley> load_catalog(const std::string & path);
std::string catalog_to_json(const std::vector<Trolley> & trolleys);

/// The surveyed hospital trolleys, used when no catalog file is given.
std::vector<Trolley> builtin_catalog();

}  // namespace mecalog
