// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mecalog/error.hpp"

namespace mecalog
{

using nlohmann::json;

namespace
{

std::string read_file(const std::string & path, std::string_view what)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + std::string(what) + " '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void reject_unknown(
  const json & obj, std::initializer_list<std::string_view> allowed, const std::string & where)
{
  for (const auto & item : obj.items()) {
    bool known = false;
    for (auto a : allowed) {
      known = known || item.key() == a;
    }
    if (!known) {
      throw Error(ErrorCode::InvalidConfig, "unknown key '" + where + item.key() + "'");
    }
  }
}

template<typename T>
void read_opt(const json & obj, const char * key, T & into)
{
  if (obj.contains(key)) {
    into = obj.at(key).get<T>();
  }
}

}  // namespace

SimConfig parse_config(std::string_view text)
{
  SimConfig cfg;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) {
      throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
    }
    reject_unknown(j, {"sim", "mecanum", "fork"}, "");

    if (j.contains("sim")) {
      const json & s = j.at("sim");
      reject_unknown(
        s, {"dt", "actuator_lag_tau", "odometry_noise_std", "rng_seed", "hitch_length",
          "hook_offset", "trailer_substeps", "battery"}, "sim.");
      read_opt(s, "dt", cfg.dt);
      read_opt(s, "actuator_lag_tau", cfg.actuator_lag_tau);
      read_opt(s, "odometry_noise_std", cfg.odometry_noise_std);
      read_opt(s, "rng_seed", cfg.rng_seed);
      read_opt(s, "hitch_length", cfg.hitch_length);
      read_opt(s, "hook_offset", cfg.hook_offset);
      read_opt(s, "trailer_substeps", cfg.trailer_substeps);
      if (s.contains("battery")) {
        const json & b = s.at("battery");
        reject_unknown(b, {"capacity_frac", "drain_per_m", "charge_full_minutes"}, "sim.battery.");
        read_opt(b, "capacity_frac", cfg.battery.initial_frac);
        read_opt(b, "drain_per_m", cfg.battery.drain_per_m);
        read_opt(b, "charge_full_minutes", cfg.battery.charge_full_minutes);
      }
    }
    if (j.contains("mecanum")) {
      const json & m = j.at("mecanum");
      reject_unknown(
        m, {"wheel_radius", "half_length", "half_width", "max_body_speed", "max_wheel_speed"},
        "mecanum.");
      read_opt(m, "wheel_radius", cfg.mecanum.wheel_radius);
      read_opt(m, "half_length", cfg.mecanum.half_length);
      read_opt(m, "half_width", cfg.mecanum.half_width);
      read_opt(m, "max_body_speed", cfg.mecanum.max_body_speed);
      read_opt(m, "max_wheel_speed", cfg.mecanum.max_wheel_speed);
    }
    if (j.contains("fork")) {
      const json & f = j.at("fork");
      reject_unknown(f, {"min_mm", "max_mm"}, "fork.");
      read_opt(f, "min_mm", cfg.lift.fork_min_mm);
      read_opt(f, "max_mm", cfg.lift.fork_max_mm);
    }
  } catch (const json::exception & e) {
    throw Error(ErrorCode::InvalidConfig, std::string("malformed config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

SimConfig load_config(const std::string & path)
{
  return parse_config(read_file(path, "config file"));
}

std::string config_to_json(const SimConfig & cfg)
{
  json j{
    {"sim", {
        {"dt", cfg.dt},
        {"actuator_lag_tau", cfg.actuator_lag_tau},
        {"odometry_noise_std", cfg.odometry_noise_std},
        {"rng_seed", cfg.rng_seed},
        {"hitch_length", cfg.hitch_length},
        {"hook_offset", cfg.hook_offset},
        {"trailer_substeps", cfg.trailer_substeps},
        {"battery", {
            {"capacity_frac", cfg.battery.initial_frac},
            {"drain_per_m", cfg.battery.drain_per_m},
            {"charge_full_minutes", cfg.battery.charge_full_minutes}}}}},
    {"mecanum", {
        {"wheel_radius", cfg.mecanum.wheel_radius},
        {"half_length", cfg.mecanum.half_length},
        {"half_width", cfg.mecanum.half_width},
        {"max_body_speed", cfg.mecanum.max_body_speed},
        {"max_wheel_speed", cfg.mecanum.max_wheel_speed}}},
    {"fork", {{"min_mm", cfg.lift.fork_min_mm}, {"max_mm", cfg.lift.fork_max_mm}}}};
  return j.dump(2);
}

std::vector<Trolley> parse_catalog(std::string_view text)
{
  std::vector<Trolley> out;
  try {
    const json j = json::parse(text);
    if (!j.is_array()) {
      throw Error(ErrorCode::InvalidTrolley, "trolley catalog must be a JSON array");
    }
    for (const json & r : j) {
      Trolley t;
      t.name = r.at("name").get<std::string>();
      t.mass_kg = r.at("mass_kg").get<double>();
      t.ground_clearance_mm = r.at("ground_clearance_mm").get<double>();
      t.casters = caster_from_string(r.at("casters").get<std::string>());
      if (r.contains("footprint_m")) {
        const auto fp = r.at("footprint_m").get<std::vector<double>>();
        if (fp.size() != 2) {
          throw Error(ErrorCode::InvalidTrolley, "trolley '" + t.name + "': footprint_m needs [l, w]");
        }
        t.footprint_length_m = fp[0];
        t.footprint_width_m = fp[1];
      }
      t.validate();
      out.push_back(std::move(t));
    }
  } catch (const json::exception & e) {
    throw Error(ErrorCode::InvalidTrolley, std::string("malformed trolley catalog: ") + e.what());
  }
  return out;
}

std::vector<Trolley> load_catalog(const std::string & path)
{
  return parse_catalog(read_file(path, "trolley catalog"));
}

std::string catalog_to_json(const std::vector<Trolley> & trolleys)
{
  json arr = json::array();
  for (const Trolley & t : trolleys) {
    arr.push_back({
        {"name", t.name},
        {"mass_kg", t.mass_kg},
        {"ground_clearance_mm", t.ground_clearance_mm},
        {"casters", std::string(to_string(t.casters))},
        {"footprint_m", {t.footprint_length_m, t.footprint_width_m}}});
  }
  return arr.dump(2);
}

std::vector<Trolley> builtin_catalog()
{
  // Masses of the tray and light trolleys are estimates; only their class
  // (light, clearance under 150 mm) is known from the survey.
  using C = CasterLayout;
  return {
    {"food_trolley", 200.0, 360.0, C::TwoFixedTwoSwivel, 1.1, 0.65},
    {"food_tray_trolley", 150.0, 350.0, C::TwoFixedTwoSwivel, 0.9, 0.6},
    {"linen_trolley", 300.0, 220.0, C::TwoFixedTwoSwivel, 1.2, 0.7},
    {"light_trolley_c", 40.0, 140.0, C::FourSwivel, 0.8, 0.5},
    {"light_trolley_f", 30.0, 120.0, C::FourSwivel, 0.7, 0.5},
    {"light_trolley_h", 50.0, 100.0, C::FourSwivel, 0.9, 0.55},
    {"light_trolley_i", 60.0, 130.0, C::FourSwivel, 0.9, 0.6},
  };
}

}  // namespace mecalog
