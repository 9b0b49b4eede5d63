// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/wire.hpp"

#include <nlohmann/json.hpp>

#include "mecalog/error.hpp"

namespace mecalog::wire
{

using nlohmann::json;

namespace
{

json twist_json(const Twist & t)
{
  return {{"vx", t.v_x}, {"vy", t.v_y}, {"vtheta", t.v_theta}};
}

Twist twist_of(const json & j)
{
  return {j.at("vx").get<double>(), j.at("vy").get<double>(), j.at("vtheta").get<double>()};
}

json trolley_json(const Trolley & t)
{
  return {
    {"name", t.name},
    {"mass_kg", t.mass_kg},
    {"ground_clearance_mm", t.ground_clearance_mm},
    {"casters", std::string(to_string(t.casters))},
    {"footprint_m", {t.footprint_length_m, t.footprint_width_m}}};
}

Trolley trolley_of(const json & j)
{
  Trolley t;
  t.name = j.value("name", std::string{"custom"});
  t.mass_kg = j.at("mass_kg").get<double>();
  t.ground_clearance_mm = j.at("ground_clearance_mm").get<double>();
  t.casters = caster_from_string(j.value("casters", std::string{"FourSwivel"}));
  if (j.contains("footprint_m")) {
    const auto fp = j.at("footprint_m").get<std::vector<double>>();
    if (fp.size() == 2) {
      t.footprint_length_m = fp[0];
      t.footprint_width_m = fp[1];
    }
  }
  return t;
}

struct Encoder
{
  json operator()(const State & s) const
  {
    json j{
      {"type", "state"},
      {"t", s.t},
      {"pose", {{"x", s.pose.x}, {"y", s.pose.y}, {"theta", s.pose.theta}}},
      {"cmd", twist_json(s.cmd)},
      {"measured", twist_json(s.measured)},
      {"mode", std::string(to_string(s.mode))},
      {"lift_s", s.lift_s},
      {"fork_ext", s.fork_ext},
      {"pad_height_mm", s.pad_height_mm},
      {"fork_height_mm", s.fork_height_mm},
      {"battery", s.battery},
      {"charging", s.charging},
      {"stalled", s.stalled}};
    if (s.payload) {
      j["payload"] = *s.payload;
    }
    if (s.trailer) {
      j["trailer"] = {
        {"theta", s.trailer->theta},
        {"hitch_x", s.trailer->hitch_x},
        {"hitch_y", s.trailer->hitch_y},
        {"hitch_length", s.trailer->hitch_length}};
    }
    return j;
  }

  json operator()(const TwistCmd & c) const
  {
    json j = twist_json(c.twist);
    j["type"] = "twist_cmd";
    return j;
  }

  json operator()(const ModeCmd & c) const
  {
    json j{{"type", "mode_cmd"}, {"mode", std::string(to_string(c.mode))}};
    if (c.trolley) {
      j["trolley"] = trolley_json(*c.trolley);
    } else if (c.trolley_name) {
      j["trolley"] = *c.trolley_name;
    }
    return j;
  }

  json operator()(const LiftCmd & c) const
  {
    json j{{"type", "lift_cmd"}, {"powered", c.powered}};
    if (c.s) {
      j["s"] = *c.s;
    }
    if (c.fork_extension) {
      j["fork_extension"] = *c.fork_extension;
    }
    return j;
  }

  json operator()(const ScenarioCtl & c) const
  {
    return {{"type", "scenario_ctl"}, {"action", std::string(to_string(c.action))}};
  }

  json operator()(const ErrorMsg & e) const
  {
    return {{"type", "error"}, {"code", e.code}, {"message", e.message}};
  }
};

ScenarioAction action_of(const std::string & s)
{
  for (auto a : {ScenarioAction::Reset, ScenarioAction::Pause, ScenarioAction::Resume,
      ScenarioAction::ChargeOn, ScenarioAction::ChargeOff})
  {
    if (to_string(a) == s) {
      return a;
    }
  }
  throw Error(ErrorCode::MalformedMessage, "unknown scenario_ctl action '" + s + "'");
}

}  // namespace

std::string_view to_string(ScenarioAction a)
{
  switch (a) {
    case ScenarioAction::Reset: return "reset";
    case ScenarioAction::Pause: return "pause";
    case ScenarioAction::Resume: return "resume";
    case ScenarioAction::ChargeOn: return "charge_on";
    case ScenarioAction::ChargeOff: return "charge_off";
  }
  return "reset";
}

std::string encode(const Message & msg)
{
  std::string out = std::visit(Encoder{}, msg).dump();
  out.push_back('\n');
  return out;
}

Message decode(std::string_view line)
{
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception & e) {
    // parse_error, or out_of_range for numbers that overflow a double
    throw Error(ErrorCode::MalformedMessage, std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw Error(ErrorCode::MalformedMessage, "message must be an object with a string 'type'");
  }

  const std::string type = j.at("type").get<std::string>();
  try {
    if (type == "twist_cmd") {
      return TwistCmd{twist_of(j)};
    }
    if (type == "mode_cmd") {
      ModeCmd c;
      c.mode = mode_from_string(j.at("mode").get<std::string>());
      if (j.contains("trolley")) {
        const json & t = j.at("trolley");
        if (t.is_string()) {
          c.trolley_name = t.get<std::string>();
        } else {
          c.trolley = trolley_of(t);
        }
      }
      return c;
    }
    if (type == "lift_cmd") {
      LiftCmd c;
      c.powered = j.value("powered", true);
      if (j.contains("s")) {
        c.s = j.at("s").get<double>();
      }
      if (j.contains("fork_extension")) {
        c.fork_extension = j.at("fork_extension").get<double>();
      }
      return c;
    }
    if (type == "scenario_ctl") {
      return ScenarioCtl{action_of(j.at("action").get<std::string>())};
    }
    if (type == "error") {
      return ErrorMsg{j.at("code").get<std::string>(), j.value("message", std::string{})};
    }
    if (type == "state") {
      State s;
      s.t = j.at("t").get<double>();
      const json & p = j.at("pose");
      s.pose = {p.at("x").get<double>(), p.at("y").get<double>(), p.at("theta").get<double>()};
      s.cmd = twist_of(j.at("cmd"));
      s.measured = twist_of(j.at("measured"));
      s.mode = mode_from_string(j.at("mode").get<std::string>());
      s.lift_s = j.at("lift_s").get<double>();
      s.fork_ext = j.at("fork_ext").get<double>();
      s.pad_height_mm = j.value("pad_height_mm", 0.0);
      s.fork_height_mm = j.value("fork_height_mm", 0.0);
      s.battery = j.at("battery").get<double>();
      s.charging = j.value("charging", false);
      s.stalled = j.value("stalled", false);
      if (j.contains("payload")) {
        s.payload = j.at("payload").get<std::string>();
      }
      if (j.contains("trailer")) {
        const json & t = j.at("trailer");
        s.trailer = TrailerView{
          t.at("theta").get<double>(), t.value("hitch_x", 0.0), t.value("hitch_y", 0.0),
          t.value("hitch_length", 0.0)};
      }
      return s;
    }
  } catch (const json::exception & e) {
    throw Error(ErrorCode::MalformedMessage, type + ": " + e.what());
  } catch (const Error & e) {
    throw Error(ErrorCode::MalformedMessage, type + ": " + e.what());
  }
  throw Error(ErrorCode::MalformedMessage, "unknown message type '" + type + "'");
}

}  // namespace mecalog::wire
