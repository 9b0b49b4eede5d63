// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mecalog/error.hpp"

namespace mecalog
{

using nlohmann::json;

std::string_view to_string(PayloadCase c)
{
  switch (c) {
    case PayloadCase::NoPayload: return "NoPayload";
    case PayloadCase::Lifting170: return "Lifting170";
    case PayloadCase::Forklift20: return "Forklift20";
    case PayloadCase::Towing100: return "Towing100";
  }
  return "NoPayload";
}

PayloadCase payload_case_from_string(std::string_view name)
{
  for (PayloadCase c : {PayloadCase::NoPayload, PayloadCase::Lifting170,
      PayloadCase::Forklift20, PayloadCase::Towing100})
  {
    if (to_string(c) == name) {
      return c;
    }
  }
  throw ScenarioError("unknown payload_case '" + std::string(name) + "'");
}

std::optional<Trolley> payload_trolley(PayloadCase c)
{
  switch (c) {
    case PayloadCase::NoPayload:
      return std::nullopt;
    case PayloadCase::Lifting170:
      return Trolley{"mock_lift_trolley", 170.0, 360.0, CasterLayout::FourSwivel, 0.9, 0.6};
    case PayloadCase::Forklift20:
      return Trolley{"mock_fork_trolley", 20.0, 140.0, CasterLayout::FourSwivel, 0.6, 0.45};
    case PayloadCase::Towing100:
      return Trolley{"mock_tow_trolley", 100.0, 220.0, CasterLayout::TwoFixedTwoSwivel, 1.0, 0.6};
  }
  return std::nullopt;
}

Mode payload_mode(PayloadCase c)
{
  switch (c) {
    case PayloadCase::NoPayload: return Mode::Idle;
    case PayloadCase::Lifting170: return Mode::Lifting;
    case PayloadCase::Forklift20: return Mode::Forklifting;
    case PayloadCase::Towing100: return Mode::Towing;
  }
  return Mode::Idle;
}

SimConfig ConfigOverrides::apply(SimConfig base) const
{
  if (dt) {base.dt = *dt;}
  if (actuator_lag_tau) {base.actuator_lag_tau = *actuator_lag_tau;}
  if (odometry_noise_std) {base.odometry_noise_std = *odometry_noise_std;}
  if (rng_seed) {base.rng_seed = *rng_seed;}
  if (hitch_length) {base.hitch_length = *hitch_length;}
  return base;
}

void validate(const Scenario & sc)
{
  const bool towing = sc.payload_case == PayloadCase::Towing100;
  for (std::size_t i = 0; i < sc.segments.size(); ++i) {
    const Segment & seg = sc.segments[i];
    const std::string where = "segment " + std::to_string(i) + ": ";
    if (!std::isfinite(seg.duration) || seg.duration <= 0.0) {
      throw ScenarioError(where + "duration must be > 0", i);
    }
    if (!seg.cmd.finite()) {
      throw ScenarioError(where + "cmd has a non-finite component", i);
    }
    if (towing && seg.cmd.v_x != 0.0) {
      throw ScenarioError(where + "cmd.vx must be 0 while towing", i);
    }
  }
}

SimState prepare_state(PayloadCase c, const SimConfig & cfg)
{
  SimState state = SimState::initial(cfg);
  ModeState ms = state.mode_state;
  switch (c) {
    case PayloadCase::NoPayload:
      break;
    case PayloadCase::Lifting170:
      ms = attach_payload(ms, *payload_trolley(c), Mode::Lifting);
      ms = set_lift(ms, 1.0, true);
      ms = set_lift(ms, 1.0, false);
      break;
    case PayloadCase::Forklift20:
      ms = set_fork_extension(ms, 1.0);
      ms = attach_payload(ms, *payload_trolley(c), Mode::Forklifting);
      ms = set_lift(ms, 1.0, true);
      ms = set_lift(ms, 1.0, false);
      break;
    case PayloadCase::Towing100:
      // The hook sits at the end of the extended fork.
      ms = set_fork_extension(ms, 1.0);
      ms = attach_payload(ms, *payload_trolley(c), Mode::Towing);
      break;
  }
  state.mode_state = ms;
  return sync_trailer(state, cfg);
}

Trace run_scenario(const Scenario & sc, const SimConfig & base, RunOptions opts)
{
  if (opts.validate) {
    validate(sc);
  }
  const SimConfig cfg = sc.cfg_overrides.apply(base);
  cfg.validate();

  std::mt19937_64 rng(cfg.rng_seed);
  SimState state = prepare_state(sc.payload_case, cfg);

  Trace trace;
  std::size_t total = 0;
  for (const Segment & seg : sc.segments) {
    total += static_cast<std::size_t>(std::llround(seg.duration / cfg.dt));
  }
  trace.samples.reserve(total);

  for (const Segment & seg : sc.segments) {
    const auto ticks = std::llround(seg.duration / cfg.dt);
    for (long long k = 0; k < ticks; ++k) {
      state = step(state, seg.cmd, cfg);
      trace.samples.push_back({state.time, seg.cmd, sample_odometry(state, cfg, rng), state.pose});
    }
  }
  return trace;
}

RmseReport rmse(const Trace & trace)
{
  if (trace.samples.empty()) {
    throw Error(ErrorCode::EmptyTrace, "cannot compute RMSE of an empty trace");
  }
  double sx = 0.0;
  double sy = 0.0;
  double st = 0.0;
  for (const TraceSample & s : trace.samples) {
    const Twist e = s.cmd - s.measured;
    sx += e.v_x * e.v_x;
    sy += e.v_y * e.v_y;
    st += e.v_theta * e.v_theta;
  }
  const double n = static_cast<double>(trace.samples.size());
  return {std::sqrt(sx / n), std::sqrt(sy / n), std::sqrt(st / n)};
}

bool CompareVerdict::pass() const
{
  return std::all_of(axes.begin(), axes.end(), [](const AxisVerdict & a) {return a.pass;});
}

CompareVerdict compare_report(
  const RmseReport & report, const RmseReport & reference, double band, AxisMask mask)
{
  if (!(band >= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "band multiplier must be >= 1");
  }
  auto judge = [band](bool checked, double sim, double ref) {
      AxisVerdict v{checked, true, sim, ref};
      if (checked) {
        v.pass = sim >= ref / band && sim <= ref * band;
      }
      return v;
    };
  CompareVerdict out;
  out.axes[static_cast<std::size_t>(Axis::Vx)] =
    judge(mask.vx, report.rmse_vx, reference.rmse_vx);
  out.axes[static_cast<std::size_t>(Axis::Vy)] =
    judge(mask.vy, report.rmse_vy, reference.rmse_vy);
  out.axes[static_cast<std::size_t>(Axis::Vtheta)] =
    judge(mask.vtheta, report.rmse_vtheta, reference.rmse_vtheta);
  return out;
}

bool insensitive_to_payload(std::span<const RmseReport> reports, double limit)
{
  if (reports.empty()) {
    return true;
  }
  auto [lo, hi] = std::minmax_element(
    reports.begin(), reports.end(),
    [](const RmseReport & a, const RmseReport & b) {return a.rmse_vy < b.rmse_vy;});
  return hi->rmse_vy - lo->rmse_vy < limit;
}

RmseReport reference_rmse(PayloadCase c)
{
  switch (c) {
    case PayloadCase::NoPayload: return {0.0223, 0.0309, 0.0383};
    case PayloadCase::Lifting170: return {0.0309, 0.0321, 0.0189};
    case PayloadCase::Forklift20: return {0.0109, 0.0354, 0.0332};
    case PayloadCase::Towing100: return {0.0020, 0.0380, 0.0376};
  }
  return {};
}

void write_trace_csv(std::ostream & os, const Trace & trace)
{
  os << "t,cmd_vx,cmd_vy,cmd_vtheta,meas_vx,meas_vy,meas_vtheta,x,y,theta\n";
  const auto old_prec = os.precision(17);
  for (const TraceSample & s : trace.samples) {
    os << s.t << ','
       << s.cmd.v_x << ',' << s.cmd.v_y << ',' << s.cmd.v_theta << ','
       << s.measured.v_x << ',' << s.measured.v_y << ',' << s.measured.v_theta << ','
       << s.pose.x << ',' << s.pose.y << ',' << s.pose.theta << '\n';
  }
  os.precision(old_prec);
}

std::string report_to_json(const RmseReport & report)
{
  json j{
    {"rmse_vx", report.rmse_vx},
    {"rmse_vy", report.rmse_vy},
    {"rmse_vtheta", report.rmse_vtheta}};
  return j.dump(2);
}

namespace
{

Twist twist_from_json(const json & j, const std::string & where)
{
  if (!j.is_object()) {
    throw ScenarioError(where + "cmd must be an object");
  }
  Twist t;
  t.v_x = j.value("vx", 0.0);
  t.v_y = j.value("vy", 0.0);
  t.v_theta = j.value("vtheta", 0.0);
  return t;
}

}  // namespace

Scenario parse_scenario(std::string_view text)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception & e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ScenarioError("scenario must be a JSON object");
  }

  Scenario sc;
  try {
    sc.name = j.value("name", std::string{});
    sc.payload_case = payload_case_from_string(j.value("payload_case", std::string{"NoPayload"}));

    if (j.contains("segments")) {
      const json & segs = j.at("segments");
      if (!segs.is_array()) {
        throw ScenarioError("field 'segments' must be an array");
      }
      for (std::size_t i = 0; i < segs.size(); ++i) {
        const std::string where = "segment " + std::to_string(i) + ": ";
        const json & s = segs[i];
        if (!s.is_object() || !s.contains("duration") || !s.at("duration").is_number()) {
          throw ScenarioError(where + "field 'duration' missing or not a number", i);
        }
        Segment seg;
        seg.duration = s.at("duration").get<double>();
        try {
          seg.cmd = twist_from_json(s.value("cmd", json::object()), where);
        } catch (const json::exception & e) {
          throw ScenarioError(where + "field 'cmd': " + e.what(), i);
        }
        sc.segments.push_back(seg);
      }
    }

    if (j.contains("cfg_overrides")) {
      const json & o = j.at("cfg_overrides");
      if (!o.is_object()) {
        throw ScenarioError("field 'cfg_overrides' must be an object");
      }
      auto & ov = sc.cfg_overrides;
      if (o.contains("dt")) {ov.dt = o.at("dt").get<double>();}
      if (o.contains("actuator_lag_tau")) {ov.actuator_lag_tau = o.at("actuator_lag_tau").get<double>();}
      if (o.contains("odometry_noise_std")) {
        ov.odometry_noise_std = o.at("odometry_noise_std").get<double>();
      }
      if (o.contains("rng_seed")) {ov.rng_seed = o.at("rng_seed").get<std::uint64_t>();}
      if (o.contains("hitch_length")) {ov.hitch_length = o.at("hitch_length").get<double>();}
    }
  } catch (const json::exception & e) {
    throw ScenarioError(std::string("malformed scenario field: ") + e.what());
  }
  return sc;
}

Scenario load_scenario(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open scenario file '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario & sc)
{
  json segs = json::array();
  for (const Segment & s : sc.segments) {
    segs.push_back({
        {"duration", s.duration},
        {"cmd", {{"vx", s.cmd.v_x}, {"vy", s.cmd.v_y}, {"vtheta", s.cmd.v_theta}}}});
  }
  json ov = json::object();
  const auto & o = sc.cfg_overrides;
  if (o.dt) {ov["dt"] = *o.dt;}
  if (o.actuator_lag_tau) {ov["actuator_lag_tau"] = *o.actuator_lag_tau;}
  if (o.odometry_noise_std) {ov["odometry_noise_std"] = *o.odometry_noise_std;}
  if (o.rng_seed) {ov["rng_seed"] = *o.rng_seed;}
  if (o.hitch_length) {ov["hitch_length"] = *o.hitch_length;}

  json j{
    {"name", sc.name},
    {"payload_case", std::string(to_string(sc.payload_case))},
    {"segments", segs},
    {"cfg_overrides", ov}};
  return j.dump(2);
}

}  // namespace mecalog
