// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

// mecalog: simulate / compare / serve / catalog

#include <algorithm>
#include <csignal>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <boost/asio.hpp>

#include "CLI11.hpp"
#include "mecalog/compare.hpp"
#include "mecalog/config.hpp"
#include "mecalog/error.hpp"
#include "mecalog/eval.hpp"
#include "mecalog/modes.hpp"
#include "mecalog/server.hpp"
#include "mecalog/teleop.hpp"

namespace fs = std::filesystem;
using namespace mecalog;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

std::string sparkline(const Trace & trace, double (*pick)(const TraceSample &), std::size_t width)
{
  static const char * kBars[] = {"▁", "▂", "▃", "▄", "▅", "▆", "▇", "█"};
  if (trace.samples.empty()) {
    return {};
  }
  const std::size_t n = trace.samples.size();
  const std::size_t cols = std::min(width, n);
  std::vector<double> vals(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    vals[c] = pick(trace.samples[c * n / cols]);
  }
  const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
  const double span = *hi - *lo;
  std::string out;
  for (double v : vals) {
    const int idx = span > 0.0 ? static_cast<int>((v - *lo) / span * 7.0 + 0.5) : 3;
    out += kBars[std::clamp(idx, 0, 7)];
  }
  return out;
}

SimConfig config_or_default(const std::string & path)
{
  return path.empty() ? SimConfig{} : load_config(path);
}

int run_simulate(
  const std::string & scenario_path, const std::string & config_path,
  std::optional<std::uint64_t> seed, const std::string & out_dir)
{
  if (!fs::exists(scenario_path)) {
    std::cerr << "error: scenario file '" << scenario_path << "' not found\n";
    return kExitInvalid;
  }
  if (!config_path.empty() && !fs::exists(config_path)) {
    std::cerr << "error: config file '" << config_path << "' not found\n";
    return kExitInvalid;
  }

  Scenario sc;
  SimConfig cfg;
  try {
    sc = load_scenario(scenario_path);
    validate(sc);
    cfg = config_or_default(config_path);
  } catch (const ScenarioError & e) {
    std::cerr << "error: " << scenario_path << ": " << e.what() << '\n';
    if (e.segment()) {
      std::cerr << "  offending segment index: " << *e.segment() << '\n';
    }
    return kExitInvalid;
  } catch (const Error & e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInvalid;
  }
  if (seed) {
    // The command line wins over both the config file and the scenario.
    cfg.rng_seed = *seed;
    sc.cfg_overrides.rng_seed = *seed;
  }

  Trace trace;
  try {
    trace = run_scenario(sc, cfg);
  } catch (const Error & e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInvalid;
  }

  const std::string stem = sc.name.empty() ? fs::path(scenario_path).stem().string() : sc.name;
  fs::create_directories(out_dir);
  const fs::path trace_path = fs::path(out_dir) / (stem + "_trace.csv");
  const fs::path report_path = fs::path(out_dir) / (stem + "_rmse.json");
  {
    std::ofstream os(trace_path);
    write_trace_csv(os, trace);
  }

  std::cout << "scenario " << stem << " (" << to_string(sc.payload_case) << "): "
            << trace.samples.size() << " samples\n";
  if (!trace.samples.empty()) {
    const RmseReport rep = rmse(trace);
    std::ofstream(report_path) << report_to_json(rep) << '\n';
    std::cout << std::fixed << std::setprecision(4)
              << "  rmse_vy = " << rep.rmse_vy << "  rmse_vx = " << rep.rmse_vx
              << "  rmse_vtheta = " << rep.rmse_vtheta << '\n';
    std::cout << "  vy      " << sparkline(trace, [](const TraceSample & s) {return s.measured.v_y;}, 60)
              << "\n  vx      " << sparkline(trace, [](const TraceSample & s) {return s.measured.v_x;}, 60)
              << "\n  vtheta  " << sparkline(trace, [](const TraceSample & s) {return s.measured.v_theta;}, 60)
              << '\n';
  }
  std::cout << "  wrote " << trace_path.string() << '\n';
  if (!trace.samples.empty()) {
    std::cout << "  wrote " << report_path.string() << '\n';
  }
  return kExitOk;
}

void print_ranking(const std::vector<std::pair<std::string, double>> & r, NormScheme scheme)
{
  std::cout << "ranking (" << to_string(scheme) << ")\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::cout << "  " << std::setw(2) << i + 1 << ". " << std::left << std::setw(14) << r[i].first
              << std::right << std::fixed << std::setprecision(4) << r[i].second << '\n';
  }
}

int run_compare(const std::string & table_path, const std::string & scheme_name,
  const std::string & out_dir)
{
  if (!fs::exists(table_path)) {
    std::cerr << "error: robot table '" << table_path << "' not found\n";
    return kExitInvalid;
  }
  std::vector<NormScheme> schemes;
  try {
    if (scheme_name == "both") {
      schemes = {NormScheme::MinMax, NormScheme::MaxDivide};
    } else {
      schemes = {scheme_from_string(scheme_name)};
    }
    const auto specs = load_spec_table(table_path);
    if (specs.size() < 2) {
      std::cerr << "error: InsufficientData: comparison needs at least two robots, got "
                << specs.size() << '\n';
      return kExitInvalid;
    }
    std::vector<AttributeVector> raw;
    for (const auto & s : specs) {
      s.validate();
      raw.push_back(transform_attributes(s));
    }
    if (has_degenerate_column(raw)) {
      std::cerr << "warning: at least one attribute is identical for every robot; "
                   "min-max assigns 0.5 there\n";
    }

    fs::create_directories(out_dir);
    for (NormScheme scheme : schemes) {
      const auto rows = score_table(specs, scheme);
      const auto ranking = rank(specs, scheme);
      print_ranking(ranking, scheme);
      const std::string tag(to_string(scheme));
      std::ofstream csv(fs::path(out_dir) / ("normalized_" + tag + ".csv"));
      write_normalized_csv(csv, rows);
      std::ofstream(fs::path(out_dir) / ("ranking_" + tag + ".json"))
        << ranking_to_json(ranking, scheme) << '\n';
    }
  } catch (const Error & e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

std::vector<Trolley> catalog_or_builtin(const std::string & path)
{
  return path.empty() ? builtin_catalog() : load_catalog(path);
}

int run_catalog(const std::string & catalog_path)
{
  try {
    const auto trolleys = catalog_or_builtin(catalog_path);
    std::cout << std::left << std::setw(20) << "trolley" << std::right << std::setw(9) << "mass_kg"
              << std::setw(8) << "gc_mm" << "  " << std::left << std::setw(19) << "casters"
              << "mode\n";
    for (const auto & t : trolleys) {
      const auto rec = select_mode(t);
      std::cout << std::left << std::setw(20) << t.name << std::right << std::setw(9) << t.mass_kg
                << std::setw(8) << t.ground_clearance_mm << "  " << std::left << std::setw(19)
                << to_string(t.casters)
                << (rec.feasible ? std::string(to_string(rec.mode)) : std::string("Infeasible"))
                << "  (" << rec.reason << ")\n";
    }
  } catch (const Error & e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

int run_serve(const std::string & config_path, const std::string & catalog_path,
  const std::string & bind, unsigned short port, std::optional<unsigned short> ws_port,
  std::optional<std::uint64_t> seed)
{
  try {
    SimConfig cfg = config_or_default(config_path);
    if (seed) {
      cfg.rng_seed = *seed;
    }
    boost::asio::io_context io;
    ServerOptions opts;
    opts.bind_address = bind;
    opts.tcp_port = port;
    opts.ws_port = ws_port;
    TelemetryServer server(io, TeleopSession(cfg, catalog_or_builtin(catalog_path)), opts);
    server.start();

    std::cout << "serving on " << bind << ":" << server.tcp_port() << " (tcp, ndjson)";
    if (auto p = server.ws_port()) {
      std::cout << ", " << bind << ":" << *p << " (websocket)";
    }
    std::cout << std::endl;

    boost::asio::signal_set signals(io, SIGINT, SIGTERM);
    signals.async_wait([&](const boost::system::error_code &, int) {server.stop();});
    io.run();
  } catch (const Error & e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"mecalog: mecanum logistics robot simulator and evaluation suite"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;

  auto * sim = app.add_subcommand("simulate", "Replay a scenario; write trace CSV and RMSE JSON");
  std::string scenario_path;
  sim->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  sim->add_option("--config", config_path, "Config JSON file");
  sim->add_option("--seed", seed, "Override the odometry noise seed");
  sim->add_option("--out", out_dir, "Output directory")->capture_default_str();

  auto * cmp = app.add_subcommand("compare", "Score and rank robots by area under the attribute line");
  std::string table_path;
  std::string scheme = "minmax";
  cmp->add_option("table", table_path, "Robot table (.json or .csv)")->required();
  cmp->add_option("--scheme", scheme, "minmax | maxdivide | both")
  ->check(CLI::IsMember({"minmax", "maxdivide", "both"}))->capture_default_str();
  cmp->add_option("--out", out_dir, "Output directory")->capture_default_str();

  auto * srv = app.add_subcommand("serve", "Run the live teleoperation service");
  unsigned short port = 7070;
  std::optional<unsigned short> ws_port;
  std::string bind = "127.0.0.1";
  std::string catalog_path;
  srv->add_option("--port", port, "TCP port for newline-delimited JSON")->capture_default_str();
  srv->add_option("--ws-port", ws_port, "Also accept WebSocket clients on this port");
  srv->add_option("--bind", bind, "Listen address")->capture_default_str();
  srv->add_option("--config", config_path, "Config JSON file");
  srv->add_option("--catalog", catalog_path, "Trolley catalog JSON");
  srv->add_option("--seed", seed, "Odometry noise seed");

  auto * cat = app.add_subcommand("catalog", "List trolleys with their recommended transport mode");
  cat->add_option("--catalog", catalog_path, "Trolley catalog JSON (default: built-in survey)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  if (*sim) {
    return run_simulate(scenario_path, config_path, seed, out_dir);
  }
  if (*cmp) {
    return run_compare(table_path, scheme, out_dir);
  }
  if (*srv) {
    return run_serve(config_path, catalog_path, bind, port, ws_port, seed);
  }
  return run_catalog(catalog_path);
}
