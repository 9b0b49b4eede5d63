// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "mecalog/compare.hpp"
#include "mecalog/eval.hpp"
#include "mecalog/kinematics.hpp"
#include "mecalog/sim_engine.hpp"

namespace
{

using namespace mecalog;

void BM_InverseKinematics(benchmark::State & st)
{
  const MecanumParams p;
  Twist t{0.1, 0.3, 0.2};
  for (auto _ : st) {
    benchmark::DoNotOptimize(inverse_kinematics(t, p));
    t.v_theta += 1e-9;
  }
}
BENCHMARK(BM_InverseKinematics);

void BM_ForwardKinematics(benchmark::State & st)
{
  const MecanumParams p;
  WheelSpeeds w{{1.0, 2.0, 3.0, 4.0}};
  for (auto _ : st) {
    benchmark::DoNotOptimize(forward_kinematics(w, p));
    w.w[0] += 1e-9;
  }
}
BENCHMARK(BM_ForwardKinematics);

void BM_Step(benchmark::State & st)
{
  const SimConfig cfg;
  SimState s = SimState::initial(cfg);
  const Twist cmd{0.1, 0.3, 0.2};
  for (auto _ : st) {
    s = step(s, cmd, cfg);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Step);

void BM_StepTowing(benchmark::State & st)
{
  const SimConfig cfg;
  SimState s = prepare_state(PayloadCase::Towing100, cfg);
  const Twist cmd{0.0, 0.3, 0.2};
  for (auto _ : st) {
    s = step(s, cmd, cfg);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_StepTowing);

void BM_RunScenario(benchmark::State & st)
{
  Scenario sc;
  sc.name = "bench";
  for (int i = 0; i < 6; ++i) {
    sc.segments.push_back({4.0, {0.0, i % 2 ? 0.0 : 0.3, 0.0}});
  }
  const SimConfig cfg;
  for (auto _ : st) {
    benchmark::DoNotOptimize(run_scenario(sc, cfg));
  }
  st.SetItemsProcessed(st.iterations() * 1200);
}
BENCHMARK(BM_RunScenario)->Unit(benchmark::kMicrosecond);

void BM_Rank(benchmark::State & st)
{
  std::vector<RobotSpec> specs;
  for (int i = 0; i < st.range(0); ++i) {
    const double f = 1.0 + 0.01 * i;
    specs.push_back({"r" + std::to_string(i), 100 * f, 700 / f, 500 * f, 200 / f, 400 * f, 3});
  }
  for (auto _ : st) {
    benchmark::DoNotOptimize(rank(specs, NormScheme::MinMax));
  }
}
BENCHMARK(BM_Rank)->Arg(7)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
