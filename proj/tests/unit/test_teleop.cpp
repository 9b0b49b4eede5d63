// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "mecalog/config.hpp"
#include "mecalog/modes.hpp"
#include "mecalog/teleop.hpp"

using namespace mecalog;

namespace
{

SimConfig quiet()
{
  SimConfig cfg;
  cfg.odometry_noise_std = 0.0;
  return cfg;
}

TeleopSession session(SimConfig cfg = quiet())
{
  return TeleopSession(cfg, builtin_catalog());
}

std::vector<wire::State> run(TeleopSession & s, int ticks)
{
  std::vector<wire::State> out;
  for (int i = 0; i < ticks; ++i) {
    if (auto st = s.tick()) {
      out.push_back(*st);
    }
  }
  return out;
}

wire::TwistCmd twist(double vx, double vy, double w)
{
  return {{vx, vy, w}};
}

}  // namespace

TEST(Teleop, BroadcastsAtTwentyHertz)
{
  TeleopSession s = session();
  const auto states = run(s, 500);  // 10 s at 50 Hz
  ASSERT_NEAR(static_cast<double>(states.size()), 200.0, 1.0);
  for (std::size_t i = 1; i < states.size(); ++i) {
    const double gap = states[i].t - states[i - 1].t;
    EXPECT_GT(gap, 0.0);
    // 20 Hz nominal, one sim tick of jitter
    EXPECT_NEAR(gap, 0.05, 0.02 + 1e-9);
  }
}

TEST(Teleop, TwistMovesRobot)
{
  TeleopSession s = session();
  EXPECT_FALSE(s.handle(twist(0.0, 0.3, 0.0)).has_value());
  run(s, 20);
  EXPECT_GT(s.state().pose.y, 0.0);
  EXPECT_EQ(s.snapshot().cmd, (Twist{0.0, 0.3, 0.0}));
}

TEST(Teleop, DeadmanStopsRobot)
{
  TeleopSession s = session();
  s.handle(twist(0.0, 0.3, 0.0));
  run(s, 24);  // 0.48 s, still fresh
  EXPECT_EQ(s.snapshot().cmd.v_y, 0.3);
  run(s, 2);
  EXPECT_EQ(s.snapshot().cmd, Twist{});
  run(s, 100);
  EXPECT_LT(std::abs(s.state().twist_actual.v_y), 1e-3);
  // a fresh command revives it
  s.handle(twist(0.0, 0.3, 0.0));
  run(s, 1);
  EXPECT_EQ(s.snapshot().cmd.v_y, 0.3);
}

TEST(Teleop, LastWriterWinsWithinATick)
{
  TeleopSession s = session();
  s.handle(twist(0.0, 0.3, 0.0));
  s.handle(twist(0.0, -0.2, 0.0));
  run(s, 1);
  EXPECT_EQ(s.snapshot().cmd.v_y, -0.2);
}

TEST(Teleop, TowingDropsLateralCommand)
{
  TeleopSession s = session();
  EXPECT_FALSE(s.handle(wire::ModeCmd{Mode::Towing, std::nullopt, std::nullopt}).has_value());
  EXPECT_TRUE(s.state().trailer.has_value());
  s.handle(twist(0.3, 0.0, 0.0));
  for (const auto & st : run(s, 100)) {
    EXPECT_EQ(st.cmd.v_x, 0.0);
    EXPECT_EQ(st.measured.v_x, 0.0);
    ASSERT_TRUE(st.trailer.has_value());
  }
  EXPECT_EQ(s.state().pose.x, 0.0);
}

TEST(Teleop, IllegalModeIsRejectedAndStateKept)
{
  TeleopSession s = session();
  const auto err = s.handle(wire::ModeCmd{Mode::Lifting, "linen_trolley", std::nullopt});
  ASSERT_TRUE(err.has_value());
  EXPECT_EQ(err->code, "InsufficientClearance");
  EXPECT_EQ(s.state().mode_state.mode, Mode::Idle);

  const auto unknown = s.handle(wire::ModeCmd{Mode::Towing, "no_such", std::nullopt});
  ASSERT_TRUE(unknown.has_value());
  EXPECT_EQ(unknown->code, "InvalidTrolley");

  Trolley heavy{"heavy", 500, 400, CasterLayout::FourSwivel, 1, 1};
  EXPECT_EQ(s.handle(wire::ModeCmd{Mode::Lifting, std::nullopt, heavy})->code, "OverPayload");
}

TEST(Teleop, LiftSliderMovesPad)
{
  TeleopSession s = session();
  s.handle(wire::ModeCmd{Mode::Lifting, "food_trolley", std::nullopt});
  EXPECT_FALSE(s.handle(wire::LiftCmd{1.0, true, std::nullopt}).has_value());
  EXPECT_DOUBLE_EQ(s.snapshot().pad_height_mm, 365.0);
  // unpowered request is ignored by the self-locking jack
  s.handle(wire::LiftCmd{0.0, false, std::nullopt});
  EXPECT_DOUBLE_EQ(s.snapshot().pad_height_mm, 365.0);
  // cannot drop the trolley while raised
  EXPECT_EQ(s.handle(wire::ModeCmd{Mode::Idle, std::nullopt, std::nullopt})->code,
    "MustLowerFirst");
  s.handle(wire::LiftCmd{0.0, true, std::nullopt});
  EXPECT_FALSE(s.handle(wire::ModeCmd{Mode::Idle, std::nullopt, std::nullopt}).has_value());
  EXPECT_EQ(s.snapshot().mode, Mode::Idle);
}

TEST(Teleop, ClientMayNotSendState)
{
  TeleopSession s = session();
  EXPECT_EQ(s.handle(wire::State{})->code, "MalformedMessage");
  EXPECT_EQ(s.handle_line("{oops")->code, "MalformedMessage");
  EXPECT_EQ(s.handle_line(R"({"type":"twist_cmd","vx":0,"vy":0.2,"vtheta":0})"), std::nullopt);
}

TEST(Teleop, PauseResetAndCharge)
{
  TeleopSession s = session();
  s.handle(twist(0.0, 0.3, 0.0));
  run(s, 10);
  s.handle(wire::ScenarioCtl{wire::ScenarioAction::Pause});
  const double t = s.state().time;
  EXPECT_TRUE(run(s, 10).empty());
  EXPECT_EQ(s.state().time, t);
  s.handle(wire::ScenarioCtl{wire::ScenarioAction::Resume});
  s.handle(wire::ScenarioCtl{wire::ScenarioAction::Reset});
  EXPECT_EQ(s.state().pose, Pose2{});
  EXPECT_EQ(s.state().time, t);
  run(s, 5);
  EXPECT_EQ(s.state().pose, Pose2{});  // reset clears the latched command
  s.handle(wire::ScenarioCtl{wire::ScenarioAction::ChargeOn});
  run(s, 1);
  EXPECT_TRUE(s.snapshot().charging);
}

TEST(Teleop, RandomClientTrafficNeverBreaksInvariants)
{
  SimConfig cfg;  // with noise, to exercise the full path
  TeleopSession s(cfg, builtin_catalog());
  const auto catalog = builtin_catalog();
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> modes(0, 4);
  std::uniform_int_distribution<std::size_t> trolley(0, catalog.size());
  double last_t = -1.0;
  for (int i = 0; i < 20000; ++i) {
    const double locked_s = s.state().mode_state.lift.s;
    const int k = kind(rng);
    bool unpowered_lift = false;
    if (k < 5) {
      s.handle(twist(u(rng), u(rng), u(rng)));
    } else if (k == 5) {
      wire::ModeCmd c{static_cast<Mode>(modes(rng)), std::nullopt, std::nullopt};
      const std::size_t idx = trolley(rng);
      if (idx < catalog.size()) {
        c.trolley_name = catalog[idx].name;
      }
      s.handle(c);
    } else if (k == 6) {
      wire::LiftCmd c{u(rng), std::bernoulli_distribution(0.5)(rng), std::nullopt};
      if (std::bernoulli_distribution(0.3)(rng)) {
        c.fork_extension = u(rng);
      }
      unpowered_lift = !c.powered;
      s.handle(c);
    } else if (k == 7 && std::bernoulli_distribution(0.05)(rng)) {
      s.handle(wire::ScenarioCtl{static_cast<wire::ScenarioAction>(modes(rng))});
    } else {
      s.handle_line("garbage");
    }

    const ModeState & ms = s.state().mode_state;
    if (unpowered_lift) {
      ASSERT_EQ(ms.lift.s, locked_s);
    }
    if (ms.payload) {
      switch (ms.mode) {
        case Mode::Lifting:
          ASSERT_LE(ms.payload->mass_kg, PayloadLimits::kLifting);
          ASSERT_GE(ms.payload->ground_clearance_mm, PayloadLimits::kLiftClearanceMm);
          break;
        case Mode::Forklifting:
          ASSERT_LE(ms.payload->mass_kg, PayloadLimits::kForklifting);
          break;
        case Mode::Towing:
          ASSERT_LE(ms.payload->mass_kg, PayloadLimits::kTowing);
          break;
        case Mode::Nested:
          ASSERT_LE(ms.payload->mass_kg / 2.0, PayloadLimits::kLifting);
          break;
        case Mode::Idle:
          FAIL() << "payload while idle";
      }
    }
    ASSERT_EQ(s.state().trailer.has_value(), ms.mode == Mode::Towing);

    if (auto st = s.tick()) {
      ASSERT_GT(st->t, last_t);
      last_t = st->t;
      if (st->mode == Mode::Towing) {
        ASSERT_EQ(st->cmd.v_x, 0.0);
      }
      ASSERT_GE(st->battery, 0.0);
      ASSERT_LE(st->battery, 1.0);
    }
    if (s.state().mode_state.mode == Mode::Towing) {
      ASSERT_EQ(s.state().twist_actual.v_x, 0.0);
    }
  }
}
