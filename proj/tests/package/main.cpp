// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

// Builds against an installed mecalog to check the exported package.

#include "mecalog/kinematics.hpp"

int main()
{
  const mecalog::MecanumParams p;
  const mecalog::Twist t{0.0, 0.3, 0.0};
  const auto back = mecalog::forward_kinematics(mecalog::inverse_kinematics(t, p), p);
  return back == t ? 0 : 1;
}
