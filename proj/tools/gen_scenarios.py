#!/usr/bin/env python3
# Copyright (c) 2026 The mecalog Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the shipped mobility-test scenario files under data/scenarios/.

test1_*: axis-wise step sequence (+vy, -vy, +vx, -vx, +vtheta, -vtheta) at
0.3 m/s / 0.3 rad/s, 4 s per step, each step followed by a 4 s zero hold
(stick released). Towing replaces the lateral steps with zero holds.

test2_*: corridor corner. vy = 0.25 throughout, vtheta ramps 0 -> 0.3 rad/s in
ten 0.1 s steps, holds, ramps back down, for a ~90 degree turn between two
4 s straights.

Every file carries its own odometry seed so the payload runs are independent
trials rather than replays of one noise sequence.
"""
import json
import math
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "scenarios"
CASES = {
    "nopayload": "NoPayload",
    "lifting": "Lifting170",
    "forklift": "Forklift20",
    "towing": "Towing100",
}
STEP = 4.0
V = 0.3


def seg(duration, vx=0.0, vy=0.0, vtheta=0.0):
    return {"duration": round(duration, 6),
            "cmd": {"vx": vx, "vy": vy, "vtheta": vtheta}}


def test1(towing):
    out = []
    for axis in ("vy", "vx", "vtheta"):
        for sign in (1.0, -1.0):
            if towing and axis == "vx":
                out.append(seg(STEP))
            else:
                out.append(seg(STEP, **{axis: sign * V}))
            out.append(seg(STEP))
    return out


def test2():
    vy, w_max, n, dt_ramp = 0.25, 0.3, 10, 0.1
    up = [w_max * (k + 1) / n for k in range(n)]
    down = [w_max * (n - 1 - k) / n for k in range(n)]
    ramp_angle = sum(up) * dt_ramp + sum(down) * dt_ramp
    hold = (math.pi / 2 - ramp_angle) / w_max
    hold = round(hold / 0.02) * 0.02
    out = [seg(4.0, vy=vy)]
    out += [seg(dt_ramp, vy=vy, vtheta=round(w, 6)) for w in up]
    out.append(seg(hold, vy=vy, vtheta=w_max))
    out += [seg(dt_ramp, vy=vy, vtheta=round(w, 6)) for w in down]
    out.append(seg(4.0, vy=vy))
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for i, (short, case) in enumerate(CASES.items()):
        for j, (name, segs) in enumerate(
                (("test1", test1(short == "towing")), ("test2", test2()))):
            doc = {"name": f"{name}_{short}", "payload_case": case,
                   "segments": segs,
                   "cfg_overrides": {"rng_seed": 101 + 10 * j + i}}
            (OUT / f"{name}_{short}.json").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
