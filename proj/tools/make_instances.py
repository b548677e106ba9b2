#!/usr/bin/env python3
# Copyright 2026 The sgsolve Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the bundled instance corpus into instances/.

Payoffs are multiples of 1/4 drawn from a fixed seed per file, so the
output is reproducible. Hand-derived reference games carry their
expected values in metadata.
"""

import itertools
import json
import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "instances"


def quarter(rng, lo, hi):
    return rng.randint(lo * 4, hi * 4) / 4


def payoffs(rng, n, zero_sum):
    r, c, rho, zeta = [], [], [], []
    for _ in range(n):
        ci = quarter(rng, -5, 3)
        ri = ci + quarter(rng, 1, 5)
        c.append(ci)
        r.append(ri)
        if zero_sum:
            rho.append(-ci)
            zeta.append(-ri)
        else:
            zi = quarter(rng, -5, 3)
            zeta.append(zi)
            rho.append(zi + quarter(rng, 1, 5))
    return {"reward": r, "cost": c, "att_reward": rho, "att_cost": zeta}


def write(name, n, pay, system, seed=None, expected=None):
    meta = {"name": name}
    if seed is not None:
        meta["seed"] = seed
    if expected:
        meta["expected"] = expected
    doc = {"targets": n, "payoffs": pay, "set_system": system, "metadata": meta}
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


def main():
    OUT.mkdir(exist_ok=True)
    matroid1 = {"kind": "uniform_matroid", "k": 1}

    write("g2", 2, {"reward": [1, 1], "cost": [0, 0], "att_reward": [0, 0],
                    "att_cost": [-1, -1]}, matroid1,
          expected={"minimax": 0.5, "sse": 0.5, "ne-best": 0.5, "ne-worst": 0.5})
    write("g2b", 2, {"reward": [1, 1], "cost": [0, -1], "att_reward": [0, 1],
                     "att_cost": [-1, -1]}, matroid1,
          expected={"minimax": "1/3", "sse": "1/3", "ne-best": "1/3", "ne-worst": "1/3"})
    write("g3", 2, {"reward": [1, 1], "cost": [0, 0], "att_reward": [1, 2],
                    "att_cost": [0, 0]}, matroid1,
          expected={"sse": "2/3", "ne-any": 0.5, "ne-best": 0.5, "ne-worst": 0.5})

    # Edge game on K5 with two patrolled vertices; value 1 - C(3,2)/C(5,2).
    edges = list(itertools.combinations(range(5), 2))
    strategies = []
    for patrol in itertools.combinations(range(5), 2):
        strategies.append([int(u in patrol or v in patrol) for u, v in edges])
    m = len(edges)
    write("k5_edges", m, {"reward": [1] * m, "cost": [0] * m, "att_reward": [0] * m,
                          "att_cost": [-1] * m},
          {"kind": "explicit", "strategies": strategies}, expected={"minimax": 0.7})

    # Two positions, two times; targets a1=1, b1=2, a2=3, b2=4.
    write("layered_small", 4, payoffs(random.Random(4), 4, True),
          {"kind": "layered_graph", "positions": 2, "times": 2,
           "target_index": [{"position": 1, "time": 1, "target": 1},
                            {"position": 2, "time": 1, "target": 2},
                            {"position": 1, "time": 2, "target": 3},
                            {"position": 2, "time": 2, "target": 4}],
           "moves": [{"from": 1, "to": 1, "time": 1}, {"from": 1, "to": 2, "time": 1},
                     {"from": 2, "to": 2, "time": 1}],
           "k": 1}, seed=4)

    seed = 11
    rng = random.Random(seed)
    write("matroid_6", 6, payoffs(rng, 6, False), {"kind": "uniform_matroid", "k": 2}, seed)

    seed = 12
    rng = random.Random(seed)
    write("bipartite_7", 7, payoffs(rng, 7, True),
          {"kind": "bipartite", "resources": [[1, 2, 3], [3, 4, 5, 6], [6, 7], [1, 7]]}, seed)

    seed = 13
    rng = random.Random(seed)
    write("coverage_8", 8, payoffs(rng, 8, False),
          {"kind": "coverage", "resources": [
              {"schedules": [[1, 2], [2, 3, 4], [8]]},
              {"schedules": [[4, 5], [5, 6, 7]]},
              {"schedules": [[7, 8, 1], [3], [2, 6]]}]}, seed)

    # 3 positions x 3 times, every grid point a target, moves to neighbours.
    seed = 14
    rng = random.Random(seed)
    index, moves = [], []
    for t in range(3):
        for p in range(3):
            index.append({"position": p + 1, "time": t + 1, "target": t * 3 + p + 1})
    for t in range(2):
        for p in range(3):
            for q in (p - 1, p, p + 1):
                if 0 <= q < 3:
                    moves.append({"from": p + 1, "to": q + 1, "time": t + 1})
    write("layered_9", 9, payoffs(rng, 9, False),
          {"kind": "layered_graph", "positions": 3, "times": 3, "target_index": index,
           "moves": moves, "k": 2}, seed)

    seed = 15
    rng = random.Random(seed)
    write("packing_6", 6, payoffs(rng, 6, True),
          {"kind": "packing", "teams": [["xray"], ["xray", "dog"], ["bag"], ["dog", "bag"]],
           "capacities": {"xray": 2, "dog": 1, "bag": 1}}, seed)

    seed = 16
    rng = random.Random(seed)
    rows = set()
    while len(rows) < 9:
        rows.add(tuple(rng.randint(0, 1) for _ in range(6)))
    write("explicit_6", 6, payoffs(rng, 6, False),
          {"kind": "explicit", "strategies": [list(r) for r in sorted(rows)]}, seed)

    # Too many strategies to list: verify reports skipped checks.
    seed = 17
    rng = random.Random(seed)
    write("matroid_40", 40, payoffs(rng, 40, False), {"kind": "uniform_matroid", "k": 12}, seed)


if __name__ == "__main__":
    main()
