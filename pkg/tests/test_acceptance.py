"""The ten acceptance criteria, one test each.

Every test records a PASS/FAIL line; the lines are printed in the terminal
summary of a pytest run and directly when this file is run as a script.
"""

from __future__ import annotations

import math
import random
import subprocess
import sys
import time
from itertools import chain

from corpus import BLOCKS_PARTIAL, BLOCKS_SLIDING, TWO_PERIODS_18, ZIGZAG_18
from opperiods.cli import mismatches
from opperiods.intervals import IntervalSet, normalize
from opperiods.lce import build
from opperiods.opcore import is_strictly_monotone
from opperiods.oracle import (
    all_strings,
    brute_lce_all,
    brute_report,
    brute_shifts,
    finewilf_suite,
    periodicity_graph,
    random_corpus,
)
from opperiods.periods import all_op_periods, full_periods, initial_periods
from opperiods.prefix import compute_op_pref
from opperiods.sliding import sliding_periods

RESULTS: list[str] = []


def record(num: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def random_strings_c4() -> list[tuple[int, ...]]:
    rng = random.Random(20240)
    out = []
    for _ in range(1000):
        n = rng.randint(10, 100)
        a = rng.choice([2, 5, n])
        out.append(tuple(rng.randrange(a) for _ in range(n)))
    return out


def test_criterion_01_block_figure():
    left = all_op_periods(BLOCKS_PARTIAL)
    right = all_op_periods(BLOCKS_SLIDING)
    ok = (
        left.get(4) == normalize([(0, 0), (2, 3)])
        and 4 in left.initial()
        and 4 in left.full()
        and 4 not in left.sliding()
        and right.get(4) == IntervalSet.span(0, 3)
        and 4 in right.sliding()
    )
    record(1, "op-period 4 shift sets of the two 12-symbol strings", ok,
           f"left={left.get(4)}, right={right.get(4)}")


def test_criterion_02_sliding_zigzag():
    got = sliding_periods(ZIGZAG_18)
    record(2, "sliding periods of the zigzag string contain 3 and 6", {3, 6} <= set(got), f"{got}")


def test_criterion_03_exhaustive_oracle():
    t0 = time.perf_counter()
    count = 0
    bad = []
    for s in chain.from_iterable(all_strings(n, 3) for n in range(2, 10)):
        count += 1
        diff = mismatches(s)
        if diff:
            bad.append((s, diff))
    dt = time.perf_counter() - t0
    record(3, "exhaustive agreement, n <= 9 over {1,2,3}", not bad and dt < 600,
           f"{count} strings, {len(bad)} mismatches, {dt:.1f}s")


def test_criterion_04_random_oracle():
    t0 = time.perf_counter()
    corpus = random_strings_c4()
    bad = [s for s in corpus if mismatches(s)]
    dt = time.perf_counter() - t0
    record(4, "random agreement, 1000 strings n in [10,100]", not bad and dt < 300,
           f"{len(bad)} mismatches, {dt:.1f}s")


def test_criterion_05_finewilf():
    corpus = random_strings_c4() + random_corpus(10_000, 3, 60, [2, 4, 8, "n"], seed=777)
    violations = []
    for s in corpus:
        violations += finewilf_suite(s)
    record(5, "periodicity theorems hold on 11000 strings", not violations,
           f"{len(violations)} violations")


def test_criterion_06_graphs():
    s = TWO_PERIODS_18
    ok = (
        periodicity_graph(17, 8, 1, 5, 3).is_connected()
        and not periodicity_graph(17, 8, 5, 5, 2).is_connected()
        and 5 in brute_shifts(s, 8)
        and 2 in brute_shifts(s, 5)
        and not is_strictly_monotone(s)
    )
    record(6, "periodicity graphs and the length-18 two-period string", ok)


def test_criterion_07_lce():
    bad = 0
    pairs = 0
    for s in chain.from_iterable(all_strings(n, 3) for n in range(1, 11)):
        lcp, lcs = brute_lce_all(s)
        idx = build(s)
        for (i, j), v in lcp.items():
            pairs += 1
            if idx.op_lcp(i, j) != v or idx.op_lcs(i, j) != lcs[(i, j)]:
                bad += 1
    record(7, "op-LCP / op-LCS exact on all strings n <= 10 over 3 letters", bad == 0,
           f"{pairs} pairs, {bad} wrong")


def test_criterion_08_interval_sizes():
    rng = random.Random(8)
    n = 2000
    bound = 4 * n * math.log2(n)
    worst = 0
    for _ in range(100):
        a = rng.choice([2, 5, n])
        s = [rng.randrange(a) for _ in range(n)]
        table = all_op_periods(s)
        worst = max(worst, sum(table.get(p).size for p in range(1, n)))
    record(8, "sum of Shifts_p interval counts <= 4 n log2 n at n = 2000", worst <= bound,
           f"max {worst} vs bound {bound:.0f}")


def test_criterion_09_performance():
    rng = random.Random(9)
    big = [rng.randrange(1000) for _ in range(10**6)]
    t0 = time.perf_counter()
    t = compute_op_pref(big)
    t_pref = time.perf_counter() - t0
    t0 = time.perf_counter()
    initial_periods(big, t)
    t_init = time.perf_counter() - t0
    t0 = time.perf_counter()
    full_periods(big, t)
    t_full = time.perf_counter() - t0
    mid = [rng.randrange(10) for _ in range(10**4)]
    t0 = time.perf_counter()
    idx = build(mid)
    all_op_periods(mid, idx)
    t_all = time.perf_counter() - t0
    t0 = time.perf_counter()
    sliding_periods(mid, idx, idx.reverse())
    t_slide = time.perf_counter() - t0
    ok = t_pref + t_init < 5 and t_pref + t_full < 5 and t_all < 60 and t_slide < 60
    record(9, "initial/full at n = 1e6 < 5 s, all/sliding at n = 1e4 < 60 s", ok,
           f"op-PREF {t_pref:.2f}s + initial {t_init:.2f}s / full {t_full:.2f}s, "
           f"all {t_all:.2f}s, sliding {t_slide:.2f}s")


def test_criterion_10_determinism(tmp_path):
    f = tmp_path / "in.txt"
    f.write_text("3 1 4 1 5 9 2 6 5 3 5 8 9 7 9 3 2 3 8 4 6")
    runs = []
    for cmd in ("all", "initial", "full", "smallest-initial", "sliding", "monotone"):
        for extra in ([], ["--json"]):
            runs.append(["opperiods.cli", cmd, str(f), *extra])
    runs.append(["opperiods.cli", "verify", "--max-n", "12", "--count", "40", "--seed", "3"])
    runs.append(["opperiods.cli", "verify", "--max-n", "5", "--exhaustive", "--json"])
    differing = []
    for argv in runs:
        out = [subprocess.run([sys.executable, "-m", *argv], capture_output=True) for _ in range(2)]
        if (out[0].stdout, out[0].returncode) != (out[1].stdout, out[1].returncode) or out[0].returncode:
            differing.append(" ".join(argv[1:]))
    record(10, "two runs of every CLI command are byte-identical", not differing,
           f"{len(runs)} invocations" + (f", differing: {differing}" if differing else ""))


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for fn in tests:
        try:
            if fn is test_criterion_10_determinism:
                with tempfile.TemporaryDirectory() as d:
                    fn(Path(d))
            else:
                fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
