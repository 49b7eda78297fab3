"""Interval representations of the op-square start sets.

``squares[p]`` holds every i in 1..n-2p+1 with S[i..i+p-1] ~ S[i+p..i+2p-1].
Its interval endpoints are exactly the left and right non-shiftable squares.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .intervals import EMPTY, IntervalSet
from .lce import LceIndex, build


@dataclass(frozen=True)
class SquareSets:
    n: int
    squares: dict[int, IntervalSet]

    def get(self, p: int) -> IntervalSet:
        """Squares of half-length ``p``; empty when no square fits."""
        return self.squares.get(p, EMPTY)

    def left_non_shiftable(self, p: int) -> list[int]:
        return [lo for lo, _ in self.get(p).intervals]

    def right_non_shiftable(self, p: int) -> list[int]:
        return [hi for _, hi in self.get(p).intervals]


def _candidates(tr: np.ndarray, p: int, last: int) -> np.ndarray:
    """0-based starts i <= last whose trace agrees with the trace p further on
    for p-1 steps; a necessary condition for a square there."""
    if p == 1:
        return np.arange(last + 1)
    eq = tr[: len(tr) - p] == tr[p:]
    # run[i] = number of consecutive agreeing positions from i on
    bad = np.flatnonzero(~eq)
    idx = np.arange(len(eq))
    nxt = np.searchsorted(bad, idx)
    stop = np.append(bad, len(eq))[nxt]
    run = stop - idx
    ok = np.flatnonzero(run[: last + 1] >= p - 1)
    return ok


def squares_for(idx: LceIndex, p: int, tr: np.ndarray | None = None) -> IntervalSet:
    """Op-square start positions of half-length ``p`` as an interval set."""
    n = idx.n
    last = n - 2 * p  # 0-based last start
    if p < 1 or last < 0:
        return EMPTY
    if tr is None:
        a = np.asarray(idx.text, dtype=np.int64)
        tr = np.sign(np.diff(a)).astype(np.int8)
    out = []
    covered = -1
    for i in _candidates(tr, p, last).tolist():
        if i <= covered:
            continue
        run = idx.op_lcp(i + 1, i + 1 + p)
        if run >= p:
            end = i + run - p
            out.append((i + 1, end + 1))
            covered = end
    return IntervalSet(_join(out))


def _join(runs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    merged: list[list[int]] = []
    for lo, hi in runs:
        if merged and lo <= merged[-1][1] + 1:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [(lo, hi) for lo, hi in merged]


def op_squares_all(s, idx: LceIndex | None = None) -> SquareSets:
    """Square sets for every p in 1..n//2.

    Per p the candidates are scanned left to right; a hit with extension
    length L covers the whole run i..i+L-p at once.
    """
    if idx is None:
        idx = build(s)
    n = idx.n
    a = np.asarray(idx.text, dtype=np.int64)
    tr = np.sign(np.diff(a)).astype(np.int8)
    return SquareSets(n, {p: squares_for(idx, p, tr) for p in range(1, n // 2 + 1)})
