"""Order-preserving longest common extension queries.

``op_lcp(i, j)`` is the largest k with S[i..i+k-1] ~ S[j..j+k-1] and
``op_lcs(i, j)`` the largest k with S[i-k+1..i] ~ S[j-k+1..j].

Queries extend both windows one symbol at a time.  The left window keeps its
distinct values in a sorted list, so each step finds the value-neighbours of
the incoming symbol and checks the right window with at most two comparisons
(the strict-between / all-equal test of the op-encoding).  Once a match has
outgrown ``SCALAR_STEPS`` the remaining length is settled with numpy: the first
disagreement of the traces bounds the answer from above, and candidate lengths
are confirmed by comparing the windows' stable sort orders.
"""

from __future__ import annotations

from bisect import bisect_left, insort

import numpy as np

from .opcore import IntSeq, shape

SCALAR_STEPS = 24
CACHE_LIMIT = 1 << 20


class _Text:
    """One direction of the text with its query machinery (0-based)."""

    def __init__(self, ranks: list[int]):
        self.vals = ranks
        self.n = len(ranks)
        self.arr = np.asarray(ranks, dtype=np.int64)
        self.tr = np.sign(np.diff(self.arr)).astype(np.int8)
        self._cache: dict[tuple[int, int], int] = {}

    def lcp(self, i: int, j: int, cap: int | None = None) -> int:
        n = self.n
        if i == j:
            m = n - i
            return m if cap is None else min(m, cap)
        if i > j:
            i, j = j, i
        m = n - j
        if cap is not None and cap < m:
            m = cap
        key = (i, j)
        hit = self._cache.get(key)
        if hit is not None:
            return hit if cap is None else min(hit, cap)
        k = self._extend(i, j, m)
        if k < m or m == n - j:
            # exact value: a mismatch was seen, or the text ran out
            if len(self._cache) >= CACHE_LIMIT:
                self._cache.clear()
            self._cache[key] = k
        return k

    def _extend(self, i: int, j: int, m: int) -> int:
        vals = self.vals
        keys: list[int] = []
        rep: dict[int, int] = {}
        steps = min(m, SCALAR_STEPS)
        for k in range(steps):
            v = vals[i + k]
            w = vals[j + k]
            e = rep.get(v)
            if e is not None:
                if vals[j + e] != w:
                    return k
                continue
            pos = bisect_left(keys, v)
            if pos and not vals[j + rep[keys[pos - 1]]] < w:
                return k
            if pos < len(keys) and not w < vals[j + rep[keys[pos]]]:
                return k
            insort(keys, v)
            rep[v] = k
        if steps == m:
            return m
        return self._settle(i, j, steps, m)

    def _settle(self, i: int, j: int, good: int, m: int) -> int:
        # every window length <= good is known to match
        diff = np.flatnonzero(self.tr[i : i + m - 1] != self.tr[j : j + m - 1])
        hi = m if diff.size == 0 else min(m, int(diff[0]) + 1)
        if self.equivalent(i, j, hi):
            return hi
        lo = good
        hi -= 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.equivalent(i, j, mid):
                lo = mid
            else:
                hi = mid - 1
        return lo

    def equivalent(self, i: int, j: int, length: int) -> bool:
        """Whether the windows of ``length`` starting at i and j match."""
        if length <= 1:
            return True
        x = self.arr[i : i + length]
        y = self.arr[j : j + length]
        order = np.argsort(x, kind="stable")
        dx = np.diff(x[order])
        dy = np.diff(y[order])
        return bool(np.array_equal(dx > 0, dy > 0) and np.array_equal(dx == 0, dy == 0))


class LceIndex:
    """op-LCP / op-LCS over a fixed text; positions are 1-indexed.

    Query results are memoized per position pair.  Concurrent readers are fine:
    the cache only ever holds exact answers, single dict operations are atomic,
    and the cache is simply dropped once it grows past ``CACHE_LIMIT`` entries.
    """

    def __init__(self, fwd: _Text, bwd: _Text):
        self._fwd = fwd
        self._bwd = bwd
        self.n = fwd.n

    @property
    def text(self) -> tuple[int, ...]:
        """Rank-compressed forward text."""
        return tuple(self._fwd.vals)

    def reverse(self) -> "LceIndex":
        """Index over the reversed text, sharing all tables with this one."""
        return LceIndex(self._bwd, self._fwd)

    def _check(self, i: int, j: int) -> None:
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"positions ({i}, {j}) outside 1..{n}")

    def op_lcp(self, i: int, j: int, cap: int | None = None) -> int:
        """Longest rightward op-extension from i and j, optionally capped."""
        self._check(i, j)
        return self._fwd.lcp(i - 1, j - 1, cap)

    def op_lcs(self, i: int, j: int, cap: int | None = None) -> int:
        """Longest leftward op-extension ending at i and j, optionally capped."""
        self._check(i, j)
        n = self.n
        return self._bwd.lcp(n - i, n - j, cap)

    def same_window(self, i: int, j: int, k: int) -> bool:
        """S[i..i+k-1] ~ S[j..j+k-1], i.e. equal symbols of the window-shape
        sequence of width k at i and j."""
        return self._fwd.lcp(i - 1, j - 1, k) >= k


def build(s: IntSeq) -> LceIndex:
    """Index answering op-LCP and op-LCS queries on ``s``."""
    ranks = list(shape(s))
    return LceIndex(_Text(ranks), _Text(ranks[::-1]))
