"""Brute-force reference implementations and periodicity graphs.

Nothing here depends on the interval, LCE or square machinery: every check is
a direct comparison of window shapes.  These functions are the ground truth
the fast algorithms are tested against.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterator, Sequence

from .opcore import IntSeq, shape, trace


def _window_shapes(s: Sequence[int]):
    """Memoized ``shape(s[a..a+k-1])`` keyed by 1-based start and length."""

    @lru_cache(maxsize=None)
    def win(a: int, k: int):
        if k == 0:
            return ()
        return shape(s[a - 1 : a - 1 + k])

    return win


def _same(win, a: int, b: int, k: int) -> bool:
    return win(a, k) == win(b, k)


def _shift_ok(win, n: int, p: int, i: int) -> bool:
    k = 0
    while i + 1 + k * p + 2 * p - 1 <= n:
        x = i + 1 + k * p
        if not _same(win, x, x + p, p):
            return False
        k += 1
    m = min(i, n - p)
    if not _same(win, 1, p + 1, m):
        return False
    m = min((n - i) % p, n - p)
    return _same(win, n - m + 1, n - p - m + 1, m)


def brute_shifts(s: IntSeq, p: int, _win=None) -> set[int]:
    """All shifts of op-period ``p``, checked window by window."""
    n = len(s)
    if not 1 <= p < n:
        raise ValueError(f"p={p} outside 1..{n - 1}")
    win = _win or _window_shapes(tuple(s))
    return {i for i in range(p) if _shift_ok(win, n, p, i)}


@dataclass(frozen=True)
class BruteReport:
    n: int
    shifts: dict[int, frozenset[int]]
    initial: list[int]
    full: list[int]
    sliding: list[int]
    smallest_initial: int | None


def brute_report(s: IntSeq) -> BruteReport:
    n = len(s)
    win = _window_shapes(tuple(s))
    shifts = {p: frozenset(brute_shifts(s, p, win)) for p in range(1, n)}
    initial = [p for p in range(1, n) if 0 in shifts[p]]
    full = [p for p in initial if n % p == 0]
    sliding = [p for p in range(1, n) if len(shifts[p]) == p]
    smallest = next((p for p in initial if p > 1), None)
    return BruteReport(n, shifts, initial, full, sliding, smallest)


def brute_op_lcp(s: IntSeq, i: int, j: int) -> int:
    n = len(s)
    k = 0
    while max(i, j) + k <= n and shape(s[i - 1 : i + k]) == shape(s[j - 1 : j + k]):
        k += 1
    return k


def brute_op_lcs(s: IntSeq, i: int, j: int) -> int:
    k = 0
    while min(i, j) - k >= 1 and shape(s[i - k - 1 : i]) == shape(s[j - k - 1 : j]):
        k += 1
    return k


def brute_lce_all(s: IntSeq) -> tuple[dict[tuple[int, int], int], dict[tuple[int, int], int]]:
    """op-LCP and op-LCS for every ordered pair of positions (1-based)."""
    n = len(s)
    win = _window_shapes(tuple(s))
    lcp, lcs = {}, {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = 0
            while max(i, j) + k <= n and _same(win, i, j, k + 1):
                k += 1
            lcp[(i, j)] = k
            k = 0
            while min(i, j) - k >= 1 and _same(win, i - k, j - k, k + 1):
                k += 1
            lcs[(i, j)] = k
    return lcp, lcs


def brute_op_pref(s: IntSeq) -> list[int]:
    """op-PREF table with index 0 as padding."""
    return [0] + [brute_op_lcp(s, 1, i) for i in range(1, len(s) + 1)]


def brute_lpp(s: IntSeq, p: int) -> int:
    """Longest prefix having p as an initial op-period (p = length allowed)."""
    best = 0
    for m in range(1, len(s) + 1):
        ends = [(a, min(a + p, m)) for a in range(0, m, p)]
        if all(shape(s[a:b]) == shape(s[: b - a]) for a, b in ends):
            best = m
        else:
            break
    return best


def brute_squares(s: IntSeq, p: int) -> set[int]:
    n = len(s)
    return {
        i
        for i in range(1, n - 2 * p + 2)
        if shape(s[i - 1 : i - 1 + p]) == shape(s[i - 1 + p : i - 1 + 2 * p])
    }


def sh(s: IntSeq, k: int) -> list[tuple[int, ...]]:
    """The sequence of shapes of all length-k windows."""
    return [shape(s[i : i + k]) for i in range(len(s) - k + 1)]


def shortest_period(x: Sequence) -> int:
    m = len(x)
    for p in range(1, m + 1):
        if all(x[i] == x[i + p] for i in range(m - p)):
            return p
    return m


def brute_per(s: IntSeq, k: int, ell: int) -> int | None:
    """per(SH_k[1..ell]) when at most ell/3, else None (also when too short)."""
    seq = sh(s, k)
    if ell > len(seq):
        return None
    q = shortest_period(seq[:ell])
    return q if 3 * q <= ell else None


def brute_sliding(s: IntSeq) -> list[int]:
    """Sliding op-periods through the window-shape characterization."""
    n = len(s)
    out = []
    for p in range(1, n):
        if 2 * p <= n:
            seq = sh(s, p)
            if all(seq[i] == seq[i + p] for i in range(len(seq) - p)):
                out.append(p)
        elif shape(s[: n - p]) == shape(s[p:]):
            out.append(p)
    return out


# -- periodicity graphs -------------------------------------------------------


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class PeriodicityGraph:
    """Graph on trace positions 1..n: p-edges join positions congruent mod p,
    q-edges positions congruent mod q; the cliques of residue ``i`` mod p and
    ``j`` mod q are dropped (``None`` keeps them, giving the draft graph)."""

    n: int
    p: int
    q: int
    i: int | None = None
    j: int | None = None

    def edges(self) -> Iterator[tuple[str, int, int]]:
        for label, mod, skip in (("p", self.p, self.i), ("q", self.q, self.j)):
            for r in range(mod):
                if r == skip:
                    continue
                # residue 0 is represented by mod, 2*mod, ...
                members = range(r if r else mod, self.n + 1, mod)
                for a, b in combinations(members, 2):
                    yield label, a, b

    def components(self) -> list[list[int]]:
        uf = _UnionFind(self.n)
        for _, mod, skip in (("p", self.p, self.i), ("q", self.q, self.j)):
            for r in range(mod):
                if r == skip:
                    continue
                members = range(r if r else mod, self.n + 1, mod)
                for a, b in zip(members, members[1:]):
                    uf.union(a, b)
        groups: dict[int, list[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(uf.find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def synchronization_points(self) -> list[int]:
        if self.i is None or self.j is None:
            return []
        return [k for k in range(1, self.n + 1) if k % self.p == self.i and k % self.q == self.j]


def periodicity_graph(
    n: int, p: int, i: int | None, q: int, j: int | None
) -> PeriodicityGraph:
    """``G(n, p, i, q, j)``; residues are reduced mod p and mod q."""
    if not n > p > q > 1:
        raise ValueError(f"need n > p > q > 1, got n={n}, p={p}, q={q}")
    return PeriodicityGraph(
        n, p, q, None if i is None else i % p, None if j is None else j % q
    )


# -- Fine-Wilf style properties ---------------------------------------------


def _monotone_with(tr: str, period: int, shift: int) -> bool:
    """Whether (period, shift) is a strictly monotone op-period: every trace
    position not on a block boundary carries the same symbol."""
    inner = {c for a, c in enumerate(tr, 1) if a % period != shift % period}
    return len(inner) <= 1


def _strictly_monotone(tr: str) -> bool:
    return len(set(tr)) <= 1


def _two_monotone(tr: str) -> bool:
    return any(sum(c != d for c in tr) <= 1 for d in "+0-")


def finewilf_suite(s: IntSeq, report: BruteReport | None = None) -> list[str]:
    """Evaluate the periodicity theorems on every pair of op-periods of ``s``
    whose premise holds; returns a description of each failed conclusion."""
    n = len(s)
    if n < 3:
        return []
    rep = report or brute_report(s)
    S = rep.shifts
    tr = trace(s)
    mono = _strictly_monotone(tr)
    two_mono = _two_monotone(tr)
    out: list[str] = []
    ps = [p for p in range(2, n) if S[p]]
    for q, p in combinations(ps, 2):  # q < p
        d = gcd(p, q)
        Sp, Sq = S[p], S[q]
        # initial and sliding periods
        if 0 in Sp and 0 in Sq and n >= p + q - d and 0 not in S[d]:
            out.append(f"initial p={p} q={q}: {d} not initial")
        if len(Sp) == p and len(Sq) == q and n >= p + q - 1 and len(S[d]) != d:
            out.append(f"sliding p={p} q={q}: {d} not sliding")
        # synchronized pairs
        if n >= p + q - 1:
            for k in range(1, n):
                if k % p in Sp and k % q in Sq and k % d not in S[d]:
                    out.append(f"synchronized p={p} q={q} at {k}: shift {k % d} of {d}")
                    break
        if d != 1:
            continue
        # coprime periods
        if n > p * q:
            if not any(_monotone_with(tr, p * q, sh_) for sh_ in range(p * q)):
                out.append(f"coprime n>pq p={p} q={q}: no monotone op-period {p * q}")
        sync = {(k % p, k % q) for k in range(1, n) if k % p in Sp and k % q in Sq}
        has_unsync = len(Sp) * len(Sq) > len(sync)
        if 2 * p < n <= p * q and sync and not two_mono:
            out.append(f"coprime synchronized p={p} q={q}: not 2-monotone")
        if p + q < n <= 2 * p:
            for j in {j for _, j in sync}:
                if not _monotone_with(tr, q, j):
                    out.append(f"coprime synchronized short p={p} q={q}: ({q},{j}) not monotone")
        if n > max(2 * p, p + 2 * q) and has_unsync and not mono:
            out.append(f"coprime unsynchronized p={p} q={q}: not strictly monotone")
        if n > 2 * p and 0 in Sp and not mono:
            if any((0, j) not in sync for j in Sq):
                out.append(f"coprime unsynchronized initial p={p} q={q}: not strictly monotone")
        if p + q < n <= 2 * p and 0 in Sp:
            for j in Sq:
                if not _monotone_with(tr, q, j):
                    out.append(f"coprime initial short p={p} q={q}: ({q},{j}) not monotone")
    return out


# -- corpora --------------------------------------------------------------------


def random_string(rng: random.Random, n: int, alphabet: int) -> tuple[int, ...]:
    return tuple(rng.randrange(alphabet) for _ in range(n))


def random_corpus(
    count: int, n_lo: int, n_hi: int, alphabets: Sequence[int | str], seed: int
) -> list[tuple[int, ...]]:
    """``count`` strings with n uniform in [n_lo, n_hi]; an alphabet entry
    ``"n"`` means an alphabet as large as the string."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        a = rng.choice(list(alphabets))
        out.append(random_string(rng, n, n if a == "n" else int(a)))
    return out


def all_strings(n: int, alphabet: int) -> Iterator[tuple[int, ...]]:
    """Every string of length n over 1..alphabet, in lexicographic order."""
    from itertools import product

    return product(range(1, alphabet + 1), repeat=n)
