"""Initial, full, strictly monotone, smallest initial and general op-periods.

An op-period ``p`` (``1 <= p < n``) with shift ``s`` means that the string is
cut into blocks of length ``p`` starting at ``s + 1`` (with partial blocks at
both ends) and all blocks are order-equivalent.  ``Shifts_p`` collects the
valid shifts; p is initial when 0 is a shift, full when it is initial and
divides n, and sliding when every shift in 0..p-1 is valid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .intervals import EMPTY, IntervalSet, complement, intersect, mod_batch
from .lce import LceIndex, build
from .opcore import MINUS, PLUS, ZERO, IntSeq, is_strictly_monotone, trace
from .prefix import PrefTables, compute_op_pref, op_lpp
from .sliding import sliding_periods
from .squares import SquareSets, op_squares_all


@dataclass(frozen=True)
class ShiftsTable:
    """``shifts[p]`` for every p in 1..n-1 (possibly empty)."""

    n: int
    shifts: dict[int, IntervalSet]

    def get(self, p: int) -> IntervalSet:
        return self.shifts.get(p, EMPTY)

    def periods(self) -> list[int]:
        return [p for p in sorted(self.shifts) if self.shifts[p]]

    def initial(self) -> list[int]:
        return [p for p in sorted(self.shifts) if 0 in self.shifts[p]]

    def full(self) -> list[int]:
        return [p for p in self.initial() if self.n % p == 0]

    def sliding(self) -> list[int]:
        return [p for p in sorted(self.shifts) if self.shifts[p] == IntervalSet.span(0, p - 1)]


def smallest_prime_factors(n: int) -> list[int]:
    """``spf[k]`` for 0 <= k <= n (``spf[0] = spf[1] = 0``)."""
    spf = np.zeros(n + 1, dtype=np.int64)
    for q in range(2, isqrt(n) + 1):
        if spf[q] == 0:
            seg = spf[q * q :: q]
            seg[seg == 0] = q
    out = spf.tolist()
    for k in range(2, n + 1):
        if out[k] == 0:
            out[k] = k
    return out


def divisors(m: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
    return small + large[::-1]


def initial_periods(s: IntSeq, t: PrefTables | None = None) -> list[int]:
    """All initial op-periods, ascending.

    ``P[p]`` must become the minimum of ``op_pref_prime`` over the multiples
    of p; it is folded right to left along the prime divisors of each index.
    """
    if t is None:
        t = compute_op_pref(s)
    n = t.n
    P = list(t.op_pref_prime)
    spf = smallest_prime_factors(n)
    for j in range(n, 1, -1):
        pj = P[j]
        x = j
        while x > 1:
            q = spf[x]
            d = j // q
            if pj < P[d]:
                P[d] = pj
            x //= q
            while x % q == 0:
                x //= q
    return [p for p in range(1, n) if P[p] >= p]


def full_periods(s: IntSeq, t: PrefTables | None = None) -> list[int]:
    """All full op-periods, ascending."""
    if t is None:
        t = compute_op_pref(s)
    n = t.n
    P = list(t.op_pref_prime)
    for i in range(1, n + 1):
        k = gcd(i, n)
        if P[i] < P[k]:
            P[k] = P[i]
    div_n = divisors(n)
    for i in reversed(div_n):
        pi = P[i]
        for d in divisors(i):
            if pi < P[d]:
                P[d] = pi
    return [p for p in div_n if p < n and P[p] >= p]


@dataclass(frozen=True)
class MonotoneFamily:
    """Strictly monotone op-periods in one direction.

    Every period ``p`` of the family has exactly one shift, ``anchor % p``.
    ``modulus is None`` means every p in 1..n-1 belongs to the family;
    otherwise the family is the divisors of ``modulus`` below n.
    """

    direction: str
    anchor: int
    modulus: int | None

    def periods(self, n: int) -> list[tuple[int, int]]:
        if self.modulus is None:
            ps = range(1, n)
        else:
            ps = [d for d in divisors(self.modulus) if d < n]
        return [(p, self.anchor % p) for p in ps]


@dataclass(frozen=True)
class MonotonePeriods:
    """``everything`` marks a strictly monotone string, where every (p, shift)
    is a monotone op-period in the string's own direction."""

    n: int
    families: tuple[MonotoneFamily, ...]
    everything: str | None = None

    def pairs(self) -> list[tuple[int, int, str]]:
        """All ``(p, shift, direction)`` triples, sorted."""
        if self.everything is not None:
            return [(p, i, self.everything) for p in range(1, self.n) for i in range(p)]
        out = []
        for fam in self.families:
            out.extend((p, sh, fam.direction) for p, sh in fam.periods(self.n))
        return sorted(out)


def _gcd_of_gaps(a: list[int]) -> int:
    g = a[1] - a[0]
    for x, y in zip(a[1:], a[2:]):
        b = y - x
        if b % g:
            g = gcd(g, b)
    return g


def monotone_periods(s: IntSeq) -> MonotonePeriods:
    """Strictly monotone op-periods of a string that is not itself strictly
    monotone.

    Positions of the trace that break a direction must all fall on block
    boundaries, so they are congruent to the shift modulo p.
    """
    n = len(s)
    if is_strictly_monotone(s):
        raise ValueError("sequence is strictly monotone: every p is a monotone op-period")
    tr = trace(s)
    fams = []
    for d in (PLUS, MINUS, ZERO):
        a = [i for i, c in enumerate(tr, 1) if c != d]
        if len(a) == 1:
            fams.append(MonotoneFamily(d, a[0], None))
        else:
            fams.append(MonotoneFamily(d, a[0], _gcd_of_gaps(a)))
    return MonotonePeriods(n, tuple(fams))


def monotone_summary(s: IntSeq) -> MonotonePeriods:
    """Like :func:`monotone_periods`, but strictly monotone input yields the
    all-periods marker instead of an error."""
    if len(s) >= 2 and is_strictly_monotone(s):
        return MonotonePeriods(len(s), (), trace(s)[0])
    if len(s) < 2:
        return MonotonePeriods(len(s), ())
    return monotone_periods(s)


def smallest_initial(s: IntSeq, t: PrefTables | None = None) -> int | None:
    """Smallest initial op-period greater than 1, or None if n <= 2."""
    n = len(s)
    if n <= 2:
        return None
    if is_strictly_monotone(s):
        return 2
    if t is None:
        t = compute_op_pref(s)
    tr = trace(s)
    best = None
    for d in (PLUS, MINUS, ZERO):
        g = 0
        for i, c in enumerate(tr, 1):
            if c != d:
                g = gcd(g, i)
                if g == 1:
                    break
        if g > 1:
            q = next(f for f in range(2, g + 1) if g % f == 0)
            best = q if best is None else min(best, q)
    if best is not None:
        return best
    run = 1
    while run < len(tr) and tr[run] == tr[0]:
        run += 1
    p = run + 2  # longest strictly monotone prefix has length run + 1
    while p <= n - 1:
        k = op_lpp(s, p, t)
        if k == n:
            return p
        p = max(p + 1, k - p - 1)
    raise AssertionError("n - 1 is always an initial op-period")


def all_op_periods(
    s: IntSeq, idx: LceIndex | None = None, sq: SquareSets | None = None
) -> ShiftsTable:
    """Interval representation of ``Shifts_p`` for every p in 1..n-1.

    A shift i is valid iff the squares starting at i+1, i+1+p, ... all exist,
    the leading partial block matches (op-LCP(1, p+1) >= min(i, n-p)) and the
    trailing one does (op-LCS(n, n-p) >= min((n-i) mod p, n-p)).
    """
    if idx is None:
        idx = build(s)
    n = idx.n
    if sq is None:
        sq = op_squares_all(s, idx)
    shifts: dict[int, IntervalSet] = {}
    if n < 2:
        return ShiftsTable(n, shifts)
    shifts[1] = IntervalSet.span(0, 0)
    jobs: list[tuple[IntervalSet, int]] = []
    for p in range(2, n):
        last = n - 2 * p + 1
        if last >= 1:
            missing = complement(sq.get(p), 1, last)
        else:
            missing = EMPTY
        missing = IntervalSet((lo - 1, hi - 1) for lo, hi in missing.intervals)
        k = idx.op_lcp(1, p + 1)
        ell = idx.op_lcs(n, n - p)
        if k == n - p:
            head = tail = IntervalSet.span(1, n)
        else:
            head = IntervalSet.span(0, k)
            tail = IntervalSet.span(n - ell, n)
        jobs += [(missing, p), (head, p), (tail, p)]
    reduced = mod_batch(jobs)
    for p in range(2, n):
        missing, head, tail = reduced[3 * (p - 2) : 3 * (p - 1)]
        ok = complement(missing, 0, p - 1)
        shifts[p] = intersect(intersect(ok, head), tail)
    return ShiftsTable(n, shifts)


@dataclass(frozen=True)
class PeriodReport:
    n: int
    shifts: ShiftsTable
    initial: list[int]
    full: list[int]
    sliding: list[int]
    smallest_initial: int | None
    monotone: MonotonePeriods | None = field(default=None)


def analyze(s: IntSeq) -> PeriodReport:
    """Run every algorithm on ``s`` and bundle the results."""
    if len(s) < 1:
        raise ValueError("empty sequence")
    t = compute_op_pref(s)
    idx = build(s)
    shifts = all_op_periods(s, idx)
    return PeriodReport(
        n=len(s),
        shifts=shifts,
        initial=initial_periods(s, t),
        full=full_periods(s, t),
        sliding=sliding_periods(s, idx, idx.reverse()),
        smallest_initial=smallest_initial(s, t),
        monotone=monotone_summary(s),
    )
