"""Sets of integers kept as sorted, disjoint, non-adjacent closed intervals."""

from __future__ import annotations

from bisect import bisect_right
from heapq import merge
from typing import Iterable, Iterator, Sequence


class IntervalSet:
    """Immutable normalized union of closed intervals ``[lo, hi]``.

    Normal form: ``hi_k + 1 < lo_{k+1}`` for consecutive intervals.  The
    empty set has no intervals.
    """

    __slots__ = ("intervals", "_los")

    def __init__(self, intervals: Iterable[tuple[int, int]] = ()):
        # trusted constructor: callers pass normalized input; see normalize()
        self.intervals: tuple[tuple[int, int], ...] = tuple(intervals)
        self._los = None

    @classmethod
    def span(cls, lo: int, hi: int) -> "IntervalSet":
        """The interval ``[lo, hi]``, or the empty set when ``lo > hi``."""
        return cls(((lo, hi),)) if lo <= hi else EMPTY

    @property
    def size(self) -> int:
        """Number of intervals in the representation."""
        return len(self.intervals)

    def count(self) -> int:
        """Number of elements."""
        return sum(hi - lo + 1 for lo, hi in self.intervals)

    def __contains__(self, x: int) -> bool:
        if self._los is None:
            self._los = [lo for lo, _ in self.intervals]
        k = bisect_right(self._los, x) - 1
        return k >= 0 and x <= self.intervals[k][1]

    def __iter__(self) -> Iterator[int]:
        for lo, hi in self.intervals:
            yield from range(lo, hi + 1)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntervalSet):
            return self.intervals == other.intervals
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        return f"IntervalSet({list(self.intervals)!r})"

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return intersect(self, other)

    def __str__(self) -> str:
        return format_intervals(self)


EMPTY = IntervalSet()


def normalize(pairs: Iterable[tuple[int, int]]) -> IntervalSet:
    """Sort and merge overlapping or adjacent ``(lo, hi)`` pairs."""
    pairs = list(pairs)
    for lo, hi in pairs:
        if lo > hi:
            raise ValueError(f"invalid interval ({lo}, {hi})")
    pairs.sort()
    return IntervalSet(_merge_sorted(pairs))


def _merge_sorted(pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    out: list[list[int]] = []
    for lo, hi in pairs:
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return [(lo, hi) for lo, hi in out]


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """``a & b`` by sweeping the merged endpoint list.

    Each interval contributes +1 at ``lo`` and -1 just after ``hi``; the
    running sum equals 2 exactly on the intersection.  Ends sort before starts
    at equal coordinates so touching intervals do not overlap.
    """
    if not a or not b:
        return EMPTY
    events = merge(_events(a), _events(b))
    out = []
    depth = 0
    start = 0
    for x, w in events:
        if w > 0:
            depth += 1
            if depth == 2:
                start = x
        else:
            if depth == 2:
                out.append((start, x - 1))
            depth -= 1
    return IntervalSet(out)


def _events(s: IntervalSet) -> Iterator[tuple[int, int]]:
    for lo, hi in s.intervals:
        yield lo, 1
        yield hi + 1, -1


def complement(a: IntervalSet, universe_lo: int, universe_hi: int) -> IntervalSet:
    """Elements of ``[universe_lo, universe_hi]`` not in ``a``."""
    if a and (a.intervals[0][0] < universe_lo or a.intervals[-1][1] > universe_hi):
        raise ValueError(f"{a!r} is not inside [{universe_lo}, {universe_hi}]")
    out = []
    cur = universe_lo
    for lo, hi in a.intervals:
        if lo > cur:
            out.append((cur, lo - 1))
        cur = hi + 1
    if cur <= universe_hi:
        out.append((cur, universe_hi))
    return IntervalSet(out)


def _mod_pieces(lo: int, hi: int, p: int) -> list[tuple[int, int]]:
    if hi - lo + 1 >= p:
        return [(0, p - 1)]
    a, b = lo % p, hi % p
    if a <= b:
        return [(a, b)]
    return [(0, b), (a, p - 1)]


def mod_batch(jobs: Sequence[tuple[IntervalSet, int]]) -> list[IntervalSet]:
    """Compute ``{x mod p : x in X}`` for every ``(X, p)`` job at once.

    The pieces produced by all jobs are bucket sorted together by their left
    endpoint (one bucket per residue below the largest modulus), which lets
    every job be merged in a single left-to-right pass.
    """
    if not jobs:
        return []
    width = 1
    for _, p in jobs:
        if p < 1:
            raise ValueError(f"modulus must be positive, got {p}")
        width = max(width, p)
    buckets: list[list[tuple[int, int, int]]] = [[] for _ in range(width)]
    for job, (x, p) in enumerate(jobs):
        for lo, hi in x.intervals:
            for a, b in _mod_pieces(lo, hi, p):
                buckets[a].append((job, a, b))
    sorted_pieces: list[list[tuple[int, int]]] = [[] for _ in jobs]
    for bucket in buckets:
        for job, a, b in bucket:
            sorted_pieces[job].append((a, b))
    return [IntervalSet(_merge_sorted(pieces)) for pieces in sorted_pieces]


def format_intervals(s: IntervalSet) -> str:
    """``"0,2-3"`` style rendering; ``lo`` alone when ``lo == hi``."""
    return ",".join(f"{lo}" if lo == hi else f"{lo}-{hi}" for lo, hi in s.intervals)
