"""Sliding op-periods through the window-shape sequences SH_k.

``SH_k[i]`` is the shape of S[i..i+k-1].  These sequences are never built:
``SH_k[i] == SH_k[j]`` is answered by an op-LCP query capped at k.  For
p <= n/2, p is sliding iff p is a period of SH_p; above n/2 it is sliding iff
the prefix and suffix of length n-p are order-equivalent.

``PER[k, l]`` is the shortest period of SH_k[1..l] when it is at most l/3
and ``None`` otherwise.  The table is quadratic, so it is swept column by
column, keeping one column and recording only the cells asked for.
"""

from __future__ import annotations

from typing import Callable

from .lce import LceIndex, build
from .opcore import IntSeq

Eq = Callable[[int, int], bool]


def border_table(length: int, eq: Eq) -> list[int]:
    """KMP failure function of a virtual sequence X[1..length]; ``eq(a, b)``
    compares X[a] and X[b].  ``f[j]`` is the longest proper border of X[1..j]."""
    f = [0] * (length + 1)
    b = 0
    for j in range(2, length + 1):
        while b and not eq(j, b + 1):
            b = f[b]
        if eq(j, b + 1):
            b += 1
        f[j] = b
    return f


def _largest_border_below(f: list[int], length: int, bound: int) -> int:
    b = f[length]
    while b >= bound:
        b = f[b]
    return b


class PerColumn:
    """One column ``P = PER[., l]`` of the PER table, advanced by :meth:`step`.

    Invariant after each step: ``P[k] == PER[k, l]`` for every k with
    ``l <= n - k + 1``, ``t`` is the smallest k with ``P[k] is None`` and
    ``per(SH_t[1..l]) >= ell_prime / 3``.  Cells beyond the end of SH_k are
    reported as ``None``.
    """

    def __init__(self, idx: LceIndex):
        self.idx = idx
        self.n = idx.n
        self.P: list[int | None] = [None] * (self.n + 2)
        self.t = 1
        self.ell = 0
        self.ell_prime = 3
        # incremental KMP over SH_t[1..]; reset whenever t moves
        self._kmp_t = 0
        self._fail: list[int] = [0, 0]

    def value(self, k: int) -> int | None:
        return self.P[k] if 1 <= k <= self.n else None

    def column(self) -> list[int | None]:
        return self.P[1 : self.n + 1]

    def step(self) -> None:
        self.ell += 1
        ell, n, idx, P = self.ell, self.n, self.idx, self.P
        t = self.t
        if t > 1:
            k = t - 1
            # SH_k ends at n - k + 1; past that the column entry is undefined
            if ell > n - k + 1 or not idx.same_window(ell, ell - P[k], k):
                t -= 1
                P[t] = None
                self.ell_prime = 2 * ell
        if (
            ell >= self.ell_prime
            and ell % 3 == 0
            and t <= n
            and ell <= n - t + 1
            and self._period(t, ell) == ell // 3
        ):
            third = ell // 3
            top = min(idx.op_lcp(i, i + third) for i in range(1, 2 * third + 1))
            for k in range(t, top + 1):
                P[k] = third
            t = top + 1
            self.ell_prime = 2 * ell
        self.t = t

    def _period(self, t: int, ell: int) -> int:
        """per(SH_t[1..ell]), extending the KMP table of SH_t lazily."""
        if self._kmp_t != t:
            self._kmp_t = t
            self._fail = [0, 0]
        f = self._fail
        same = self.idx.same_window
        for j in range(len(f), ell + 1):
            b = f[j - 1]
            while b and not same(j, b + 1, t):
                b = f[b]
            if same(j, b + 1, t):
                b += 1
            f.append(b)
        return ell - f[ell]


def per_column_update(state: PerColumn) -> PerColumn:
    """Advance ``state`` from column l-1 to column l."""
    state.step()
    return state


def per_cells(idx: LceIndex, cells: set[tuple[int, int]]) -> dict[tuple[int, int], int | None]:
    """``PER[k, l]`` for the requested ``(k, l)`` cells, in one sweep."""
    by_col: dict[int, list[int]] = {}
    for k, ell in cells:
        by_col.setdefault(ell, []).append(k)
    out: dict[tuple[int, int], int | None] = {}
    if not by_col:
        return out
    col = PerColumn(idx)
    for _ in range(max(by_col)):
        col.step()
        for k in by_col.get(col.ell, ()):
            out[(k, col.ell)] = col.value(k)
    return out


def sliding_periods(
    s: IntSeq, idx: LceIndex | None = None, idx_rev: LceIndex | None = None
) -> list[int]:
    """All sliding op-periods of ``s``, ascending."""
    if idx is None:
        idx = build(s)
    if idx_rev is None:
        idx_rev = idx.reverse()
    n = idx.n
    same = idx.same_window
    cells = set()
    for p in range(1, n // 2 + 1):
        length = n - 2 * p + 1
        cells.add((p, length))
        cells.add((p, (3 * length + 3) // 4))
    fwd = per_cells(idx, cells)
    bwd = per_cells(idx_rev, cells)

    out: list[int] = []
    p = 1
    while 2 * p <= n:
        length = n - 2 * p + 1
        q = fwd[(p, length)]
        if q is not None and bwd[(p, length)] == q:
            if all(same(x, x + p, p) for x in range(1, q + 1)):
                out.append(p)
            # periods above p of SH_p[1..p+2q] are borders of X.Y, with
            # X = SH_p[1..2q] and Y = SH_p[p+1..p+2q]
            w = 2 * q

            def at(x: int, p=p, w=w) -> int:
                return x if x <= w else p + x - w

            f = border_table(2 * w, lambda a, b, p=p: same(at(a), at(b), p))
            p += w - _largest_border_below(f, 2 * w, w)
            continue
        c = (3 * length + 3) // 4
        r = fwd[(p, c)]
        if r is not None and bwd[(p, c)] == r:
            p += 1
            continue
        m = n - p + 1  # |SH_p|
        f = border_table(m, lambda a, b, p=p: same(a, b, p))
        if _has_border(f, m, length):
            out.append(p)
        p = m - _largest_border_below(f, m, length)
    for p in range(n // 2 + 1, n):
        if idx.op_lcp(1, p + 1) == n - p:
            out.append(p)
    return out


def _has_border(f: list[int], m: int, length: int) -> bool:
    b = f[m]
    while b > length:
        b = f[b]
    return b == length
