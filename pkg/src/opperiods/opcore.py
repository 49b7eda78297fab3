"""Shapes, order-equivalence, op-encodings and traces.

Positions are 1-indexed in every public function of the package.  Sequences
are taken as plain Python sequences of integers and never mutated.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

PLUS = "+"
ZERO = "0"
MINUS = "-"

IntSeq = Sequence[int]
Shape = tuple  # tuple[int, ...] of ranks in 1..m
OpCode = tuple  # tuple[tuple[int, int], ...] of (alpha, beta) pairs


def as_seq(s: IntSeq) -> tuple[int, ...]:
    """Validate ``s`` and return it as a tuple of ints."""
    t = tuple(int(v) for v in s)
    if not t:
        raise ValueError("empty sequence")
    return t


def shape(s: IntSeq) -> Shape:
    """Rank sequence of ``s``: entry i counts the distinct values <= s[i].

    >>> shape([5, 2, 7, 5, 1, 3, 10, 3, 5])
    (4, 2, 5, 4, 1, 3, 6, 3, 4)
    """
    if len(s) == 0:
        raise ValueError("empty sequence")
    rank = {v: r for r, v in enumerate(sorted(set(s)), 1)}
    return tuple(rank[v] for v in s)


def is_equivalent(x: IntSeq, y: IntSeq) -> bool:
    """True iff ``x`` and ``y`` are order-equivalent."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    if len(x) == 0:
        return True
    return shape(x) == shape(y)


def op_encode(s: IntSeq) -> OpCode:
    """Op-encoding ``((alpha_1, beta_1), ..., (alpha_n, beta_n))`` of ``s``.

    ``alpha_i`` is the rightmost j < i holding the largest value <= s[i] among
    s[1..i-1] (0 if none); ``beta_i`` is the same for the smallest value >= s[i].

    Two stable sorts of the positions, by (value, position) and by
    (value, -position), are walked as doubly linked lists from which positions
    are deleted right to left: at step i the list holds exactly 1..i, so the
    list neighbours of i are alpha_i and beta_i.
    """
    n = len(s)
    if n == 0:
        raise ValueError("empty sequence")
    vals = np.asarray(shape(s), dtype=np.int64)
    pos = np.arange(1, n + 1, dtype=np.int64)
    alpha = _neighbour_on_delete(np.lexsort((pos, vals)) + 1, before=True)
    beta = _neighbour_on_delete(np.lexsort((-pos, vals)) + 1, before=False)
    return tuple(zip(alpha, beta))


def _neighbour_on_delete(order: np.ndarray, before: bool) -> list[int]:
    n = len(order)
    prev = [0] * (n + 2)
    nxt = [0] * (n + 2)
    # sentinels 0 (head) and n + 1 (tail)
    chain = [0] + order.tolist() + [n + 1]
    for a, b in zip(chain, chain[1:]):
        nxt[a] = b
        prev[b] = a
    out = [0] * (n + 1)
    for i in range(n, 0, -1):
        p, q = prev[i], nxt[i]
        if before:
            out[i] = p
        else:
            out[i] = q if q <= n else 0
        nxt[p] = q
        prev[q] = p
    return out[1:]


def extend_match(code: OpCode, y: IntSeq) -> bool:
    """Decide X ~ y given the op-encoding of X and X[1..n-1] ~ y[1..n-1].

    Only ``code[n-1]`` and three entries of ``y`` are read.  If the
    precondition does not hold the answer is meaningless.
    """
    n = len(y)
    a, b = code[n - 1]
    v = y[n - 1]
    if a != b:
        if a and not y[a - 1] < v:
            return False
        if b and not v < y[b - 1]:
            return False
        return True
    if a:
        return y[a - 1] == v
    return True


def trace(s: IntSeq) -> str:
    """Signs of consecutive differences as a string over ``+``, ``0``, ``-``."""
    if len(s) < 2:
        raise ValueError("trace undefined for sequences shorter than 2")
    return "".join(
        PLUS if a < b else (MINUS if a > b else ZERO) for a, b in zip(s, s[1:])
    )


def is_strictly_monotone(s: IntSeq) -> bool:
    return len(s) < 2 or len(set(trace(s))) == 1
