"""op-PREF, op-PREF' and the longest op-periodic prefix."""

from __future__ import annotations

from dataclasses import dataclass

from .opcore import IntSeq, op_encode, shape


@dataclass(frozen=True)
class PrefTables:
    """``op_pref[i]`` (1 <= i <= n) is the longest l with S[i..i+l-1] ~ S[1..l].

    Index 0 of ``op_pref`` is padding so the list reads 1-indexed;
    ``op_pref[n+1] = 0`` is virtual and served by :meth:`pref`.
    ``op_pref_prime`` covers indices 0..n.
    """

    n: int
    op_pref: list[int]
    op_pref_prime: list[int]

    def pref(self, i: int) -> int:
        return 0 if i > self.n else self.op_pref[i]


def compute_op_pref(s: IntSeq) -> PrefTables:
    """Z-style computation of the op-PREF table, plus op-PREF'."""
    vals = shape(s)
    n = len(vals)
    code = op_encode(vals)
    # 0-based: z[x] for suffix starting at x; alpha/beta as 0-based offsets, -1 = none
    alpha = [a - 1 for a, _ in code]
    beta = [b - 1 for _, b in code]
    z = [0] * n
    z[0] = n
    left = right = 0  # window [left, right) matches the prefix
    for x in range(1, n):
        k = 0
        if x < right:
            k = z[x - left]
            if k < right - x:
                z[x] = k
                continue
            k = right - x
        # extend S[x..x+k-1] ~ S[0..k-1] one symbol at a time
        while x + k < n:
            a = alpha[k]
            b = beta[k]
            v = vals[x + k]
            if a != b:
                if a >= 0 and not vals[x + a] < v:
                    break
                if b >= 0 and not v < vals[x + b]:
                    break
            elif a >= 0 and vals[x + a] != v:
                break
            k += 1
        z[x] = k
        if x + k > right:
            left, right = x, x + k
    op_pref = [0] + z
    prime = [0] * (n + 1)
    for i in range(n + 1):
        nxt = op_pref[i + 1] if i < n else 0
        prime[i] = n if nxt == n - i else nxt
    return PrefTables(n, op_pref, prime)


def op_lpp(s: IntSeq, p: int, t: PrefTables | None = None) -> int:
    """Length of the longest prefix of ``s`` with initial op-period ``p``.

    For ``p == n`` the formula gives ``n``; that value only serves as a
    loop sentinel.
    """
    n = len(s)
    if not 1 <= p <= n:
        raise ValueError(f"p={p} outside 1..{n}")
    if t is None:
        t = compute_op_pref(s)
    i = p + 1
    while t.pref(i) >= p:
        i += p
    return i + t.pref(i) - 1
