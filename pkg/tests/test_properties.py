"""Cross-module invariants checked against the brute-force reference."""

from hypothesis import given
from hypothesis import strategies as st

from opperiods.lce import build
from opperiods.opcore import trace
from opperiods.oracle import brute_report
from opperiods.periods import all_op_periods, full_periods, initial_periods, smallest_initial
from opperiods.prefix import compute_op_pref
from opperiods.sliding import sliding_periods

small = st.lists(st.integers(0, 3), min_size=2, max_size=30)
wide = st.lists(st.integers(-1000, 1000), min_size=2, max_size=30)


@st.composite
def repetitive(draw):
    blk = draw(st.lists(st.integers(0, 5), min_size=1, max_size=6))
    n = draw(st.integers(2, 40))
    drift = draw(st.sampled_from([0, 0, 10]))
    s = [blk[i % len(blk)] + drift * (i // len(blk)) for i in range(n)]
    if draw(st.booleans()):
        s[draw(st.integers(0, n - 1))] = draw(st.integers(0, 6))
    return s


def check_against_oracle(s):
    ref = brute_report(s)
    idx = build(s)
    t = compute_op_pref(s)
    table = all_op_periods(s, idx)
    n = len(s)
    for p in range(1, n):
        assert set(table.get(p)) == ref.shifts[p], p
    assert initial_periods(s, t) == ref.initial == table.initial()
    assert full_periods(s, t) == ref.full == table.full()
    assert sliding_periods(s, idx, idx.reverse()) == ref.sliding == table.sliding()
    assert smallest_initial(s, t) == ref.smallest_initial
    if n >= 3:
        assert smallest_initial(s, t) == min(p for p in table.initial() if p > 1)
    return ref


@given(small)
def test_small_alphabet(s):
    check_against_oracle(s)


@given(wide)
def test_wide_alphabet(s):
    check_against_oracle(s)


@given(repetitive())
def test_repetitive_strings(s):
    check_against_oracle(s)


@given(repetitive())
def test_trace_agrees_off_boundaries(s):
    # an op-period (p, i) forces trace[j] == trace[k] for j = k != i (mod p)
    ref = brute_report(s)
    tr = trace(s)
    for p, shifts in ref.shifts.items():
        for i in shifts:
            for r in range(p):
                if r == i:
                    continue
                syms = {tr[a - 1] for a in range(r if r else p, len(tr) + 1, p)}
                assert len(syms) <= 1
