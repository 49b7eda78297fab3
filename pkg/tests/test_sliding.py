import random

from hypothesis import given
from hypothesis import strategies as st

from corpus import BLOCKS_SLIDING, ZIGZAG_18
from opperiods.lce import build
from opperiods.oracle import brute_per, brute_sliding, sh, shortest_period
from opperiods.sliding import PerColumn, border_table, per_cells, per_column_update, sliding_periods


def periodic_string(rng, n):
    blk = [rng.randrange(4) for _ in range(rng.randint(1, 5))]
    s = [blk[i % len(blk)] + (i // len(blk)) * rng.choice([0, 10]) for i in range(n)]
    if rng.random() < 0.3:
        s[rng.randrange(n)] = rng.randrange(5)
    return s


def test_border_table_plain():
    x = "abacabab"
    f = border_table(len(x), lambda a, b: x[a - 1] == x[b - 1])
    assert f[1:] == [0, 0, 1, 0, 1, 2, 3, 2]


def test_first_column_all_undefined():
    col = per_column_update(PerColumn(build(ZIGZAG_18)))
    assert col.ell == 1
    assert col.column() == [None] * 18
    assert col.t == 1


def test_zigzag_window_period():
    assert shortest_period(sh(ZIGZAG_18, 6)) == 3
    cells = per_cells(build(ZIGZAG_18), {(6, 13), (6, 9), (3, 12)})
    assert cells[(6, 13)] == 3
    assert cells[(6, 9)] == 3
    assert cells[(3, 12)] == brute_per(ZIGZAG_18, 3, 12)


def test_known_sliding_periods():
    got = sliding_periods(ZIGZAG_18)
    assert 3 in got and 6 in got
    assert 4 in sliding_periods(BLOCKS_SLIDING)
    assert sliding_periods([2] * 10) == list(range(1, 10))
    assert sliding_periods([7]) == []


def test_per_columns_match_brute():
    rng = random.Random(4)
    for trial in range(150):
        n = rng.randint(3, 36)
        s = periodic_string(rng, n) if trial % 2 else [rng.randrange(3) for _ in range(n)]
        col = PerColumn(build(s))
        for ell in range(1, n + 1):
            col.step()
            for k in range(1, n - ell + 2):
                assert col.value(k) == brute_per(s, k, ell), (s, k, ell)


def test_sliding_on_periodic_corpus():
    rng = random.Random(8)
    for _ in range(200):
        s = periodic_string(rng, rng.randint(4, 50))
        assert sliding_periods(s) == brute_sliding(s), s


@given(st.lists(st.integers(0, 3), min_size=1, max_size=40))
def test_sliding_matches_window_characterization(s):
    idx = build(s)
    assert sliding_periods(s, idx, idx.reverse()) == brute_sliding(s)


@given(st.lists(st.integers(0, 2), min_size=4, max_size=24), st.data())
def test_period_inherits_to_narrower_windows(s, data):
    n = len(s)
    k = data.draw(st.integers(1, n - 1))
    ell = data.draw(st.integers(2, n - k + 1))
    p = shortest_period(sh(s, k)[:ell])
    if p < ell:
        for k2 in range(1, k + 1):
            seq = sh(s, k2)[: ell + k - k2]
            assert all(seq[i] == seq[i + p] for i in range(len(seq) - p))
