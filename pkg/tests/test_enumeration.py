import pytest

from oracles import domino_count, fault_lines as oracle_faults, tromino_tilings
from polyfault.enumeration import (
    count,
    count_domino_dp,
    count_enumerate,
    count_faultfree_dp,
    count_tromino_dp,
    default_workers,
    domino_tilings,
    enumerate_tilings,
    first_tiling,
    iter_tilings,
)
from polyfault.grid import Rect, is_valid

SMALL = [(m, n) for m in range(1, 10) for n in range(1, 10) if m * n <= 30]


@pytest.mark.parametrize("m,n", SMALL)
def test_all_counts_match_brute_force(m, n):
    ref = tromino_tilings(m, n)
    assert count_tromino_dp((m, n)) == len(ref)
    assert enumerate_tilings((m, n)) == len(ref)


@pytest.mark.parametrize("m,n", SMALL)
def test_faultfree_counts_match_brute_force(m, n):
    ref = [t for t in tromino_tilings(m, n) if not oracle_faults(t, m, n)]
    assert count_faultfree_dp((m, n)) == len(ref)
    assert sum(1 for _ in iter_tilings((m, n), "faultfree")) == len(ref)


def test_enumerated_tilings_are_the_brute_force_set():
    ref = set(tromino_tilings(4, 6))
    got = {frozenset(frozenset(p.cells()) for p in t.pieces) for t in iter_tilings((4, 6))}
    assert got == ref


def test_canonical_order_and_validity():
    tilings = list(iter_tilings((4, 6)))
    keys = [tuple(p.key for p in t.pieces) for t in tilings]
    assert keys == sorted(keys)
    assert all(is_valid(t) for t in tilings)
    assert first_tiling((4, 6)) == tilings[0]


@pytest.mark.parametrize(
    "shape, expected",
    [((2, 3), 2), ((3, 4), 4), ((2, 9), 8), ((4, 6), 18), ((6, 6), 162), ((3, 12), 64)],
)
def test_known_totals(shape, expected):
    assert count_tromino_dp(shape) == expected


@pytest.mark.parametrize("shape, expected", [((4, 6), 2), ((5, 6), 8), ((6, 6), 2), ((5, 9), 384)])
def test_known_faultfree(shape, expected):
    assert count_faultfree_dp(shape) == expected
    assert count_faultfree_dp(shape[::-1]) == expected


def test_no_area_multiple_of_three_gives_zero():
    assert count_tromino_dp((4, 4)) == 0
    assert list(iter_tilings((4, 5))) == []


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 4), (4, 4), (4, 5), (5, 6), (6, 6)])
def test_domino_dp(m, n):
    assert count_domino_dp((m, n)) == domino_count(m, n) == len(domino_tilings((m, n)))


def test_domino_8x8():
    assert count_domino_dp((8, 8)) == 12988816


def test_parallel_count_is_identical():
    assert count_enumerate((6, 6), "all", workers=3) == 162
    assert count_enumerate((6, 6), "faultfree", workers=2) == 2


def test_workers_env(monkeypatch):
    monkeypatch.setenv("POLYFAULT_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("POLYFAULT_THREADS", "0")
    with pytest.raises(ValueError):
        default_workers()
    monkeypatch.delenv("POLYFAULT_THREADS")
    assert default_workers() == 1


def test_count_result_json():
    res = count(Rect(4, 12), "faultfree_tromino", "dp")
    assert res.to_json() == {"rows": 4, "cols": 12, "kind": "faultfree_tromino", "method": "dp", "count": "48"}
    assert count((4, 6), "all_tromino", "enumerate").count == 18
    assert count((4, 4), "all_domino", "enumerate").count == 36
    with pytest.raises(ValueError):
        count((4, 6), "bogus")
    with pytest.raises(ValueError):
        count((4, 6), method="magic")
