import random

import pytest

from oracles import crossings, fault_lines as oracle_faults
from polyfault.enumeration import iter_tilings
from polyfault.faults import (
    analysis_json,
    check_counting_inequality,
    crossing_numbers,
    crossing_profile,
    fault_lines,
    is_faultfree,
    max_crossing_bound,
)
from polyfault.generative import basis_tiling


def _cells(t):
    return [frozenset(p.cells()) for p in t.pieces]


@pytest.mark.parametrize("shape", [(2, 3), (3, 4), (4, 6), (6, 4), (5, 6), (3, 9)])
def test_profile_and_faults_match_raw_cells(shape):
    m, n = shape
    for t in iter_tilings(shape):
        h, v = crossings(_cells(t), m, n)
        prof = crossing_profile(t)
        assert list(prof.horizontal) == h and list(prof.vertical) == v
        assert fault_lines(t) == sorted(oracle_faults(_cells(t), m, n))


def test_2x3_is_faultfree_but_2x6_is_not():
    assert all(is_faultfree(t) for t in iter_tilings((2, 3)))
    t = next(iter_tilings((2, 6)))
    assert fault_lines(t) == [("v", 4)]
    assert not is_faultfree(t)


def test_crossing_numbers_of_6x9_basis():
    t = basis_tiling(6, 9)
    cn = crossing_numbers(t)
    prof = crossing_profile(t)
    assert cn.horizontal_cn == min(prof.horizontal)
    assert prof.horizontal[cn.critical_h_line - 2] == cn.horizontal_cn
    assert prof.vertical[cn.critical_v_line - 2] == cn.vertical_cn


def test_analysis_json_keys():
    doc = analysis_json(basis_tiling(4, 6))
    assert doc["fault_lines"] == []
    assert set(doc) == {"horizontal", "vertical", "fault_lines", "h_crossing_number", "v_crossing_number"}


def test_counting_inequality_on_random_tilings():
    rng = random.Random(7)
    pool = list(iter_tilings((6, 6), "faultfree")) + list(iter_tilings((5, 9), "faultfree"))
    for t in rng.sample(pool, 50):
        rep = check_counting_inequality(t)
        assert rep.slack >= 0 and rep.per_axis_slack >= 0


def test_max_crossing_bound():
    assert max_crossing_bound(6, 6) == 3
    assert max_crossing_bound(3, 2) == 1
    with pytest.raises(ValueError):
        max_crossing_bound(4, 6)
