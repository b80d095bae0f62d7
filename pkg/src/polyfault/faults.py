"""Crossings, fault lines and crossing numbers of a tiling.

Grid lines use the numbering where the top edge is horizontal line 1 and
the left edge is vertical line 1.  Only internal lines are analysed: the
line between rows i and i+1 is horizontal line i+1, and likewise for
columns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import Tiling


@dataclass(frozen=True)
class CrossingProfile:
    horizontal: tuple  # index k -> line k+2
    vertical: tuple


@dataclass(frozen=True)
class CrossingNumbers:
    horizontal_cn: int
    vertical_cn: int
    critical_h_line: int
    critical_v_line: int


def crossing_profile(t: Tiling) -> CrossingProfile:
    t.check()
    m, n = t.rows, t.cols
    h = [0] * (m - 1)
    v = [0] * (n - 1)
    # every L spans rows (row, row+1) and columns (col, col+1) of its anchor
    for p in t.pieces:
        h[p.row - 1] += 1
        v[p.col - 1] += 1
    third = m * n // 3
    assert sum(h) == third and sum(v) == third, "crossing conservation violated"
    return CrossingProfile(tuple(h), tuple(v))


def fault_lines(t: Tiling) -> list:
    """Sorted ``(axis, line)`` pairs, axis 'h' or 'v', for internal lines nobody crosses."""
    prof = crossing_profile(t)
    out = [("h", k + 2) for k, x in enumerate(prof.horizontal) if x == 0]
    out += [("v", k + 2) for k, x in enumerate(prof.vertical) if x == 0]
    return sorted(out)


def is_faultfree(t: Tiling) -> bool:
    return not fault_lines(t)


def _argmin(values) -> tuple[int, int]:
    best = min(values)
    return best, values.index(best) + 2


def crossing_numbers(t: Tiling) -> CrossingNumbers:
    prof = crossing_profile(t)
    if not prof.horizontal or not prof.vertical:
        raise ValueError("crossing numbers need at least one internal line on each axis")
    hcn, hline = _argmin(prof.horizontal)
    vcn, vline = _argmin(prof.vertical)
    return CrossingNumbers(hcn, vcn, hline, vline)


@dataclass(frozen=True)
class InequalityReport:
    k: int
    total_crossings: int  # 2mn/3
    lower_total: int  # k(m+n-2)
    slack: int
    per_axis_lower: int  # hcn(m-1) + vcn(n-1)
    per_axis_slack: int


def check_counting_inequality(t: Tiling) -> InequalityReport:
    """Check k(m+n-2) <= 2mn/3 and its per-axis refinement; return the slack.

    A violation can only come from a broken crossing profile, so it raises
    AssertionError instead of returning a failed report.
    """
    m, n = t.rows, t.cols
    cn = crossing_numbers(t)
    k = min(cn.horizontal_cn, cn.vertical_cn)
    total = 2 * m * n // 3
    lower = k * (m + n - 2)
    per_axis = cn.horizontal_cn * (m - 1) + cn.vertical_cn * (n - 1)
    assert lower <= total, f"counting inequality violated: {lower} > {total}"
    assert per_axis <= total, f"per-axis counting inequality violated: {per_axis} > {total}"
    return InequalityReport(k, total, lower, total - lower, per_axis, total - per_axis)


def max_crossing_bound(m: int, n: int) -> int:
    """Cap on either crossing number of a tiling of R(3t, n): min(2t-1, floor(2n/3))."""
    if m % 3 or m < 3:
        raise ValueError(f"m must be a positive multiple of 3 (transpose first), got {m}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    t = m // 3
    return min(2 * t - 1, 2 * n // 3)


def analysis_json(t: Tiling) -> dict:
    prof = crossing_profile(t)
    cn = crossing_numbers(t)
    return {
        "horizontal": list(prof.horizontal),
        "vertical": list(prof.vertical),
        "fault_lines": [list(x) for x in fault_lines(t)],
        "h_crossing_number": cn.horizontal_cn,
        "v_crossing_number": cn.vertical_cn,
    }
