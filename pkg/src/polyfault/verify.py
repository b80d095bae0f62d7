"""Self-check suite behind ``polyfault verify``.

Each check compares an expected value (a decimal string, or "true" for a
property) with what the library computes.  The quick suite keeps every
exhaustive or DP run to rectangles of at most 60 cells; the full suite adds
the 6x12 and 7x12 counts and the longer family ranges.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from . import series
from .enumeration import count_domino_dp, count_faultfree_dp, count_tromino_dp
from .grid import Rect

QUICK_CELL_LIMIT = 60

# faultfree tilings of R(6,6) as stated in the source text
PUBLISHED_C_6x6 = 2


@dataclass
class Check:
    name: str
    expected: str
    actual: str
    status: str
    elapsed_ms: int
    note: str = ""


@dataclass
class VerifyReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "checks": [asdict(c) for c in self.checks]}


class _Runner:
    def __init__(self, suite: str):
        self.report = VerifyReport(suite)

    def add(self, name, expected, compute, compare=None, note_on_fail=""):
        """Run ``compute`` and record it against ``expected``.

        ``compare(actual, expected)`` defaults to equality; exceptions count as
        failures with the message as the actual value.
        """
        start = time.perf_counter()
        try:
            actual = compute()
            good = compare(actual, expected) if compare else actual == expected
            status = "pass" if good else "fail"
        except Exception as err:  # a crash is a failed check, not a crashed suite
            actual, status = f"{type(err).__name__}: {err}", "fail"
        ms = int((time.perf_counter() - start) * 1000)
        note = note_on_fail if status == "fail" else ""
        self.report.checks.append(Check(name, _fmt(expected), _fmt(actual), status, ms, note))

    def skip(self, name, expected, why):
        self.report.checks.append(Check(name, _fmt(expected), "", "skipped", 0, why))


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def run_verify(suite: str = "quick") -> VerifyReport:
    if suite not in ("quick", "full"):
        raise ValueError("suite must be 'quick' or 'full'")
    full = suite == "full"
    run = _Runner(suite)
    fits = lambda m, n: full or m * n <= QUICK_CELL_LIMIT  # noqa: E731

    for t in range(2, 7):
        name = f"4x3t closed form vs DP, t={t}"
        if fits(4, 3 * t):
            run.add(name, series.closed_form_4x3t(t), lambda t=t: count_faultfree_dp((4, 3 * t)))
        else:
            run.skip(name, series.closed_form_4x3t(t), "rectangle above the quick-suite cell limit")

    g = series.gf_5x3t()
    for t in range(2, 5):
        run.add(
            f"5x3t generating function vs DP, t={t}",
            series.coeff(g, t),
            lambda t=t: count_faultfree_dp((5, 3 * t)),
            note_on_fail="DISCREPANCY: printed generating function disagrees with the exact count",
        )
    printed = [72, 384, 3360, 21504, 163968, 1136640, 8283648, 58791936, 423121920]
    run.add("5x3t coefficients t=2..10", printed, lambda: [series.coeff(g, t) for t in range(2, 11)])
    z = series.RationalGF.poly(0, 1)
    run.add("G = 8zG1 + 4zG2", True, lambda: g == z * series.g1() * 8 + z * series.g2() * 4)

    run.add("no faultfree R(3,n), n=3..12", [0] * 10, lambda: [count_faultfree_dp((3, n)) for n in range(3, 13)])

    run.add(
        "R(6,6) faultfree count vs published c",
        PUBLISHED_C_6x6,
        lambda: count_faultfree_dp((6, 6)),
        note_on_fail="DISCREPANCY: exact count of faultfree R(6,6) tilings differs from the published c",
    )

    f6 = series.f_6x6t()
    run.add("F_6x6t = both_sides(Q_6x6t, 2)", True, lambda: series.both_sides(series.q_6x6t(), 2) == f6)
    run.add(
        "coeff(F_6x6t, t) = 128(t+1)144^(t-2), t=2..12",
        [series.lower_bound_6x6t(t) for t in range(2, 13)],
        lambda: [series.coeff(f6, t) for t in range(2, 13)],
    )
    if full:
        run.add("6x12 faultfree >= 384", True, lambda: count_faultfree_dp((6, 12)) >= series.lower_bound_6x6t(2))
    else:
        run.skip("6x12 faultfree >= 384", True, "full suite only")

    sys7 = series.system_7x6t()
    for label, resid in sys7.residuals().items():
        run.add(label, True, lambda resid=resid: resid.is_zero())
    run.add("coeff(H,1)", 16, lambda: series.coeff(sys7.H, 1))
    if full:
        run.add(
            "coeff(F_7x6t,4) <= 7x12 faultfree",
            True,
            lambda: series.coeff(series.gf_7x6t().F, 4) <= count_faultfree_dp((7, 12)),
        )
    else:
        run.skip("coeff(F_7x6t,4) <= 7x12 faultfree", True, "full suite only")

    def upper_all():
        bad = []
        for m in range(1, 49):
            for n in range(1, 49 // m + 1):
                if m * n <= 48 and (m * n) % 3 == 0 and not series.tromino_upper_bound(m, n).holds:
                    bad.append((m, n))
        return bad

    run.add("tromino upper bound, mn <= 48", [], upper_all)
    run.add(
        "Kasteleyn product vs domino DP, a,b <= 4",
        [],
        lambda: [(a, b) for a in range(1, 5) for b in range(1, 5) if series.kasteleyn(a, b) != count_domino_dp((2 * a, 2 * b))],
    )
    run.add("all-tromino count R(4,6)", 18, lambda: count_tromino_dp(Rect(4, 6)))
    return run.report
