"""Exact counting engines: a streaming backtracker and column-transfer DP.

The backtracker is the ground truth: it places trominoes on the first
uncovered cell in row-major order, so tilings come out in canonical
lexicographic order of their piece lists.  The DP counters scan column by
column over the shorter side and must agree with it.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .grid import Rect, Tiling, TrominoPlacement

KINDS = ("all_tromino", "faultfree_tromino", "all_domino")
METHODS = ("enumerate", "dp")


@dataclass(frozen=True)
class CountResult:
    rect: Rect
    kind: str
    count: int
    method: str

    def to_json(self) -> dict:
        return {
            "rows": self.rect.rows,
            "cols": self.rect.cols,
            "kind": self.kind,
            "method": self.method,
            "count": str(self.count),
        }


def _as_rect(rect) -> Rect:
    return rect if isinstance(rect, Rect) else Rect(*rect)


# ---------------------------------------------------------------------------
# Column transitions (shared with the seam search in generative.py)
# ---------------------------------------------------------------------------

# Each entry: (missing corner, cells in this column, cells in next column,
# anchor row offset).  Row offsets are relative to the first empty row r.
_TROMINO_MOVES = (
    ("TR", (0, 1), (1,), 0),
    ("BL", (0,), (0, 1), 0),
    ("BR", (0, 1), (0,), 0),
    ("TL", (0,), (-1, 0), -1),
)


def column_fills(m: int, cur: int, blocked: int):
    """Yield every way to finish a column with trominoes reaching one column right.

    ``cur`` marks rows of this column already covered; ``blocked`` marks rows
    of the next column that may not be used.  Yields ``(pieces, nxt, hcross)``
    where pieces is a tuple of ``(anchor_row, missing)`` (0-based rows),
    ``nxt`` the rows of the next column covered by the new pieces, and
    ``hcross`` the bitmask of anchor rows (horizontal lines crossed).
    Order is deterministic: top empty row first, moves in ``_TROMINO_MOVES``
    order.
    """
    full = (1 << m) - 1

    def rec(cur, nxt, hcross, pieces):
        if cur == full:
            yield pieces, nxt, hcross
            return
        r = (~cur & (cur + 1)).bit_length() - 1
        for missing, here, there, off in _TROMINO_MOVES:
            bits_here = 0
            bits_there = 0
            ok = True
            for d in here:
                rr = r + d
                if rr >= m or (cur >> rr) & 1:
                    ok = False
                    break
                bits_here |= 1 << rr
            if not ok:
                continue
            for d in there:
                rr = r + d
                if rr < 0 or rr >= m or ((nxt | blocked) >> rr) & 1:
                    ok = False
                    break
                bits_there |= 1 << rr
            if not ok:
                continue
            a = r + off
            yield from rec(cur | bits_here, nxt | bits_there, hcross | (1 << a), pieces + ((a, missing),))

    yield from rec(cur, 0, 0, ())


@lru_cache(maxsize=None)
def _tromino_table(m: int, cur: int, last: bool) -> tuple:
    blocked = (1 << m) - 1 if last else 0
    return tuple((nxt, hcross) for _, nxt, hcross in column_fills(m, cur, blocked))


@lru_cache(maxsize=None)
def _domino_table(m: int, cur: int, last: bool) -> tuple:
    full = (1 << m) - 1
    out = []

    def rec(cur, nxt):
        if cur == full:
            out.append(nxt)
            return
        r = (~cur & (cur + 1)).bit_length() - 1
        if not last:
            rec(cur | (1 << r), nxt | (1 << r))
        if r + 1 < m and not (cur >> (r + 1)) & 1:
            rec(cur | (3 << r), nxt)

    rec(cur, 0)
    return tuple(out)


# ---------------------------------------------------------------------------
# DP counters
# ---------------------------------------------------------------------------

def _oriented(rect: Rect) -> tuple[int, int]:
    # profile over the shorter side, scan along the longer one
    return (rect.rows, rect.cols) if rect.rows <= rect.cols else (rect.cols, rect.rows)


def count_tromino_dp(rect) -> int:
    rect = _as_rect(rect)
    if rect.area % 3:
        return 0
    m, n = _oriented(rect)
    states = {0: 1}
    for j in range(n):
        last = j == n - 1
        nxt_states: dict[int, int] = {}
        for mask, ways in states.items():
            for nxt, _ in _tromino_table(m, mask, last):
                nxt_states[nxt] = nxt_states.get(nxt, 0) + ways
        states = nxt_states
    return states.get(0, 0)


def count_faultfree_dp(rect) -> int:
    """Count tromino tilings with no fault line.

    State per column boundary is (profile mask, crossed-horizontal-lines mask).
    A vertical line is crossed exactly when some piece straddles it, which is
    the case iff the profile handed to the next column is non-empty; such
    states are killed eagerly.  Horizontal lines are only checked at the end.
    """
    rect = _as_rect(rect)
    if rect.area % 3:
        return 0
    m, n = _oriented(rect)
    hfull = (1 << (m - 1)) - 1
    states = {(0, 0): 1}
    for j in range(n):
        last = j == n - 1
        nxt_states: dict[tuple[int, int], int] = {}
        for (mask, hmask), ways in states.items():
            for nxt, hcross in _tromino_table(m, mask, last):
                if not last and nxt == 0:
                    continue
                key = (nxt, (hmask | hcross) & hfull)
                nxt_states[key] = nxt_states.get(key, 0) + ways
        states = nxt_states
    return states.get((0, hfull), 0)


def count_domino_dp(rect) -> int:
    rect = _as_rect(rect)
    if rect.area % 2:
        return 0
    m, n = _oriented(rect)
    states = {0: 1}
    for j in range(n):
        last = j == n - 1
        nxt_states: dict[int, int] = {}
        for mask, ways in states.items():
            for nxt in _domino_table(m, mask, last):
                nxt_states[nxt] = nxt_states.get(nxt, 0) + ways
        states = nxt_states
    return states.get(0, 0)


# ---------------------------------------------------------------------------
# Backtracking enumeration
# ---------------------------------------------------------------------------

class _Board:
    """Precomputed placements for a rectangle, cells indexed row-major from 0."""

    def __init__(self, rect: Rect):
        self.rect = rect
        m, n = rect.rows, rect.cols
        self.full = (1 << (m * n)) - 1
        self.moves = []
        for idx in range(m * n):
            r, c = divmod(idx, n)
            r += 1
            c += 1
            options = []
            # ordered by canonical piece key
            for ar, ac, missing in ((r, c - 1, "TL"), (r, c, "TR"), (r, c, "BL"), (r, c, "BR")):
                p = TrominoPlacement(ar, ac, missing)
                cells = p.cells()
                if all(1 <= x.row <= m and 1 <= x.col <= n for x in cells):
                    bits = 0
                    for x in cells:
                        bits |= 1 << ((x.row - 1) * n + x.col - 1)
                    options.append((bits, p))
            self.moves.append(tuple(options))


def _crossings_ok(rect: Rect, pieces) -> bool:
    m, n = rect.rows, rect.cols
    h = [0] * (m + 1)
    v = [0] * (n + 1)
    for p in pieces:
        h[p.row] += 1
        v[p.col] += 1
    return all(h[1:m]) and all(v[1:n])


def _walk(board: _Board, faultfree: bool, occ: int, pieces: list, hcount: list, checked: int, dead=None):
    """Depth-first generator of complete piece lists below the given partial state.

    ``dead`` (all-tilings mode only) collects occupancy masks with no
    completion; whether a mask can be completed does not depend on how it
    was reached, so those subtrees are skipped on later visits.
    """
    if occ == board.full:
        if not faultfree or _crossings_ok(board.rect, pieces):
            yield pieces
        return
    if dead is not None and occ in dead:
        return
    n = board.rect.cols
    idx = (~occ & (occ + 1)).bit_length() - 1
    row = idx // n + 1
    if faultfree:
        # every horizontal line above the current row is final now
        while checked < row - 1:
            checked += 1
            if hcount[checked] == 0:
                return
    found = False
    for bits, p in board.moves[idx]:
        if occ & bits:
            continue
        pieces.append(p)
        hcount[p.row] += 1
        for done in _walk(board, faultfree, occ | bits, pieces, hcount, checked, dead):
            found = True
            yield done
        hcount[p.row] -= 1
        pieces.pop()
    if dead is not None and not found:
        dead.add(occ)


def iter_tilings(rect, mode: str = "all"):
    """Yield every tiling of ``rect`` (mode 'all' or 'faultfree') in canonical order."""
    rect = _as_rect(rect)
    if mode not in ("all", "faultfree"):
        raise ValueError(f"unknown mode {mode!r}")
    if rect.area % 3:
        return
    board = _Board(rect)
    hcount = [0] * (rect.rows + 1)
    dead = None if mode == "faultfree" else set()
    for pieces in _walk(board, mode == "faultfree", 0, [], hcount, 0, dead):
        yield Tiling(rect, tuple(pieces))


def enumerate_tilings(rect, mode: str = "all", visitor=None) -> int:
    """Call ``visitor`` once per tiling in canonical order; return how many were visited."""
    count = 0
    for t in iter_tilings(rect, mode):
        if visitor is not None:
            visitor(t)
        count += 1
    return count


def first_tiling(rect, mode: str = "all") -> Tiling | None:
    return next(iter_tilings(rect, mode), None)


def _count_subtree(args) -> int:
    rect, faultfree, occ, pieces = args
    board = _Board(rect)
    hcount = [0] * (rect.rows + 1)
    for p in pieces:
        hcount[p.row] += 1
    dead = None if faultfree else set()
    return sum(1 for _ in _walk(board, faultfree, occ, list(pieces), hcount, 0, dead))


def _frontier(board: _Board, depth: int):
    """Partial states after ``depth`` forced placements, in canonical order."""
    layer = [(0, ())]
    for _ in range(depth):
        nxt = []
        for occ, pieces in layer:
            if occ == board.full:
                nxt.append((occ, pieces))
                continue
            idx = (~occ & (occ + 1)).bit_length() - 1
            for bits, p in board.moves[idx]:
                if not occ & bits:
                    nxt.append((occ | bits, pieces + (p,)))
        layer = nxt
    return layer


def default_workers() -> int:
    raw = os.environ.get("POLYFAULT_THREADS")
    if not raw:
        return 1
    workers = int(raw)
    if workers < 1:
        raise ValueError("POLYFAULT_THREADS must be an integer >= 1")
    return workers


def count_enumerate(rect, mode: str = "all", workers: int | None = None) -> int:
    """Count by enumeration, optionally splitting the search tree over processes.

    Subtree counts are summed in canonical order, so the result is identical
    for every worker count.
    """
    rect = _as_rect(rect)
    if rect.area % 3:
        return 0
    workers = default_workers() if workers is None else workers
    if workers <= 1:
        return enumerate_tilings(rect, mode)
    board = _Board(rect)
    jobs = [(rect, mode == "faultfree", occ, pieces) for occ, pieces in _frontier(board, 3)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_subtree, jobs))


def count(rect, kind: str = "all_tromino", method: str = "dp", workers: int | None = None) -> CountResult:
    rect = _as_rect(rect)
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if kind == "all_domino":
        if method == "enumerate":
            value = len(domino_tilings(rect))
        else:
            value = count_domino_dp(rect)
    elif method == "dp":
        value = count_faultfree_dp(rect) if kind == "faultfree_tromino" else count_tromino_dp(rect)
    else:
        mode = "faultfree" if kind == "faultfree_tromino" else "all"
        value = count_enumerate(rect, mode, workers)
    return CountResult(rect, kind, value, method)


def domino_tilings(rect) -> list:
    """All domino tilings as sorted tuples of cell pairs (brute force, small boards only)."""
    rect = _as_rect(rect)
    m, n = rect.rows, rect.cols
    if (m * n) % 2:
        return []
    out = []
    covered = set()
    cells = list(rect.cells())

    def rec(i, acc):
        while i < len(cells) and cells[i] in covered:
            i += 1
        if i == len(cells):
            out.append(tuple(sorted(acc)))
            return
        r, c = cells[i]
        for other in ((r, c + 1), (r + 1, c)):
            if other[0] <= m and other[1] <= n and other not in covered:
                a, b = cells[i], type(cells[i])(*other)
                covered.update((a, b))
                acc.append((a, b))
                rec(i + 1, acc)
                acc.pop()
                covered.difference_update((a, b))

    rec(0, [])
    return out
