"""Constructing faultfree tilings: basis catalog, six-column extension, full construction.

Extension does not replay hand-drawn generator pictures.  It strips the
pieces touching a seam window next to the edge being grown, then searches
column by column for a re-tiling of the window plus six fresh columns that
leaves no fault line.  The search is a depth-first walk over column
profiles with a memo of dead states, so the first completion in its fixed
move order is returned and the result is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _basis_data
from .enumeration import column_fills, first_tiling
from .faults import crossing_numbers, is_faultfree
from .grid import Rect, Tiling, TrominoPlacement, mirror, transpose

SIDES = ("left", "right", "top", "bottom")
DEFAULT_WIDTH = 4
FALLBACK_WIDTH = 5

BASIS_ROWS = range(4, 10)
BASIS_COLS = (6, 9)
# R(9,6) is the transpose of R(6,9); the catalog keeps the other 11 pairs.
BASIS_PAIRS = tuple((i, j) for i in BASIS_ROWS for j in BASIS_COLS if (i, j) != (9, 6))


class NoExtensionFound(RuntimeError):
    """The seam search ran out of candidates; the extension scheme failed on this input."""


@dataclass(frozen=True)
class SeamWindow:
    width: int = DEFAULT_WIDTH
    side: str = "right"

    def __post_init__(self):
        if self.width < 3:
            raise ValueError("seam window must be at least 3 columns wide")
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}")


# ---------------------------------------------------------------------------
# Basis catalog
# ---------------------------------------------------------------------------

def _decode(rect: tuple, pieces) -> Tiling:
    return Tiling(Rect(*rect), tuple(TrominoPlacement(r, c, miss) for r, c, miss in pieces))


def regenerate_basis_catalog() -> dict:
    """Recompute the catalog: the canonically first faultfree tiling of each basis pair."""
    out = {}
    for pair in BASIS_PAIRS:
        t = first_tiling(pair, "faultfree")
        if t is None:
            raise NoExtensionFound(f"no faultfree tiling of R{pair}")
        out[pair] = tuple((p.row, p.col, p.missing) for p in t.pieces)
    return out


def basis_catalog() -> dict:
    return {pair: _decode(pair, pieces) for pair, pieces in _basis_data.BASIS.items()}


def basis_tiling(i: int, j: int) -> Tiling:
    if i not in BASIS_ROWS or j not in BASIS_COLS:
        raise ValueError(f"R({i},{j}) is not a basis case (need 4<=i<=9, j in {BASIS_COLS})")
    if (i, j) == (9, 6):
        return transpose(basis_tiling(6, 9))
    return _decode((i, j), _basis_data.BASIS[(i, j)])


# ---------------------------------------------------------------------------
# Seam search
# ---------------------------------------------------------------------------

def _extend_right(t: Tiling, width: int, vexact=None, hexact=None) -> Tiling:
    """Grow ``t`` by six columns on the right.

    ``vexact`` maps a column j to the exact number of pieces that must cross
    the line between columns j and j+1 in the result; ``hexact`` does the same
    for the line between rows i and i+1.  Both are optional filters used by
    the minimum-crossing construction.
    """
    m, n = t.rows, t.cols
    if m < 4:
        raise ValueError("horizontal extension needs at least 4 rows")
    if not 3 <= width <= n:
        raise ValueError(f"window width {width} does not fit a tiling with {n} columns")
    vexact = dict(vexact or {})
    hexact = dict(hexact or {})
    N = n + 6
    lo = n - width + 1  # first window column
    kept = [p for p in t.pieces if p.col + 1 < lo]
    start = lo - 1 if any(p.col + 1 >= lo and p.col < lo for p in t.pieces) else lo

    filled = [0] * (N + 2)
    vkept = [0] * (N + 1)
    hkept = [0] * (m + 1)
    for p in kept:
        for c in p.cells():
            filled[c.col] |= 1 << (c.row - 1)
        vkept[p.col] += 1
        hkept[p.row] += 1

    hneed = 0
    for i in range(1, m):
        if hkept[i] == 0:
            hneed |= 1 << (i - 1)
    hrows = sorted(hexact)
    for i in hrows:
        if hkept[i] > hexact[i]:
            raise NoExtensionFound(f"line below row {i} already has {hkept[i]} crossings")
    hbase = tuple(hkept[i] for i in hrows)
    full = (1 << m) - 1
    dead = set()

    def search(j, cur, hneed, hcnt):
        key = (j, cur, hneed, hcnt)
        if key in dead:
            return None
        last = j == N
        blocked = full if last else filled[j + 1]
        for pieces, nxt, hcross in column_fills(m, cur, blocked):
            if not last:
                crossings = vkept[j] + len(pieces)
                if crossings == 0:
                    continue
                if j in vexact and crossings != vexact[j]:
                    continue
            cnt = hcnt
            if hrows:
                cnt = list(hcnt)
                for k, i in enumerate(hrows):
                    cnt[k] += (hcross >> (i - 1)) & 1
                if any(c > hexact[i] for c, i in zip(cnt, hrows)):
                    continue
                cnt = tuple(cnt)
            rest = hneed & ~hcross
            if last:
                if rest or any(c != hexact[i] for c, i in zip(cnt, hrows)):
                    continue
                return [(a, j, miss) for a, miss in pieces]
            found = search(j + 1, nxt | filled[j + 1], rest, cnt)
            if found is not None:
                return [(a, j, miss) for a, miss in pieces] + found
        dead.add(key)
        return None

    placed = search(start, filled[start], hneed, hbase)
    if placed is None:
        raise NoExtensionFound(f"no faultfree completion of R({m},{n})+6 columns with window {width}")
    pieces = kept + [TrominoPlacement(a + 1, c, miss) for a, c, miss in placed]
    out = Tiling.from_pieces(Rect(m, N), pieces)
    assert is_faultfree(out)
    return out


def _to_right_frame(side: str):
    """(forward, backward) transforms turning extension on ``side`` into extension on the right."""
    ident = lambda t: t  # noqa: E731
    if side == "right":
        return ident, ident
    if side == "left":
        return mirror, mirror
    if side == "bottom":
        return transpose, transpose
    return (lambda t: mirror(transpose(t))), (lambda t: transpose(mirror(t)))


def extend_six(t: Tiling, side: str = "right", window: SeamWindow | None = None) -> Tiling:
    """Return a faultfree tiling six columns (or rows) larger, growing on ``side``.

    The window is widened to five columns before giving up.
    """
    if window is None:
        window = SeamWindow(DEFAULT_WIDTH, side)
    if window.width > DEFAULT_WIDTH:
        raise ValueError("seam window width must be at most 4 (5 is the automatic fallback)")
    if not is_faultfree(t):
        raise ValueError("extend_six needs a faultfree tiling")
    fwd, back = _to_right_frame(side)
    base = fwd(t)
    last_err = None
    for w in (window.width, FALLBACK_WIDTH):
        try:
            return back(_extend_right(base, w))
        except NoExtensionFound as err:
            last_err = err
    raise NoExtensionFound(str(last_err))


# ---------------------------------------------------------------------------
# Whole-rectangle constructions
# ---------------------------------------------------------------------------

def _split(k: int) -> tuple[int, int]:
    """k = base + 6a with base in 4..9."""
    a = max(0, (k - 4) // 6)
    return k - 6 * a, a


def _plan(m: int, n: int):
    """Choose orientation and basis pair; returns (transposed, i, a, j, b)."""
    options = []
    for flipped, (rows, cols) in ((False, (m, n)), (True, (n, m))):
        if cols % 3:
            continue
        i, a = _split(rows)
        j = 6 if cols % 6 == 0 else 9
        b = (cols - j) // 6
        options.append((flipped, i, a, j, b))
    # prefer a plan that avoids the (9,6) pair, which is only a transposed copy
    options.sort(key=lambda o: ((o[1], o[3]) == (9, 6), o[0]))
    return options[0]


def _check_args(m: int, n: int) -> None:
    if m < 4 or n < 4:
        raise ValueError(f"R({m},{n}) has a side shorter than 4; no faultfree tiling exists")
    if (m * n) % 3:
        raise ValueError(f"R({m},{n}) has area not divisible by 3")


def construct_faultfree(m: int, n: int) -> Tiling:
    _check_args(m, n)
    flipped, i, a, j, b = _plan(m, n)
    t = basis_tiling(i, j)
    for _ in range(a):
        t = extend_six(t, "bottom")
    for _ in range(b):
        t = extend_six(t, "right")
    if flipped:
        t = transpose(t)
    assert t.rect == Rect(m, n) and is_faultfree(t)
    return t


def construct_min_crossing(m: int, n: int) -> Tiling:
    """Faultfree tiling of R(m,n), m,n >= 10, with both crossing numbers at most 2.

    A faultfree R(m-6, n-6) is grown to the right and then downward; each
    seam search is constrained so the old right edge and the old bottom edge
    end up crossed by exactly two pieces.
    """
    if m < 10 or n < 10:
        raise ValueError("minimum-crossing construction needs m, n >= 10")
    _check_args(m, n)
    core = construct_faultfree(m - 6, n - 6)
    vline, hline = n - 6, m - 6
    t = _widening(lambda w: _extend_right(core, w, vexact={vline: 2}))
    tt = transpose(t)
    t = transpose(_widening(lambda w: _extend_right(tt, w, vexact={hline: 2}, hexact={vline: 2})))
    cn = crossing_numbers(t)
    assert is_faultfree(t) and cn.horizontal_cn <= 2 and cn.vertical_cn <= 2
    return t


def _widening(attempt):
    err = None
    for w in (DEFAULT_WIDTH, FALLBACK_WIDTH):
        try:
            return attempt(w)
        except NoExtensionFound as e:
            err = e
    raise NoExtensionFound(str(err))
