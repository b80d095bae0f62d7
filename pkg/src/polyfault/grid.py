"""Rectangles, L-tromino placements and complete tilings.

Coordinates are 1-based ``(row, col)`` pairs, rows counted downward.  A
tromino is stored as the top-left cell of its 2x2 bounding box plus the
corner of that box it leaves uncovered.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

CORNERS = ("TL", "TR", "BL", "BR")
_CORNER_CODE = {name: i for i, name in enumerate(CORNERS)}
_CORNER_OFFSET = {"TL": (0, 0), "TR": (0, 1), "BL": (1, 0), "BR": (1, 1)}


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, order=True)
class Rect:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"rectangle dimensions must be positive, got {self.rows}x{self.cols}")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    def transposed(self) -> "Rect":
        return Rect(self.cols, self.rows)

    def contains(self, cell) -> bool:
        return 1 <= cell[0] <= self.rows and 1 <= cell[1] <= self.cols

    def cells(self):
        for r in range(1, self.rows + 1):
            for c in range(1, self.cols + 1):
                yield Cell(r, c)


def tromino_tileable(rect: Rect) -> bool:
    """Necessary conditions only: area divisible by 3 and no side of length 1."""
    return rect.area % 3 == 0 and min(rect.rows, rect.cols) >= 2


@dataclass(frozen=True)
class TrominoPlacement:
    row: int
    col: int
    missing: str

    def __post_init__(self):
        if self.missing not in _CORNER_CODE:
            raise ValueError(f"missing corner must be one of {CORNERS}, got {self.missing!r}")

    @property
    def anchor(self) -> Cell:
        return Cell(self.row, self.col)

    @property
    def key(self) -> tuple:
        cells = self.cells()
        return (min(c.row for c in cells), min(c.col for c in cells), _CORNER_CODE[self.missing])

    def cells(self) -> frozenset:
        return cells_of(self)

    def to_json(self) -> dict:
        return {"r": self.row, "c": self.col, "missing": self.missing}


def cells_of(p: TrominoPlacement) -> frozenset:
    dr, dc = _CORNER_OFFSET[p.missing]
    return frozenset(
        Cell(p.row + i, p.col + j) for i in (0, 1) for j in (0, 1) if (i, j) != (dr, dc)
    )


def placement_from_cells(cells: Iterable) -> TrominoPlacement:
    """Inverse of :func:`cells_of`; raises ValueError if the cells are not an L."""
    cells = frozenset(Cell(*c) for c in cells)
    if len(cells) != 3:
        raise ValueError("an L-tromino has exactly three cells")
    r0 = min(c.row for c in cells)
    c0 = min(c.col for c in cells)
    box = {Cell(r0 + i, c0 + j) for i in (0, 1) for j in (0, 1)}
    if not cells <= box:
        raise ValueError(f"cells {sorted(cells)} do not fit a 2x2 box")
    (gone,) = box - cells
    for name, (dr, dc) in _CORNER_OFFSET.items():
        if gone == (r0 + dr, c0 + dc):
            return TrominoPlacement(r0, c0, name)
    raise AssertionError("unreachable")


class TilingError(ValueError):
    """A tiling failed validation.  ``kind`` is Overlap, Gap, OutOfBounds or OrderViolation."""

    def __init__(self, kind: str, where, message: str | None = None):
        self.kind = kind
        self.where = where
        super().__init__(message or f"{kind} at {where}")


@dataclass(frozen=True)
class Violation:
    kind: str
    where: object

    def to_json(self) -> dict:
        where = self.where.to_json() if hasattr(self.where, "to_json") else self.where
        return {"kind": self.kind, "where": where}


@dataclass(frozen=True)
class Tiling:
    rect: Rect
    pieces: tuple

    @classmethod
    def from_pieces(cls, rect: Rect, pieces: Iterable[TrominoPlacement]) -> "Tiling":
        """Build a tiling in canonical order and validate it."""
        t = cls(rect, tuple(sorted(pieces, key=lambda p: p.key)))
        t.check()
        return t

    @property
    def rows(self) -> int:
        return self.rect.rows

    @property
    def cols(self) -> int:
        return self.rect.cols

    def check(self) -> None:
        v = validate(self)
        if v is not None:
            raise TilingError(v.kind, v.where)

    def cell_owner(self) -> dict:
        owner = {}
        for i, p in enumerate(self.pieces):
            for cell in cells_of(p):
                owner[cell] = i
        return owner

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "pieces": [p.to_json() for p in self.pieces]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def validate(t: Tiling) -> Violation | None:
    """Return None for a valid canonical tiling, else the first violation found.

    Checks run in order: bounds, overlap, canonical order, gaps.
    """
    seen = set()
    for p in t.pieces:
        cells = cells_of(p)
        if not all(t.rect.contains(c) for c in cells):
            return Violation("OutOfBounds", p)
        for c in sorted(cells):
            if c in seen:
                return Violation("Overlap", c)
            seen.add(c)
    for i in range(1, len(t.pieces)):
        if t.pieces[i - 1].key >= t.pieces[i].key:
            return Violation("OrderViolation", i)
    for c in t.rect.cells():
        if c not in seen:
            return Violation("Gap", c)
    return None


def is_valid(t: Tiling) -> bool:
    return validate(t) is None


def _remap(t: Tiling, rect: Rect, fn) -> Tiling:
    pieces = [placement_from_cells(fn(c) for c in cells_of(p)) for p in t.pieces]
    return Tiling.from_pieces(rect, pieces)


def transpose(t: Tiling) -> Tiling:
    return _remap(t, t.rect.transposed(), lambda c: (c[1], c[0]))


def flip(t: Tiling) -> Tiling:
    """Reflect in the horizontal axis (row i goes to row m+1-i)."""
    m = t.rows
    return _remap(t, t.rect, lambda c: (m + 1 - c[0], c[1]))


def mirror(t: Tiling) -> Tiling:
    """Reflect in the vertical axis (column j goes to column n+1-j)."""
    n = t.cols
    return _remap(t, t.rect, lambda c: (c[0], n + 1 - c[1]))


def tiling_from_json(doc) -> Tiling:
    if isinstance(doc, str):
        doc = json.loads(doc)
    rect = Rect(int(doc["rows"]), int(doc["cols"]))
    pieces = tuple(TrominoPlacement(int(p["r"]), int(p["c"]), p["missing"]) for p in doc["pieces"])
    t = Tiling(rect, pieces)
    t.check()
    return t
