"""Tromino tilings as directed monodic tilings, and stretching them into domino tilings.

Each L-tromino splits into a directed domino and a monomino.  The domino is
the corner cell of the L together with one arm, directed from the arm into
the corner, and the monomino (the other arm) sits immediately to the right
of the arrow head, right being taken relative to the arrow.  Exactly one arm
satisfies this for each of the four orientations, so the split is a fixed
function of the piece, and the reverse rule "attach the monomino on the
right of each arrow" recovers the piece.

Stretching doubles the width (or height).  A monomino becomes a blue domino.
A red domino becomes two red dominoes parallel to it: a horizontal domino
turns into two horizontal dominoes side by side, a vertical one into two
vertical dominoes next to each other.  The arrow is not visible in the
picture, so stretched red dominoes may carry it along explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .grid import Cell, Rect, Tiling, placement_from_cells

ARROWS = {"up": (-1, 0), "down": (1, 0), "left": (0, -1), "right": (0, 1)}
_ARROW_OF = {v: k for k, v in ARROWS.items()}
_SWAP_AXES = {"up": "left", "left": "up", "down": "right", "right": "down"}
DIRECTIONS = ("horizontal", "vertical")


class InvalidMonodic(ValueError):
    """Some arrow does not point at a monomino it can claim on its own."""


class NotAStretchImage(ValueError):
    """The coloured domino tiling is not the stretch of any monodic tiling."""


def _right_of(arrow: str) -> tuple:
    dr, dc = ARROWS[arrow]
    return dc, -dr


def _pair(a, b) -> tuple:
    a, b = Cell(*a), Cell(*b)
    if abs(a.row - b.row) + abs(a.col - b.col) != 1:
        raise ValueError(f"cells {a} and {b} are not adjacent")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True, order=True)
class Domino:
    cells: tuple
    colour: str = "red"
    arrow: str | None = None

    @property
    def horizontal(self) -> bool:
        return self.cells[0].row == self.cells[1].row

    def head(self) -> Cell:
        if self.arrow is None:
            raise ValueError("undirected domino has no head")
        dr, dc = ARROWS[self.arrow]
        a, b = self.cells
        return b if (b.row - a.row, b.col - a.col) == (dr, dc) else a

    def to_json(self) -> dict:
        doc = {"cells": [list(c) for c in self.cells], "colour": self.colour}
        if self.arrow is not None:
            doc["arrow"] = self.arrow
        return doc


def _domino(cells, colour="red", arrow=None) -> Domino:
    return Domino(_pair(*cells), colour, arrow)


def _check_cover(rect: Rect, groups) -> None:
    seen = set()
    for cells in groups:
        for c in cells:
            if not rect.contains(c):
                raise ValueError(f"cell {c} lies outside R({rect.rows},{rect.cols})")
            if c in seen:
                raise ValueError(f"cell {c} is covered twice")
            seen.add(c)
    if len(seen) != rect.area:
        raise ValueError("pieces do not cover the rectangle")


@dataclass(frozen=True)
class MonodicTiling:
    rect: Rect
    dominoes: tuple  # sorted Domino, colour red, arrow set
    monominoes: tuple  # sorted Cell, all blue

    def __post_init__(self):
        object.__setattr__(self, "dominoes", tuple(sorted(self.dominoes)))
        object.__setattr__(self, "monominoes", tuple(sorted(Cell(*c) for c in self.monominoes)))
        _check_cover(self.rect, [d.cells for d in self.dominoes] + [(c,) for c in self.monominoes])
        if len(self.dominoes) != len(self.monominoes):
            raise ValueError("a monodic tiling has as many dominoes as monominoes")
        for d in self.dominoes:
            if d.colour != "red" or d.arrow not in ARROWS:
                raise ValueError(f"monodic dominoes are red and directed, got {d}")
            d.head()

    def to_json(self) -> dict:
        return {
            "kind": "monodic",
            "rows": self.rect.rows,
            "cols": self.rect.cols,
            "dominoes": [d.to_json() for d in self.dominoes],
            "monominoes": [{"cell": list(c), "colour": "blue"} for c in self.monominoes],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MonodicTiling":
        if doc.get("kind") != "monodic":
            raise ValueError("not a monodic tiling document")
        doms = [_domino(d["cells"], d.get("colour", "red"), d.get("arrow")) for d in doc["dominoes"]]
        monos = [Cell(*m["cell"]) for m in doc["monominoes"]]
        return cls(Rect(doc["rows"], doc["cols"]), tuple(doms), tuple(monos))


@dataclass(frozen=True)
class ColouredDominoTiling:
    rect: Rect
    dominoes: tuple  # sorted Domino; arrow optional on red pieces

    def __post_init__(self):
        object.__setattr__(self, "dominoes", tuple(sorted(self.dominoes)))
        if self.rect.area % 2:
            raise ValueError("a domino tiling needs an even area")
        _check_cover(self.rect, [d.cells for d in self.dominoes])
        for d in self.dominoes:
            if d.colour not in ("red", "blue"):
                raise ValueError(f"unknown colour {d.colour!r}")

    def without_arrows(self) -> "ColouredDominoTiling":
        return ColouredDominoTiling(self.rect, tuple(Domino(d.cells, d.colour) for d in self.dominoes))

    def to_json(self) -> dict:
        return {
            "kind": "coloured_domino",
            "rows": self.rect.rows,
            "cols": self.rect.cols,
            "dominoes": [d.to_json() for d in self.dominoes],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ColouredDominoTiling":
        if doc.get("kind") != "coloured_domino":
            raise ValueError("not a coloured domino tiling document")
        doms = [_domino(d["cells"], d["colour"], d.get("arrow")) for d in doc["dominoes"]]
        return cls(Rect(doc["rows"], doc["cols"]), tuple(doms))


# ---------------------------------------------------------------------------
# Tromino <-> monodic
# ---------------------------------------------------------------------------

def split_piece(cells) -> tuple[Domino, Cell]:
    """(directed domino, monomino) for one L-tromino given by its cells."""
    cells = [Cell(*c) for c in cells]
    for corner in cells:
        arms = [a for a in cells if a != corner]
        if all(abs(a.row - corner.row) + abs(a.col - corner.col) == 1 for a in arms):
            break
    else:
        raise ValueError(f"{cells} is not an L-tromino")
    for arm, other in (arms, arms[::-1]):
        arrow = _ARROW_OF[(corner.row - arm.row, corner.col - arm.col)]
        dr, dc = _right_of(arrow)
        if (corner.row + dr, corner.col + dc) == other:
            return _domino((arm, corner), "red", arrow), other
    raise AssertionError("unreachable: one arm of an L is always on the right")


def to_monodic(t: Tiling) -> MonodicTiling:
    t.check()
    doms, monos = [], []
    for p in t.pieces:
        d, m = split_piece(p.cells())
        doms.append(d)
        monos.append(m)
    return MonodicTiling(t.rect, tuple(doms), tuple(monos))


def from_monodic(mt: MonodicTiling) -> Tiling:
    monos = set(mt.monominoes)
    claimed = {}
    for d in mt.dominoes:
        head = d.head()
        dr, dc = _right_of(d.arrow)
        target = Cell(head.row + dr, head.col + dc)
        if target not in monos:
            raise InvalidMonodic(f"arrow of domino {list(d.cells)} points at no monomino")
        if target in claimed:
            raise InvalidMonodic(f"monomino {tuple(target)} is claimed by two arrows")
        claimed[target] = d
    pieces = [placement_from_cells(d.cells + (m,)) for m, d in claimed.items()]
    return Tiling.from_pieces(mt.rect, pieces)


# ---------------------------------------------------------------------------
# Stretching
# ---------------------------------------------------------------------------

def _transpose_domino(d: Domino) -> Domino:
    cells = tuple(Cell(c.col, c.row) for c in d.cells)
    arrow = _SWAP_AXES[d.arrow] if d.arrow else None
    return _domino(cells, d.colour, arrow)


def _transpose_monodic(mt: MonodicTiling) -> MonodicTiling:
    return MonodicTiling(
        mt.rect.transposed(),
        tuple(_transpose_domino(d) for d in mt.dominoes),
        tuple(Cell(c.col, c.row) for c in mt.monominoes),
    )


def _transpose_coloured(cd: ColouredDominoTiling) -> ColouredDominoTiling:
    return ColouredDominoTiling(cd.rect.transposed(), tuple(_transpose_domino(d) for d in cd.dominoes))


def _stretch_h(mt: MonodicTiling, keep_arrows: bool) -> ColouredDominoTiling:
    out = [_domino(((r, 2 * c - 1), (r, 2 * c)), "blue") for r, c in mt.monominoes]
    for d in mt.dominoes:
        arrow = d.arrow if keep_arrows else None
        (r1, c1), (r2, c2) = d.cells
        if d.horizontal:
            out += [_domino(((r1, 2 * c - 1), (r1, 2 * c)), "red", arrow) for c in (c1, c2)]
        else:
            out += [_domino(((r1, k), (r2, k)), "red", arrow) for k in (2 * c1 - 1, 2 * c1)]
    return ColouredDominoTiling(Rect(mt.rect.rows, 2 * mt.rect.cols), tuple(out))


def stretch(mt: MonodicTiling, direction: str = "horizontal", keep_arrows: bool = True) -> ColouredDominoTiling:
    """Double the width (horizontal) or height (vertical) of a monodic tiling."""
    if direction == "horizontal":
        return _stretch_h(mt, keep_arrows)
    if direction == "vertical":
        return _transpose_coloured(_stretch_h(_transpose_monodic(mt), keep_arrows))
    raise ValueError(f"direction must be one of {DIRECTIONS}")


def _compress_h(cd: ColouredDominoTiling) -> tuple[list, list]:
    """Undo a horizontal stretch cell by cell; arrows may be missing."""
    m, n2 = cd.rect.rows, cd.rect.cols
    if n2 % 2:
        raise NotAStretchImage(f"width {n2} is odd")
    n = n2 // 2
    monos, doms = [], []
    hred = {}  # (row, col) of the compressed grid -> arrow
    vred = {}
    for d in cd.dominoes:
        (r1, c1), (r2, c2) = d.cells
        if d.horizontal:
            if c1 % 2 == 0:
                raise NotAStretchImage(f"domino {list(d.cells)} straddles two stretched cells")
            cell = Cell(r1, (c1 + 1) // 2)
            if d.colour == "blue":
                monos.append(cell)
            else:
                hred[cell] = d.arrow
        else:
            if d.colour == "blue":
                raise NotAStretchImage(f"blue domino {list(d.cells)} is vertical")
            vred[(r1, c1)] = d.arrow

    # vertical red dominoes must pair up column-wise inside one stretched column
    for (r, c), arrow in sorted(vred.items()):
        if c % 2 == 0:
            continue
        if (r, c + 1) not in vred or vred[(r, c + 1)] != arrow:
            raise NotAStretchImage(f"vertical red domino at {(r, c)} has no aligned partner")
        j = (c + 1) // 2
        doms.append(_domino(((r, j), (r + 1, j)), "red", arrow))
    if 2 * len(doms) != len(vred):
        raise NotAStretchImage("unpaired vertical red domino")

    # horizontal red cells pair up left to right inside each maximal run
    for r in range(1, m + 1):
        j = 1
        while j <= n:
            if (r, j) not in hred:
                j += 1
                continue
            if (r, j + 1) not in hred or hred[(r, j)] != hred[(r, j + 1)]:
                raise NotAStretchImage(f"red run in row {r} cannot be split into dominoes")
            doms.append(_domino(((r, j), (r, j + 1)), "red", hred[(r, j)]))
            j += 2

    return doms, monos


def _unstretch_h(cd: ColouredDominoTiling) -> MonodicTiling:
    doms, monos = _compress_h(cd)
    m, n = cd.rect.rows, cd.rect.cols // 2
    for d in doms:
        if d.arrow is None:
            raise NotAStretchImage("red dominoes carry no arrows; direction cannot be recovered")
    try:
        return MonodicTiling(Rect(m, n), tuple(doms), tuple(monos))
    except ValueError as err:
        raise NotAStretchImage(str(err)) from None


def unstretch(cd: ColouredDominoTiling, direction: str = "horizontal") -> MonodicTiling:
    if direction == "horizontal":
        return _unstretch_h(cd)
    if direction == "vertical":
        return _transpose_monodic(_unstretch_h(_transpose_coloured(cd)))
    raise ValueError(f"direction must be one of {DIRECTIONS}")


def is_stretch_image(cd: ColouredDominoTiling, direction: str = "horizontal") -> bool:
    """Shape-only test: could ``cd`` (arrows ignored) come from stretching a monodic tiling?"""
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    plain = cd.without_arrows()
    if direction == "vertical":
        plain = _transpose_coloured(plain)
    try:
        doms, monos = _compress_h(plain)
    except NotAStretchImage:
        return False
    return len(doms) == len(monos)


def colourings(dominoes) -> list:
    """Every red/blue colouring of a plain domino tiling, as ColouredDominoTiling inputs."""
    cells = [d.cells if isinstance(d, Domino) else _pair(*d) for d in dominoes]
    out = []
    for k in range(len(cells) + 1):
        for blue in combinations(range(len(cells)), k):
            chosen = set(blue)
            out.append(tuple(Domino(c, "blue" if i in chosen else "red") for i, c in enumerate(cells)))
    return out


# A domino tiling of R(3,4) that no colouring turns into a stretch image: the
# horizontal domino in the top row starts at an even column, so it straddles
# two stretched cells.
UNSTRETCHABLE_3x4 = (
    ((1, 1), (2, 1)),
    ((1, 2), (1, 3)),
    ((1, 4), (2, 4)),
    ((2, 2), (2, 3)),
    ((3, 1), (3, 2)),
    ((3, 3), (3, 4)),
)
