import json

import pytest
from hypothesis import given, strategies as st

from polyfault.grid import (
    CORNERS,
    Rect,
    Tiling,
    TilingError,
    TrominoPlacement,
    cells_of,
    flip,
    mirror,
    placement_from_cells,
    tiling_from_json,
    transpose,
    validate,
)
from polyfault.enumeration import iter_tilings

R23 = [TrominoPlacement(1, 1, "BR"), TrominoPlacement(1, 2, "TL")]


def test_cells_of_each_corner():
    assert cells_of(TrominoPlacement(1, 1, "TL")) == {(1, 2), (2, 1), (2, 2)}
    assert cells_of(TrominoPlacement(3, 4, "BR")) == {(3, 4), (3, 5), (4, 4)}


@given(st.integers(1, 20), st.integers(1, 20), st.sampled_from(CORNERS))
def test_placement_roundtrip(r, c, miss):
    p = TrominoPlacement(r, c, miss)
    assert placement_from_cells(cells_of(p)) == p


def test_placement_rejects_bad_shapes():
    with pytest.raises(ValueError):
        placement_from_cells([(1, 1), (1, 2), (1, 3)])
    with pytest.raises(ValueError):
        TrominoPlacement(1, 1, "XX")


def test_rect_rejects_nonpositive():
    with pytest.raises(ValueError):
        Rect(0, 3)


def test_valid_2x3():
    t = Tiling.from_pieces(Rect(2, 3), R23)
    assert validate(t) is None
    assert t.dumps() == json.dumps(t.to_json(), separators=(",", ":"))


@pytest.mark.parametrize(
    "pieces, kind",
    [
        ([TrominoPlacement(1, 1, "BR")], "Gap"),
        ([TrominoPlacement(1, 1, "BR"), TrominoPlacement(1, 1, "TL")], "Overlap"),
        ([TrominoPlacement(1, 3, "BR"), TrominoPlacement(1, 2, "TL")], "OutOfBounds"),
        ([TrominoPlacement(1, 2, "TL"), TrominoPlacement(1, 1, "BR")], "OrderViolation"),
    ],
)
def test_validation_errors(pieces, kind):
    t = Tiling(Rect(2, 3), tuple(pieces))
    assert validate(t).kind == kind
    with pytest.raises(TilingError) as err:
        t.check()
    assert err.value.kind == kind


def test_json_roundtrip_and_rejection():
    t = Tiling.from_pieces(Rect(2, 3), R23)
    assert tiling_from_json(t.dumps()) == t
    with pytest.raises(TilingError):
        tiling_from_json({"rows": 2, "cols": 3, "pieces": [{"r": 1, "c": 1, "missing": "BR"}]})


@pytest.mark.parametrize("shape", [(2, 3), (3, 4), (4, 6), (6, 4)])
def test_symmetries_are_involutions(shape):
    for t in iter_tilings(shape):
        assert transpose(transpose(t)) == t
        assert flip(flip(t)) == t
        assert mirror(mirror(t)) == t
        assert transpose(t).rect == Rect(shape[1], shape[0])
