"""Fault lines, faultfree constructions and exact counts for L-tromino tilings of rectangles."""

from .enumeration import (
    CountResult,
    count,
    count_domino_dp,
    count_enumerate,
    count_faultfree_dp,
    count_tromino_dp,
    enumerate_tilings,
    first_tiling,
    iter_tilings,
)
from .faults import (
    CrossingNumbers,
    CrossingProfile,
    check_counting_inequality,
    crossing_numbers,
    crossing_profile,
    fault_lines,
    is_faultfree,
    max_crossing_bound,
)
from .generative import (
    NoExtensionFound,
    SeamWindow,
    basis_catalog,
    construct_faultfree,
    construct_min_crossing,
    extend_six,
)
from .grid import Rect, Tiling, TilingError, TrominoPlacement, tiling_from_json, validate
from .monodic import (
    ColouredDominoTiling,
    InvalidMonodic,
    MonodicTiling,
    NotAStretchImage,
    from_monodic,
    stretch,
    to_monodic,
    unstretch,
)
from .series import RationalGF, IntPoly, coeff

__version__ = "0.1.0"
