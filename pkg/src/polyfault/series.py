"""Exact rational generating functions and the closed forms built on them.

Everything here is integer or Fraction arithmetic.  ``kasteleyn`` is the one
floating-point path and only cross-checks the domino DP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath

from .enumeration import count_domino_dp, count_tromino_dp


class IntPoly(tuple):
    """Integer polynomial, coefficient of z^k at index k, trailing zeros trimmed."""

    def __new__(cls, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> float:
        return len(self) - 1 if self else float("-inf")

    def __getitem__(self, k):
        if isinstance(k, slice):
            return tuple.__getitem__(self, k)
        return tuple.__getitem__(self, k) if 0 <= k < len(self) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self), len(other))
        return IntPoly(self[k] + other[k] for k in range(size))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self)
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self):
            if a:
                for j, b in enumerate(other):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPoly":
        """Multiply by z^k (k may be negative if the low coefficients vanish)."""
        if k >= 0:
            return IntPoly([0] * k + list(self))
        if any(self[i] for i in range(-k)):
            raise ArithmeticError(f"polynomial is not divisible by z^{-k}")
        return IntPoly(self[-k:])

    def spread(self, k: int) -> "IntPoly":
        """Substitute z -> z^k."""
        out = [0] * (k * (len(self) - 1) + 1) if self else []
        for i, c in enumerate(self):
            out[k * i] = c
        return IntPoly(out)

    def content(self) -> int:
        g = 0
        for c in self:
            g = gcd(g, c)
        return g

    def __repr__(self):
        return f"IntPoly({list(self)})"


def _poly(*coeffs) -> IntPoly:
    return IntPoly(coeffs)


@dataclass(frozen=True, eq=False)
class RationalGF:
    num: IntPoly
    den: IntPoly

    def __post_init__(self):
        object.__setattr__(self, "num", IntPoly(self.num))
        object.__setattr__(self, "den", IntPoly(self.den))
        if self.den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    @classmethod
    def poly(cls, *coeffs) -> "RationalGF":
        return cls(IntPoly(coeffs), IntPoly([1]))

    def reduced(self) -> "RationalGF":
        g = gcd(self.num.content(), self.den.content())
        sign = -1 if self.den[0] < 0 else 1
        g = g * sign if g else sign
        return RationalGF(IntPoly(c // g for c in self.num), IntPoly(c // g for c in self.den))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalGF is not hashable")

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: "RationalGF") -> "RationalGF":
        if self.den == other.den:
            return RationalGF(self.num + other.num, self.den).reduced()
        return RationalGF(self.num * other.den + other.num * self.den, self.den * other.den).reduced()

    def __neg__(self) -> "RationalGF":
        return RationalGF(-self.num, self.den)

    def __sub__(self, other: "RationalGF") -> "RationalGF":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return RationalGF(self.num * q.numerator, self.den * q.denominator).reduced()
        return RationalGF(self.num * other.num, self.den * other.den).reduced()

    __rmul__ = __mul__

    def __truediv__(self, k):
        q = Fraction(k)
        return self * (1 / q)

    def __pow__(self, e: int) -> "RationalGF":
        out = RationalGF.poly(1)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int) -> "RationalGF":
        """Multiply by z^k; negative k divides and must be exact."""
        return RationalGF(self.num.shift(k), self.den)

    def scale(self, a) -> "RationalGF":
        """Substitute z -> a*z for a rational a."""
        a = Fraction(a)
        p, q = a.numerator, a.denominator
        e = max(len(self.num), len(self.den)) - 1
        num = IntPoly(c * p**k * q ** (e - k) for k, c in enumerate(self.num))
        den = IntPoly(c * p**k * q ** (e - k) for k, c in enumerate(self.den))
        return RationalGF(num, den).reduced()

    def spread(self, k: int) -> "RationalGF":
        """Substitute z -> z^k."""
        return RationalGF(self.num.spread(k), self.den.spread(k))

    def even_part(self) -> "RationalGF":
        """Keep only the even powers: (f(z) + f(-z)) / 2."""
        return (self + self.scale(-1)) / 2

    def series(self, count: int) -> list:
        """First ``count`` coefficients as Fractions (ints when the denominator is monic)."""
        d0 = self.den[0]
        out = []
        for t in range(count):
            acc = self.num[t]
            for k in range(1, min(t, len(self.den) - 1) + 1):
                acc -= self.den[k] * out[t - k]
            out.append(acc // d0 if acc % d0 == 0 else Fraction(acc, d0))
        return out

    def __repr__(self):
        return f"RationalGF(num={list(self.num)}, den={list(self.den)})"


def coeff(g: RationalGF, t: int) -> int:
    """Exact coefficient of z^t via the recurrence the denominator induces."""
    if g.den[0] == 0:
        raise ValueError("denominator has a zero constant term")
    if t < 0:
        raise ValueError("t must be non-negative")
    c = g.series(t + 1)[t]
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ArithmeticError(f"coefficient of z^{t} is not an integer: {c}")
        c = c.numerator
    return int(c)


# ---------------------------------------------------------------------------
# 4 x 3t and 5 x 3t
# ---------------------------------------------------------------------------

_FIVE_ROW_DEN = _poly(1, -2, -31, -40, -20)


def closed_form_4x3t(t: int) -> int:
    if t < 2:
        raise ValueError("the 4 x 3t family starts at t = 2")
    return 2 if t == 2 else 8 * 6 ** (t - 3)


def g1() -> RationalGF:
    return RationalGF(_poly(0, 8, 16, 40), _FIVE_ROW_DEN)


def g2() -> RationalGF:
    return RationalGF(_poly(0, 2, 28, 10), _FIVE_ROW_DEN)


def gf_5x3t() -> RationalGF:
    return RationalGF(_poly(0, 0, 72, 240, 360), _FIVE_ROW_DEN)


# ---------------------------------------------------------------------------
# 6 x 6t
# ---------------------------------------------------------------------------

def q_6x6t() -> RationalGF:
    return RationalGF(_poly(0, 0, 384), _poly(1, -144))


def f_6x6t() -> RationalGF:
    return RationalGF(_poly(0, 0, 384, -384 * 96), _poly(1, -144) * _poly(1, -144))


def lower_bound_6x6t(t: int) -> int:
    if t < 2:
        raise ValueError("the 6 x 6t bound needs t >= 2")
    return 128 * (t + 1) * 144 ** (t - 2)


def both_sides(q: RationalGF, c: int, step: int = 1) -> RationalGF:
    """Q^2 / (4 c z^step) + Q: combine one-sided extensions into two-sided ones.

    ``step`` is the power of z that one base block accounts for (1 for the
    6 x 6t family, 2 for 7 x 6t, whose variable advances by z^2 per block).
    """
    if c < 1:
        raise ValueError("c must be a positive integer")
    sq = q * q
    try:
        head = sq.shift(-step)
    except ArithmeticError:
        raise ValueError(f"Q^2 is not divisible by z^{step}") from None
    return (head / (4 * c) + q).reduced()


# ---------------------------------------------------------------------------
# 7 x 6t
# ---------------------------------------------------------------------------

_SYS_DEN = _poly(1, -448, 9216)


@dataclass(frozen=True)
class System7x6t:
    H: RationalGF
    S: RationalGF
    T: RationalGF
    J: RationalGF
    K: RationalGF
    P: RationalGF

    def residuals(self) -> dict:
        """Each defining relation rearranged to (lhs - rhs); all must be zero GFs."""
        z = RationalGF.poly(0, 1)
        H, S, T = self.H, self.S, self.T
        return {
            "H = 16z + S + T/2": H - (RationalGF.poly(0, 16) + S + T / 2),
            "S = 160zS + 128zT + 64zH": S - (z * S * 160 + z * T * 128 + z * H * 64),
            "T = 128zS + 160zT + 128zH": T - (z * S * 128 + z * T * 160 + z * H * 128),
            "J = S/2": self.J - S / 2,
            "K = T/4": self.K - T / 4,
            "P = T/4": self.P - T / 4,
        }


def system_7x6t() -> System7x6t:
    H = RationalGF(_poly(16) * _poly(0, 1) * _poly(1, -32) * _poly(1, -288), _SYS_DEN)
    S = RationalGF(_poly(0, 0, 1024, 1024 * 96), _SYS_DEN)
    T = RationalGF(_poly(0, 0, 2048, -2048 * 96), _SYS_DEN)
    J = RationalGF(_poly(0, 0, 512, 512 * 96), _SYS_DEN)
    K = RationalGF(_poly(0, 0, 512, -512 * 96), _SYS_DEN)
    return System7x6t(H, S, T, J, K, K)


def moore_gfs() -> dict:
    """Generating functions G1' and G3' for the two five-row end patterns."""
    g1p = RationalGF(_poly(0, 4) * _poly(1, 1) * _poly(1, -1, -10), _FIVE_ROW_DEN)
    g3p = RationalGF(_poly(0, 2, 28, 10), _FIVE_ROW_DEN)
    return {"G1p": g1p, "G3p": g3p}


# per-pattern counts of the two R(7,6) base families used as c in both_sides
C1_7X6 = 16
C2_7X6 = 8


@dataclass(frozen=True)
class Family7x6t:
    L: RationalGF
    M: RationalGF
    A: RationalGF
    B: RationalGF
    Q1: RationalGF
    Q2: RationalGF
    F1: RationalGF
    F2: RationalGF
    F: RationalGF


def gf_7x6t() -> Family7x6t:
    """Lower-bound generating function for faultfree tilings of R(7,6t).

    The coefficient of z^(2t) bounds R(7,6t) from below.  The convolutions
    with the five-row functions leave odd powers behind that belong to no
    member of the family; Q1 keeps only the even part.
    """
    sys7 = system_7x6t()
    moore = moore_gfs()
    g1p, g3p = moore["G1p"], moore["G3p"]
    quarter = lambda g: g.scale(Fraction(1, 4)).spread(2)  # noqa: E731  z -> z^2/4
    L = quarter(sys7.J) * ((g1p + g3p * 2).shift(-1) / 4)
    M = quarter(sys7.P) * g3p.shift(-1)
    z3 = RationalGF.poly(0, 0, 0, 1)
    A = z3 * (g3p.scale(2) - g3p.scale(-2)) * 160
    B = z3 * (g1p.scale(2) - g1p.scale(-2)) * 136
    sq = lambda g: g.spread(2)  # noqa: E731
    Q1 = ((L.scale(2) + M.scale(2)).even_part() + sq(sys7.H) + sq(sys7.K) + sq(sys7.S) + sq(sys7.T)) * 2
    Q2 = (A + B) * 2
    F1 = both_sides(Q1, C1_7X6, step=2)
    F2 = both_sides(Q2, C2_7X6, step=2)
    F = F1 + F2
    for name, g in (("Q1", Q1), ("Q2", Q2), ("F", F)):
        for k, c in enumerate(g.series(24)):
            assert not isinstance(c, Fraction), f"{name}: non-integer coefficient at z^{k}"
            assert k % 2 == 0 or c == 0, f"{name}: odd power z^{k} survived"
    return Family7x6t(L, M, A, B, Q1, Q2, F1, F2, F)


# ---------------------------------------------------------------------------
# Domino counts and the tromino upper bound
# ---------------------------------------------------------------------------

class PrecisionError(ArithmeticError):
    pass


def kasteleyn(a: int, b: int, dps: int | None = None) -> int:
    """Domino tilings of R(2a, 2b) from the cosine product, rounded to an integer."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    digits = dps or 30 + 2 * a * b
    for _ in range(4):
        with mpmath.workdps(digits):
            prod = mpmath.mpf(4) ** (a * b)
            for j in range(1, a + 1):
                cj = mpmath.cos(j * mpmath.pi / (2 * a + 1)) ** 2
                for k in range(1, b + 1):
                    prod *= cj + mpmath.cos(k * mpmath.pi / (2 * b + 1)) ** 2
            nearest = mpmath.nint(prod)
            if abs(prod - nearest) <= mpmath.mpf("1e-3"):
                return int(nearest)
        digits *= 2
    raise PrecisionError(f"could not round the product for ({a},{b}) unambiguously")


@dataclass(frozen=True)
class BoundReport:
    m: int
    n: int
    tromino_count: int
    upper_bound: int
    domino_counts: tuple
    holds: bool

    def to_json(self) -> dict:
        return {
            "rows": self.m,
            "cols": self.n,
            "tromino_count": str(self.tromino_count),
            "upper_bound": str(self.upper_bound),
            "domino_counts": [str(x) for x in self.domino_counts],
            "holds": self.holds,
        }


def tromino_upper_bound(m: int, n: int) -> BoundReport:
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    if (m * n) % 3:
        raise ValueError(f"3 does not divide {m}*{n}")
    dom = (count_domino_dp((m, 2 * n)), count_domino_dp((2 * m, n)))
    bound = 2 ** (4 * m * n // 3) * min(dom)
    nt = count_tromino_dp((m, n))
    return BoundReport(m, n, nt, bound, dom, nt <= bound)


# ---------------------------------------------------------------------------
# Family lookup used by the CLI
# ---------------------------------------------------------------------------

FAMILIES = ("4x3t", "5x3t", "6x6t-lower", "7x6t-lower", "upper-bound")


def family_value(family: str, t: int) -> tuple[int, str]:
    """(value, kind) for one member of a named family."""
    if family == "4x3t":
        return closed_form_4x3t(t), "exact"
    if family == "5x3t":
        return coeff(gf_5x3t(), t), "exact"
    if family == "6x6t-lower":
        return lower_bound_6x6t(t), "lower_bound"
    if family == "7x6t-lower":
        return coeff(gf_7x6t().F, 2 * t), "lower_bound"
    if family == "upper-bound":
        # t indexes R(3, t): the smallest height every width admits
        rep = tromino_upper_bound(3, t)
        return rep.upper_bound, "upper_bound"
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
