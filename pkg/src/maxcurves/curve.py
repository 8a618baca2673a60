"""The curve family y^m = x^i (x^2 + 1) over GF(q^2), m = (q+1)/2.

Validity of an index i requires gcd(i, m) = gcd(i+2, m) = 1; every valid
member has genus m - 1.  The distinguished degree-one places are

    P0     the unique zero of x          (totally ramified)
    Pinf   the unique pole of x          (totally ramified)
    P+a,P-a  the zeros of x^2 + 1, x = alpha and x = -alpha

with principal divisors

    (x)  = m P0 - m Pinf
    (y)  = i P0 + P+a + P-a - (i+2) Pinf
    (dx) = -(m+1) Pinf + (m-1) (P0 + P+a + P-a)

and monomial valuations v(x^k y^l) = km + li at P0, -(km + l(i+2)) at
Pinf, and l at P+-a.  The holomorphic differentials x^(k-1) y^(l-m) dx
correspond to the lattice points strictly inside the triangle with
vertices (i, 0), (i+2, 0), (0, m); there are exactly m - 1 of them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .ffield import FieldCtx, FieldElem, as_odd_prime_power, is_prime


class InvalidIndexError(ValueError):
    """The index i violates a gcd validity condition of the family."""


class Place(enum.Enum):
    P0 = "p0"
    PINF = "pinf"
    PALPHA_PLUS = "palpha+"
    PALPHA_MINUS = "palpha-"

    def __repr__(self):
        return self.value


DISTINGUISHED = (Place.P0, Place.PINF, Place.PALPHA_PLUS, Place.PALPHA_MINUS)


@dataclass(frozen=True)
class AffinePlace:
    """A degree-one place (x, y) = (a, b) with a not in {0, alpha, -alpha}."""

    x: FieldElem
    y: FieldElem


class Divisor(dict):
    """Finite formal sum of places with integer coefficients."""

    def degree(self) -> int:
        return sum(self.values())


def check_index(m: int, i: int) -> None:
    """Raise InvalidIndexError unless gcd(i, m) = gcd(i+2, m) = 1."""
    d = math.gcd(i % m, m)
    if d != 1:
        raise InvalidIndexError(f"gcd(i, m) = gcd({i}, {m}) = {d} != 1")
    d = math.gcd((i + 2) % m, m)
    if d != 1:
        raise InvalidIndexError(f"gcd(i+2, m) = gcd({i + 2}, {m}) = {d} != 1")


def is_valid_index(m: int, i: int) -> bool:
    return math.gcd(i % m, m) == 1 and math.gcd((i + 2) % m, m) == 1


@dataclass(frozen=True)
class CurveParams:
    """One validated member of the family."""

    p: int
    h: int
    q: int
    m: int
    i: int       # normalized to {0, ..., m-1}
    i_raw: int   # as supplied, kept for reporting
    genus: int

    @classmethod
    def create(cls, p: int, h: int, i_raw: int) -> "CurveParams":
        if p == 2 or not is_prime(p):
            raise ValueError(f"p = {p} is not an odd prime")
        if h < 1:
            raise ValueError("h must be >= 1")
        q = p**h
        m = (q + 1) // 2
        i = i_raw % m
        check_index(m, i)
        return cls(p=p, h=h, q=q, m=m, i=i, i_raw=i_raw, genus=m - 1)

    @classmethod
    def for_q(cls, q: int, i_raw: int) -> "CurveParams":
        ph = as_odd_prime_power(q)
        if ph is None:
            raise ValueError(f"q = {q} is not an odd prime power")
        return cls.create(*ph, i_raw)

    def to_dict(self) -> dict:
        return {"p": self.p, "h": self.h, "q": self.q, "m": self.m,
                "i": self.i, "genus": self.genus}


def divisor_of(params: CurveParams, symbol: str) -> Divisor:
    """Principal divisor of x, y, or the differential dx."""
    m, i = params.m, params.i
    if symbol == "x":
        return Divisor({Place.P0: m, Place.PINF: -m})
    if symbol == "y":
        return Divisor({Place.P0: i, Place.PALPHA_PLUS: 1,
                        Place.PALPHA_MINUS: 1, Place.PINF: -(i + 2)})
    if symbol == "dx":
        return Divisor({Place.PINF: -(m + 1), Place.P0: m - 1,
                        Place.PALPHA_PLUS: m - 1, Place.PALPHA_MINUS: m - 1})
    raise ValueError(f"unknown symbol {symbol!r}; expected x, y or dx")


def monomial_valuation(params: CurveParams, place: Place, k: int, l: int) -> int:
    """Valuation of x^k y^l at a distinguished place."""
    m, i = params.m, params.i
    if place is Place.P0:
        return k * m + l * i
    if place is Place.PINF:
        return -(k * m + l * (i + 2))
    return l


def lattice_pairs(m: int, i: int) -> list[tuple[int, int]]:
    """Integer pairs (k, l) with l > 0, km + li > mi, km + l(i+2) < m(i+2).

    These index the holomorphic differentials x^(k-1) y^(l-m) dx; there
    are exactly m - 1 pairs.  Both bounding lines miss the integers for
    0 < l < m thanks to the gcd conditions.
    """
    check_index(m, i)
    pairs = []
    for l in range(1, m):
        lo = i * (m - l)
        hi = (i + 2) * (m - l)
        assert lo % m != 0 and hi % m != 0
        for k in range(lo // m + 1, hi // m + 1):
            pairs.append((k, l))
    return pairs


def holomorphic_basis(params: CurveParams) -> list[tuple[int, int]]:
    return lattice_pairs(params.m, params.i)


def rational_place_count(params: CurveParams, ctx: FieldCtx,
                         exponent: int | None = None) -> int:
    """Number of degree-one places, by exhaustive x-enumeration.

    For each a outside {0, alpha, -alpha} the fibre of y^m = a^e (a^2+1)
    has m points when the right side is an m-th power and is empty
    otherwise; the four totally ramified places contribute one each.
    """
    if ctx.q != params.q:
        raise ValueError("field context does not match the parameters")
    m = params.m
    e = params.i if exponent is None else exponent
    n = ctx.n
    zc = ctx.zcode
    count = 4
    for a in range(n):
        a2 = ctx.add((2 * a) % n, 0)  # a^2 + 1  (code 0 is the element 1)
        if a2 == zc:
            continue  # a = +-alpha
        rhs = ((e * a) % n + a2) % n
        if rhs % m == 0:  # rhs^((q^2-1)/m) = 1: an m-th power
            count += m
    return count


def hasse_weil_count(q: int, genus: int) -> int:
    """The upper bound q^2 + 1 + 2gq attained by a maximal function field."""
    return q * q + 1 + 2 * genus * q
