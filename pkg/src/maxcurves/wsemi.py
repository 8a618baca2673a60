"""Weierstrass semigroups and gap sequences at the distinguished places.

Closed forms (valid for every valid (m, i)):

    H(P0)   = < m,  ceil(l(i+2)/m)*m - l*i      :  1 <= l <= m-1 >
    H(Pinf) = < m, -floor(l*i/m)*m + l*(i+2)    :  1 <= l <= m-1 >

where the non-m generators form an Apéry set with respect to m.  A
smaller generating set for H(Pinf) is

    < m, i+2,  m*l - (i+2)*floor((l-2)m/i)  :  3 <= l <= i+1 >.

Gap sequences come from the holomorphic differentials x^(k-1) y^(l-m) dx:
over the lattice of curve.lattice_pairs,

    G(P0)   = { km + li - mi },     G(Pinf) = { m(i+2) - km - l(i+2) }.

At P+-a the same differentials show that l is a gap whenever the closed
interval [i(m-l)/m, (i+2)(m-l)/m] contains an integer (neither endpoint
ever is one), which always covers 1..floor((m+1)/2) but is only a subset
of the full gap sequence.  The authoritative method at P+-a is a local
power-series oracle: y is a uniformizer t there, x expands as a series
in t via the fixed-point iteration x <- r + t^m / (x^i (x + r)) with
x(0) = r the relevant root of x^2 + 1, and the orders of vanishing of
the holomorphic differential space are read off as the pivot columns of
the row-reduced coefficient matrix; gaps are the pivots + 1.

A second, independent oracle enumerates monomials x^k y^l with poles
only at P0 (resp. Pinf) and collects their pole orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import CurveParams, check_index, lattice_pairs
from .ffield import FieldCtx
from .numsg import NumericalSemigroup


class PrecisionError(RuntimeError):
    """The series oracle failed to reach full rank at maximum precision."""


@dataclass(frozen=True)
class GapSequence:
    place: str            # "p0" | "pinf" | "palpha"
    m: int
    i: int
    gaps: tuple[int, ...]

    def __len__(self):
        return len(self.gaps)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def p0_generators(m: int, i: int) -> list[int]:
    check_index(m, i)
    return [m] + [-(l * (i + 2) // -m) * m - l * i for l in range(1, m)]


def pinf_generators(m: int, i: int) -> list[int]:
    check_index(m, i)
    return [m] + [-(l * i // m) * m + l * (i + 2) for l in range(1, m)]


def pinf_compact_generators(m: int, i: int) -> list[int]:
    check_index(m, i)
    gens = [m, i + 2]
    gens += [m * l - (i + 2) * ((l - 2) * m // i) for l in range(3, i + 2)]
    return sorted(set(gens))


def h_p0(m: int, i: int) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(p0_generators(m, i), m)


def h_pinf(m: int, i: int) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(pinf_generators(m, i), m)


def h_pinf_compact(m: int, i: int) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(pinf_compact_generators(m, i), m)


def gaps_closed_form(m: int, i: int, place: str) -> GapSequence:
    """Gap sequence at P0 or Pinf from the differential lattice."""
    if place not in ("p0", "pinf"):
        raise ValueError(f"closed-form gaps exist for p0/pinf, not {place!r}")
    pairs = lattice_pairs(m, i)
    if place == "p0":
        vals = {k * m + l * i - m * i for k, l in pairs}
    else:
        vals = {m * (i + 2) - k * m - l * (i + 2) for k, l in pairs}
    assert len(vals) == m - 1
    return GapSequence(place=place, m=m, i=i, gaps=tuple(sorted(vals)))


def interval_gap_subset(m: int, i: int) -> set[int]:
    """Gaps at P+-a certified by the interval criterion (a subset).

    l in (0, m) qualifies when [i(m-l)/m, (i+2)(m-l)/m] contains an
    integer; endpoints are never integral under the gcd conditions.
    """
    check_index(m, i)
    out = set()
    for l in range(1, m):
        lo = i * (m - l)
        hi = (i + 2) * (m - l)
        assert lo % m != 0 and hi % m != 0
        if lo // m + 1 <= hi // m:
            out.add(l)
    return out


def special_semigroups(m: int, i: int) -> NumericalSemigroup | None:
    """Known special-shape semigroups for i = 1 and i = (m-2)/2.

    i = 1:          H(Pinf) = <3, m>  (and P0, P+-a share one gap set,
                    see special_i1_gap_set).
    i = (m-2)/2     (requires 4 | m): all four distinguished places have
                    the single semigroup <m/2+1, m/2+3, m-3, m-1, m>.
    """
    check_index(m, i)
    if i == 1:
        return NumericalSemigroup.from_generators([3, m], m)
    if m % 4 == 0 and i == (m - 2) // 2:
        gens = sorted({m // 2 + 1, m // 2 + 3, m - 3, m - 1, m})
        return NumericalSemigroup.from_generators(gens, m)
    return None


def special_i1_gap_set(m: int) -> set[int]:
    """The common gap set of P0 and P+-a when i = 1."""
    return set(range(1, 2 * m // 3 + 1)) | set(range(m + 1, m + m // 3 + 1))


# ---------------------------------------------------------------------------
# monomial pole-order oracle (independent of the generator theorem)
# ---------------------------------------------------------------------------

def monomial_pole_orders(m: int, i: int, place: str, bound: int) -> set[int]:
    """All pole orders at P0/Pinf of monomials x^k y^l up to `bound`.

    Only monomials with 0 <= l <= m-1 and no pole at the other three
    distinguished places are admitted.  Valuations: v_P0 = km + li,
    v_Pinf = -(km + l(i+2)), v_P+-a = l.
    """
    check_index(m, i)
    if bound < 2 * m:
        raise ValueError("bound must be at least 2m")
    orders = {0}
    if place == "p0":
        for l in range(m):
            # no pole at Pinf: km + l(i+2) <= 0
            k_hi = -(l * (i + 2)) // m if l else 0
            k = k_hi
            while True:
                order = -(k * m + l * i)
                if order > bound:
                    break
                if order >= 0:
                    orders.add(order)
                k -= 1
    elif place == "pinf":
        for l in range(m):
            # no pole at P0: km + li >= 0
            k_lo = -(-(l * i) // -m) if l else 0  # ceil(-li/m)
            k = k_lo
            while True:
                order = k * m + l * (i + 2)
                if order > bound:
                    break
                if order >= 0:
                    orders.add(order)
                k += 1
    else:
        raise ValueError(f"monomial oracle covers p0/pinf, not {place!r}")
    return orders


# ---------------------------------------------------------------------------
# power-series machinery over GF(q^2)  (lists of codes, index = exponent)
# ---------------------------------------------------------------------------

def _ser_mul(a, b, prec, ctx):
    zc = ctx.zcode
    out = [zc] * prec
    for e, ae in enumerate(a):
        if ae == zc or e >= prec:
            continue
        top = min(len(b), prec - e)
        for j in range(top):
            bj = b[j]
            if bj == zc:
                continue
            out[e + j] = ctx.add(out[e + j], (ae + bj) % ctx.n)
    return out


def _ser_pow(a, e, prec, ctx):
    result = [ctx.zcode] * prec
    result[0] = 0  # the constant 1
    acc = list(a)
    while e:
        if e & 1:
            result = _ser_mul(result, acc, prec, ctx)
        e >>= 1
        if e:
            acc = _ser_mul(acc, acc, prec, ctx)
    return result


def _ser_inv(a, prec, ctx):
    zc = ctx.zcode
    if a[0] == zc:
        raise ZeroDivisionError("series has positive valuation")
    inv0 = ctx.inv(a[0])
    nz = [j for j in range(1, min(len(a), prec)) if a[j] != zc]
    out = [zc] * prec
    out[0] = inv0
    for e in range(1, prec):
        s = zc
        for j in nz:
            if j > e:
                break
            v = out[e - j]
            if v != zc:
                s = ctx.add(s, (a[j] + v) % ctx.n)
        if s != zc:
            out[e] = ctx.neg((inv0 + s) % ctx.n)
    return out


def _ser_diff(a, ctx):
    zc = ctx.zcode
    p = ctx.p
    out = [zc] * len(a)
    for e in range(1, len(a)):
        c = e % p
        if c and a[e] != zc:
            out[e - 1] = (ctx.scalar(c) + a[e]) % ctx.n
    return out


@dataclass
class LocalExpansion:
    """Truncated expansions at P+a or P-a in the uniformizer t = y."""

    m: int
    i: int
    sign: str                 # "+" or "-"
    prec: int
    x: list                   # codes, x as a series in t
    dxdt: list                # codes, dx/dt as a series in t
    ctx: FieldCtx

    def curve_residual(self) -> bool:
        """True when y^m - x^i (x^2+1) vanishes mod t^prec."""
        ctx, prec = self.ctx, self.prec
        zc = ctx.zcode
        xsq1 = _ser_mul(self.x, self.x, prec, ctx)
        xsq1[0] = ctx.add(xsq1[0], 0)  # + 1
        rhs = _ser_mul(_ser_pow(self.x, self.i, prec, ctx), xsq1, prec, ctx)
        lhs = [zc] * prec
        if self.m < prec:
            lhs[self.m] = 0  # t^m
        diff = [ctx.sub(u, v) for u, v in zip(lhs, rhs)]
        return all(c == zc for c in diff)

    def x_shift_valuation(self) -> int:
        """Valuation of x - r at the place (must equal m)."""
        ctx = self.ctx
        root = ctx.alpha_code if self.sign == "+" else ctx.neg(ctx.alpha_code)
        shifted = list(self.x)
        shifted[0] = ctx.sub(shifted[0], root)
        for e, c in enumerate(shifted):
            if c != ctx.zcode:
                return e
        return self.prec


def local_expansion(params: CurveParams, ctx: FieldCtx, sign: str = "+",
                    prec: int | None = None) -> LocalExpansion:
    """Expand x (and dx/dt) at P+a / P-a to `prec` coefficients.

    Fixed-point iteration x <- r + t^m / (x^i (x + r)); every round adds
    m correct coefficients, so ceil(prec/m) + 2 rounds are run.
    """
    m, i = params.m, params.i
    if prec is None:
        prec = 2 * m
    zc = ctx.zcode
    root = ctx.alpha_code if sign == "+" else ctx.neg(ctx.alpha_code)
    rounds = -(prec // -m) + 2
    x = [zc] * prec
    x[0] = root
    for _ in range(rounds):
        den = _ser_mul(_ser_pow(x, i, prec, ctx),
                       [ctx.add(x[0], root)] + x[1:], prec, ctx)
        inv = _ser_inv(den, prec, ctx)
        nxt = [zc] * prec
        nxt[0] = root
        for e in range(m, prec):
            nxt[e] = inv[e - m]
        x = nxt
    return LocalExpansion(m=m, i=i, sign=sign, prec=prec, x=x,
                          dxdt=_ser_diff(x, ctx), ctx=ctx)


# ---------------------------------------------------------------------------
# exact row reduction over GF(q^2)
# ---------------------------------------------------------------------------

def row_reduce_pivots(rows: list[list[int]], ctx: FieldCtx) -> list[int]:
    """Gaussian elimination in place; returns the pivot column indices.

    Pivoting is leftmost-nonzero with row swaps; arithmetic is exact.
    """
    zc = ctx.zcode
    n = ctx.n
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for j in range(r, nrows):
            if rows[j][c] != zc:
                pr = j
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        pinv = ctx.inv(piv[c])
        nz = [(e, piv[e]) for e in range(c, ncols) if piv[e] != zc]
        for j in range(r + 1, nrows):
            f = rows[j][c]
            if f == zc:
                continue
            fac = (f + pinv) % n
            rowj = rows[j]
            for e, v in nz:
                rowj[e] = ctx.sub(rowj[e], (fac + v) % n)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def series_gap_oracle(params: CurveParams, ctx: FieldCtx,
                      sign: str = "+") -> GapSequence:
    """Gap sequence at P+a or P-a via local expansion of the differentials.

    Each holomorphic differential x^(k-1) t^(l-m) dx contributes the row
    of t-coefficients of its /dt form; after row reduction the pivot
    columns c are the attained vanishing orders and {c+1} are the gaps.
    Rank short of m-1 doubles the precision, up to three retries.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    m, i = params.m, params.i
    zc = ctx.zcode
    prec = 2 * m
    for _ in range(4):
        work = prec + m  # rows stay exact through column prec-1
        exp = local_expansion(params, ctx, sign, prec=work)
        pairs = sorted(lattice_pairs(m, i), key=lambda kl: kl[0])
        rows = []
        w = exp.dxdt  # x^(k-1) * dx/dt, advanced incrementally in k
        cur_k = 1
        for k, l in pairs:
            while cur_k < k:
                w = _ser_mul(w, exp.x, work, ctx)
                cur_k += 1
            shift = m - l
            row = [zc] * prec
            for e in range(shift, min(work, prec + shift)):
                if w[e] != zc:
                    row[e - shift] = w[e]
            rows.append(row)
        pivots = row_reduce_pivots(rows, ctx)
        if len(pivots) == m - 1:
            return GapSequence(place="palpha", m=m, i=i,
                               gaps=tuple(sorted(c + 1 for c in pivots)))
        prec *= 2
    raise PrecisionError(
        f"series oracle rank short of {m - 1} at precision {prec}"
    )
