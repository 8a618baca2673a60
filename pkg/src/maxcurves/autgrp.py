"""Executable rational maps between family members, verified pointwise.

Every map displayed in the classification arguments is realized as a
pair of rational functions in (x, y) with GF(q^2) coefficients and
checked by exact evaluation on affine curve points:

    reduction      F_i -> F_(i mod m):   (x, y) -> (x, y / x^a)
    index pairing  F_(m-2-i) -> F_i:     (x, y) -> (1/x, y/x)
    hyperelliptic  F_(m-1) -> R:         (x, y) ->
                      ((y+2x) / (2(y-2x)), (x^(m+1)-x^(m-1)) / (y-2x)^m)
                      with R: Y^2 = X^q + X
    order-4        sigma4 on F_((m-2)/2), 4 | m:
                      x -> alpha (x - alpha)/(x + alpha),
                      y -> 4 beta y^((m-2)/2) / (x^((m-4)/4) (x + alpha))
    translation    gamma on F_1, p = 3:  (x, y) -> (x + alpha, y)

plus the cyclic group G_i = {(x, y) -> (ax, by)} of order q+1, where
a^2 = 1 and b^m = 1 (i even) or b^m = a (i odd), with index-2 subgroup
H_i (a = 1).

The automorphism-group descriptor per (i, q) follows the established
case split: Aut = G_i generically; exceptions at (i, q) = (1, 3)
(elliptic, infinite), (i, p) = (1, 3) with q > 3 (order 3(q+1)),
(i, q) = (1, 7) (order 96), i = (m-2)/2 (contains G_i x| C4, full order
conjectural), and i = m-1 (hyperelliptic, order 2q(q^2-1)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve import CurveParams, check_index
from .ffield import FieldCtx

INF = "inf"  # point at infinity marker for projective x-line evaluation


# ---------------------------------------------------------------------------
# automorphism-group descriptors
# ---------------------------------------------------------------------------

def gi_order(q: int) -> int:
    """Order of the diagonal cyclic subgroup G_i."""
    return q + 1


@dataclass(frozen=True)
class AutDescriptor:
    order: int | None          # None means infinite
    label: str
    conjectural: bool = False

    def to_dict(self) -> dict:
        return {
            "order": "infinite" if self.order is None else self.order,
            "label": self.label,
            "conjectural": self.conjectural,
        }


def aut_descriptor(i: int, q: int) -> AutDescriptor:
    """Automorphism-group descriptor of F_i over the algebraic closure."""
    m = (q + 1) // 2
    r = i % m
    check_index(m, r)
    qq = q
    while qq % 3 == 0:
        qq //= 3
    p3 = qq == 1  # q a power of 3
    c = r if r == m - 1 else min(r, m - 2 - r)

    if c == 1 and q == 3:
        # genus one: infinitely many automorphisms
        return AutDescriptor(order=None, label="infinite (elliptic)")
    if c == m - 1:
        return AutDescriptor(order=2 * q * (q * q - 1),
                             label="hyperelliptic: PGL(2,q) extension by C2")
    if c == 1 and q == 7:
        return AutDescriptor(order=96, label="order 96: solvable(48) x| C2")
    if c == 1 and p3:
        return AutDescriptor(order=3 * (q + 1), label="C3 x| G_i")
    if m % 4 == 0 and c == (m - 2) // 2:
        return AutDescriptor(order=4 * (q + 1), label="contains G_i x| C4",
                             conjectural=True)
    return AutDescriptor(order=q + 1, label="G_i (cyclic)")


# ---------------------------------------------------------------------------
# rational maps as pairs of bivariate polynomial fractions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalFunc:
    """num/den, each a dict {(deg_x, deg_y): coefficient code}."""

    num: dict
    den: dict

    def eval(self, ctx: FieldCtx, xc: int, yc: int) -> int:
        nv = _poly_eval(self.num, ctx, xc, yc)
        dv = _poly_eval(self.den, ctx, xc, yc)
        if dv == ctx.zcode:
            raise ZeroDivisionError("denominator vanishes at the point")
        return ctx.div(nv, dv)


def _poly_eval(terms: dict, ctx: FieldCtx, xc: int, yc: int) -> int:
    zc = ctx.zcode
    acc = zc
    for (dx, dy), coef in terms.items():
        if coef == zc:
            continue
        if (dx and xc == zc) or (dy and yc == zc):
            continue
        t = coef
        if dx:
            t = (t + dx * xc) % ctx.n
        if dy:
            t = (t + dy * yc) % ctx.n
        acc = ctx.add(acc, t)
    return acc


@dataclass(frozen=True)
class CurveSpec:
    """Target/source equation: the family curve y^m = x^e (x^2+1),
    or the hyperelliptic model y^2 = x^q + x."""

    kind: str        # "family" | "hyperelliptic"
    m: int
    e: int           # exponent of x (family); q (hyperelliptic)

    def satisfied(self, ctx: FieldCtx, xc: int, yc: int) -> bool:
        zc = ctx.zcode
        if self.kind == "family":
            lhs = ctx.power(yc, self.m) if yc != zc else zc
            if xc == zc:
                rhs = zc
            else:
                x2p1 = ctx.add((2 * xc) % ctx.n, 0)
                rhs = zc if x2p1 == zc else ((self.e * xc) % ctx.n + x2p1) % ctx.n
        else:
            lhs = ctx.power(yc, 2) if yc != zc else zc
            if xc == zc:
                rhs = zc
            else:
                rhs = ctx.add(ctx.power(xc, self.e), xc)
        return lhs == rhs


@dataclass(frozen=True)
class RationalMap:
    name: str
    source: CurveSpec
    target: CurveSpec
    fx: RationalFunc
    fy: RationalFunc

    def apply(self, ctx: FieldCtx, xc: int, yc: int) -> tuple[int, int]:
        return self.fx.eval(ctx, xc, yc), self.fy.eval(ctx, xc, yc)


def _one_term(ctx, dx, dy, coef_code=None):
    return {(dx, dy): 0 if coef_code is None else coef_code}


def reduction_map(ctx: FieldCtx, m: int, i_raw: int) -> RationalMap:
    """F_(i_raw) -> F_(i_raw mod m): (x, y) -> (x, y/x^a)."""
    r = i_raw % m
    a = (i_raw - r) // m
    check_index(m, r)
    src = CurveSpec("family", m, i_raw)
    tgt = CurveSpec("family", m, r)
    fx = RationalFunc(_one_term(ctx, 1, 0), _one_term(ctx, 0, 0))
    if a >= 0:
        fy = RationalFunc(_one_term(ctx, 0, 1), _one_term(ctx, a, 0))
    else:
        fy = RationalFunc(_one_term(ctx, -a, 1), _one_term(ctx, 0, 0))
    return RationalMap(f"reduce[{i_raw}->{r}]", src, tgt, fx, fy)


def reduction_map_inverse(ctx: FieldCtx, m: int, i_raw: int) -> RationalMap:
    """F_(i_raw mod m) -> F_(i_raw): (x, y) -> (x, y x^a)."""
    r = i_raw % m
    a = (i_raw - r) // m
    src = CurveSpec("family", m, r)
    tgt = CurveSpec("family", m, i_raw)
    fx = RationalFunc(_one_term(ctx, 1, 0), _one_term(ctx, 0, 0))
    if a >= 0:
        fy = RationalFunc(_one_term(ctx, a, 1), _one_term(ctx, 0, 0))
    else:
        fy = RationalFunc(_one_term(ctx, 0, 1), _one_term(ctx, -a, 0))
    return RationalMap(f"reduce-inv[{r}->{i_raw}]", src, tgt, fx, fy)


def pairing_map(ctx: FieldCtx, m: int, i: int) -> RationalMap:
    """F_j -> F_i for j = (m-2-i) mod m: (x, y) -> (1/x, y/x^c).

    c = (i + j + 2)/m, which is 1 in the generic case 1 <= i <= m-3 and
    2 for the self-paired index i = j = m-1.
    """
    check_index(m, i)
    j = (m - 2 - i) % m
    c = (i + j + 2) // m
    assert (i + j + 2) % m == 0
    src = CurveSpec("family", m, j)
    tgt = CurveSpec("family", m, i)
    fx = RationalFunc(_one_term(ctx, 0, 0), _one_term(ctx, 1, 0))
    fy = RationalFunc(_one_term(ctx, 0, 1), _one_term(ctx, c, 0))
    return RationalMap(f"pair[{j}->{i}]", src, tgt, fx, fy)


def hyperelliptic_map(ctx: FieldCtx) -> RationalMap:
    """F_(m-1) -> (Y^2 = X^q + X), the genus-preserving birational map."""
    q = ctx.q
    m = (q + 1) // 2
    two = ctx.scalar(2)
    four = ctx.scalar(4)
    n2 = ctx.neg(two)
    src = CurveSpec("family", m, m - 1)
    tgt = CurveSpec("hyperelliptic", 2, q)
    # X = (y + 2x) / (2(y - 2x))
    fx = RationalFunc(
        num={(0, 1): 0, (1, 0): two},
        den={(0, 1): two, (1, 0): ctx.neg(four)},
    )
    # Y = (x^(m+1) - x^(m-1)) / (y - 2x)^m
    den = _binomial_expand(ctx, m, n2)
    fy = RationalFunc(
        num={(m + 1, 0): 0, (m - 1, 0): ctx.neg(0)},
        den=den,
    )
    return RationalMap("hyperelliptic", src, tgt, fx, fy)


def _binomial_expand(ctx: FieldCtx, m: int, cx_code: int) -> dict:
    """(y + c x)^m as {(dx, dy): code} with c given by cx_code."""
    terms = {}
    binom = 1
    for k in range(m + 1):
        coef = (binom % ctx.p)
        if coef:
            code = ctx.scalar(coef)
            code = (code + k * cx_code) % ctx.n if k else code
            terms[(k, m - k)] = code
        binom = binom * (m - k) // (k + 1)
    return terms


def sigma4_map(ctx: FieldCtx, params: CurveParams) -> RationalMap:
    """The order-four automorphism of F_((m-2)/2), m = 0 (mod 4)."""
    m = params.m
    if m % 4 != 0 or params.i != (m - 2) // 2:
        raise ValueError("sigma4 exists for i = (m-2)/2 with 4 | m")
    al = ctx.alpha_code
    be = ctx.beta_code
    four_beta = (ctx.scalar(4) + be) % ctx.n
    spec = CurveSpec("family", m, params.i)
    # x -> alpha (x - alpha) / (x + alpha)
    fx = RationalFunc(
        num={(1, 0): al, (0, 0): ctx.neg((2 * al) % ctx.n)},
        den={(1, 0): 0, (0, 0): al},
    )
    # y -> 4 beta y^((m-2)/2) / (x^((m-4)/4) (x + alpha))
    e = (m - 4) // 4
    fy = RationalFunc(
        num={(0, (m - 2) // 2): four_beta},
        den={(e + 1, 0): 0, (e, 0): al},
    )
    return RationalMap("sigma4", spec, spec, fx, fy)


def gamma_map(ctx: FieldCtx) -> RationalMap:
    """(x, y) -> (x + alpha, y) on F_1 in characteristic three."""
    if ctx.p != 3:
        raise ValueError("gamma is an automorphism only for p = 3")
    m = (ctx.q + 1) // 2
    spec = CurveSpec("family", m, 1)
    fx = RationalFunc({(1, 0): 0, (0, 0): ctx.alpha_code}, _one_term(ctx, 0, 0))
    fy = RationalFunc(_one_term(ctx, 0, 1), _one_term(ctx, 0, 0))
    return RationalMap("gamma", spec, spec, fx, fy)


def gi_elements(ctx: FieldCtx, params: CurveParams) -> list[tuple[int, int]]:
    """All q+1 diagonal automorphisms (a, b) of F_i as code pairs."""
    m, i = params.m, params.i
    out = []
    for a in (ctx.scalar(1), ctx.scalar(-1)):
        target = 0 if i % 2 == 0 else a  # b^m = 1 (i even) or a (i odd)
        out.extend((a, b) for b in ctx.nth_roots(target, m))
    assert len(out) == ctx.q + 1
    return out


# ---------------------------------------------------------------------------
# pointwise verification
# ---------------------------------------------------------------------------

def curve_points(spec: CurveSpec, ctx: FieldCtx, limit: int):
    """Deterministic affine sample: x in field order, y roots in order.

    Skips x in {0, alpha, -alpha} (the totally ramified fibres for the
    family) and yields at most `limit` points.
    """
    produced = 0
    zc = ctx.zcode
    skip = {zc, ctx.alpha_code, ctx.neg(ctx.alpha_code)}
    for elem in ctx.elements():
        xc = elem.code
        if xc in skip:
            continue
        if spec.kind == "family":
            x2p1 = ctx.add((2 * xc) % ctx.n, 0)
            rhs = ((spec.e * xc) % ctx.n + x2p1) % ctx.n
            roots = ctx.nth_roots(rhs, spec.m)
        else:
            rhs = ctx.add(ctx.power(xc, spec.e), xc)
            roots = ctx.nth_roots(rhs, 2) if rhs != zc else [zc]
        for yc in roots:
            yield xc, yc
            produced += 1
            if produced >= limit:
                return


@dataclass
class MapReport:
    name: str
    points_checked: int = 0
    failures: int = 0
    skipped: int = 0
    first_failure: dict | None = None
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.points_checked > 0

    def to_dict(self) -> dict:
        out = {
            "map": self.name,
            "points_checked": self.points_checked,
            "failures": self.failures,
            "skipped": self.skipped,
            "ok": self.ok,
        }
        if self.first_failure:
            out["first_failure"] = self.first_failure
        out.update(self.extra)
        return out


def verify_map(m: RationalMap, ctx: FieldCtx, samples: int = 100) -> MapReport:
    """Check that sampled source points land on the target curve."""
    rep = MapReport(name=m.name)
    for xc, yc in curve_points(m.source, ctx, samples):
        try:
            xi, yi = m.apply(ctx, xc, yc)
        except ZeroDivisionError:
            rep.skipped += 1
            continue
        rep.points_checked += 1
        if not m.target.satisfied(ctx, xi, yi):
            rep.failures += 1
            if rep.first_failure is None:
                rep.first_failure = {
                    "x": list(ctx.decode(xc)), "y": list(ctx.decode(yc)),
                    "image_x": list(ctx.decode(xi)),
                    "image_y": list(ctx.decode(yi)),
                }
    if rep.points_checked == 0:
        raise ValueError(f"{m.name}: no evaluable sample points")
    return rep


def verify_inverse_pair(fwd: RationalMap, inv: RationalMap, ctx: FieldCtx,
                        samples: int = 100) -> MapReport:
    """fwd then inv must act as the identity on sampled points."""
    rep = MapReport(name=f"{fwd.name} o {inv.name} = id")
    for xc, yc in curve_points(fwd.source, ctx, samples):
        try:
            mid = fwd.apply(ctx, xc, yc)
            back = inv.apply(ctx, *mid)
        except ZeroDivisionError:
            rep.skipped += 1
            continue
        rep.points_checked += 1
        if back != (xc, yc):
            rep.failures += 1
            if rep.first_failure is None:
                rep.first_failure = {"x": list(ctx.decode(xc)),
                                     "y": list(ctx.decode(yc))}
    return rep


def mobius_on_line(ctx: FieldCtx, a, b, c, d, x):
    """Evaluate (a x + b)/(c x + d) on the projective x-line.

    `x` is a code or INF; returns a code or INF.
    """
    zc = ctx.zcode
    if x == INF:
        if c == zc:
            return INF
        return ctx.div(a, c)
    num = ctx.add(ctx.mul(a, x), b)
    den = ctx.add(ctx.mul(c, x), d)
    if den == zc:
        return INF
    return ctx.div(num, den)


def verify_sigma4(params: CurveParams, ctx: FieldCtx,
                  samples: int = 100) -> MapReport:
    """sigma4 is an automorphism of order four cycling the four places.

    (a) sampled curve points map to curve points;
    (b) four applications give the identity and two do not;
    (c) the induced Moebius action on x permutes {0, -alpha, inf, alpha}
        as the 4-cycle P0 -> P-a -> Pinf -> P+a -> P0.
    """
    sig = sigma4_map(ctx, params)
    rep = verify_map(sig, ctx, samples)
    order4 = True
    some_sigma2_moves = False
    checked = 0
    for xc, yc in curve_points(sig.source, ctx, samples):
        pt = (xc, yc)
        try:
            p1 = sig.apply(ctx, *pt)
            p2 = sig.apply(ctx, *p1)
            p3 = sig.apply(ctx, *p2)
            p4 = sig.apply(ctx, *p3)
        except ZeroDivisionError:
            continue
        checked += 1
        if p4 != pt:
            order4 = False
        if p2 != pt:
            some_sigma2_moves = True
    al = ctx.alpha_code
    zc = ctx.zcode
    a, b = al, ctx.neg(ctx.power(al, 2))  # alpha x - alpha^2
    c, d = 0, al                          # x + alpha
    cycle = {}
    names = {zc: "P0", ctx.neg(al): "P-a", INF: "Pinf", al: "P+a"}
    for x0 in (zc, ctx.neg(al), INF, al):
        cycle[names[x0]] = names[mobius_on_line(ctx, a, b, c, d, x0)]
    cycle_ok = cycle == {"P0": "P-a", "P-a": "Pinf", "Pinf": "P+a",
                         "P+a": "P0"}
    rep.extra = {
        "order4": order4 and some_sigma2_moves,
        "order_checked_points": checked,
        "omega_cycle": cycle,
        "omega_cycle_ok": cycle_ok,
    }
    if not (order4 and some_sigma2_moves and cycle_ok):
        rep.failures += 1
    return rep


def gi_action_check(params: CurveParams, ctx: FieldCtx,
                    samples: int = 25) -> MapReport:
    """Enumerate G_i and verify every element preserves the curve."""
    rep = MapReport(name=f"G_i[q={ctx.q}, i={params.i}]")
    elems = gi_elements(ctx, params)
    pts = list(curve_points(CurveSpec("family", params.m, params.i),
                            ctx, samples))
    spec = CurveSpec("family", params.m, params.i)
    bad = 0
    for a, b in elems:
        for xc, yc in pts:
            xi = ctx.mul(a, xc)
            yi = ctx.mul(b, yc)
            rep.points_checked += 1
            if not spec.satisfied(ctx, xi, yi):
                bad += 1
                rep.failures += 1
                if rep.first_failure is None:
                    rep.first_failure = {"a": list(ctx.decode(a)),
                                         "b": list(ctx.decode(b))}
                break
    h_size = sum(1 for a, _ in elems if a == ctx.scalar(1))
    rep.extra = {
        "group_order": len(elems),
        "h_subgroup_order": h_size,
        "h_index2": 2 * h_size == len(elems),
    }
    return rep


def verify_gamma(ctx: FieldCtx, samples: int = 100) -> MapReport:
    """gamma (p=3, i=1) preserves the curve and has order three."""
    g = gamma_map(ctx)
    rep = verify_map(g, ctx, samples)
    order3 = True
    for xc, yc in curve_points(g.source, ctx, samples):
        p1 = g.apply(ctx, xc, yc)
        p2 = g.apply(ctx, *p1)
        p3 = g.apply(ctx, *p2)
        if p3 != (xc, yc) or p1 == (xc, yc):
            order3 = False
    rep.extra = {"order3": order3}
    if not order3:
        rep.failures += 1
    return rep
