"""Exact arithmetic in GF(q^2), q = p^h an odd prime power.

The field GF(q^2) = GF(p)[t]/(f) is built from the lexicographically
smallest monic irreducible f of degree 2h over GF(p).  Elements are
coefficient vectors (c0, c1, ..., c_{2h-1}) with c0 the constant term;
the iteration order of the field is the lexicographic order of these
vectors, which gives a canonical meaning to "the first element such
that P holds".

Internally every nonzero element is stored as its discrete logarithm
with respect to a fixed multiplicative generator g (the first one in
iteration order).  With n = q^2 - 1:

    code(x) = k  where  x = g^k,  0 <= k < n;   code(0) = n (sentinel)

Multiplication and inversion are then single modular additions, and
addition uses the Zech logarithm table Z with g^Z[k] = 1 + g^k.  This
keeps scans (point counting, power-series expansion, row reduction)
exact and fast without any big-integer or floating-point arithmetic.

Two distinguished constants are precomputed: alpha with alpha^2 = -1
(exists since 4 | q^2-1) and beta with beta^2 = alpha (exists since
8 | q^2-1); both are the lexicographically first root of their
defining equation.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

DEFAULT_MAX_ORDER = 1 << 20  # largest allowed field size q^2


# ---------------------------------------------------------------------------
# integer helpers
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (desk-scale n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int, limit: int = 10**6) -> dict[int, int]:
    """Prime factorization by trial division; rejects n > limit."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n > limit:
        raise ValueError(f"{n} exceeds the factorization limit {limit}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def as_odd_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, h) with q = p^h, p an odd prime, or None."""
    if q < 3 or q % 2 == 0:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    (p, h), = fac.items()
    return p, h


def odd_prime_powers(qmax: int, qmin: int = 3) -> list[int]:
    """All odd prime powers q with qmin <= q <= qmax, ascending."""
    return [q for q in range(qmin, qmax + 1) if as_odd_prime_power(q)]


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p)  (little-endian coefficient lists)
# ---------------------------------------------------------------------------

def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(df):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    while len(a) > df:
        a.pop()
    while len(a) < df:
        a.append(0)
    return a


def _ppowmod(base, e, f, p):
    result = [1] + [0] * (len(f) - 2)
    acc = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, acc, p), f, p)
        acc = _pmod(_pmul(acc, acc, p), f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = list(a), list(b)

    def deg(u):
        d = len(u) - 1
        while d >= 0 and u[d] == 0:
            d -= 1
        return d

    while True:
        db = deg(b)
        if db < 0:
            return a
        da = deg(a)
        while da >= db:
            c = a[da] * pow(b[db], -1, p) % p
            for j in range(db + 1):
                a[da - db + j] = (a[da - db + j] - c * b[j]) % p
            da = deg(a)
        a, b = b, a


def _psub(a, b, p):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
            for i in range(n)]


def _is_irreducible(f, p):
    """f monic of degree d over GF(p); Rabin's test."""
    d = len(f) - 1
    x = [0, 1]
    xq = _ppowmod(x, p**d, f, p)
    if _pmod(_psub(xq, x, p), f, p) != [0] * d:
        return False
    for r in factorize(d):
        xe = _ppowmod(x, p ** (d // r), f, p)
        g = [c % p for c in _pgcd(_psub(xe, x, p), f, p)]
        dg = len(g) - 1
        while dg >= 0 and g[dg] == 0:
            dg -= 1
        if dg != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# the field context
# ---------------------------------------------------------------------------

class FieldElem:
    """An element of GF(q^2), wrapping its discrete-log code.

    Supports +, -, *, /, **, unary -, ==, and lexicographic < on
    coefficient vectors.  Integers coerce via the prime subfield.
    """

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: "FieldCtx", code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.decode(self.code)

    def is_zero(self) -> bool:
        return self.code == self.ctx.zcode

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise ValueError("elements from different field contexts")
            return other.code
        if isinstance(other, int):
            return self.ctx.scalar(other)
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.div(self.code, c))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.div(c, self.code))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.power(self.code, e))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == self.ctx.scalar(other)
        return (
            isinstance(other, FieldElem)
            and other.ctx is self.ctx
            and other.code == self.code
        )

    def __hash__(self):
        return hash((id(self.ctx), self.code))

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def __repr__(self):
        return f"FieldElem{list(self.coeffs)}"


class FieldCtx:
    """GF(q^2) with log/Zech tables; immutable after construction."""

    def __init__(self, p: int, h: int, max_order: int = DEFAULT_MAX_ORDER):
        if not is_prime(p) or p == 2:
            raise ValueError(f"p = {p} is not an odd prime")
        if h < 1:
            raise ValueError("h must be >= 1")
        self.p = p
        self.h = h
        self.q = p**h
        self.order = p ** (2 * h)
        if self.order > max_order:
            raise ValueError(
                f"field size {self.order} exceeds the configured bound {max_order}"
            )
        self.deg = 2 * h
        self.n = self.order - 1  # size of the multiplicative group
        self.zcode = self.n  # sentinel code for 0
        self.irreducible = self._find_irreducible()
        self._build_tables()
        self._scalar_codes = [self.code_from_coeffs(self._const(c))
                              for c in range(p)]
        self.alpha_code = self._find_alpha()
        self.beta_code = self._find_beta()

    # -- construction ------------------------------------------------------

    def _const(self, c):
        return tuple([c % self.p] + [0] * (self.deg - 1))

    def _find_irreducible(self) -> tuple[int, ...]:
        p, d = self.p, self.deg
        for tail in itertools.product(range(p), repeat=d):
            f = list(tail) + [1]
            if _is_irreducible(f, p):
                return tuple(f)
        raise AssertionError("no irreducible polynomial found")

    def _pack(self, coeffs) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def _build_tables(self):
        p, n = self.p, self.n
        f = list(self.irreducible)
        nfac = factorize(n)
        gen = None
        for tail in itertools.product(range(p), repeat=self.deg):
            if not any(tail):
                continue
            cand = list(tail)
            if all(_ppowmod(cand, n // r, f, p) != [1] + [0] * (self.deg - 1)
                   for r in nfac):
                gen = cand
                break
        assert gen is not None
        self.generator = tuple(gen)

        exp = [0] * n  # code -> packed coefficient vector
        log: dict[int, int] = {}  # packed -> code
        val = [1] + [0] * (self.deg - 1)
        for k in range(n):
            packed = self._pack(val)
            exp[k] = packed
            log[packed] = k
            val = _pmod(_pmul(val, gen, p), f, p)
        assert val == [1] + [0] * (self.deg - 1)
        self._exp = exp
        self._log = log

        # Zech logarithms: zech[k] = code(1 + g^k), zcode when 1 + g^k = 0
        zech = [0] * n
        for k in range(n):
            w = exp[k]
            c0 = w % p
            w1 = w + 1 if c0 != p - 1 else w - (p - 1)
            zech[k] = log[w1] if w1 else self.zcode
        self._zech = zech

    def _find_alpha(self) -> int:
        # roots of x^2 + 1: order-4 codes n/4 and 3n/4 (8 | n for odd q)
        a, b = self.n // 4, 3 * self.n // 4
        return a if self.decode(a) < self.decode(b) else b

    def _find_beta(self) -> int:
        a = self.alpha_code
        assert a % 2 == 0
        r1 = a // 2
        r2 = (r1 + self.n // 2) % self.n
        return r1 if self.decode(r1) < self.decode(r2) else r2

    # -- code-level arithmetic --------------------------------------------

    def decode(self, code: int) -> tuple[int, ...]:
        if code == self.zcode:
            return tuple([0] * self.deg)
        v = self._exp[code]
        out = []
        for _ in range(self.deg):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def code_from_coeffs(self, coeffs) -> int:
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.deg:
            raise ValueError(f"expected {self.deg} coefficients")
        packed = self._pack(coeffs)
        if packed == 0:
            return self.zcode
        return self._log[packed]

    def scalar(self, c: int) -> int:
        return self._scalar_codes[c % self.p]

    def mul(self, a: int, b: int) -> int:
        if a == self.zcode or b == self.zcode:
            return self.zcode
        return (a + b) % self.n

    def add(self, a: int, b: int) -> int:
        if a == self.zcode:
            return b
        if b == self.zcode:
            return a
        z = self._zech[(b - a) % self.n]
        if z == self.zcode:
            return self.zcode
        return (a + z) % self.n

    def neg(self, a: int) -> int:
        if a == self.zcode:
            return a
        return (a + self.n // 2) % self.n

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == self.zcode:
            raise ZeroDivisionError("inverse of zero")
        return (-a) % self.n

    def div(self, a: int, b: int) -> int:
        if b == self.zcode:
            raise ZeroDivisionError("division by zero")
        if a == self.zcode:
            return a
        return (a - b) % self.n

    def power(self, a: int, e: int) -> int:
        if a == self.zcode:
            if e == 0:
                raise ValueError("0**0 is undefined")
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return a
        return (a * e) % self.n

    def frobenius(self, a: int) -> int:
        """x -> x^q, the generator of Gal(GF(q^2)/GF(q))."""
        return self.power(a, self.q)

    # -- element-level API --------------------------------------------------

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, self.zcode)

    @property
    def one(self) -> FieldElem:
        return FieldElem(self, 0)

    @property
    def alpha(self) -> FieldElem:
        return FieldElem(self, self.alpha_code)

    @property
    def beta(self) -> FieldElem:
        return FieldElem(self, self.beta_code)

    def element(self, value) -> FieldElem:
        """Build an element from an int (prime subfield) or coefficients."""
        if isinstance(value, FieldElem):
            if value.ctx is not self:
                raise ValueError("element from a different context")
            return value
        if isinstance(value, int):
            return FieldElem(self, self.scalar(value))
        return FieldElem(self, self.code_from_coeffs(tuple(value)))

    def elements(self):
        """All field elements in lexicographic coefficient order."""
        for coeffs in itertools.product(range(self.p), repeat=self.deg):
            yield FieldElem(self, self.code_from_coeffs(coeffs))

    def is_nth_power(self, c: FieldElem, n: int) -> bool:
        """True iff c^((q^2-1)/n) = 1; then y^n = c has exactly n roots."""
        if c.is_zero():
            raise ValueError("zero is excluded; handle it separately")
        if self.n % n != 0:
            raise ValueError(f"{n} does not divide q^2 - 1 = {self.n}")
        # c^(n'/n) = 1 iff n divides log(c)
        return c.code % n == 0

    def sqrt(self, c: FieldElem) -> FieldElem | None:
        """A square root of c (the first in iteration order), or None."""
        if c.is_zero():
            return self.zero
        if c.code % 2 != 0:
            return None
        r1 = c.code // 2
        r2 = (r1 + self.n // 2) % self.n
        return FieldElem(self, r1 if self.decode(r1) < self.decode(r2) else r2)

    def nth_roots(self, c_code: int, n: int) -> list[int]:
        """Codes of all y with y^n = c, sorted in element iteration order."""
        if c_code == self.zcode:
            return [self.zcode]
        if self.n % n != 0:
            raise ValueError(f"{n} does not divide q^2 - 1")
        if c_code % n != 0:
            return []
        step = self.n // n
        base = c_code // n
        roots = [(base + j * step) % self.n for j in range(n)]
        roots.sort(key=self.decode)
        return roots

    def describe(self) -> dict:
        """JSON-embeddable field description for reproducibility."""
        return {
            "p": self.p,
            "h": self.h,
            "q": self.q,
            "order": self.order,
            "irreducible": list(self.irreducible),
            "alpha": list(self.decode(self.alpha_code)),
            "beta": list(self.decode(self.beta_code)),
        }

    def __repr__(self):
        return f"FieldCtx(p={self.p}, h={self.h}, |F|={self.order})"


@lru_cache(maxsize=16)
def field_make(p: int, h: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldCtx:
    """Construct (and cache) GF(p^(2h)); deterministic across runs."""
    return FieldCtx(p, h, max_order)


def field_for_q(q: int, max_order: int = DEFAULT_MAX_ORDER) -> FieldCtx:
    """GF(q^2) for an odd prime power q."""
    ph = as_odd_prime_power(q)
    if ph is None:
        raise ValueError(f"q = {q} is not an odd prime power")
    return field_make(*ph, max_order=max_order)
