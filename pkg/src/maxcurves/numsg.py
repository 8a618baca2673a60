"""Numerical semigroups in Apéry-set form.

A numerical semigroup S (cofinite submonoid of Z>=0, gcd of generators 1)
containing a chosen base m is stored as its Apéry array:

    apery[r] = least element of S congruent to r (mod m),   apery[0] = 0.

Membership is then O(1):  n in S  iff  n >= 0 and n >= apery[n mod m];
the genus (number of gaps) is sum(apery[r] // m) and the Frobenius
number is max(apery) - m.

Construction from a generating set is a shortest-path computation on the
cyclic graph Z/mZ with one weight-g edge family per generator g: the
least element in each residue class is the shortest distance from 0.
Each generator is relaxed exactly once along its gcd(g, m) cycles (two
laps per cycle), which is exact because a minimal representation can be
ordered generator by generator.  When the input already supplies one
candidate per residue class, a subadditivity check

    apery[(r + s) mod m] <= apery[r] + apery[s]   for all r, s

certifies the array directly (vectorized with numpy), which keeps large
scans cheap.
"""

from __future__ import annotations

import math

import numpy as np

_BIG = 1 << 50  # "infinity"; generator values are validated well below this
_MAX_GEN = 1 << 40
_NUMPY_MIN_M = 128  # below this, plain-python relaxation wins


def _relax_cycles_python(apery: list[int], g: int, m: int) -> None:
    d = math.gcd(g, m)
    L = m // d
    for start in range(d):
        r = start
        best = _BIG
        for _ in range(2 * L):
            v = apery[r]
            if v < best:
                best = v
            apery[r] = best
            best += g
            r = (r + g) % m


def _relax_cycles_numpy(apery: np.ndarray, g: int, m: int) -> None:
    d = math.gcd(g, m)
    L = m // d
    starts = np.arange(d, dtype=np.int64)[:, None]
    idx = (starts + g * np.arange(2 * L, dtype=np.int64)[None, :]) % m
    steps = g * np.arange(2 * L, dtype=np.int64)
    c = apery[idx] - steps
    np.minimum.accumulate(c, axis=1, out=c)
    v = c + steps
    apery[idx[:, L:]] = v[:, L:]


def _pairwise_index(m: int) -> np.ndarray:
    r = np.arange(m, dtype=np.int64)
    return (r[:, None] + r[None, :]) % m


class NumericalSemigroup:
    """Immutable numerical semigroup; equality is set equality."""

    __slots__ = ("base", "apery", "generators")

    def __init__(self, base: int, apery: tuple[int, ...],
                 generators: tuple[int, ...]):
        self.base = base
        self.apery = apery
        self.generators = generators

    # -- construction --------------------------------------------------------

    @classmethod
    def from_generators(cls, gens, modulus: int) -> "NumericalSemigroup":
        """Semigroup generated by `gens`; `modulus` must be a member.

        Raises ValueError on an empty generator list, gcd != 1, values
        out of range, or when the modulus is not in the semigroup.
        """
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise ValueError("empty generator list")
        if gens[0] <= 0:
            raise ValueError("generators must be positive")
        if gens[-1] >= _MAX_GEN:
            raise ValueError(f"generator {gens[-1]} out of supported range")
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        g0 = 0
        for g in gens:
            g0 = math.gcd(g0, g)
        if g0 != 1:
            raise ValueError(f"gcd of generators is {g0}, not 1")

        m = modulus
        apery = cls._build_apery(gens, m)

        # the modulus is a member iff it is the least positive element
        # of the class of 0
        min0 = min(apery[(-g) % m] + g for g in gens)
        if min0 != m:
            raise ValueError(
                f"modulus {m} is not in the semigroup "
                f"(least positive multiple present: {min0})"
            )
        return cls(m, tuple(apery), tuple(gens))

    @staticmethod
    def _build_apery(gens: list[int], m: int) -> list[int]:
        # fast path: one candidate per class and already subadditive
        cand = [_BIG] * m
        cand[0] = 0
        for g in gens:
            r = g % m
            if r and g < cand[r]:
                cand[r] = g
        if _BIG not in cand:
            if m >= _NUMPY_MIN_M:
                a = np.asarray(cand, dtype=np.int64)
                s = a[:, None] + a[None, :]
                if bool((a[_pairwise_index(m)] <= s).all()):
                    return cand
            else:
                ok = all(
                    cand[(r + s) % m] <= cand[r] + cand[s]
                    for r in range(1, m)
                    for s in range(r, m)
                )
                if ok:
                    return cand

        # general path: relax each generator once, in order
        if m >= _NUMPY_MIN_M:
            a = np.full(m, _BIG, dtype=np.int64)
            a[0] = 0
            for g in gens:
                _relax_cycles_numpy(a, g, m)
            apery = [int(v) for v in a]
        else:
            apery = [_BIG] * m
            apery[0] = 0
            for g in gens:
                _relax_cycles_python(apery, g, m)
        if max(apery) >= _BIG:
            raise AssertionError("unreachable residue class despite gcd 1")
        return apery

    # -- queries --------------------------------------------------------------

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.apery[n % self.base]

    contains = __contains__

    @property
    def genus(self) -> int:
        return sum(a // self.base for a in self.apery)

    @property
    def frobenius(self) -> int:
        """Largest gap; -1 for the full semigroup Z>=0."""
        return max(self.apery) - self.base

    def gaps(self) -> list[int]:
        out = []
        for r in range(1, self.base):
            out.extend(range(r, self.apery[r], self.base))
        out.sort()
        return out

    def apery_set(self, base: int | None = None) -> list[int]:
        """Least member of each residue class mod `base`, indexed by residue.

        `base` must be a positive member (defaults to the stored base).
        """
        if base is None or base == self.base:
            return list(self.apery)
        if base <= 0 or base not in self:
            raise ValueError(f"{base} is not a positive member")
        out = [-1] * base
        out[0] = 0
        remaining = base - 1
        n = 0
        stop = self.frobenius + 1 + base
        while remaining and n <= stop:
            n += 1
            r = n % base
            if out[r] < 0 and n in self:
                out[r] = n
                remaining -= 1
        assert not remaining
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        if self.base == other.base:
            return self.apery == other.apery
        b = math.lcm(self.base, other.base)
        return self.apery_set(b) == other.apery_set(b)

    def __hash__(self):
        return hash((self.base, self.apery))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"NumericalSemigroup<{gens}>"
