"""Isomorphism classes of the family indexed by i mod m.

Two reductions generate the classes: F_i ~ F_(i mod m) via
(x, y) -> (x, y/x^a), and F_i ~ F_(m-2-i) via (x, y) -> (1/x, y/x),
which also swaps the roles of P0 and Pinf.  A class is therefore
{c, (m-2-c) mod m} with the representative chosen as min(r, m-2-r),
except the self-contained class m-1 (the hyperelliptic one).

The number of valid indices is

    phi2(m) = 2^max(0, a0-1) * prod p^(a-1) (p - 2)

over the factorization m = 2^a0 * prod p^a, and the class count is
(phi2(m)+1)/2 for m != 0 (mod 4) and (phi2(m)+2)/2 for 4 | m.

Class reports carry the gap-sequence profile at the distinguished
places.  Profiles of different classes are compared up to the
P0 <-> Pinf swap; a collision is reported as such and never promoted to
an isomorphism claim (profiles are a necessary invariant only).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import autgrp, wsemi
from .curve import CurveParams, check_index, is_valid_index
from .ffield import as_odd_prime_power, factorize, field_for_q


def phi2(m: int) -> int:
    """Count of i in {0..m-1} with gcd(i, m) = gcd(i+2, m) = 1."""
    if m < 2:
        raise ValueError("m must be >= 2")
    out = 1
    for p, a in factorize(m).items():
        if p == 2:
            out *= 2 ** max(0, a - 1)
        else:
            out *= p ** (a - 1) * (p - 2)
    return out


def class_count(m: int) -> int:
    """Number of isomorphism classes among the F_i for this m."""
    f = phi2(m)
    return (f + 2) // 2 if m % 4 == 0 else (f + 1) // 2


def valid_indices(m: int) -> list[int]:
    if m < 2:
        raise ValueError("m must be >= 2")
    return [i for i in range(m) if is_valid_index(m, i)]


def canonical_index(i_raw: int, m: int) -> int:
    """Class representative: min(r, m-2-r) for r = i_raw mod m; m-1 fixed."""
    r = i_raw % m
    check_index(m, r)
    if r == m - 1:
        return r
    return min(r, m - 2 - r)


def paper_style_label(c: int, m: int) -> int:
    """The larger member of the class (the labeling used in tables)."""
    if c == m - 1:
        return c
    return max(c, (m - 2 - c) % m)


# ---------------------------------------------------------------------------
# bulk enumeration helpers (vectorized; used by the counting scans)
# ---------------------------------------------------------------------------

def smallest_prime_factors(limit: int) -> np.ndarray:
    """spf[n] = smallest prime factor of n, for 0 <= n <= limit."""
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            s = spf[p::p]
            s[s == 0] = p
    return spf


def _distinct_primes(m: int, spf: np.ndarray | None) -> list[int]:
    primes = []
    if spf is not None:
        while m > 1:
            p = int(spf[m])
            primes.append(p)
            while m % p == 0:
                m //= p
    else:
        primes = list(factorize(m))
    return primes


def valid_index_mask(m: int, spf: np.ndarray | None = None) -> bytearray:
    """Byte mask over {0..m-1}: 1 where both gcd conditions hold.

    Direct enumeration (independent of the phi2 formula): for each prime
    p | m the residues 0 and -2 mod p are struck out.
    """
    mask = bytearray(b"\x01") * m
    zeros = bytes(m)
    for p in _distinct_primes(m, spf):
        mask[0::p] = zeros[: len(range(0, m, p))]
        start = (-2) % p
        if start < m:
            mask[start::p] = zeros[: len(range(start, m, p))]
    return mask


def count_valid_indices(m: int, spf: np.ndarray | None = None) -> int:
    return valid_index_mask(m, spf).count(1)


def pairing_closure_holds(m: int, spf: np.ndarray | None = None) -> bool:
    """i valid iff (m-2-i) mod m valid (closure under the class pairing)."""
    mask = valid_index_mask(m, spf)
    permuted = mask[m - 2 :: -1] + mask[m - 1 :]
    return permuted == mask


def distinct_canonical_count(m: int, spf: np.ndarray | None = None) -> int:
    """|{canonical_index(i, m) : i valid}| by direct enumeration."""
    mask = valid_index_mask(m, spf)
    assert pairing_closure_holds(m, spf)
    # each valid i <= (m-2)/2 is its own canonical value; m-1 is always valid
    return mask[1 : (m - 2) // 2 + 1].count(1) + mask[m - 1]


# ---------------------------------------------------------------------------
# class reports
# ---------------------------------------------------------------------------

@dataclass
class ClassReport:
    canonical: int
    members: list[int]
    paper_label: int
    gaps_p0: tuple[int, ...]
    gaps_pinf: tuple[int, ...]
    gaps_palpha: tuple[int, ...] | None = None
    aut: dict | None = None
    maximal: dict | None = None
    profile_distinct: bool = True
    collisions: list[int] = field(default_factory=list)

    def profile(self):
        # the index pairing swaps P0 and Pinf, so compare unordered
        unordered = frozenset({self.gaps_p0, self.gaps_pinf})
        return (unordered, self.gaps_palpha)

    def to_dict(self) -> dict:
        return {
            "canonical": self.canonical,
            "members": self.members,
            "paper_label": self.paper_label,
            "gaps": {
                "p0": list(self.gaps_p0),
                "pinf": list(self.gaps_pinf),
                "palpha": list(self.gaps_palpha)
                if self.gaps_palpha is not None else None,
            },
            "aut": self.aut,
            "maximal": self.maximal,
            "profile_distinct": self.profile_distinct,
            "collisions": self.collisions,
        }


@dataclass
class Classification:
    m: int
    q: int | None
    phi2: int
    class_count: int
    classes: list[ClassReport]
    field_checks: bool

    def to_dict(self) -> dict:
        out = {
            "m": self.m,
            "phi2": self.phi2,
            "class_count": self.class_count,
            "classes": [c.to_dict() for c in self.classes],
        }
        if self.q is not None:
            out["q"] = self.q
        return out


def classify(m: int, with_field_checks: bool = False, qmax: int = 49,
             workers: int = 1) -> Classification:
    """One report per isomorphism class, in canonical index order."""
    indices = valid_indices(m)
    f2 = phi2(m)
    assert len(indices) == f2
    canonicals = sorted({canonical_index(i, m) for i in indices})
    assert len(canonicals) == class_count(m)

    q = 2 * m - 1
    ph = as_odd_prime_power(q)
    if ph is None:
        if with_field_checks:
            raise ValueError(
                f"m = {m}: 2m-1 = {q} is not an odd prime power, "
                "field checks are impossible"
            )
        q = None
    ctx = field_for_q(q) if (with_field_checks and q) else None

    def build(c: int) -> ClassReport:
        members = sorted({c, (m - 2 - c) % m})
        rep = ClassReport(
            canonical=c,
            members=members,
            paper_label=paper_style_label(c, m),
            gaps_p0=wsemi.gaps_closed_form(m, c, "p0").gaps,
            gaps_pinf=wsemi.gaps_closed_form(m, c, "pinf").gaps,
        )
        if q is not None:
            rep.aut = autgrp.aut_descriptor(c, q).to_dict()
        if ctx is not None:
            params = CurveParams.for_q(q, c)
            rep.gaps_palpha = wsemi.series_gap_oracle(params, ctx, "+").gaps
            if q <= qmax:
                from .curve import hasse_weil_count, rational_place_count
                places = rational_place_count(params, ctx)
                bound = hasse_weil_count(q, m - 1)
                rep.maximal = {"places": places, "bound": bound,
                               "attained": places == bound}
        return rep

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(build, canonicals))
    else:
        reports = [build(c) for c in canonicals]

    profiles = [r.profile() for r in reports]
    for me, rep in enumerate(reports):
        hits = [reports[j].canonical for j in range(len(reports))
                if j != me and profiles[j] == profiles[me]]
        rep.collisions = hits
        rep.profile_distinct = not hits

    return Classification(m=m, q=q, phi2=f2, class_count=len(reports),
                          classes=reports, field_checks=ctx is not None)
