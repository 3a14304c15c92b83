"""Closed-form orbit counts for simple-root quasi-cyclic codes.

Each constituent enters through three integers: its coset representative
``i``, the coset size ``k`` and its F_q-dimension ``K``.  All arithmetic is
exact; a count that is not an integer raises instead of being rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import InvalidInputError, TheoremNotApplicableError
from .numth import divisors, euler_phi, gcd_list, multiplicative_order

MAX_CONSTITUENTS = 20


@dataclass(frozen=True)
class ConstituentArith:
    i: int
    k: int
    K: int

    def check(self, m: int, q: int) -> None:
        if self.k < 1 or self.K < 0 or self.K % self.k:
            raise InvalidInputError(f"{self}: K must be a multiple of k >= 1")
        if (self.i * (q ** self.k - 1)) % m:
            raise InvalidInputError(f"{self}: m={m} does not divide i*(q^k - 1)")
        if multiplicative_order(q, m) % self.k:
            raise InvalidInputError(f"{self}: k does not divide the order of q mod m")


def _exact(num: int, den: int, what: str) -> int:
    if den == 0 or num % den:
        raise InvalidInputError(f"{what}: {num}/{den} is not an integer")
    return num // den


def _subsets(items: Sequence[ConstituentArith]):
    if not 1 <= len(items) <= MAX_CONSTITUENTS:
        raise InvalidInputError(f"need 1..{MAX_CONSTITUENTS} constituents, got {len(items)}")
    for u in range(1, len(items) + 1):
        yield from combinations(items, u)


# -- single constituent ---------------------------------------------------------

def bound_single_shift(m: int, i: int, K: int, q: int) -> int:
    """Orbits of <rho^l> on C*: gcd(m, i)(q^K - 1)/m."""
    return _exact(gcd_list([i], m) * (q ** K - 1), m, "shift orbit count")


def bound_single_shift_scalar(m: int, i: int, K: int, q: int) -> int:
    """Orbits of <rho^l, M> on C*: gcd(m, (q-1)i)(q^K - 1)/(m(q-1))."""
    return _exact(gcd_list([(q - 1) * i], m) * (q ** K - 1), m * (q - 1), "shift-scalar orbit count")


def bound_single_full(q: int, k: int, i: int, m: int) -> int:
    """Orbits of <mu_q, rho^l, M> on a one-generator constituent of dimension k."""
    top = q ** k - 1
    if (i * top) % m:
        raise InvalidInputError(f"m={m} does not divide i*(q^k - 1) for i={i}, k={k}")
    a, b = top // (q - 1), i * top // m
    total = sum(euler_phi(k // r) * math.gcd(q ** r - 1, a, b) for r in divisors(k))
    return _exact(total, k, "full orbit count")


# -- Theorems: sums over nonempty subsets of constituents ----------------------

def bound_theorem1(constituents: Sequence[ConstituentArith], m: int, q: int) -> int:
    total = 0
    for sub in _subsets(constituents):
        prod = math.prod(q ** c.K - 1 for c in sub)
        total += _exact(gcd_list([c.i for c in sub], m) * prod, m, "shift subset term")
    return total


def _theorem2_term(sub: Sequence[ConstituentArith], m: int, q: int) -> int:
    prod = math.prod(q ** c.K - 1 for c in sub)
    extra = math.gcd(q - 1, *(m // gcd_list([c.i], m) for c in sub))
    return _exact(gcd_list([c.i for c in sub], m) * prod * extra, m * (q - 1), "shift-scalar subset term")


def bound_theorem2(constituents: Sequence[ConstituentArith], m: int, q: int) -> int:
    return sum(_theorem2_term(sub, m, q) for sub in _subsets(constituents))


def shift_scalar_subset_stabilizer(sub: Sequence[ConstituentArith], m: int, q: int) -> int:
    """|{(r, a) : rho^(lr) sigma_a fixes a word nonzero exactly on ``sub``}|.

    The shift acts on constituent v as multiplication by zeta^(i_v), so r
    qualifies iff every zeta^(i_v r) is one and the same element of F_q*:
    m | (q-1) i_v r for all v and m | (i_v - i_1) r for all v.
    """
    first = sub[0].i
    return gcd_list([(q - 1) * c.i for c in sub] + [c.i - first for c in sub[1:]], m)


def shift_scalar_orbit_count(constituents: Sequence[ConstituentArith], m: int, q: int) -> int:
    """Exact number of <rho^l, M>-orbits on C*, by the free-action stabilizer count.

    Agrees with :func:`bound_theorem2` for one constituent and whenever the
    per-constituent conditions are compatible, but is smaller when the F_q*
    scalars that each constituent admits cannot be matched by a common shift.
    """
    total = 0
    for sub in _subsets(constituents):
        prod = math.prod(q ** c.K - 1 for c in sub)
        total += _exact(shift_scalar_subset_stabilizer(sub, m, q) * prod, m * (q - 1), "shift-scalar orbit term")
    return total


def corollary1(t1: ConstituentArith, t2: ConstituentArith, m: int, q: int) -> int:
    """Theorem 1 written out for two constituents."""
    a, b = q ** t1.K - 1, q ** t2.K - 1
    return (
        _exact(gcd_list([t1.i, t2.i], m) * a * b, m, "pair term")
        + _exact(gcd_list([t1.i], m) * a, m, "single term")
        + _exact(gcd_list([t2.i], m) * b, m, "single term")
    )


def corollary2(t1: ConstituentArith, t2: ConstituentArith, m: int, q: int) -> int:
    """Theorem 2 written out for two constituents."""
    a, b = q ** t1.K - 1, q ** t2.K - 1
    g1, g2 = gcd_list([t1.i], m), gcd_list([t2.i], m)
    return (
        _exact(gcd_list([t1.i, t2.i], m) * a * b * math.gcd(q - 1, m // g1, m // g2), m * (q - 1), "pair term")
        + _exact(g1 * a * math.gcd(q - 1, m // g1), m * (q - 1), "single term")
        + _exact(g2 * b * math.gcd(q - 1, m // g2), m * (q - 1), "single term")
    )


def _check_one_generator(constituents: Sequence[ConstituentArith]) -> None:
    for c in constituents:
        if c.K != c.k:
            raise TheoremNotApplicableError(
                f"constituent i={c.i} has dimension {c.K}, the full-group count needs K == k = {c.k}"
            )


def theorem3_subset_term(sub: Sequence[ConstituentArith], m: int, q: int) -> Fraction:
    """N_{j1..ju}: the contribution of one nonempty subset, as an exact fraction."""
    mp = multiplicative_order(q, m)
    big_i = q - 1
    total = 0
    for r in range(mp):
        gs = [math.gcd(c.k, r) for c in sub]
        parts = [(q ** c.k - 1) // (q ** g - 1) for c, g in zip(sub, gs)]
        args = [c.i * big_i * p // math.gcd(big_i, p) for c, p in zip(sub, parts)]
        for (a, pa), (b, pb) in combinations(list(zip(sub, parts)), 2):
            args.append((b.i - a.i) * pa * pb // math.gcd(pa, pb))
        total += (
            gcd_list(args, m)
            * math.gcd(big_i, *parts)
            * math.prod(q ** g - 1 for g in gs)
        )
    return Fraction(total, mp * m * (q - 1))


def bound_theorem3(constituents: Sequence[ConstituentArith], m: int, q: int) -> int:
    """Orbit count of <mu_q, rho^l, M> for one-generator codes of the {0, f} form."""
    _check_one_generator(constituents)
    total = Fraction(0)
    for sub in _subsets(constituents):
        total += theorem3_subset_term(sub, m, q)
    if total.denominator != 1:
        raise InvalidInputError(f"full-group formula evaluates to non-integer {total}")
    return int(total)


def corollary3_pair_term(t1: ConstituentArith, t2: ConstituentArith, m: int, q: int) -> int:
    """The mixed term s_{t1,t2} for two constituents with k_{t1} | k_{t2}."""
    if t1 == t2 or (t1.i == t2.i):
        raise TheoremNotApplicableError("the two constituents must be distinct")
    if t2.k % t1.k:
        raise TheoremNotApplicableError(f"k_t1={t1.k} does not divide k_t2={t2.k}")
    _check_one_generator([t1, t2])
    mp = multiplicative_order(q, m)
    a1, a2 = q ** t1.k - 1, q ** t2.k - 1
    total = 0
    for r in range(mp):
        e1 = q ** math.gcd(t1.k, r) - 1
        e2 = q ** math.gcd(t2.k, r) - 1
        inner = math.gcd(
            e2,
            _exact(a1 * e2, (q - 1) * e1, "pair term"),
            abs(_exact(t1.i * a1 * e2, m * e1, "pair term")),
            abs(_exact(t2.i * a2, m, "pair term")),
        )
        total += math.gcd(e1 * inner, abs(_exact((t2.i - t1.i) * a1 * a2, m * (q - 1), "pair term")))
    return _exact(total, mp, "pair term")


def corollary3(t1: ConstituentArith, t2: ConstituentArith, m: int, q: int) -> int:
    return (
        bound_single_full(q, t1.k, t1.i, m)
        + bound_single_full(q, t2.k, t2.i, m)
        + corollary3_pair_term(t1, t2, m, q)
    )


@dataclass
class BoundReport:
    """Formula values, brute-force counts and tightness verdicts for one code."""

    formulas: dict[str, int | None] = field(default_factory=dict)
    orbit_counts: dict[str, int] = field(default_factory=dict)
    s: int | None = None
    tightness: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
