"""Integer helpers: gcd conventions, totients, orders and q-cyclotomic cosets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InvalidInputError


def gcd_list(values: Iterable[int], m: int) -> int:
    """gcd(m, |v_1|, ..., |v_r|); the empty list and zeros contribute nothing."""
    if m <= 0:
        raise InvalidInputError(f"modulus m={m} must be positive")
    g = m
    for v in values:
        g = math.gcd(g, abs(v))
    return g


def euler_phi(n: int) -> int:
    if n <= 0:
        raise InvalidInputError(f"euler_phi needs n >= 1, got {n}")
    result, k, f = n, n, 2
    while f * f <= k:
        if k % f == 0:
            while k % f == 0:
                k //= f
            result -= result // f
        f += 1
    if k > 1:
        result -= result // k
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _check_coprime(q: int, m: int) -> None:
    if m < 1:
        raise InvalidInputError(f"m={m} must be positive")
    if math.gcd(q, m) != 1:
        raise InvalidInputError(f"gcd(m,q) must be 1 (got m={m}, q={q})")


def multiplicative_order(q: int, m: int) -> int:
    """Least m' >= 1 with q**m' == 1 (mod m)."""
    _check_coprime(q, m)
    if m == 1:
        return 1
    k, acc = 1, q % m
    while acc != 1:
        acc = acc * q % m
        k += 1
    return k


@dataclass(frozen=True)
class CyclotomicCoset:
    """One orbit {i, iq, iq^2, ...} of multiplication by q on Z/m.

    ``members`` lists the orbit starting from ``rep`` (the minimum).
    """

    q: int
    m: int
    rep: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i % self.m in self.members

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.members))) + "}"


def _orbit(q: int, m: int, i: int) -> list[int]:
    out = [i % m]
    nxt = out[0] * q % m
    while nxt != out[0]:
        out.append(nxt)
        nxt = nxt * q % m
    return out


def coset_of(q: int, m: int, i: int) -> CyclotomicCoset:
    _check_coprime(q, m)
    if not 0 <= i < m:
        raise InvalidInputError(f"index {i} outside 0..{m - 1}")
    rep = min(_orbit(q, m, i))
    return CyclotomicCoset(q, m, rep, tuple(_orbit(q, m, rep)))


@lru_cache(maxsize=None)
def _cosets(q: int, m: int) -> tuple[CyclotomicCoset, ...]:
    seen = [False] * m
    out = []
    for i in range(m):
        if not seen[i]:
            members = _orbit(q, m, i)
            for j in members:
                seen[j] = True
            out.append(CyclotomicCoset(q, m, i, tuple(members)))
    return tuple(out)


def cyclotomic_cosets(q: int, m: int) -> list[CyclotomicCoset]:
    """All q-cyclotomic cosets mod m, sorted by representative; {0} first."""
    _check_coprime(q, m)
    return list(_cosets(q, m))
