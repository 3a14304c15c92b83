"""Seeded generator of small random code descriptions for property tests."""

from __future__ import annotations

import random

from qcweights.code import GEN, ConstituentSpec, QccSpec
from qcweights.fields import MAX_DEGREE, MAX_FIELD_SIZE, prime_power
from qcweights.numth import cyclotomic_cosets, multiplicative_order

QS = (2, 3, 4, 5)
MAX_WORDS = 1 << 14


def _admissible(q: int, m: int) -> bool:
    p, e = prime_power(q)
    if m < 3 or m % p == 0:
        return False
    mp = multiplicative_order(q, m)
    return e * mp <= MAX_DEGREE and q ** mp <= MAX_FIELD_SIZE


def _entry(rng: random.Random, q: int, m: int):
    r = rng.random()
    if r < 0.3:
        return ()
    if r < 0.6:
        return GEN
    if r < 0.75:
        return (1,)
    deg = rng.randrange(min(m, 4))
    return tuple(rng.randrange(q) for _ in range(deg)) + (rng.randrange(1, q),)


def random_spec(rng: random.Random) -> QccSpec:
    while True:
        q = rng.choice(QS)
        m = rng.randrange(3, 31)
        if not _admissible(q, m):
            continue
        l = rng.choice((2, 3))
        cosets = cyclotomic_cosets(q, m)
        rng.shuffle(cosets := list(cosets))
        budget = MAX_WORDS
        blocks = []
        for c in cosets[: rng.randint(1, 3)]:
            nrows = rng.choice((1, 1, 1, 2))
            if q ** (c.size * nrows) > budget:
                continue
            budget //= q ** (c.size * nrows)
            rows = tuple(tuple(_entry(rng, q, m) for _ in range(l)) for _ in range(nrows))
            rep = rng.choice(c.members)
            blocks.append(ConstituentSpec(rep, rows))
        if blocks:
            return QccSpec(q, m, l, tuple(blocks))


def random_specs(seed: int, count: int) -> list[QccSpec]:
    rng = random.Random(seed)
    return [random_spec(rng) for _ in range(count)]
