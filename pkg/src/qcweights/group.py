"""Automorphisms rho^l, sigma_a and mu_q acting on enumerated codewords.

Every group element is written in the normal form mu_q^r1 rho^(l*r2) sigma_a.
On coordinates it sends (i, j) to (q^r1 * (i + r2) mod m, j) and multiplies
the value by a, so each element is a permutation plus one scalar.

rho^l is multiplication by x in every slot: the coefficient at row i moves to
row i+1.  The shift displayed in the literature moves rows the other way;
both generate the same cyclic group, so orbit counts are unaffected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

import numpy as np

from .code import QuasiCyclicCode
from .errors import GroupNotApplicableError, InternalError, InvalidInputError
from .fields import FieldSpec
from .numth import multiplicative_order


class GroupKind(str, Enum):
    SHIFT = "shift"
    SHIFT_SCALAR = "shift-scalar"
    FULL = "full"


@dataclass(frozen=True)
class GroupElement:
    r1: int = 0
    r2: int = 0
    a: int = 1


def group_order(kind: GroupKind, q: int, m: int) -> int:
    if kind is GroupKind.SHIFT:
        return m
    if kind is GroupKind.SHIFT_SCALAR:
        return m * (q - 1)
    return multiplicative_order(q, m) * m * (q - 1)


def group_elements(kind: GroupKind, q: int, m: int) -> Iterator[GroupElement]:
    """All elements in normal form; scalars are encoded F_q elements."""
    r1_range = range(multiplicative_order(q, m)) if kind is GroupKind.FULL else range(1)
    scalars = range(1, q) if kind is not GroupKind.SHIFT else range(1, 2)
    for r1 in r1_range:
        for r2 in range(m):
            for a in scalars:
                yield GroupElement(r1, r2, a)


def coordinate_map(g: GroupElement, q: int, m: int, l: int) -> np.ndarray:
    """dest[k] = position that coordinate k is sent to."""
    qr = pow(q, g.r1, m) if m > 1 else 0
    i = np.repeat(np.arange(m), l)
    j = np.tile(np.arange(l), m)
    return ((qr * (i + g.r2)) % m) * l + j


def source_map(g: GroupElement, q: int, m: int, l: int) -> np.ndarray:
    """src with g(c)[k] == a * c[src[k]]."""
    dest = coordinate_map(g, q, m, l)
    src = np.empty_like(dest)
    src[dest] = np.arange(dest.size)
    return src


def apply_element(g: GroupElement, c: Sequence[int], f: FieldSpec, m: int, l: int) -> tuple[int, ...]:
    if g.a == 0:
        raise InvalidInputError("scalar must be nonzero")
    src = source_map(g, f.size, m, l)
    return tuple(f.mul(g.a, int(c[s])) for s in src)


def apply_rho_l(c: Sequence[int], m: int, l: int) -> tuple[int, ...]:
    """Multiply every slot by x: coordinate (i, j) moves to (i+1 mod m, j)."""
    if len(c) != m * l:
        raise InvalidInputError(f"codeword length {len(c)} != {m * l}")
    return tuple(c[(k - l) % (m * l)] for k in range(m * l))


def apply_sigma(a: int, c: Sequence[int], f: FieldSpec) -> tuple[int, ...]:
    if a == 0:
        raise InvalidInputError("sigma_a needs a nonzero scalar")
    return tuple(f.mul(a, x) for x in c)


def apply_mu_q(c: Sequence[int], q: int, m: int, l: int) -> tuple[int, ...]:
    """x -> x^q in every slot: coordinate (i, j) moves to (q*i mod m, j)."""
    if len(c) != m * l:
        raise InvalidInputError(f"codeword length {len(c)} != {m * l}")
    out = [0] * (m * l)
    for i in range(m):
        t = q * i % m
        for j in range(l):
            out[t * l + j] = c[i * l + j]
    return tuple(out)


# -- closure ----------------------------------------------------------------------

def verify_closure(code: QuasiCyclicCode, g: GroupElement) -> bool:
    """True iff g maps every basis codeword back into the code."""
    if code.basis.shape[0] == 0:
        return True
    src = source_map(g, code.q, code.m, code.l)
    images = code.field.mul_table[g.a][code.basis[:, src]]
    return bool(code.contains(images).all())


def generators(kind: GroupKind, q: int, f: FieldSpec) -> list[GroupElement]:
    gens = [GroupElement(0, 1, 1)]
    if kind is not GroupKind.SHIFT and q > 2:
        gens.append(GroupElement(0, 0, f.tables.omega))
    if kind is GroupKind.FULL:
        gens.append(GroupElement(1, 0, 1))
    return gens


def group_acts(code: QuasiCyclicCode, kind: GroupKind) -> bool:
    return all(verify_closure(code, g) for g in generators(kind, code.q, code.field))


# -- orbits ----------------------------------------------------------------------

class CodewordSet:
    """Enumerated codewords of a code, indexed for image lookups."""

    def __init__(self, code: QuasiCyclicCode, limit: int | None = None):
        self.code = code
        self.words = code.codeword_array() if limit is None else code.codeword_array(limit)
        self.q, self.m, self.l, self.field = code.q, code.m, code.l, code.field
        self.index = {w.tobytes(): k for k, w in enumerate(self.words)}
        self.zero = self.index[np.zeros(code.n, dtype=self.words.dtype).tobytes()]

    def __len__(self) -> int:
        return len(self.words)

    def transform(self, g: GroupElement) -> np.ndarray:
        src = source_map(g, self.q, self.m, self.l)
        mul = self.field.mul_table.astype(self.words.dtype)
        return mul[g.a][self.words[:, src]]

    def image_indices(self, g: GroupElement, kind: GroupKind) -> np.ndarray:
        out = np.empty(len(self.words), dtype=np.int64)
        for k, w in enumerate(self.transform(g)):
            hit = self.index.get(w.tobytes())
            if hit is None:
                raise GroupNotApplicableError(
                    f"group <{kind.value}> does not preserve the code: {g} maps a codeword outside it"
                )
            out[k] = hit
        return out


@dataclass(frozen=True)
class OrbitPartition:
    count: int
    labels: np.ndarray  # orbit id per codeword, -1 for the zero word


def orbit_partition(words: CodewordSet, kind: GroupKind) -> OrbitPartition:
    """Orbits on the nonzero codewords by breadth-first closure."""
    images = [words.image_indices(g, kind) for g in generators(kind, words.q, words.field)]
    labels = np.full(len(words), -1, dtype=np.int64)
    count = 0
    for start in range(len(words)):
        if start == words.zero or labels[start] >= 0:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for img in images:
                v = img[u]
                if labels[v] < 0:
                    labels[v] = count
                    queue.append(v)
        count += 1
    return OrbitPartition(count, labels)


def fixed_point_count(words: CodewordSet, g: GroupElement) -> int:
    """|{c in C* : g(c) = c}|, checked column block by column block."""
    src = source_map(g, words.q, words.m, words.l)
    mul = words.field.mul_table.astype(words.words.dtype)[g.a]
    w = words.words
    cand = np.arange(len(w))
    n = w.shape[1]
    for start in range(0, n, 16):
        cols = np.arange(start, min(start + 16, n))
        sub = w[cand]
        ok = (mul[sub[:, src[cols]]] == sub[:, cols]).all(axis=1)
        cand = cand[ok]
        if cand.size == 0:
            break
    return int(cand.size) - int(np.isin(words.zero, cand))


def burnside_count(words: CodewordSet, kind: GroupKind) -> int:
    """Orbit count as the average number of fixed nonzero codewords."""
    for g in generators(kind, words.q, words.field):
        words.image_indices(g, kind)  # closure check
    total = sum(fixed_point_count(words, g) for g in group_elements(kind, words.q, words.m))
    order = group_order(kind, words.q, words.m)
    if total % order:
        raise InternalError(f"fixed-point sum {total} not divisible by |G| = {order}")
    return total // order


def tightness_check(weights: np.ndarray, partition: OrbitPartition) -> bool:
    """True iff all nonzero codewords of equal weight share one orbit."""
    seen: dict[int, int] = {}
    for w, lab in zip(weights.tolist(), partition.labels.tolist()):
        if lab < 0:
            continue
        if seen.setdefault(w, lab) != lab:
            return False
    return True
