"""Quasi-cyclic codes as direct sums of constituents over minimal ideals.

Codewords are length l*m vectors over F_q in interleaved layout: coordinate
(i, j), the coefficient of x^i in slot j, sits at index i*l + j.  Field
elements are the integer encodings from :mod:`qcweights.fields`.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import EnumerationLimitError, InternalError, InvalidInputError
from .fields import FieldSpec, prime_power
from .numth import CyclotomicCoset, coset_of
from .ring import (
    ConstituentField,
    RingContext,
    RingElement,
    from_constituent_field,
    generator_poly,
    reduce_mod_minimal,
    ring_context,
)

DEFAULT_LIMIT = 1 << 20

GEN = "g"
Entry = Union[str, tuple[int, ...]]
Codeword = tuple[int, ...]


@dataclass(frozen=True)
class ConstituentSpec:
    """Generator rows for one constituent.

    Each entry is ``GEN`` (the generator polynomial of the coset) or an
    explicit polynomial as an ascending coefficient tuple; ``()`` is zero.
    """

    coset_rep: int
    rows: tuple[tuple[Entry, ...], ...]


@dataclass(frozen=True)
class QccSpec:
    q: int
    m: int
    l: int
    constituents: tuple[ConstituentSpec, ...] = ()

    def __post_init__(self):
        prime_power(self.q)
        if self.m < 1:
            raise InvalidInputError(f"m={self.m} must be positive")
        if math.gcd(self.m, self.q) != 1:
            raise InvalidInputError(f"gcd(m,q) must be 1 (got m={self.m}, q={self.q})")
        if self.l < 2:
            raise InvalidInputError(f"index l={self.l} must be at least 2")
        seen: dict[CyclotomicCoset, int] = {}
        for c in self.constituents:
            if not 0 <= c.coset_rep < self.m:
                raise InvalidInputError(f"coset representative {c.coset_rep} outside 0..{self.m - 1}")
            coset = coset_of(self.q, self.m, c.coset_rep)
            if coset in seen:
                raise InvalidInputError(
                    f"constituents {seen[coset]} and {c.coset_rep} use the same coset {coset}"
                )
            seen[coset] = c.coset_rep
            if not c.rows:
                raise InvalidInputError(f"constituent {c.coset_rep} has no rows")
            for row in c.rows:
                if len(row) != self.l:
                    raise InvalidInputError(
                        f"constituent {c.coset_rep}: row has {len(row)} entries, expected l={self.l}"
                    )
                for e in row:
                    if e == GEN:
                        continue
                    if isinstance(e, str):
                        raise InvalidInputError(f"unknown row entry {e!r}")
                    if len(e) > self.m:
                        raise InvalidInputError(f"polynomial degree must be < m={self.m}")
                    if any(not 0 <= a < self.q for a in e):
                        raise InvalidInputError(f"coefficient outside F_{self.q}")

    @property
    def n(self) -> int:
        return self.l * self.m


# -- the interleaving map ------------------------------------------------------

def phi(c: Sequence[int], f: FieldSpec, m: int, l: int) -> list[RingElement]:
    if len(c) != l * m:
        raise InvalidInputError(f"codeword length {len(c)} != l*m = {l * m}")
    return [RingElement(f, m, tuple(c[i * l + j] for i in range(m))) for j in range(l)]


def phi_inv(slots: Sequence[RingElement]) -> Codeword:
    if not slots:
        raise InvalidInputError("need at least one slot")
    m, l = slots[0].m, len(slots)
    if any(s.m != m for s in slots):
        raise InvalidInputError("slots have different co-index")
    return tuple(slots[j].coeffs[i] for i in range(m) for j in range(l))


# -- linear algebra over F_q on numpy arrays ----------------------------------

def _row_reduce(rows: np.ndarray, f: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_q; returns (nonzero rows, pivot columns)."""
    add, mul, neg = f.add_table, f.mul_table, f.neg_table
    inv = np.array(f.inv_list, dtype=np.int64)
    a = np.array(rows, dtype=np.int64, copy=True)
    if a.size == 0:
        return a.reshape(0, a.shape[1] if a.ndim == 2 else 0), []
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = mul[inv[a[r, col]], a[r]]
        factors = neg[a[:, col]]
        factors[r] = 0
        a = add[a, mul[factors[:, None], a[r][None, :]]]
        pivots.append(col)
        r += 1
    return a[:r], pivots


def _reduce_against(vecs: np.ndarray, echelon: np.ndarray, pivots: list[int], f: FieldSpec) -> np.ndarray:
    add, mul, neg = f.add_table, f.mul_table, f.neg_table
    v = np.array(vecs, dtype=np.int64, copy=True)
    for row, col in zip(echelon, pivots):
        factors = neg[v[:, col]]
        v = add[v, mul[factors[:, None], row[None, :]]]
    return v


# -- constituents ---------------------------------------------------------------

@dataclass(frozen=True)
class ConstituentBasis:
    """An expanded constituent: its F_q basis and arithmetic invariants."""

    coset_rep: int
    coset: CyclotomicCoset
    rank: int
    basis: tuple[Codeword, ...]
    echelon: tuple[tuple[tuple[int, ...], ...], ...]
    qualifies_one_generator: bool

    @property
    def k(self) -> int:
        return self.coset.size

    @property
    def dimension(self) -> int:
        return self.rank * self.k

    @property
    def degenerate(self) -> bool:
        return self.rank == 0


def resolve_entry(e: Entry, coset: CyclotomicCoset, ctx: RingContext) -> RingElement:
    if e == GEN:
        return generator_poly(coset, ctx)
    return ctx.element(e)


def expand_constituent(spec: ConstituentSpec, ctx: RingContext) -> ConstituentBasis:
    """F_q basis of the R_m*eps_t-span of the rows."""
    coset = ctx.coset(spec.coset_rep)
    cf = ConstituentField(coset, ctx)
    rows = [
        [reduce_mod_minimal(resolve_entry(e, coset, ctx).coeffs, coset, ctx) for e in row]
        for row in spec.rows
    ]
    echelon = _field_rref(rows, cf)
    basis = []
    for row in echelon:
        lifted = [from_constituent_field(e, coset, ctx) for e in row]
        for j in range(coset.size):
            basis.append(phi_inv([s.shift(j) for s in lifted]))
    qualifies = len(echelon) == 1 and all(e in (cf.zero, cf.one) for e in echelon[0])
    return ConstituentBasis(
        coset_rep=spec.coset_rep,
        coset=coset,
        rank=len(echelon),
        basis=tuple(basis),
        echelon=tuple(tuple(r) for r in echelon),
        qualifies_one_generator=qualifies,
    )


def _field_rref(rows: list[list[tuple[int, ...]]], cf: ConstituentField) -> list[list[tuple[int, ...]]]:
    """Row reduction over F_q[x]/(h_t); pivots normalised to 1."""
    a = [list(r) for r in rows]
    ncols = len(a[0]) if a else 0
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if any(a[i][col])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = cf.inv(a[r][col])
        a[r] = [cf.mul(inv, e) for e in a[r]]
        for i in range(len(a)):
            if i != r and any(a[i][col]):
                c = a[i][col]
                a[i] = [cf.sub(x, cf.mul(c, y)) for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return a[:r]


# -- whole codes ------------------------------------------------------------------

@dataclass(frozen=True)
class WeightDistribution:
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.counts.items() if w and c)

    def as_polynomial(self) -> str:
        terms = []
        for w in sorted(self.counts):
            c = self.counts[w]
            mono = "" if w == 0 else (f"x^{w}" if w > 1 else "x")
            terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(terms)


def nonzero_weight_count(wd: WeightDistribution) -> int:
    return len(wd.nonzero_weights)


class QuasiCyclicCode:
    """A constructed code: constituent bases plus lazily enumerated codewords."""

    def __init__(self, spec: QccSpec, ctx: RingContext):
        if ctx.q != spec.q or ctx.m != spec.m:
            raise InvalidInputError("ring context does not match the code parameters")
        self.spec = spec
        self.ctx = ctx
        self.field = ctx.fq
        self.q, self.m, self.l = spec.q, spec.m, spec.l
        self.n = spec.n
        self.constituents = [expand_constituent(c, ctx) for c in spec.constituents]
        self.warnings: list[str] = []
        if not self.constituents:
            self.warnings.append("no constituents: this is the zero code")
        for c in self.constituents:
            if c.degenerate:
                self.warnings.append(f"constituent {c.coset_rep} has only zero rows (K_t = 0)")
        rows = [v for c in self.constituents for v in c.basis]
        self.basis = np.array(rows, dtype=np.int64).reshape(len(rows), self.n)
        self.dimension = sum(c.dimension for c in self.constituents)

    @property
    def size(self) -> int:
        return self.q ** self.dimension

    @cached_property
    def _echelon(self) -> tuple[np.ndarray, list[int]]:
        return _row_reduce(self.basis, self.field)

    def contains(self, vectors: np.ndarray | Sequence[Sequence[int]]) -> np.ndarray:
        """Boolean membership of each row of ``vectors`` in the code."""
        v = np.array(vectors, dtype=np.int64).reshape(-1, self.n)
        ech, piv = self._echelon
        return ~_reduce_against(v, ech, piv, self.field).any(axis=1)

    def codeword_array(self, limit: int = DEFAULT_LIMIT) -> np.ndarray:
        """All codewords as an (q^K, n) array; row 0 is the zero word."""
        if self.size > limit:
            raise EnumerationLimitError(self.size, limit)
        cached = self.__dict__.get("_words")
        if cached is not None:
            return cached
        dt = np.uint8 if self.q <= 256 else np.int64
        f = self.field
        add, mul = f.add_table.astype(dt), f.mul_table.astype(dt)
        words = np.zeros((1, self.n), dtype=dt)
        for b in self.basis:
            multiples = mul[:, b]  # row a holds a*b
            words = add[words[None, :, :], multiples[:, None, :]].reshape(-1, self.n)
        words.flags.writeable = False
        self.__dict__["_words"] = words
        return words


def build_code(spec: QccSpec, omega_index: int = 1) -> QuasiCyclicCode:
    return QuasiCyclicCode(spec, ring_context(spec.q, spec.m, omega_index))


def enumerate_codewords(spec: QccSpec, ctx: RingContext, limit: int = DEFAULT_LIMIT) -> Iterator[Codeword]:
    code = QuasiCyclicCode(spec, ctx)
    for row in code.codeword_array(limit):
        yield tuple(int(a) for a in row)


def weights_of(words: np.ndarray) -> np.ndarray:
    return np.count_nonzero(words, axis=1)


def distribution_from_words(words: np.ndarray) -> WeightDistribution:
    counts = Counter(weights_of(words).tolist())
    return WeightDistribution(dict(sorted(counts.items())))


def weight_distribution(spec: QccSpec, ctx: RingContext, limit: int = DEFAULT_LIMIT) -> WeightDistribution:
    code = QuasiCyclicCode(spec, ctx)
    wd = distribution_from_words(code.codeword_array(limit))
    if wd.total != code.size or wd.counts.get(0) != 1:
        raise InternalError("enumeration is inconsistent with the code dimension")
    return wd
