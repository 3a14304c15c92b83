"""The quotient ring R_m = F_q[x]/(x^m - 1) and its minimal ideals.

A ``RingContext`` bundles everything that depends only on (q, m) and the
choice of primitive element: F_q, the splitting field F_{q^m'}, the embedding
between them, the root of unity zeta and the cyclotomic cosets.  Contexts are
cached and shared; every function here is pure.

Coset labels always name powers of the canonical root zeta_1 (built from the
first primitive element).  A context built with another primitive element
translates labels to its own root, so a given label picks out the same
minimal ideal whichever root does the arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import DomainError, InternalError, InvalidInputError
from .fields import FieldSpec, build_embedding, build_field, find_primitive_element, prime_power, root_of_unity
from .numth import CyclotomicCoset, coset_of, cyclotomic_cosets, multiplicative_order

Poly = tuple[int, ...]


# -- dense polynomials over F_q, ascending coefficient tuples ----------------

def poly_trim(a: Sequence[int]) -> Poly:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def poly_add(f: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    n = max(len(a), len(b))
    out = [
        f.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)
    ]
    return poly_trim(out)


def poly_sub(f: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    return poly_add(f, a, [f.neg(c) for c in b])


def poly_mul(f: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
    return poly_trim(out)


def poly_divmod(f: FieldSpec, a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    b = poly_trim(b)
    if not b:
        raise DomainError("polynomial division by zero")
    rem = list(poly_trim(a))
    db = len(b) - 1
    if len(rem) <= db:
        return (), tuple(rem)
    inv_lead = f.inv(b[-1])
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = f.mul(rem[i], inv_lead)
        if c:
            quot[i - db] = c
            for j, bj in enumerate(b):
                rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, bj))
    return poly_trim(quot), poly_trim(rem[:db])


def poly_str(a: Sequence[int], var: str = "x", f: FieldSpec | None = None) -> str:
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        if f is not None and f.d > 1:
            cs = f"w^{f.tables.log[c]}" if c != 1 else "1"
        else:
            cs = str(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms) if terms else "0"


# -- ring elements ------------------------------------------------------------

@dataclass(frozen=True)
class RingElement:
    """An element of F_q[x]/(x^m - 1); coeffs[i] is the coefficient of x^i."""

    field: FieldSpec
    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.m:
            raise InvalidInputError(f"ring element needs {self.m} coefficients")

    @classmethod
    def zero(cls, f: FieldSpec, m: int) -> "RingElement":
        return cls(f, m, (0,) * m)

    @classmethod
    def one(cls, f: FieldSpec, m: int) -> "RingElement":
        return cls.monomial(f, m, 0)

    @classmethod
    def monomial(cls, f: FieldSpec, m: int, k: int, c: int = 1) -> "RingElement":
        out = [0] * m
        out[k % m] = c
        return cls(f, m, tuple(out))

    @classmethod
    def from_poly(cls, f: FieldSpec, m: int, poly: Sequence[int]) -> "RingElement":
        """Reduce an arbitrary polynomial modulo x^m - 1."""
        out = [0] * m
        for i, c in enumerate(poly):
            if c:
                out[i % m] = f.add(out[i % m], c)
        return cls(f, m, tuple(out))

    def _check(self, other: "RingElement") -> None:
        if other.field != self.field or other.m != self.m:
            raise InvalidInputError("ring elements belong to different rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        f = self.field
        return RingElement(f, self.m, tuple(f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        f = self.field
        return RingElement(f, self.m, tuple(f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RingElement":
        return RingElement(self.field, self.m, tuple(self.field.neg(a) for a in self.coeffs))

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        f, m = self.field, self.m
        out = [0] * m
        nz = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in nz:
                    k = (i + j) % m
                    out[k] = f.add(out[k], f.mul(a, b))
        return RingElement(f, m, tuple(out))

    def scale(self, c: int) -> "RingElement":
        return RingElement(self.field, self.m, tuple(self.field.mul(c, a) for a in self.coeffs))

    def shift(self, k: int = 1) -> "RingElement":
        """Multiplication by x^k."""
        m = self.m
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            out[(i + k) % m] = a
        return RingElement(self.field, m, tuple(out))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    @property
    def weight(self) -> int:
        return sum(1 for a in self.coeffs if a)

    @property
    def poly(self) -> Poly:
        return poly_trim(self.coeffs)

    def __repr__(self) -> str:
        return f"RingElement({poly_str(self.poly, f=self.field)} mod x^{self.m}-1)"


@dataclass(frozen=True)
class Spectrum:
    """Evaluations at zeta^0, ..., zeta^(m-1), as encoded big-field elements."""

    field: FieldSpec
    values: tuple[int, ...]

    def is_conjugate_closed(self, q: int) -> bool:
        f, m = self.field, len(self.values)
        return all(self.values[q * i % m] == f.pow(v, q) for i, v in enumerate(self.values))


class RingContext:
    """Shared read-only data for R_m over F_q with a fixed primitive element."""

    def __init__(self, q: int, m: int, omega_index: int = 1):
        p, e = prime_power(q)
        self.q, self.m, self.omega_index = q, m, omega_index
        self.fq = build_field(p, e)
        self.m_prime = multiplicative_order(q, m)
        self.big = build_field(p, e * self.m_prime)
        self.embedding = build_embedding(self.fq, self.big)
        self.zeta = root_of_unity(self.big, m, omega_index).value
        # Coset labels always refer to powers of the canonical root zeta_1
        # (omega_index 1).  With zeta = zeta_1^u, label r is exponent r/u here.
        u = self.big.tables.log[find_primitive_element(self.big, omega_index).value] % m if m > 1 else 1
        self.label_scale = pow(u, -1, m) if m > 1 else 1
        big = self.big
        pw = [1]
        for _ in range(1, m):
            pw.append(big.mul(pw[-1], self.zeta))
        self.zeta_powers = tuple(pw)
        self.cosets = tuple(cyclotomic_cosets(q, m))
        # 1/m lives in the prime field; gcd(m, p) = 1 because gcd(m, q) = 1
        self.inv_m = self.fq.inv(self.fq.from_int(m))

    def __repr__(self) -> str:
        return f"RingContext(q={self.q}, m={self.m}, omega_index={self.omega_index})"

    def coset(self, i: int) -> CyclotomicCoset:
        return coset_of(self.q, self.m, i % self.m)

    def element(self, poly: Sequence[int]) -> RingElement:
        return RingElement.from_poly(self.fq, self.m, poly)

    def coerce(self, v: int) -> int:
        """Pull a big-field element back into F_q."""
        try:
            return self.embedding.preimage[v]
        except KeyError:
            raise DomainError(f"{self.big.element(v)} does not lie in {self.fq}") from None

    def exponents(self, coset: CyclotomicCoset) -> tuple[int, ...]:
        """Exponents e with zeta^e running over the canonical roots of ``coset``."""
        return tuple(r * self.label_scale % self.m for r in coset.members)

    @cached_property
    def x_power_q_perm(self) -> tuple[int, ...]:
        return tuple(self.q * i % self.m for i in range(self.m))


@lru_cache(maxsize=None)
def ring_context(q: int, m: int, omega_index: int = 1) -> RingContext:
    return RingContext(q, m, omega_index)


def dft(a: RingElement, ctx: RingContext) -> Spectrum:
    big, emb, zp, m = ctx.big, ctx.embedding, ctx.zeta_powers, ctx.m
    if a.field != ctx.fq or a.m != m:
        raise InvalidInputError("ring element does not match the context")
    terms = [(j, emb.map_int(c)) for j, c in enumerate(a.coeffs) if c]
    values = []
    for i in range(m):
        acc = 0
        for j, c in terms:
            acc = big.add(acc, big.mul(c, zp[i * j % m]))
        values.append(acc)
    return Spectrum(big, tuple(values))


def idft(s: Spectrum, ctx: RingContext) -> RingElement:
    """Inverse transform; raises DomainError if the result leaves F_q."""
    big, zp, m = ctx.big, ctx.zeta_powers, ctx.m
    if len(s.values) != m:
        raise InvalidInputError(f"spectrum must have {m} values")
    terms = [(i, v) for i, v in enumerate(s.values) if v]
    inv_m = ctx.embedding.map_int(ctx.inv_m)
    coeffs = []
    for j in range(m):
        acc = 0
        for i, v in terms:
            acc = big.add(acc, big.mul(v, zp[(-i * j) % m]))
        coeffs.append(ctx.coerce(big.mul(inv_m, acc)))
    return RingElement(ctx.fq, m, tuple(coeffs))


@lru_cache(maxsize=None)
def primitive_idempotent(coset: CyclotomicCoset, ctx: RingContext) -> RingElement:
    indicator = [0] * ctx.m
    for i in ctx.exponents(coset):
        indicator[i] = 1
    return idft(Spectrum(ctx.big, tuple(indicator)), ctx)


@lru_cache(maxsize=None)
def minimal_poly(coset: CyclotomicCoset, ctx: RingContext) -> Poly:
    """prod_{r in coset} (x - zeta^r), coefficients pulled back into F_q."""
    big = ctx.big
    acc: list[int] = [1]
    for r in ctx.exponents(coset):
        root = big.neg(ctx.zeta_powers[r])
        nxt = [0] * (len(acc) + 1)
        for i, c in enumerate(acc):
            nxt[i + 1] = big.add(nxt[i + 1], c)
            nxt[i] = big.add(nxt[i], big.mul(c, root))
        acc = nxt
    try:
        return tuple(ctx.coerce(c) for c in acc)
    except DomainError as exc:
        raise InternalError(f"minimal polynomial of {coset} not over F_q: {exc}") from None


def x_m_minus_1(ctx: RingContext) -> Poly:
    f = ctx.fq
    return (f.neg(1),) + (0,) * (ctx.m - 1) + (1,)


@lru_cache(maxsize=None)
def generator_poly(coset: CyclotomicCoset, ctx: RingContext) -> RingElement:
    """(x^m - 1) / minimal_poly(coset), generating the ideal R_m * eps_t."""
    quot, rem = poly_divmod(ctx.fq, x_m_minus_1(ctx), minimal_poly(coset, ctx))
    if rem:
        raise InternalError(f"minimal polynomial of {coset} does not divide x^m - 1")
    return ctx.element(quot)


def in_minimal_ideal(a: RingElement, coset: CyclotomicCoset, ctx: RingContext) -> bool:
    return a * primitive_idempotent(coset, ctx) == a


def to_constituent_field(a: RingElement, coset: CyclotomicCoset, ctx: RingContext) -> Poly:
    """Map a in R_m*eps_t to a mod h_t, a length-k_t coefficient tuple."""
    if not in_minimal_ideal(a, coset, ctx):
        raise DomainError(f"element is not in the minimal ideal of coset {coset}")
    return reduce_mod_minimal(a.coeffs, coset, ctx)


def reduce_mod_minimal(poly: Sequence[int], coset: CyclotomicCoset, ctx: RingContext) -> Poly:
    _, rem = poly_divmod(ctx.fq, poly, minimal_poly(coset, ctx))
    return tuple(rem) + (0,) * (coset.size - len(rem))


def from_constituent_field(b: Sequence[int], coset: CyclotomicCoset, ctx: RingContext) -> RingElement:
    if len(b) != coset.size:
        raise InvalidInputError(f"constituent field element needs {coset.size} coefficients")
    return ctx.element(b) * primitive_idempotent(coset, ctx)


class ConstituentField:
    """F_q[x]/(h_t), the field isomorphic to R_m * eps_t.

    Elements are length-k coefficient tuples over F_q.
    """

    def __init__(self, coset: CyclotomicCoset, ctx: RingContext):
        self.coset = coset
        self.ctx = ctx
        self.fq = ctx.fq
        self.k = coset.size
        self.modulus = minimal_poly(coset, ctx)
        self.size = ctx.q ** self.k

    def _pad(self, a: Sequence[int]) -> Poly:
        return tuple(a) + (0,) * (self.k - len(a))

    @property
    def zero(self) -> Poly:
        return (0,) * self.k

    @property
    def one(self) -> Poly:
        return self._pad((1,))

    def add(self, a: Poly, b: Poly) -> Poly:
        return tuple(self.fq.add(x, y) for x, y in zip(a, b))

    def sub(self, a: Poly, b: Poly) -> Poly:
        return tuple(self.fq.sub(x, y) for x, y in zip(a, b))

    def mul(self, a: Poly, b: Poly) -> Poly:
        _, rem = poly_divmod(self.fq, poly_mul(self.fq, poly_trim(a), poly_trim(b)), self.modulus)
        return self._pad(rem)

    def pow(self, a: Poly, e: int) -> Poly:
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: Poly) -> Poly:
        if not any(a):
            raise DomainError("division by zero in constituent field")
        return self.pow(a, self.size - 2)
