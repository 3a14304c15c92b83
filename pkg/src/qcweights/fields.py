"""Exact arithmetic in small finite fields F_{p^d}.

Elements are stored as integers: the element sum(c_i * y^i) of F_p[y]/(modulus)
is encoded as sum(c_i * p^i).  ``FieldElement`` wraps that encoding with the
coefficient list and operator overloads; the hot paths elsewhere in the
package work on the raw integers through the ``FieldSpec`` methods.

"Canonical order" of elements is lexicographic on coefficient tuples
(c_0, c_1, ..., c_{d-1}), c_0 most significant.  It fixes which primitive
element, root of unity and embedding the package picks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .errors import DomainError, InternalError, InvalidInputError

MAX_FIELD_SIZE = 1 << 20
MAX_DEGREE = 16
SMALL_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q == p**e, or raise InvalidInputError."""
    if q < 2:
        raise InvalidInputError(f"q={q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise InvalidInputError(f"q={q} is not a prime power")
    p = fs[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# -- polynomials over F_p as coefficient lists, ascending powers ---------------

def _fp_polymod(a: list[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo monic-or-not b over F_p."""
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p) if p > 2 else 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            off = i - db
            for j, bj in enumerate(b):
                a[off + j] = (a[off + j] - c * bj) % p
    return a[:db] if db > 0 else []


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive factor search for a monic polynomial over F_p."""
    d = len(modulus) - 1
    if d < 1 or modulus[-1] % p != 1:
        return False
    if d == 1:
        return True
    if modulus[0] % p == 0:
        return False
    # roots first, then monic divisors of degree 2..d//2
    for r in range(p):
        acc = 0
        for c in reversed(modulus):
            acc = (acc * r + c) % p
        if acc == 0:
            return False
    for k in range(2, d // 2 + 1):
        for low in product(range(p), repeat=k):
            if low[0] == 0:
                continue
            rem = _fp_polymod(list(modulus), list(low) + [1], p)
            if not any(rem):
                return False
    return True


@lru_cache(maxsize=None)
def build_field(p: int, d: int) -> "FieldSpec":
    """F_{p^d} modulo the lexicographically smallest monic irreducible."""
    if not is_prime(p):
        raise InvalidInputError(f"p={p} is not prime")
    if not 1 <= d <= MAX_DEGREE:
        raise InvalidInputError(f"extension degree d={d} outside 1..{MAX_DEGREE}")
    if p ** d > MAX_FIELD_SIZE:
        raise InvalidInputError(
            f"field of size {p}^{d} exceeds the cap of {MAX_FIELD_SIZE} elements"
        )
    for low in product(range(p), repeat=d):
        modulus = tuple(low) + (1,)
        if is_irreducible(modulus, p):
            return FieldSpec(p, d, modulus)
    raise InternalError(f"no monic irreducible of degree {d} over F_{p}")


class _Tables:
    """Exponential/logarithm tables with respect to the canonical primitive element."""

    def __init__(self, f: "FieldSpec"):
        p, d, Q = f.p, f.d, f.size
        self.order = Q - 1
        self.omega = f._slow_first_primitive()
        ppow = np.array([p ** i for i in range(d)], dtype=np.int64)
        digits = np.zeros((Q - 1, d), dtype=np.int64)
        digits[0, 0] = 1
        filled = 1
        while filled < Q - 1:
            w = f._slow_pow(self.omega, filled)
            mat = np.array(
                [f.digits(f._slow_mul(w, p ** j)) for j in range(d)], dtype=np.int64
            )
            take = min(filled, Q - 1 - filled)
            digits[filled:filled + take] = (digits[:take] @ mat) % p
            filled += take
        exp = digits @ ppow
        log = np.full(Q, -1, dtype=np.int64)
        log[exp] = np.arange(Q - 1)
        if (log[1:] < 0).any():
            raise InternalError(f"omega is not primitive in {f}")
        self.exp_np = exp
        self.log_np = log
        self.exp = exp.tolist()
        self.log = log.tolist()
        if p == 2:
            self.zech = None
        else:
            shifted = digits.copy()
            shifted[:, 0] = (shifted[:, 0] + 1) % p
            self.zech = log[shifted @ ppow].tolist()
        self.half = (Q - 1) // 2 if p != 2 else 0


@dataclass(frozen=True)
class FieldSpec:
    """The field F_p[y]/(modulus) with modulus monic irreducible of degree d."""

    p: int
    d: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if len(self.modulus) != self.d + 1 or self.modulus[-1] != 1:
            raise InvalidInputError("modulus must be monic of degree d")

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.d})" if self.d > 1 else f"GF({self.p})"

    @property
    def size(self) -> int:
        return self.p ** self.d

    # -- encoding ------------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.d):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.d:
            raise InvalidInputError(f"expected {self.d} coordinates, got {len(coeffs)}")
        v = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise InvalidInputError(f"coordinate {c} outside 0..{self.p - 1}")
            v = v * self.p + c
        return v

    def element(self, coeffs: Sequence[int] | int) -> "FieldElement":
        if isinstance(coeffs, int):
            return FieldElement(self, tuple(self.digits(coeffs)))
        return FieldElement(self, tuple(coeffs))

    def canonical_ints(self) -> Iterator[int]:
        """All elements as integers, in canonical order."""
        ppow = [self.p ** i for i in range(self.d)]
        for coeffs in product(range(self.p), repeat=self.d):
            yield sum(c * w for c, w in zip(coeffs, ppow))

    # -- slow path, used only to bootstrap the tables -----------------------

    def _slow_mul(self, a: int, b: int) -> int:
        p, d = self.p, self.d
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _fp_polymod(prod, self.modulus, p) if d > 1 else [prod[0] % p]
        rem += [0] * (d - len(rem))
        return self.encode(rem)

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def _slow_first_primitive(self) -> int:
        n = self.size - 1
        tests = [n // r for r in prime_factors(n)]
        for a in self.canonical_ints():
            if a and all(self._slow_pow(a, t) != 1 for t in tests):
                return a
        raise InternalError(f"{self} has no primitive element")

    @cached_property
    def tables(self) -> _Tables:
        return _tables(self)

    # -- arithmetic on encoded integers -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        t = self.tables
        la = t.log[a]
        z = t.zech[(t.log[b] - la) % t.order]
        if z < 0:
            return 0
        return t.exp[(la + z) % t.order]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        t = self.tables
        return t.exp[(t.log[a] + t.half) % t.order]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        t = self.tables
        return t.exp[(t.log[a] + t.log[b]) % t.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("division by zero")
        t = self.tables
        return t.exp[(-t.log[a]) % t.order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DomainError("zero has no inverse")
            return 1 if e == 0 else 0
        t = self.tables
        return t.exp[(t.log[a] * e) % t.order]

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def order_of(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative order")
        t = self.tables
        return t.order // math.gcd(t.log[a], t.order)

    # -- numpy lookup tables for vectorised work over small fields ----------

    @cached_property
    def mul_table(self) -> np.ndarray:
        return _small_tables(self)[1]

    @cached_property
    def add_table(self) -> np.ndarray:
        return _small_tables(self)[0]

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.size)], dtype=np.int64)

    @cached_property
    def inv_list(self) -> list[int]:
        return [0] + [self.inv(a) for a in range(1, self.size)]


@lru_cache(maxsize=None)
def _tables(f: FieldSpec) -> _Tables:
    return _Tables(f)


@lru_cache(maxsize=None)
def _small_tables(f: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    Q = f.size
    if Q > SMALL_TABLE_LIMIT:
        raise InvalidInputError(f"lookup tables are limited to fields of size <= {SMALL_TABLE_LIMIT}")
    t = f.tables
    idx = np.arange(Q)
    if f.p == 2:
        add = np.bitwise_xor.outer(idx, idx)
    else:
        ppow = np.array([f.p ** i for i in range(f.d)], dtype=np.int64)
        digs = (idx[:, None] // ppow[None, :]) % f.p
        add = ((digs[:, None, :] + digs[None, :, :]) % f.p) @ ppow
    lg = t.log_np
    mul = t.exp_np[(lg[:, None] + lg[None, :]) % t.order]
    mul[0, :] = 0
    mul[:, 0] = 0
    add.flags.writeable = False
    mul.flags.writeable = False
    return add.astype(np.int64), mul.astype(np.int64)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.d:
            raise InvalidInputError(
                f"element of {self.field} needs {self.field.d} coordinates"
            )
        if any(not 0 <= c < self.field.p for c in self.coeffs):
            raise InvalidInputError(f"coordinates must lie in 0..{self.field.p - 1}")

    @property
    def value(self) -> int:
        return self.field.encode(self.coeffs)

    def _other(self, other: "FieldElement | int") -> int:
        if isinstance(other, int):
            return self.field.from_int(other)
        if other.field != self.field:
            raise InvalidInputError(f"field mismatch: {self.field} vs {other.field}")
        return other.value

    def _wrap(self, v: int) -> "FieldElement":
        return self.field.element(v)

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
                if not mono:
                    terms.append(str(c))
                else:
                    terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply one of add, sub, mul, div to two elements of the same field."""
    if a.field != b.field:
        raise InvalidInputError(f"field mismatch: {a.field} vs {b.field}")
    ops = {"add": a.field.add, "sub": a.field.sub, "mul": a.field.mul, "div": a.field.div}
    if op not in ops:
        raise InvalidInputError(f"unknown operation {op!r}")
    return a.field.element(ops[op](a.value, b.value))


def element_order(a: FieldElement) -> int:
    if not a:
        raise DomainError("zero has no multiplicative order")
    return a.field.order_of(a.value)


def find_primitive_element(f: FieldSpec, index: int = 1) -> FieldElement:
    """The index-th element of multiplicative order |F|-1 in canonical order."""
    if index < 1:
        raise InvalidInputError("primitive element index starts at 1")
    t = f.tables
    if index == 1:
        return f.element(t.omega)
    seen = 0
    for a in f.canonical_ints():
        if a and math.gcd(t.log[a], t.order) == 1:
            seen += 1
            if seen == index:
                return f.element(a)
    raise InvalidInputError(f"{f} has fewer than {index} primitive elements")


def root_of_unity(f: FieldSpec, m: int, omega_index: int = 1) -> FieldElement:
    """omega**((|F|-1)/m), a primitive m-th root of unity."""
    n = f.size - 1
    if m < 1 or n % m:
        raise InvalidInputError(f"m={m} does not divide {n} = |{f}| - 1")
    omega = find_primitive_element(f, omega_index)
    return omega ** (n // m)


@dataclass(frozen=True)
class Embedding:
    """Field homomorphism sub -> sup fixed by the image of sub's generator y."""

    sub: FieldSpec
    sup: FieldSpec
    image: FieldElement
    table: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sup, g = self.sup, self.image.value
        powers = [1]
        for _ in range(1, self.sub.d):
            powers.append(sup.mul(powers[-1], g))
        table = []
        for a in range(self.sub.size):
            acc = 0
            for c, gp in zip(self.sub.digits(a), powers):
                if c:
                    acc = sup.add(acc, sup.mul(sup.from_int(c), gp))
            table.append(acc)
        object.__setattr__(self, "table", tuple(table))

    def __call__(self, a: FieldElement) -> FieldElement:
        if a.field != self.sub:
            raise InvalidInputError(f"element of {a.field} given to embedding of {self.sub}")
        return self.sup.element(self.table[a.value])

    def map_int(self, a: int) -> int:
        return self.table[a]

    @cached_property
    def preimage(self) -> dict[int, int]:
        return {v: a for a, v in enumerate(self.table)}


def _eval_in(sup: FieldSpec, poly: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = sup.add(sup.mul(acc, x), sup.from_int(c))
    return acc


@lru_cache(maxsize=None)
def build_embedding(sub: FieldSpec, sup: FieldSpec) -> Embedding:
    if sub.p != sup.p or sup.d % sub.d:
        raise InvalidInputError(f"{sub} does not embed in {sup}")
    if sub == sup:
        gen = sup.element([0, 1] + [0] * (sup.d - 2)) if sup.d > 1 else sup.element([0])
        return Embedding(sub, sup, gen)
    for a in sup.canonical_ints():
        if _eval_in(sup, sub.modulus, a) == 0:
            return Embedding(sub, sup, sup.element(a))
    raise InternalError(f"no root of {sub.modulus} in {sup}")
