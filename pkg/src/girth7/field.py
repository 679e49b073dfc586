"""Finite fields GF(p^e).

Elements are stored as integers in ``range(q)``: the coefficient vector
``(c_0, ..., c_{e-1})`` of the polynomial representative is read as the
base-p number ``c_0 + c_1 p + ... + c_{e-1} p^(e-1)``.  So 0 and 1 are the
field's zero and one, and for ``e == 1`` the index is the residue itself.

Two arithmetic routes are provided.  Scalar operations (and
:class:`FieldElement`) use polynomial arithmetic modulo the defining
polynomial.  Vectorised operations on numpy arrays use discrete log / antilog
tables plus digit-wise addition.  The geometry layer uses the vectorised
route through the full ``add_table`` / ``mul_table`` arrays.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NoIrreducibleFound, NonPrimeCharacteristic

MAX_ORDER = 2**20
TABLE_LIMIT = 1024  # largest q for which full q x q tables are built


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            return (p, e) if q == 1 else None
    return None


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


# --- polynomials over GF(p): coefficient lists, lowest degree first -------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo m (m need not be monic, but must be nonzero)."""
    r = _poly_trim([c % p for c in a])
    m = _poly_trim([c % p for c in m])
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p) if p > 2 else 1
    while len(r) - 1 >= dm and r:
        coef = (r[-1] * lead_inv) % p
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] = (r[shift + i] - coef * c) % p
        _poly_trim(r)
    return r


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _monic_polys(p: int, d: int) -> Iterator[list[int]]:
    """All monic degree-d polynomials, lowest coefficients varying fastest."""
    for code in range(p**d):
        low = [(code // p**i) % p for i in range(d)]
        yield low + [1]


def _has_root(m: Sequence[int], p: int) -> bool:
    for x in range(p):
        v = 0
        for c in reversed(m):
            v = (v * x + c) % p
        if v == 0:
            return True
    return False


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p).

    Degrees up to 3 only need a root test; higher degrees are trial-divided by
    every monic polynomial of degree at most half the degree.
    """
    e = len(m) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    if e <= 3:
        return not _has_root(m, p)
    for d in range(1, e // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(m, f, p):
                return False
    return True


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e, ordering by coefficients from
    the highest non-leading one down (``x^3+x+1`` precedes ``x^3+x^2+1``)."""
    for code in range(p**e):
        low = [(code // p**i) % p for i in range(e)]
        m = low + [1]
        if is_irreducible(m, p):
            return tuple(m)
    raise NoIrreducibleFound(f"no monic irreducible of degree {e} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple[int, ...]
    q: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.e)

    def __repr__(self):
        return f"GF({self.q})"

    # -- encoding ---------------------------------------------------------
    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        return tuple((a // p**i) % p for i in range(self.e))

    def encode(self, coeffs: Sequence[int]) -> int:
        p = self.p
        return sum((c % p) * p**i for i, c in enumerate(coeffs))

    def __call__(self, value) -> "FieldElement":
        """Element from an index, or from a coefficient list."""
        if isinstance(value, FieldElement):
            if value.owner != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self.encode(value), self)
        if self.e == 1:
            return FieldElement(int(value) % self.p, self)
        v = int(value)
        if not 0 <= v < self.q:
            raise ValueError(f"index {v} out of range for {self!r}")
        return FieldElement(v, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    # -- scalar arithmetic on indices (polynomial route) --------------------
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.encode([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self.encode([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        return self.encode(_poly_mod(prod, self.modulus, self.p))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- vectorised route --------------------------------------------------
    @functools.cached_property
    def _log_exp(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.q
        if q == 2:
            return np.array([-1, 0]), np.array([1, 1])
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self.mul(x, g)
            if len(exp) == q - 1:
                log = np.full(q, -1, dtype=np.int64)
                log[np.array(exp)] = np.arange(q - 1)
                # doubled so that log[a] + log[b] indexes directly
                return log, np.array(exp + exp, dtype=np.int64)
        raise NoIrreducibleFound(f"no primitive element found in {self!r}")

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for i in range(self.e):
            w = self.p**i
            out += (((a // w) + (b // w)) % self.p) * w
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.e == 1:
            return (-a) % self.p
        out = np.zeros_like(a)
        for i in range(self.e):
            w = self.p**i
            out += ((-(a // w)) % self.p) * w
        return out

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        log, exp = self._log_exp
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        log, exp = self._log_exp
        return exp[(-log[a]) % (self.q - 1)]

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        r = np.arange(self._table_q())
        t = self.vadd(r[:, None], r[None, :])
        t.flags.writeable = False
        return t

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        r = np.arange(self._table_q())
        t = self.vmul(r[:, None], r[None, :])
        t.flags.writeable = False
        return t

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        t = self.vneg(np.arange(self.q))
        t.flags.writeable = False
        return t

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        t = np.zeros(self.q, dtype=np.int64)
        t[1:] = self.vinv(np.arange(1, self.q))
        t.flags.writeable = False
        return t

    def _table_q(self) -> int:
        if self.q > TABLE_LIMIT:
            raise ValueError(f"{self!r} is too large for full arithmetic tables")
        return self.q


@functools.lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """GF(p^e) with the default (lexicographically least) modulus."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be at least 1")
    if p**e > MAX_ORDER:
        raise ValueError(f"p^e = {p**e} exceeds the supported order {MAX_ORDER}")
    return FieldSpec(p, e, default_modulus(p, e))


def field_of_order(q: int) -> FieldSpec:
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*pe)


def elements(f: FieldSpec) -> list["FieldElement"]:
    """All q elements, in index order (0 first, 1 second)."""
    return [FieldElement(i, f) for i in range(f.q)]


class FieldElement:
    __slots__ = ("value", "owner")

    def __init__(self, value: int, owner: FieldSpec):
        self.value = value
        self.owner = owner

    @property
    def rep(self) -> tuple[int, ...]:
        return self.owner.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.owner != self.owner:
                raise FieldMismatch(f"{self.owner!r} vs {other.owner!r}")
            return other.value
        if isinstance(other, int):
            # integers embed through the prime subfield
            return self.owner.encode([other % self.owner.p])
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(v, self.owner)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.owner.neg(self.value))

    def __pow__(self, n: int):
        return self._wrap(self.owner.pow(self.value, n))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.owner.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.owner == other.owner and self.value == other.value
        if isinstance(other, int):
            return self.value == self._other(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        if self.owner.e == 1:
            return f"{self.value}"
        terms = [
            ("" if c == 1 and i else str(c)) + ("x" if i == 1 else f"x^{i}" if i else "")
            for i, c in reversed(list(enumerate(self.rep)))
            if c
        ]
        return "+".join(terms) or "0"


def arithmetic(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch one of add, sub, mul, div, inv, neg, pow (b is the exponent)."""
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if op == "pow":
        return a ** int(b)
    if isinstance(b, FieldElement) and b.owner != a.owner:
        raise FieldMismatch(f"{a.owner!r} vs {b.owner!r}")
    ops = {
        "add": FieldElement.__add__,
        "sub": FieldElement.__sub__,
        "mul": FieldElement.__mul__,
        "div": FieldElement.__truediv__,
    }
    try:
        return ops[op](a, b)
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None


def all_vectors(f: FieldSpec, n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(f.q), repeat=n)
