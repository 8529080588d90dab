"""
Exact arithmetic in the finite field GF(p^m).

Elements are encoded as integers ``0 <= code < p**m``; the code of
``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` is ``sum(c_i * p**i)``.  With this
encoding the prime subring ``Z.1`` is exactly ``{0, ..., p-1}`` and
``embed_int(k)`` is ``k % p``.

All heavy code works on integer codes (python ints or numpy integer arrays)
through the table-backed methods of :class:`FieldSpec`.  :class:`FieldElement`
is a thin operator-overloading wrapper for interactive use.
"""

from __future__ import annotations

import itertools
import json
from functools import cached_property

import numpy as np


class InversionOfZero(ZeroDivisionError):
    pass


class OrderDivisibleByP(ValueError):
    pass


def is_prime(p):
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


# --- polynomials over GF(p), little-endian coefficient lists ---------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    """Remainder of a modulo b over GF(p) (b nonzero)."""
    a = _trim(x % p for x in a)
    b = _trim(x % p for x in b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        f = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        a = _trim(a)
    return a


def is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    f = _trim(x % p for x in modulus)
    m = len(f) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p, m):
    """Lexicographically smallest monic irreducible of degree m over GF(p)."""
    for low in itertools.product(range(p), repeat=m):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldSpec:
    """GF(p^m) given by a monic irreducible modulus of degree m."""

    def __init__(self, p, m=1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = smallest_irreducible(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus {modulus} is not monic of degree {m}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p ** m

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    # --- serialization ---

    def to_dict(self):
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d):
        if isinstance(d, str):
            d = json.loads(d)
        return cls(int(d["p"]), int(d.get("m", 1)), d.get("modulus"))

    # --- encoding ---

    def coeffs(self, code):
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def from_coeffs(self, coeffs):
        coeffs = _poly_mod(list(coeffs) or [0], self.modulus, self.p) if len(coeffs) > self.m \
            else [c % self.p for c in coeffs]
        return sum(c * self.p ** i for i, c in enumerate(coeffs))

    def elements(self):
        return range(self.q)

    def __call__(self, k):
        return FieldElement(self, self.embed(k))

    def embed(self, k):
        """Code of k.1 for an integer k."""
        return int(k) % self.p

    # --- tables ---

    def _mul_codes(self, a, b):
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        return self.from_coeffs(_poly_mod(prod, self.modulus, self.p) or [0])

    @cached_property
    def _tables(self):
        q, p = self.q, self.p
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            ca = self.coeffs(a)
            for b in range(q):
                cb = self.coeffs(b)
                add[a, b] = self.from_coeffs([(x + y) % p for x, y in zip(ca, cb)])
                mul[a, b] = self._mul_codes(a, b)
        neg = np.array([self.from_coeffs([(-x) % p for x in self.coeffs(a)]) for a in range(q)],
                       dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        return add, mul, neg, inv

    @cached_property
    def add_tab(self):
        return self._tables[0].tolist()

    @cached_property
    def mul_tab(self):
        return self._tables[1].tolist()

    @cached_property
    def neg_tab(self):
        return self._tables[2].tolist()

    @cached_property
    def inv_tab(self):
        return self._tables[3].tolist()

    # --- scalar (python int) arithmetic ---

    def add(self, a, b):
        return self.add_tab[a][b]

    def sub(self, a, b):
        return self.add_tab[a][self.neg_tab[b]]

    def mul(self, a, b):
        return self.mul_tab[a][b]

    def neg(self, a):
        return self.neg_tab[a]

    def inv(self, a):
        if a == 0:
            raise InversionOfZero("inverse of zero in " + repr(self))
        return self.inv_tab[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def in_prime_field(self, a):
        return a < self.p

    def order(self, a):
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise InversionOfZero("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def root_of_unity(self, r):
        """An element of exact multiplicative order r (r | q-1)."""
        if (self.q - 1) % r:
            raise ValueError(f"{self!r} has no primitive {r}-th root of unity")
        for a in range(1, self.q):
            if self.order(a) == r:
                return a
        raise AssertionError("unreachable")

    # --- numpy (vectorized) arithmetic on code arrays ---

    def vadd(self, a, b):
        if self.m == 1:
            return (np.asarray(a) + b) % self.p
        return self._tables[0][a, b]

    def vsub(self, a, b):
        if self.m == 1:
            return (np.asarray(a) - b) % self.p
        return self._tables[0][a, self._tables[2][b]]

    def vmul(self, a, b):
        if self.m == 1:
            return (np.asarray(a) * b) % self.p
        return self._tables[1][a, b]

    def vneg(self, a):
        if self.m == 1:
            return (-np.asarray(a)) % self.p
        return self._tables[2][a]

    def vinv(self, a):
        if np.any(np.asarray(a) == 0):
            raise InversionOfZero("inverse of zero in " + repr(self))
        return self._tables[3][a]

    def dot(self, A, B):
        """Matrix product of code arrays."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.m == 1:
            # exact in float64: every partial sum is below k * (p-1)^2 << 2^53
            return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64) % self.p
        squeeze = B.ndim == 1
        if squeeze:
            B = B[:, None]
        C = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        add, mul = self._tables[0], self._tables[1]
        for k in range(A.shape[1]):
            C = add[C, mul[A[:, k][:, None], B[k][None, :]]]
        return C[:, 0] if squeeze else C


class FieldElement:
    """An element of GF(p^m) with arithmetic operators."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = int(code)

    @property
    def coeffs(self):
        return self.field.coeffs(self.code)

    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.code
        return self.field.embed(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._lift(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._lift(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._lift(other), self.code))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._lift(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.code))

    def __truediv__(self, other):
        return self * FieldElement(self.field, self._lift(other)).inverse()

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow(self.code, k))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.embed(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        if self.field.m == 1:
            return f"{self.code}"
        terms = [f"{c}x^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"


def embed_int(k, spec):
    """The element k.1 of the field (a ring homomorphism Z -> GF(p^m))."""
    return FieldElement(spec, spec.embed(k))


def find_splitting_field(p, orders):
    """
    Smallest GF(p^m) containing primitive roots of unity of every given order.

    >>> find_splitting_field(2, {3}).m
    2
    """
    orders = set(int(o) for o in orders) or {1}
    bad = [o for o in orders if o % p == 0]
    if bad:
        raise OrderDivisibleByP(f"orders {sorted(bad)} are divisible by p={p}")
    m = 1
    while any((p ** m - 1) % o for o in orders):
        m += 1
    return FieldSpec(p, m)
