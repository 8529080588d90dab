"""
The wreath product G_n = G^n x| S_n, conjugacy types, p-regular class
counting, and the group algebra FG_n with its Jucys-Murphy elements.

Permutations are zero-indexed one-line tuples internally, composed as
functions: ``(w*t)[j] = w[t[j]]``.  The twisted tuple ``w.g`` satisfies
``(w.g)[w[j]] = g[j]``, i.e. ``(w.g)_j = g_{w^-1(j)}``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import gcd
from typing import NamedTuple

from .groups import FiniteGroup, p_regular_classes
from .scalars import FieldSpec


class SizeMismatch(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


# --- permutations -----------------------------------------------------------

def perm_mul(w, t):
    return tuple(w[j] for j in t)


def perm_inv(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x] = i
    return tuple(out)


def perm_identity(n):
    return tuple(range(n))


def transposition(n, i, j):
    w = list(range(n))
    w[i], w[j] = w[j], w[i]
    return tuple(w)


def simple_reflection(n, i):
    """s_i swapping positions i and i+1 (1-indexed i)."""
    return transposition(n, i - 1, i)


def twist(w, g):
    out = [0] * len(g)
    for j, x in enumerate(g):
        out[w[j]] = x
    return tuple(out)


def cycles(w):
    seen = [False] * len(w)
    out = []
    for i in range(len(w)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = w[j]
        out.append(tuple(cyc))
    return out


def reduced_word(w):
    """Indices (1-based) i_1..i_l with w = s_{i_1} ... s_{i_l}, by bubble sort."""
    a = list(w)
    word = []
    # bubble sort a to the identity by right multiplication a <- a s_i
    changed = True
    while changed:
        changed = False
        for i in range(len(a) - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                word.append(i + 1)
                changed = True
    # w s_{j_1} ... s_{j_l} = 1  =>  w = s_{j_l} ... s_{j_1}
    return tuple(reversed(word))


def length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def bruhat_le(u, w):
    """Tableau criterion for u <= w in the Bruhat order of S_n."""
    if len(u) != len(w):
        raise SizeMismatch("permutations of different sizes")
    for i in range(1, len(u)):
        if any(a > b for a, b in zip(sorted(u[:i]), sorted(w[:i]))):
            return False
    return True


# --- wreath elements --------------------------------------------------------

class WreathElement(NamedTuple):
    g: tuple
    w: tuple

    @property
    def n(self):
        return len(self.w)

    def to_dict(self):
        return {"g": list(self.g), "w": [x + 1 for x in self.w]}

    @classmethod
    def from_dict(cls, d):
        w = tuple(int(x) - 1 for x in d["w"])
        g = tuple(int(x) for x in d["g"])
        if sorted(w) != list(range(len(w))) or len(g) != len(w):
            raise SizeMismatch("invalid wreath element")
        return cls(g, w)


def identity(n):
    return WreathElement((0,) * n, perm_identity(n))


def wreath_mul(G: FiniteGroup, a: WreathElement, b: WreathElement) -> WreathElement:
    """(g, w)(h, t) = (g . w.h, w t)."""
    if len(a.w) != len(b.w):
        raise SizeMismatch(f"sizes {len(a.w)} and {len(b.w)} differ")
    wh = twist(a.w, b.g)
    return WreathElement(tuple(G.table[x][y] for x, y in zip(a.g, wh)), perm_mul(a.w, b.w))


def wreath_inv(G, a):
    winv = perm_inv(a.w)
    return WreathElement(twist(winv, tuple(G.inverse[x] for x in a.g)), winv)


def elements(G, n):
    for w in itertools.permutations(range(n)):
        for g in itertools.product(range(G.order), repeat=n):
            yield WreathElement(g, w)


def generators(G, n):
    """Group generators of G on the first slot together with the simple reflections."""
    if n == 0:
        return []
    gens = [WreathElement((x,) + (0,) * (n - 1), perm_identity(n)) for x in G.generators]
    gens += [WreathElement((0,) * n, simple_reflection(n, i)) for i in range(1, n)]
    return gens


def element_order(G, a):
    k, x = 1, a
    e = identity(len(a.w))
    while x != e:
        x = wreath_mul(G, x, a)
        k += 1
    return k


# --- types ------------------------------------------------------------------

def type_of(G, a):
    """Type of a: tuple indexed by the classes of G, each entry a partition.

    For a cycle i_1 -> i_2 -> ... -> i_k of w the cycle product
    g_{i_k} ... g_{i_1} contributes a part k to its class.
    """
    parts = [[] for _ in G.classes]
    for cyc in cycles(a.w):
        prod = 0
        for i in cyc:                      # left-multiply in order i_1, i_2, ...
            prod = G.table[a.g[i]][prod]
        parts[G.class_index[prod]].append(len(cyc))
    return tuple(tuple(sorted(p, reverse=True)) for p in parts)


def type_to_dict(G, rho):
    return {str(G.classes[k].representative): list(p) for k, p in enumerate(rho) if p}


def conjugacy_classes(G, n):
    """Brute-force conjugacy classes of G_n (orbits under conjugation by generators)."""
    elems = list(elements(G, n))
    index = {e: i for i, e in enumerate(elems)}
    gens = generators(G, n)
    gens_inv = [wreath_inv(G, s) for s in gens]
    parent = list(range(len(elems)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, e in enumerate(elems):
        for s, si in zip(gens, gens_inv):
            j = index[wreath_mul(G, wreath_mul(G, s, e), si)]
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes = {}
    for i, e in enumerate(elems):
        classes.setdefault(find(i), []).append(e)
    return list(classes.values())


def brute_force_p_regular_count(G, p, n):
    """Number of conjugacy classes of G_n whose elements have order prime to p."""
    return sum(1 for cls in conjugacy_classes(G, n) if gcd(element_order(G, cls[0]), p) == 1)


def partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def enumerate_types(G, n, p=None):
    """All types of G_n; with p given, only those supported on p-regular classes
    whose partitions have no part divisible by p."""
    if p is None:
        allowed = list(range(len(G.classes)))
    else:
        regular = set(c.representative for c in p_regular_classes(G, p))
        allowed = [k for k, c in enumerate(G.classes) if c.representative in regular]
    k = len(allowed)

    def ok(lam):
        return p is None or all(x % p for x in lam)

    def rec(i, remaining):
        if i == k:
            if remaining == 0:
                yield ()
            return
        for size in range(remaining + 1):
            for lam in partitions(size):
                if ok(lam):
                    for rest in rec(i + 1, remaining - size):
                        yield (lam,) + rest

    for combo in rec(0, n):
        rho = [()] * len(G.classes)
        for idx, lam in zip(allowed, combo):
            rho[idx] = lam
        yield tuple(rho)


def p_regular_type_count(G, p, n):
    return sum(1 for _ in enumerate_types(G, n, p))


def class_count_series(G, p, N):
    """Coefficients of prod_{p does not divide m} (1 - q^m)^(-|G_p*|) up to q^N, over Z."""
    k = len(p_regular_classes(G, p))
    coeffs = [1] + [0] * N
    for m in range(1, N + 1):
        if m % p == 0:
            continue
        for _ in range(k):
            # multiply by 1/(1 - q^m) = 1 + q^m + q^2m + ...
            for d in range(m, N + 1):
                coeffs[d] += coeffs[d - m]
    return coeffs


# --- group algebra ----------------------------------------------------------

class GroupAlgebraElement:
    """Sparse element of FG_n: map WreathElement -> field code (no zeros stored)."""

    __slots__ = ("G", "n", "field", "terms")

    def __init__(self, G, n, field, terms=None):
        self.G = G
        self.n = n
        self.field = field
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def _compatible(self, other):
        if self.n != other.n or self.G != other.G or self.field != other.field:
            raise SizeMismatch("incompatible group algebra elements")

    def __add__(self, other):
        self._compatible(other)
        out = dict(self.terms)
        F = self.field
        for k, v in other.terms.items():
            out[k] = F.add(out.get(k, 0), v)
        return GroupAlgebraElement(self.G, self.n, F, out)

    def __neg__(self):
        F = self.field
        return GroupAlgebraElement(self.G, self.n, F, {k: F.neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        return GroupAlgebraElement(self.G, self.n, F, {k: F.mul(c, v) for k, v in self.terms.items()})

    def __mul__(self, other):
        self._compatible(other)
        F, G = self.field, self.G
        out = {}
        for a, u in self.terms.items():
            for b, v in other.terms.items():
                c = wreath_mul(G, a, b)
                out[c] = F.add(out.get(c, 0), F.mul(u, v))
        return GroupAlgebraElement(G, self.n, F, out)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"GroupAlgebraElement({len(self.terms)} terms)"

    def is_zero(self):
        return not self.terms


def ga_zero(G, n, field):
    return GroupAlgebraElement(G, n, field)


def ga_element(G, n, field, g=None, w=None, coeff=1):
    g = tuple(g) if g is not None else (0,) * n
    w = tuple(w) if w is not None else perm_identity(n)
    return GroupAlgebraElement(G, n, field, {WreathElement(g, w): field.embed(coeff)})


def ga_slot(G, n, field, x, i):
    """The element x^{(i)} of G^n (1-indexed slot i)."""
    g = [0] * n
    g[i - 1] = x
    return ga_element(G, n, field, g)


def ga_s(G, n, field, i):
    return ga_element(G, n, field, None, simple_reflection(n, i))


def ga_t(G, n, field, i, j):
    """t_ij = sum_h h^(i) (h^-1)^(j)."""
    terms = {}
    for h in range(G.order):
        g = [0] * n
        g[i - 1] = h
        g[j - 1] = G.inverse[h]
        key = WreathElement(tuple(g), perm_identity(n))
        terms[key] = field.add(terms.get(key, 0), 1)
    return GroupAlgebraElement(G, n, field, terms)


def jucys_murphy(G, n, k, field=None):
    """xi_k = sum_{i<k} sum_g (g^(i) (g^-1)^(k), (i,k))."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"k={k} outside 1..{n}")
    if field is None:
        field = FieldSpec(2)
    terms = {}
    for i in range(1, k):
        w = transposition(n, i - 1, k - 1)
        for h in range(G.order):
            g = [0] * n
            g[i - 1] = h
            g[k - 1] = G.inverse[h]
            key = WreathElement(tuple(g), w)
            terms[key] = field.add(terms.get(key, 0), 1)
    return GroupAlgebraElement(G, n, field, terms)


def verify_jm_identities(G, n, field):
    """Check the Jucys-Murphy commutation identities as exact equalities in FG_n."""
    xi = [None] + [jucys_murphy(G, n, k, field) for k in range(1, n + 1)]
    checks = []

    def record(name, ok):
        checks.append({"name": name, "pass": bool(ok)})

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            record(f"xi{i} xi{j} = xi{j} xi{i}", xi[i] * xi[j] == xi[j] * xi[i])
    for i in range(1, n + 1):
        ok = True
        for slot in range(1, n + 1):
            for x in G.generators:
                g = ga_slot(G, n, field, x, slot)
                ok &= g * xi[i] == xi[i] * g
        record(f"g xi{i} = xi{i} g", ok)
    for i in range(1, n):
        s = ga_s(G, n, field, i)
        t = ga_t(G, n, field, i, i + 1)
        record(f"s{i} xi{i} = xi{i + 1} s{i} - t{i},{i + 1}", s * xi[i] == xi[i + 1] * s - t)
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                record(f"s{i} xi{j} = xi{j} s{i}", s * xi[j] == xi[j] * s)
    return {"group": G.name, "n": n, "p": field.p, "checks": checks,
            "pass": all(c["pass"] for c in checks)}


def type_counter(G, n):
    """Multiset of types over all elements of G_n (used by tests and the CLI)."""
    return Counter(type_of(G, a) for a in elements(G, n))
