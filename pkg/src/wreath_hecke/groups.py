"""
Finite groups given by Cayley tables, their conjugacy classes, and their
irreducible representations over a splitting finite field.

Group elements are the indices ``0..|G|-1`` with ``0`` the identity and
``table[a][b]`` the index of the product ``ab``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import gcd

import numpy as np

from . import linalg
from .scalars import FieldSpec, find_splitting_field


class InvalidTable(ValueError):
    pass


class ModularGroupOrder(ValueError):
    """Raised when an operation needs p not to divide |G|."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: tuple
    name: str = "table"
    labels: tuple = ()

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    @cached_property
    def inverse(self):
        return tuple(row.index(0) for row in self.table)

    def inv(self, a):
        return self.inverse[a]

    @cached_property
    def np_table(self):
        return np.array(self.table, dtype=np.int64)

    @cached_property
    def np_inverse(self):
        return np.array(self.inverse, dtype=np.int64)

    @cached_property
    def orders(self):
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    def conj(self, h, g):
        """h g h^-1"""
        return self.table[self.table[h][g]][self.inverse[h]]

    @cached_property
    def generators(self):
        """A small generating set, chosen greedily in index order."""
        gens = []
        span = {0}
        for a in range(1, self.order):
            if a in span:
                continue
            gens.append(a)
            span = _closure(self, gens)
            if len(span) == self.order:
                break
        return tuple(gens)

    @cached_property
    def classes(self):
        """Conjugacy classes ordered by their smallest member."""
        seen = set()
        out = []
        for a in range(self.order):
            if a in seen:
                continue
            members = frozenset(self.conj(h, a) for h in range(self.order))
            seen |= members
            out.append(ConjugacyClass(min(members), members, self.orders[a]))
        return tuple(out)

    @cached_property
    def class_index(self):
        idx = [0] * self.order
        for k, c in enumerate(self.classes):
            for a in c.members:
                idx[a] = k
        return tuple(idx)

    def to_dict(self):
        return {"kind": "table", "table": [list(r) for r in self.table]}


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: frozenset
    order: int

    def __len__(self):
        return len(self.members)


def _closure(G, gens):
    span = {0}
    frontier = [0]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = G.table[a][g]
                if b not in span:
                    span.add(b)
                    new.append(b)
        frontier = new
    return span


def validate_table(table):
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise InvalidTable("table must be a non-empty square")
    T = np.asarray(table, dtype=np.int64)
    if T.min() < 0 or T.max() >= n:
        raise InvalidTable("entries out of range")
    if not (np.all(T[0] == np.arange(n)) and np.all(T[:, 0] == np.arange(n))):
        raise InvalidTable("index 0 is not a two-sided identity")
    for row in T:
        if len(set(row.tolist())) != n:
            raise InvalidTable("row is not a permutation (no inverses)")
    # (ab)c == a(bc) for all triples, vectorized
    left = T[T[:, :, None], np.arange(n)[None, None, :]]      # (ab)c
    right = T[np.arange(n)[:, None, None], T[None, :, :]]     # a(bc)
    if not np.array_equal(left, right):
        raise InvalidTable("multiplication is not associative")


def table_group(table, name="table", labels=()):
    table = tuple(tuple(int(x) for x in row) for row in table)
    validate_table(table)
    return FiniteGroup(table, name, tuple(labels))


def cyclic(r):
    """C_r with element a standing for the generator power a."""
    if r < 1:
        raise ValueError("cyclic order must be >= 1")
    return table_group([[(a + b) % r for b in range(r)] for a in range(r)], f"cyclic:{r}")


def dihedral(r):
    """Dihedral group of order 2r; index a + r*f encodes rot^a ref^f."""
    if r < 1:
        raise ValueError("dihedral parameter must be >= 1")

    def mul(x, y):
        a, f = x % r, x // r
        b, e = y % r, y // r
        # rot^a ref^f rot^b ref^e = rot^(a + (-1)^f b) ref^(f+e)
        c = (a + (b if f == 0 else -b)) % r
        return c + r * ((f + e) % 2)

    n = 2 * r
    return table_group([[mul(x, y) for y in range(n)] for x in range(n)], f"dihedral:{r}")


def symmetric(m):
    """S_m on one-line tuples in lexicographic order (identity first).

    Product is composition: (uv)(j) = u(v(j)).
    """
    if m < 0:
        raise ValueError("symmetric degree must be >= 0")
    perms = list(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(u[v[j]] for j in range(m))] for v in perms] for u in perms]
    labels = tuple(tuple(x + 1 for x in p) for p in perms)
    return table_group(table, f"symmetric:{m}", labels)


def build_group(spec):
    """Build a group from a JSON-like spec or a shorthand string such as ``cyclic:2``."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, str):
        s = spec.strip()
        if s.startswith("{"):
            spec = json.loads(s)
        else:
            kind, _, arg = s.partition(":")
            kind = kind.strip().lower()
            if kind == "trivial":
                return cyclic(1)
            if not arg:
                raise ValueError(f"group shorthand {spec!r} needs a parameter, e.g. cyclic:2")
            spec = {"kind": kind, "r" if kind != "symmetric" else "m": int(arg)}
    kind = spec.get("kind")
    if kind == "cyclic":
        return cyclic(int(spec["r"]))
    if kind == "dihedral":
        return dihedral(int(spec["r"]))
    if kind == "symmetric":
        return symmetric(int(spec.get("m", spec.get("r"))))
    if kind == "trivial":
        return cyclic(1)
    if kind == "table":
        return table_group(spec["table"])
    raise ValueError(f"unknown group kind {kind!r}")


def p_regular_classes(G, p):
    """Conjugacy classes whose elements have order prime to p."""
    return [c for c in G.classes if gcd(c.order, p) == 1]


def exponent(G):
    e = 1
    for o in G.orders:
        e = e * o // gcd(e, o)
    return e


def class_sum_matrices(G, field):
    """Multiplication by each class sum on the class-sum basis of Z(FG)."""
    k = len(G.classes)
    idx = G.class_index
    mats = []
    for A in G.classes:
        M = np.zeros((k, k), dtype=np.int64)
        for j, B in enumerate(G.classes):
            # A_sum * B_sum = sum over classes C of (#pairs landing on rep of C) C_sum
            counts = [0] * k
            for a in A.members:
                for b in B.members:
                    c = G.table[a][b]
                    if c == G.classes[idx[c]].representative:
                        counts[idx[c]] += 1
            for i, n in enumerate(counts):
                M[i, j] = field.embed(n)
        mats.append(M)
    return mats


def splits(G, field):
    """True iff the field splits FG (p not dividing |G|).

    Finite fields have trivial Brauer group, so this is the case exactly when
    every central character takes values in the field, i.e. every class sum
    acts diagonalizably with eigenvalues in the field on the center.
    """
    k = len(G.classes)
    for M in class_sum_matrices(G, field):
        total = sum(k - linalg.rank(field.vsub(M, field.vmul(np.eye(k, dtype=np.int64), a)), field)
                    for a in field.elements())
        if total != k:
            return False
    return True


def splitting_field(G, p):
    """Smallest GF(p^m) splitting FG.

    The search is bounded by the field generated by roots of unity of every
    element order, which always splits.
    """
    if G.order % p == 0:
        raise ModularGroupOrder(f"p={p} divides |G|={G.order}")
    bound = find_splitting_field(p, set(G.orders))
    for m in range(1, bound.m):
        F = FieldSpec(p, m)
        if splits(G, F):
            return F
    return bound


# --- representations -------------------------------------------------------

@dataclass
class Irrep:
    label: int
    dim: int
    matrices: np.ndarray          # shape (|G|, d, d), field codes
    field: FieldSpec = dc_field(repr=False)

    def __call__(self, g):
        return self.matrices[g]

    def trace(self, g):
        t = 0
        for i in range(self.dim):
            t = self.field.add(t, int(self.matrices[g, i, i]))
        return t

    @property
    def character(self):
        return tuple(self.trace(g) for g in range(len(self.matrices)))


def regular_matrices(G):
    """Left regular representation: L_g e_h = e_{gh}."""
    n = G.order
    mats = np.zeros((n, n, n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            mats[g, G.table[g][h], h] = 1
    return mats


def hom_space(mats_a, mats_b, field):
    """Basis of Hom(A, B): matrices X (dim B x dim A) with B(g) X = X A(g) for all given g."""
    da = mats_a[0].shape[0]
    db = mats_b[0].shape[0]
    eqs = []
    Ia = np.eye(da, dtype=np.int64)
    Ib = np.eye(db, dtype=np.int64)
    for A, B in zip(mats_a, mats_b):
        # vec(B X - X A) with row-major vec: (B kron I) - (I kron A^T)
        eqs.append(field.vsub(np.kron(B, Ia), np.kron(Ib, A.T)))
    N = linalg.nullspace(np.concatenate(eqs, axis=0), field)
    return [N[:, j].reshape(db, da) for j in range(N.shape[1])]


def endomorphism_dim(mats, field):
    return len(hom_space(mats, mats, field))


def _split_once(mats, field, rng, tries=64):
    """Find a proper direct-sum decomposition using a random endomorphism, or None."""
    End = hom_space(mats, mats, field)
    if len(End) <= 1:
        return None
    d = mats[0].shape[0]
    for _ in range(tries):
        coeffs = rng.integers(0, field.q, size=len(End))
        X = np.zeros((d, d), dtype=np.int64)
        for c, E in zip(coeffs, End):
            X = field.vadd(X, field.vmul(E, int(c)))
        for a in linalg.eigenvalues(X, field):
            K = linalg.generalized_kernel(X, a, field)
            if 0 < K.shape[0] < d:
                B = field.vsub(X, field.vmul(np.eye(d, dtype=np.int64), a))
                Im = linalg.row_basis(linalg.mat_pow(B, d, field).T, field)
                return K, Im
    raise RuntimeError("failed to split a module with non-trivial endomorphism ring")


def _restrict_all(mats, S, field):
    return np.array([linalg.restrict(M, S, field) for M in mats])


def decompose_semisimple(mats, field, seed=0):
    """Split a semisimple module into absolutely irreducible summands (list of matrix stacks)."""
    rng = np.random.default_rng(seed)
    todo = [np.asarray(mats)]
    done = []
    while todo:
        M = todo.pop()
        parts = _split_once(M, field, rng)
        if parts is None:
            done.append(M)
        else:
            for S in parts:
                todo.append(_restrict_all(M, S, field))
    return done


def irreps(G, field=None, p=None, seed=0):
    """Complete list of irreducible representations of G over `field` (p must not divide |G|)."""
    if field is None:
        field = splitting_field(G, p)
    if G.order % field.p == 0:
        raise ModularGroupOrder(f"p={field.p} divides |G|={G.order}")
    reg = regular_matrices(G)
    pieces = decompose_semisimple(reg, field, seed)
    distinct = []
    for P in pieces:
        if endomorphism_dim(P, field) != 1:
            raise RuntimeError("field does not split the group algebra")
        if not any(Q.shape[1] == P.shape[1] and hom_space(P, Q, field) for Q in distinct):
            distinct.append(P)
    out = []
    for P in distinct:
        ir = Irrep(0, P.shape[1], P, field)
        out.append(ir)
    out.sort(key=lambda ir: (ir.dim, ir.character))
    for k, ir in enumerate(out):
        ir.label = k
    total = sum(ir.dim ** 2 for ir in out)
    if total != G.order:
        raise RuntimeError(f"sum of squared dimensions {total} != |G| = {G.order}")
    return out
