"""
Cyclotomic quotients H_n^lambda(G) = H_n(G) / <g_lambda(x_1)>.

Reduction to the bounded basis {x^alpha g w : alpha_i < d} uses elements
Z_k of x-degree below d with x_k^d = Z_k modulo the ideal:

    Z_1 = x_1^d - g_lambda(x_1),
    Z_k = (x_k^d - s_{k-1} x_{k-1}^d s_{k-1}) + s_{k-1} Z_{k-1} s_{k-1}.

A term x^alpha g w whose largest overfull index is k becomes
x^{alpha - d e_k} Z_k g w; left multiplication by a monomial and right
multiplication by g w are free in PBW form, and the total degree drops.

Generator matrices are left multiplications on the bounded basis.  They
are sparse (scipy CSR, reduced mod p) over prime fields and dense numpy
arrays over extension fields.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import defaultdict
from dataclasses import dataclass, field as dc_field

import numpy as np
import scipy.sparse as sp

from . import linalg
from .hecke import HeckeAlgebra, HeckeElement, key_order
from .scalars import FieldSpec
from .wreath import (elements as wreath_elements, jucys_murphy, perm_identity, perm_inv,
                     perm_mul, reduced_word, simple_reflection, twist)


class NonTermination(RuntimeError):
    pass


class DimensionMismatch(RuntimeError):
    pass


class ZeroScalar(ValueError):
    pass


@dataclass(frozen=True)
class CycloWeight:
    """A finitely supported lambda: prime-field residue -> multiplicity."""

    p: int
    lam: tuple = ()          # sorted ((i, lambda_i), ...) with lambda_i > 0

    @classmethod
    def from_map(cls, p, mapping):
        agg = defaultdict(int)
        for i, v in mapping.items():
            if int(v) < 0:
                raise ValueError("weights must be non-negative")
            agg[int(i) % p] += int(v)
        return cls(p, tuple(sorted((i, v) for i, v in agg.items() if v)))

    @classmethod
    def from_json(cls, p, data):
        if isinstance(data, str):
            data = json.loads(data)
        if "lambda" in data:
            data = data["lambda"]
        return cls.from_map(p, data)

    @classmethod
    def fundamental(cls, p, i=0):
        return cls(p, ((i % p, 1),))

    def to_json(self):
        return {"lambda": {str(i): v for i, v in self.lam}}

    def __getitem__(self, i):
        return dict(self.lam).get(i % self.p, 0)

    @property
    def d(self):
        return sum(v for _, v in self.lam)

    def g_poly(self, field):
        """Coefficients (little-endian codes) of prod (x - i)^{lambda_i}; monic of degree d."""
        poly = [1]
        for i, mult in self.lam:
            root = field.embed(i)
            for _ in range(mult):
                new = [0] * (len(poly) + 1)
                for k, c in enumerate(poly):
                    new[k + 1] = field.add(new[k + 1], c)
                    new[k] = field.sub(new[k], field.mul(root, c))
                poly = new
        return poly


def lambda_bracket(lam: CycloWeight, k, c):
    """lambda[k] with <h_i, lambda[k]> = lambda_{i c_k}; ``c`` is a list of codes or
    the output of ``c_scalars``."""
    ck = c[k]
    if isinstance(ck, dict):
        if not ck.get("integral", True):
            raise ValueError(f"c_{k} is not in the prime field")
        ck = ck["c"]
    ck = int(ck)
    if ck >= lam.p:
        raise ValueError(f"c_{k} is not in the prime field")
    if ck % lam.p == 0:
        raise ZeroScalar(f"c_{k} = 0")
    return CycloWeight.from_map(lam.p, {i: lam[i * ck] for i in range(lam.p)})


# --- sparse/dense matrix helpers ---------------------------------------------

class _Mats:
    def __init__(self, field):
        self.field = field
        self.sparse = field.m == 1

    def build(self, N, entries):
        """entries: iterable of (row, col, code)."""
        F = self.field
        if self.sparse:
            rows, cols, data = [], [], []
            for r, c, v in entries:
                rows.append(r)
                cols.append(c)
                data.append(v)
            M = sp.csr_matrix((np.array(data, dtype=np.int64), (rows, cols)), shape=(N, N))
            M.sum_duplicates()
            return self._clean(M)
        M = np.zeros((N, N), dtype=np.int64)
        for r, c, v in entries:
            M[r, c] = F.add(int(M[r, c]), v)
        return M

    def _clean(self, M):
        M = M.tocsr()
        M.data %= self.field.p
        M.eliminate_zeros()
        return M

    def mul(self, A, B):
        if self.sparse:
            return self._clean(A @ B)
        return self.field.dot(A, B)

    def add(self, A, B):
        if self.sparse:
            return self._clean(A + B)
        return self.field.vadd(A, B)

    def sub(self, A, B):
        if self.sparse:
            return self._clean(A + B * (self.field.p - 1))
        return self.field.vsub(A, B)

    def scale(self, A, c):
        if self.sparse:
            return self._clean(A * int(c))
        return self.field.vmul(A, c)

    def eye(self, N):
        if self.sparse:
            return sp.identity(N, dtype=np.int64, format="csr")
        return np.eye(N, dtype=np.int64)

    def zero(self, N):
        if self.sparse:
            return sp.csr_matrix((N, N), dtype=np.int64)
        return np.zeros((N, N), dtype=np.int64)

    def equal(self, A, B):
        if self.sparse:
            return self.sub(A, B).nnz == 0
        return np.array_equal(A, B)

    def apply(self, A, v):
        if self.sparse:
            return np.asarray(A @ v) % self.field.p
        return self.field.dot(A, v)

    def dense(self, A):
        return A.toarray() if self.sparse else A


# --- the quotient --------------------------------------------------------------

class CycloAlgebra:
    """H_n^lambda(G) with its bounded PBW basis and generator matrices."""

    def __init__(self, G, n, weight: CycloWeight, field: FieldSpec, check=True):
        if weight.d < 1:
            raise ValueError("the quotient needs d >= 1")
        if weight.p != field.p:
            raise ValueError("weight and field have different characteristic")
        self.G, self.n, self.weight, self.field = G, n, weight, field
        self.d = weight.d
        self.H = HeckeAlgebra(G, n, field)
        self._Z = {}
        self.basis = sorted(
            ((alpha, g, w)
             for alpha in itertools.product(range(self.d), repeat=n)
             for g in itertools.product(range(G.order), repeat=n)
             for w in itertools.permutations(range(n))),
            key=key_order)
        self.index = {k: i for i, k in enumerate(self.basis)}
        self.mats = _Mats(field)
        self._x = {}
        self._s = {}
        self._g = {}
        self.steps = 0
        if check:
            self.verify_dimension()

    @property
    def dim(self):
        return len(self.basis)

    def expected_dim(self):
        return self.d ** self.n * math.factorial(self.n) * self.G.order ** self.n

    def __repr__(self):
        return f"CycloAlgebra(n={self.n}, G={self.G.name}, {self.weight.to_json()}, {self.field!r})"

    # --- reduction ---

    def Z(self, k):
        """The degree < d representative of x_k^d, as a term dict."""
        if k not in self._Z:
            H, F, d = self.H, self.field, self.d
            if k == 1:
                g = self.weight.g_poly(F)
                terms = {}
                for j in range(d):
                    if g[j]:
                        alpha = [0] * self.n
                        alpha[0] = j
                        terms[(tuple(alpha), H.e, H.id_perm)] = F.neg(g[j])
                z = HeckeElement(H, terms)
            else:
                s = H.s(k - 1)
                prev = HeckeElement(H, self.Z(k - 1))
                xk = [0] * self.n
                xk[k - 1] = d
                xk1 = [0] * self.n
                xk1[k - 2] = d
                z = (H.monomial(xk) - s * H.monomial(xk1) * s) + s * prev * s
            if z.degree() >= d and z.terms:
                raise NonTermination(f"Z_{k} has degree {z.degree()} >= d")
            self._Z[k] = z.terms
        return self._Z[k]

    def reduce(self, a: HeckeElement) -> HeckeElement:
        """The image of a on the bounded basis."""
        if a.H != self.H:
            raise ValueError("element from a different algebra")
        F, G, d, n = self.field, self.G, self.d, self.n
        table = G.table
        out = dict(a.terms)
        budget = 10 * (a.degree() + 1) * n * math.factorial(n)
        rounds = 0
        while True:
            bad = [k for k in out if any(x >= d for x in k[0])]
            if not bad:
                break
            rounds += 1
            if rounds > budget:
                raise NonTermination("reduction exceeded its step budget")
            top = max(sum(k[0]) for k in bad)
            for key in bad:
                if sum(key[0]) != top:
                    continue
                c = out.pop(key)
                alpha, g, w = key
                k = max(i for i in range(n) if alpha[i] >= d) + 1
                rest = list(alpha)
                rest[k - 1] -= d
                for (gamma, h, v), z in self.Z(k).items():
                    # x^rest (x^gamma h v) g w = x^{rest+gamma} (h . v(g)) (v w)
                    vg = twist(v, g)
                    nk = (tuple(x + y for x, y in zip(rest, gamma)),
                          tuple(table[x][y] for x, y in zip(h, vg)), perm_mul(v, w))
                    val = F.add(out.get(nk, 0), F.mul(c, z))
                    if val:
                        out[nk] = val
                    else:
                        out.pop(nk, None)
            self.steps += 1
        return HeckeElement(self.H, out)

    def mul(self, a, b):
        return self.reduce(a * b)

    # --- coordinates ---

    def coords(self, a: HeckeElement):
        """Coordinate vector of a bounded element."""
        v = np.zeros(self.dim, dtype=np.int64)
        for k, c in a.terms.items():
            v[self.index[k]] = c
        return v

    def element(self, v):
        return HeckeElement(self.H, {self.basis[i]: int(c) for i, c in enumerate(v) if c})

    def unit_vector(self):
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.index[((0,) * self.n, self.H.e, self.H.id_perm)]] = 1
        return v

    # --- generator matrices ---

    def _matrix_from(self, image_of):
        entries = []
        for j, key in enumerate(self.basis):
            red = self.reduce(image_of(key))
            for k, c in red.terms.items():
                entries.append((self.index[k], j, c))
        return self.mats.build(self.dim, entries)

    def x_matrix(self, k):
        if k not in self._x:
            H = self.H

            def img(key):
                alpha, g, w = key
                a = list(alpha)
                a[k - 1] += 1
                return HeckeElement(H, {(tuple(a), g, w): 1})

            self._x[k] = self._matrix_from(img)
        return self._x[k]

    def s_matrix(self, i):
        if i not in self._s:
            H = self.H

            def img(key):
                return HeckeElement(H, H.left_s(i, {key: 1}))

            self._s[i] = self._matrix_from(img)
        return self._s[i]

    def g_matrix(self, g):
        """Left multiplication by g in G^n: a permutation of the basis."""
        g = tuple(g)
        if g not in self._g:
            table = self.G.table
            entries = []
            for j, (alpha, h, w) in enumerate(self.basis):
                gh = tuple(table[a][b] for a, b in zip(g, h))
                entries.append((self.index[(alpha, gh, w)], j, 1))
            self._g[g] = self.mats.build(self.dim, entries)
        return self._g[g]

    def slot_matrix(self, a, j):
        g = [0] * self.n
        g[j - 1] = a
        return self.g_matrix(tuple(g))

    def t_matrix(self, i, j):
        G = self.G
        M = self.mats.zero(self.dim)
        for u in range(G.order):
            g = [0] * self.n
            g[i - 1] = u
            g[j - 1] = G.inverse[u]
            M = self.mats.add(M, self.g_matrix(tuple(g)))
        return M

    def perm_matrix(self, w):
        M = self.mats.eye(self.dim)
        for i in reduced_word(tuple(w)):
            M = self.mats.mul(M, self.s_matrix(i))
        return M

    def act_vector(self, a: HeckeElement, v):
        """a . v computed with generator matrices only."""
        F = self.field
        out = np.zeros(self.dim, dtype=np.int64)
        for (alpha, g, w), c in a.terms.items():
            u = v
            for i in reversed(reduced_word(w)):
                u = self.mats.apply(self.s_matrix(i), u)
            u = self.mats.apply(self.g_matrix(g), u)
            for k, e in enumerate(alpha):
                for _ in range(e):
                    u = self.mats.apply(self.x_matrix(k + 1), u)
            out = F.vadd(out, F.vmul(u, c))
        return out

    def linear_reduce(self, a):
        """Reduction by acting on 1 with generator matrices (independent of ``reduce``
        beyond single generator steps)."""
        return self.element(self.act_vector(a, self.unit_vector()))

    # --- dimension certificate ---

    def module_checks(self):
        """The generator matrices satisfy the defining relations, g_lambda(X_1) = 0,
        and every basis key maps 1 to its own basis vector."""
        M, n, G, F = self.mats, self.n, self.G, self.field
        N = self.dim
        X = [None] + [self.x_matrix(k) for k in range(1, n + 1)]
        S = [None] + [self.s_matrix(i) for i in range(1, n)]
        slots = [(a, j) for j in range(1, n + 1) for a in G.generators]
        checks = []

        def rec(name, ok):
            checks.append({"name": name, "pass": bool(ok)})

        I = M.eye(N)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                rec(f"X{i} X{j} = X{j} X{i}", M.equal(M.mul(X[i], X[j]), M.mul(X[j], X[i])))
            for a, j in slots:
                g = self.slot_matrix(a, j)
                rec(f"X{i} g = g X{i} ({a} in slot {j})", M.equal(M.mul(X[i], g), M.mul(g, X[i])))
        for i in range(1, n):
            rec(f"S{i}^2 = 1", M.equal(M.mul(S[i], S[i]), I))
            for j in range(i + 2, n):
                rec(f"S{i} S{j} = S{j} S{i}", M.equal(M.mul(S[i], S[j]), M.mul(S[j], S[i])))
            if i + 1 < n:
                rec(f"braid {i}", M.equal(M.mul(M.mul(S[i], S[i + 1]), S[i]),
                                          M.mul(M.mul(S[i + 1], S[i]), S[i + 1])))
            rec(f"S{i} X{i} = X{i + 1} S{i} - T",
                M.equal(M.mul(S[i], X[i]), M.sub(M.mul(X[i + 1], S[i]), self.t_matrix(i, i + 1))))
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    rec(f"S{i} X{j} = X{j} S{i}", M.equal(M.mul(S[i], X[j]), M.mul(X[j], S[i])))
            for a, j in slots:
                g = [0] * n
                g[j - 1] = a
                sg = self.g_matrix(twist(simple_reflection(n, i), tuple(g)))
                rec(f"S{i} g = (s{i}.g) S{i} ({a} in slot {j})",
                    M.equal(M.mul(S[i], self.g_matrix(tuple(g))), M.mul(sg, S[i])))
        # g_lambda(X_1) = 0
        poly = self.weight.g_poly(F)
        acc = M.zero(N)
        for c in reversed(poly):
            acc = M.add(M.mul(acc, X[1]), M.scale(I, c))
        rec("g_lambda(X1) = 0", M.equal(acc, M.zero(N)))
        # x^alpha g w . 1 = basis vector
        one = self.unit_vector()
        ok = True
        for key in self.basis:
            v = self.act_vector(HeckeElement(self.H, {key: 1}), one)
            if v[self.index[key]] != 1 or np.count_nonzero(v) != 1:
                ok = False
                break
        rec("basis keys act freely on 1", ok)
        return checks

    def verify_dimension(self):
        checks = self.module_checks()
        if not all(c["pass"] for c in checks) or self.dim != self.expected_dim():
            failed = [c["name"] for c in checks if not c["pass"]]
            raise DimensionMismatch(f"bounded basis is not a basis: {failed}")
        return checks

    def subalgebra_dim(self, gens):
        """dim of the subalgebra generated by the given matrices (spinning 1)."""
        dense = [self.mats.dense(g) for g in gens]
        B = linalg.spin(self.unit_vector()[None, :], dense, self.field)
        return B.shape[0]


def build_cyclo(G, n, weight, field, check=True):
    return CycloAlgebra(G, n, weight, field, check=check)


def cyclo_dimension_report(G, n, weight, field):
    A = CycloAlgebra(G, n, weight, field, check=False)
    checks = A.module_checks()
    expected = A.expected_dim()
    checks.append({"name": "basis count = d^n n! |G|^n", "pass": A.dim == expected})
    return {"name": "cyclotomic dimension", "group": G.name, "n": n, "p": field.p,
            "weight": weight.to_json(), "dim": A.dim, "expected": expected,
            "checks": checks, "pass": all(c["pass"] for c in checks)}


def corollary_subalgebra_check(A: CycloAlgebra):
    """The subalgebra generated by x_1..x_{n-1}, s_1..s_{n-2} and G^n has
    dimension d^{n-1} (n-1)! |G|^{n-1} |G|."""
    n, G = A.n, A.G
    gens = [A.x_matrix(k) for k in range(1, n)] + [A.s_matrix(i) for i in range(1, n - 1)]
    gens += [A.slot_matrix(a, j) for j in range(1, n + 1) for a in G.generators]
    got = A.subalgebra_dim(gens)
    want = A.d ** (n - 1) * math.factorial(n - 1) * G.order ** n
    return {"name": "H_{n-1}^lambda x G subalgebra", "dim": got, "expected": want,
            "pass": got == want}


def group_algebra_matrix(A: CycloAlgebra, elem):
    """Left multiplication on FG_n by a group algebra element, in the basis (0, g, w)."""
    G, F = A.G, A.field
    entries = []
    table = G.table
    for j, (alpha, h, v) in enumerate(A.basis):
        for (g, w), c in elem.terms.items():
            # (g, w)(h, v) = (g . w(h), w v)
            wh = twist(w, h)
            key = (alpha, tuple(table[a][b] for a, b in zip(g, wh)), perm_mul(w, v))
            entries.append((A.index[key], j, c))
    return A.mats.build(A.dim, entries)


def cyclo_vs_group_algebra(G, n, field):
    """Matrices of x_k, s_i, g in H_n^{Lambda_0}(G) equal left multiplication by
    xi_k, s_i, g on FG_n (basis key (0, g, w) <-> group element (g, w))."""
    from .wreath import ga_element, ga_s, ga_slot
    A = CycloAlgebra(G, n, CycloWeight.fundamental(field.p, 0), field, check=False)
    M = A.mats
    checks = A.module_checks()
    for k in range(1, n + 1):
        L = group_algebra_matrix(A, jucys_murphy(G, n, k, field))
        checks.append({"name": f"x{k} -> xi{k}", "pass": M.equal(A.x_matrix(k), L)})
    for i in range(1, n):
        L = group_algebra_matrix(A, ga_s(G, n, field, i))
        checks.append({"name": f"s{i} -> s{i}", "pass": M.equal(A.s_matrix(i), L)})
    for j in range(1, n + 1):
        for a in G.generators:
            L = group_algebra_matrix(A, ga_slot(G, n, field, a, j))
            checks.append({"name": f"g={a} in slot {j}", "pass": M.equal(A.slot_matrix(a, j), L)})
    checks.append({"name": "dim = |G_n|",
                   "pass": A.dim == math.factorial(n) * G.order ** n})
    return {"name": "H^Lambda0 vs FG_n", "group": G.name, "n": n, "p": field.p,
            "checks": checks, "pass": all(c["pass"] for c in checks)}
