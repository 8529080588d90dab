"""
Explicit modules given by generator matrices.

Generator names used throughout:

    s{i}        simple transposition s_i
    x{k}        polynomial generator of H_n(G)
    y{k}        polynomial generator of a degenerate affine Hecke algebra H_n-hat
    g{j}:{a}    the group element a of G sitting in slot j of G^n

Matrices act on column vectors.  Algebra tags: "FSm" (symmetric group),
"FGn" (wreath product group algebra), "Hn(G)" (wreath Hecke algebra or one of
its cyclotomic quotients) and "Hnhat" (tensor product of degenerate affine
Hecke algebras attached to a composition).

The Morita functors F and G, isotypic and eigenvalue decompositions, the
socle-of-restriction branching data and the e/f functors are built on top of
exact Hom-space solves.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .groups import hom_space, irreps as group_irreps, splitting_field
from .hecke import HeckeAlgebra, c_scalars, place_swap
from .scalars import FieldSpec
from .wreath import (SizeMismatch, elements as wreath_elements, p_regular_type_count,
                     partitions, perm_inv, perm_mul, reduced_word, simple_reflection,
                     transposition, twist, wreath_mul, WreathElement)


class NotPRegular(ValueError):
    pass


class NotSemisimple(ValueError):
    pass


class ScalarUnavailable(ValueError):
    pass


class IncompleteSimpleList(RuntimeError):
    pass


# --- combinatorics -------------------------------------------------------------

def is_p_regular(mu, p):
    mu = [x for x in mu if x]
    return all(mu.count(v) < p for v in set(mu))


def compositions(n, r):
    """All r-tuples of non-negative integers summing to n (lexicographically descending)."""
    if r == 0:
        return [()] if n == 0 else []
    out = []
    for first in range(n, -1, -1):
        for rest in compositions(n - first, r - 1):
            out.append((first,) + rest)
    return out


def multipartitions(n, r, p=None):
    """r-tuples of partitions of total size n, each p-regular when p is given."""
    out = []
    for comp in compositions(n, r):
        parts = []
        for m in comp:
            ps = [tuple(x) for x in partitions(m)] if m else [()]
            if p is not None:
                ps = [mu for mu in ps if is_p_regular(mu, p)]
            parts.append(ps)
        out.extend(itertools.product(*parts))
    return out


def coset_reps(comp):
    """Minimal length representatives of left cosets of the Young subgroup S_comp:
    permutations increasing on every block, identity first."""
    n = sum(comp)
    blocks = []
    start = 0
    for m in comp:
        blocks.append(range(start, start + m))
        start += m
    reps = []
    for w in itertools.permutations(range(n)):
        if all(w[b[i]] < w[b[i + 1]] for b in blocks for i in range(len(b) - 1)):
            reps.append(w)
    reps.sort(key=lambda w: (sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j]), w))
    return reps


def slot_labels(comp):
    """l_j for each slot j: the index of the block containing j."""
    out = []
    for k, m in enumerate(comp):
        out.extend([k] * m)
    return tuple(out)


def internal_reflections(comp):
    """Indices j (1-based) with s_j in the Young subgroup S_comp."""
    labels = slot_labels(comp)
    return [j for j in range(1, len(labels)) if labels[j - 1] == labels[j]]


# --- the module type ------------------------------------------------------------

@dataclass
class MatrixModule:
    algebra: str
    field: FieldSpec
    dim: int
    gens: dict
    n: int = 0
    G: object = dc_field(default=None, repr=False)
    comp: tuple = None
    label: object = None

    def __repr__(self):
        return f"MatrixModule({self.algebra}, n={self.n}, dim={self.dim}, label={self.label})"

    def gen(self, name):
        return self.gens[name]

    def names(self):
        return sorted(self.gens)

    def identity(self):
        return np.eye(self.dim, dtype=np.int64)

    def to_json(self):
        return {"algebra": self.algebra, "n": self.n, "field": self.field.to_dict(),
                "dim": self.dim, "comp": list(self.comp) if self.comp is not None else None,
                "generators": {k: self.gens[k].tolist() for k in self.names()}}

    @classmethod
    def from_json(cls, data, G=None):
        if isinstance(data, str):
            data = json.loads(data)
        field = FieldSpec.from_dict(data["field"]) if "field" in data else FieldSpec(int(data["p"]))
        gens = {k: np.asarray(v, dtype=np.int64) % field.q for k, v in data["generators"].items()}
        dim = int(data.get("dim") or next(iter(gens.values())).shape[0])
        comp = tuple(data["comp"]) if data.get("comp") else None
        return cls(data.get("algebra", "FGn"), field, dim, gens, int(data.get("n", 0)), G, comp)

    # --- derived matrices ---

    def slot(self, j, a):
        name = f"g{j}:{a}"
        if name in self.gens:
            return self.gens[name]
        return self._group_word(j, a)

    def _group_word(self, j, a):
        """Slot matrix of a written as a word in the stored generators of G."""
        G, F = self.G, self.field
        stored = {int(k.split(":")[1]): v for k, v in self.gens.items()
                  if k.startswith(f"g{j}:")}
        if a == 0:
            return self.identity()
        frontier = {x: M for x, M in stored.items()}
        known = dict(frontier)
        known[0] = self.identity()
        while a not in known:
            new = {}
            for x, M in frontier.items():
                for y, N in stored.items():
                    z = G.mul(x, y)
                    if z not in known and z not in new:
                        new[z] = F.dot(M, N)
            if not new:
                raise KeyError(f"g{j}:{a} is not generated by the stored slot matrices")
            known.update(new)
            frontier = new
        self.gens[f"g{j}:{a}"] = known[a]
        return known[a]

    def group_matrix(self, g):
        F = self.field
        M = self.identity()
        for j, a in enumerate(g):
            if a:
                M = F.dot(M, self.slot(j + 1, a))
        return M

    def perm_matrix(self, w):
        F = self.field
        M = self.identity()
        for i in reduced_word(tuple(w)):
            M = F.dot(M, self.gens[f"s{i}"])
        return M

    def element_matrix(self, g, w):
        """Matrix of the wreath element (g, w) = g . w."""
        return self.field.dot(self.group_matrix(g), self.perm_matrix(w))

    def jm_matrix(self, k):
        """xi_k = sum_{i<k} sum_h h^(i) (h^-1)^(k) (i,k)."""
        F, G, n = self.field, self.G, self.n
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i in range(1, k):
            P = self.perm_matrix(transposition(n, i - 1, k - 1))
            for h in range(G.order):
                g = [0] * n
                g[i - 1] = h
                g[k - 1] = G.inverse[h]
                out = F.vadd(out, F.dot(self.group_matrix(tuple(g)), P))
        return out

    def with_jm(self):
        """The H_n(G)-module obtained through x_k -> xi_k."""
        gens = dict(self.gens)
        for k in range(1, self.n + 1):
            gens[f"x{k}"] = self.jm_matrix(k)
        return MatrixModule("Hn(G)", self.field, self.dim, gens, self.n, self.G, self.comp, self.label)

    def x(self, k):
        if f"x{k}" in self.gens:
            return self.gens[f"x{k}"]
        return self.jm_matrix(k)

    # --- constructions ---

    def restrict(self, S, names=None):
        """Submodule with row basis S (invariant under the named generators)."""
        names = names or self.names()
        gens = {k: linalg.restrict(self.gens[k], S, self.field) for k in names}
        return MatrixModule(self.algebra, self.field, S.shape[0], gens, self.n, self.G, self.comp)

    def quotient(self, S, names=None):
        names = names or self.names()
        gens = {k: linalg.quotient(self.gens[k], S, self.field) for k in names}
        return MatrixModule(self.algebra, self.field, self.dim - S.shape[0], gens, self.n,
                            self.G, self.comp)

    def direct_sum(self, other):
        if set(self.gens) != set(other.gens):
            raise SizeMismatch("direct sum of modules with different generators")
        gens = {k: linalg.block_diag([self.gens[k], other.gens[k]]) for k in self.gens}
        return MatrixModule(self.algebra, self.field, self.dim + other.dim, gens, self.n,
                            self.G, self.comp)

    def subset(self, names):
        return MatrixModule(self.algebra, self.field, self.dim, {k: self.gens[k] for k in names},
                            self.n, self.G, self.comp, self.label)

    # --- relation checks ---

    def check_relations(self):
        F, n = self.field, self.n
        checks = []
        eq = np.array_equal

        def rec(name, ok):
            checks.append({"name": name, "pass": bool(ok)})

        def mm(*ms):
            out = ms[0]
            for m in ms[1:]:
                out = F.dot(out, m)
            return out

        I = self.identity()
        s = {int(k[1:]): v for k, v in self.gens.items() if k.startswith("s")}
        for i, S in s.items():
            rec(f"s{i}^2 = 1", eq(mm(S, S), I))
            if i + 1 in s:
                T = s[i + 1]
                rec(f"braid {i}", eq(mm(S, T, S), mm(T, S, T)))
            for j, T in s.items():
                if j > i + 1:
                    rec(f"s{i} s{j} commute", eq(mm(S, T), mm(T, S)))
        if self.G is not None and self.algebra in ("FGn", "Hn(G)"):
            G = self.G
            slots = {}
            for k, v in self.gens.items():
                if k.startswith("g"):
                    j, a = k[1:].split(":")
                    slots[(int(j), int(a))] = v
            for (j, a), A in slots.items():
                for (j2, b), B in slots.items():
                    if j2 == j:
                        ab = G.mul(a, b)
                        rec(f"slot {j}: {a}*{b}", eq(mm(A, B), self.slot(j, ab)))
                    elif j2 > j:
                        rec(f"slots {j},{j2} commute", eq(mm(A, B), mm(B, A)))
                for i, S in s.items():
                    g = [0] * n
                    g[j - 1] = a
                    sg = twist(simple_reflection(n, i), tuple(g))
                    rec(f"s{i} g{j}:{a} = (s.g) s{i}", eq(mm(S, A), mm(self.group_matrix(sg), S)))
        if self.algebra == "Hn(G)":
            G = self.G
            X = {k: self.gens[f"x{k}"] for k in range(1, n + 1) if f"x{k}" in self.gens}
            for k, A in X.items():
                for l, B in X.items():
                    if l > k:
                        rec(f"x{k} x{l} commute", eq(mm(A, B), mm(B, A)))
                for name, gm in self.gens.items():
                    if name.startswith("g"):
                        rec(f"x{k} {name} commute", eq(mm(A, gm), mm(gm, A)))
            for i, S in s.items():
                t = np.zeros_like(I)
                for h in range(G.order):
                    g = [0] * n
                    g[i - 1] = h
                    g[i] = G.inverse[h]
                    t = F.vadd(t, self.group_matrix(tuple(g)))
                if i in X and i + 1 in X:
                    rec(f"s{i} x{i} = x{i + 1} s{i} - t",
                        eq(mm(S, X[i]), F.vsub(mm(X[i + 1], S), t)))
                for k, A in X.items():
                    if k not in (i, i + 1):
                        rec(f"s{i} x{k} commute", eq(mm(S, A), mm(A, S)))
        if self.algebra == "Hnhat":
            Y = {int(k[1:]): v for k, v in self.gens.items() if k.startswith("y")}
            for k, A in Y.items():
                for l, B in Y.items():
                    if l > k:
                        rec(f"y{k} y{l} commute", eq(mm(A, B), mm(B, A)))
            for i, S in s.items():
                rec(f"s{i} y{i} = y{i + 1} s{i} - 1", eq(mm(S, Y[i]), F.vsub(mm(Y[i + 1], S), I)))
                for k, A in Y.items():
                    if k not in (i, i + 1):
                        rec(f"s{i} y{k} commute", eq(mm(S, A), mm(A, S)))
        return checks


# --- Hom spaces and isomorphism --------------------------------------------------

def hom(M: MatrixModule, N: MatrixModule, names=None):
    """Basis of Hom(M, N): matrices X (dim N x dim M) intertwining the named generators."""
    names = names or sorted(set(M.gens) & set(N.gens))
    if M.dim == 0 or N.dim == 0:
        return []
    if not names:
        return [m for m in _unit_matrices(N.dim, M.dim)]
    return hom_space([M.gens[k] for k in names], [N.gens[k] for k in names], M.field)


def _unit_matrices(r, c):
    for i in range(r):
        for j in range(c):
            E = np.zeros((r, c), dtype=np.int64)
            E[i, j] = 1
            yield E


def is_isomorphic(M, N, names=None, seed=0):
    """Search the Hom space for an invertible element (exhaustive when small)."""
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    basis = hom(M, N, names)
    if not basis:
        return False
    F = M.field
    h = len(basis)
    if F.q ** h <= 4096:
        combos = (c for c in itertools.product(range(F.q), repeat=h) if any(c))
    else:
        rng = random.Random(seed)
        combos = ([rng.randrange(F.q) for _ in range(h)] for _ in range(200))
    for c in combos:
        X = np.zeros_like(basis[0])
        for ci, B in zip(c, basis):
            if ci:
                X = F.vadd(X, F.vmul(B, ci))
        if linalg.is_invertible(X, F):
            return True
    return False


def endomorphism_dim(M, names=None):
    return len(hom(M, M, names))


def coords_in(basis, Y, field):
    """Coordinates of Y in the span of the matrices in ``basis`` (None if outside)."""
    B = np.stack([b.reshape(-1) for b in basis], axis=1)
    return linalg.solve(B, Y.reshape(-1), field)


def operator_on_hom(basis, op, field):
    """Matrix of phi -> op(phi) on the space spanned by ``basis``."""
    cols = []
    for b in basis:
        c = coords_in(basis, op(b), field)
        if c is None:
            raise ValueError("operator does not preserve the Hom space")
        cols.append(c)
    return np.stack(cols, axis=1) if cols else np.zeros((0, 0), dtype=np.int64)


# --- symmetric group simples --------------------------------------------------------

def _tabloids(mu, m):
    rows = []

    def rec(remaining, i, acc):
        if i == len(mu):
            rows.append(tuple(acc))
            return
        for comb in itertools.combinations(sorted(remaining), mu[i]):
            rec(remaining - set(comb), i + 1, acc + [comb])

    rec(set(range(1, m + 1)), 0, [])
    return rows


def standard_tableaux(mu):
    m = sum(mu)
    out = []

    def rec(k, rows):
        if k > m:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(mu)):
            if len(rows[i]) < mu[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1, rows)
                rows[i].pop()

    rec(1, [[] for _ in mu])
    return out


def _perm_sign(perm):
    sign = 1
    seen = set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def specht_module(mu, field):
    """Specht module S^mu in the polytabloid basis: (matrices of s_i, Gram matrix)."""
    mu = tuple(x for x in mu if x)
    m = sum(mu)
    tabs = _tabloids(mu, m)
    index = {tuple(frozenset(r) for r in t): i for i, t in enumerate(tabs)}
    stds = standard_tableaux(mu)
    E = np.zeros((len(stds), len(tabs)), dtype=np.int64)
    for r, T in enumerate(stds):
        cols = [[T[i][j] for i in range(len(mu)) if j < mu[i]] for j in range(mu[0])] if mu else []
        for perms in itertools.product(*[list(itertools.permutations(range(len(c)))) for c in cols]):
            sign = 1
            relabel = {}
            for c, pm in zip(cols, perms):
                sign *= _perm_sign(pm)
                for a, b in zip(c, pm):
                    relabel[a] = c[b]
            key = tuple(frozenset(relabel[x] for x in row) for row in T)
            E[r, index[key]] = field.add(int(E[r, index[key]]), field.embed(sign))
    mats = {}
    for i in range(1, m):
        perm = []
        for t in tabs:
            sw = tuple(frozenset({i: i + 1, i + 1: i}.get(x, x) for x in row) for row in t)
            perm.append(index[sw])
        # image of each polytabloid under s_i, then coordinates in the polytabloid basis
        img = np.zeros_like(E)
        img[:, perm] = E
        coords = linalg.solve(E.T, img.T, field)
        mats[f"s{i}"] = coords
    gram = field.dot(E, E.T)
    return mats, gram


def specht_simple(mu, p, field=None):
    """D^mu = S^mu / rad of the bilinear form, for p-regular mu."""
    field = field or FieldSpec(p)
    mu = tuple(x for x in mu if x)
    if not is_p_regular(mu, p):
        raise NotPRegular(f"{mu} is not {p}-regular")
    m = sum(mu)
    if m <= 1:
        return MatrixModule("FSm", field, 1, {}, m, label=mu)
    mats, gram = specht_module(mu, field)
    rad = linalg.left_nullspace(gram, field)
    if rad.shape[0]:
        rad = linalg.row_basis(rad, field)
        mats = {k: linalg.quotient(v, rad, field) for k, v in mats.items()}
    dim = next(iter(mats.values())).shape[0]
    return MatrixModule("FSm", field, dim, mats, m, label=mu)


# --- tensor modules V(n-hat) ------------------------------------------------------

def tensor_slot_matrices(irreps, labels, G, field, gens_only=False):
    """Matrices of a in slot j on V_{l_1} (x) ... (x) V_{l_n}, keyed by 'g{j}:{a}'."""
    dims = [irreps[l].dim for l in labels]
    elems = G.generators if gens_only else range(1, G.order)
    out = {}
    for j, l in enumerate(labels):
        for a in elems:
            M = np.eye(1, dtype=np.int64)
            for jj, d in enumerate(dims):
                M = linalg.kron(M, irreps[l].matrices[a] if jj == j else np.eye(d, dtype=np.int64),
                                field)
            out[f"g{j + 1}:{a}"] = M
    return out


def induce(G, n, comp, W_gens, dimW, field, with_x=False, H=None):
    """ind from the Young-type subalgebra attached to comp up to FG_n (or H_n(G)).

    W_gens holds the slot matrices g{j}:{a} for all nonidentity a, the internal s{j}
    and, when with_x is set, x{k}.  Basis: tau (x) w over minimal coset reps tau.
    """
    reps = coset_reps(comp)
    ridx = {w: i for i, w in enumerate(reps)}
    R = len(reps)
    N = R * dimW
    I_W = np.eye(dimW, dtype=np.int64)

    def Wg(g):
        M = I_W
        for j, a in enumerate(g):
            if a:
                M = field.dot(M, W_gens[f"g{j + 1}:{a}"])
        return M

    def put(M, r, c, B):
        M[r * dimW:(r + 1) * dimW, c * dimW:(c + 1) * dimW] = B

    gens = {}
    for i in range(1, n):
        S = np.zeros((N, N), dtype=np.int64)
        si = simple_reflection(n, i)
        for c, tau in enumerate(reps):
            sig = perm_mul(si, tau)
            if sig in ridx:
                put(S, ridx[sig], c, I_W)
            else:
                tinv = perm_inv(tau)
                a, b = sorted((tinv[i - 1], tinv[i]))
                if b != a + 1:
                    raise AssertionError("coset representative bookkeeping failed")
                put(S, c, c, W_gens[f"s{a + 1}"])
        gens[f"s{i}"] = S
    for j in range(1, n + 1):
        for a in range(1, G.order):
            M = np.zeros((N, N), dtype=np.int64)
            g = [0] * n
            g[j - 1] = a
            for c, tau in enumerate(reps):
                put(M, c, c, Wg(twist(perm_inv(tau), tuple(g))))
            gens[f"g{j}:{a}"] = M
    if with_x:
        H = H or HeckeAlgebra(G, n, field)

        def perm_ind(u):
            M = np.eye(N, dtype=np.int64)
            for i in reduced_word(u):
                M = field.dot(M, gens[f"s{i}"])
            return M

        for k in range(1, n + 1):
            X = np.zeros((N, N), dtype=np.int64)
            for c, tau in enumerate(reps):
                parts = H.left_form(H.x(k) * H.perm(tau))
                col = np.zeros((N, dimW), dtype=np.int64)
                for u, pu in parts.items():
                    Wp = np.zeros((dimW, dimW), dtype=np.int64)
                    for (alpha, g, _), coef in pu.terms.items():
                        T = Wg(g)
                        for kk, e in enumerate(alpha):
                            for _ in range(e):
                                T = field.dot(W_gens[f"x{kk + 1}"], T)
                        Wp = field.vadd(Wp, field.vmul(T, coef))
                    # u . (1 (x) Wp w): the identity coset occupies block 0
                    col = field.vadd(col, field.dot(perm_ind(u)[:, :dimW], Wp))
                X[:, c * dimW:(c + 1) * dimW] = col
            gens[f"x{k}"] = X
    return MatrixModule("Hn(G)" if with_x else "FGn", field, N, gens, n, G, comp)


def simple_wreath_module(G, comp, mus, field=None, irreps=None, p=None):
    """D^{mu.}_{n-hat} = ind_{G_n-hat}^{G_n} ((V_1^{n_1} (x) D^{mu^1}) (x) ...)."""
    if field is None:
        field = splitting_field(G, p)
    if irreps is None:
        irreps = group_irreps(G, field)
    comp = tuple(comp)
    if len(mus) != len(comp) or any(sum(mu) != m for mu, m in zip(mus, comp)):
        raise SizeMismatch(f"partitions {mus} do not match composition {comp}")
    n = sum(comp)
    labels = slot_labels(comp)
    Ds = [specht_simple(mu, field.p, field) for mu in mus]
    dimV = int(np.prod([irreps[l].dim for l in labels])) if n else 1
    dimD = int(np.prod([D.dim for D in Ds]))
    dimW = dimV * dimD
    Vs = tensor_slot_matrices(irreps, labels, G, field)
    I_D = np.eye(dimD, dtype=np.int64)
    W = {k: linalg.kron(v, I_D, field) for k, v in Vs.items()}
    dims_V = [irreps[l].dim for l in labels]
    offset = 0
    for b, (m, D) in enumerate(zip(comp, Ds)):
        for jj in range(1, m):
            j = offset + jj
            P = place_swap(dims_V, j - 1, j)
            Dm = np.eye(1, dtype=np.int64)
            for bb, DD in enumerate(Ds):
                Dm = linalg.kron(Dm, DD.gens[f"s{jj}"] if bb == b else np.eye(DD.dim, dtype=np.int64),
                                 field)
            W[f"s{j}"] = linalg.kron(P, Dm, field)
        offset += m
    M = induce(G, n, comp, W, dimW, field)
    M.label = tuple(tuple(mu) for mu in mus)
    return M


def regular_module(G, n, field):
    """FG_n acting on itself by left multiplication."""
    elems = list(wreath_elements(G, n))
    idx = {e: i for i, e in enumerate(elems)}
    N = len(elems)
    gens = {}

    def left(x):
        M = np.zeros((N, N), dtype=np.int64)
        for j, e in enumerate(elems):
            M[idx[wreath_mul(G, x, e)], j] = 1
        return M

    ident = tuple(range(n))
    for i in range(1, n):
        gens[f"s{i}"] = left(WreathElement((0,) * n, simple_reflection(n, i)))
    for j in range(1, n + 1):
        for a in range(1, G.order):
            g = [0] * n
            g[j - 1] = a
            gens[f"g{j}:{a}"] = left(WreathElement(tuple(g), ident))
    return MatrixModule("FGn", field, N, gens, n, G)


def all_simples(G, n, field, irreps, p):
    """Every D^{mu.}_{n-hat} for p-regular multipartitions of n (r = number of irreps)."""
    r = len(irreps)
    out = []
    for mus in multipartitions(n, r, p):
        comp = tuple(sum(mu) for mu in mus)
        out.append(simple_wreath_module(G, comp, mus, field, irreps))
    return out


# --- Morita functors --------------------------------------------------------------

class MoritaData:
    """Irreps of G, the scalars c_k and the algebra H_n(G) for one (G, n, field)."""

    def __init__(self, G, n, field=None, p=None):
        if field is None:
            field = splitting_field(G, p)
        if G.order % field.p == 0:
            raise ScalarUnavailable("the clean Morita picture needs p not dividing |G|")
        self.G, self.n, self.field = G, n, field
        self.irreps = group_irreps(G, field)
        self.c = [c["c"] for c in c_scalars(G, field, self.irreps)]
        if any(c == 0 for c in self.c):
            raise ScalarUnavailable("some c_k vanishes")
        self.H = HeckeAlgebra(G, n, field)
        self.r = len(self.irreps)

    def V(self, comp, gens_only=False):
        return tensor_slot_matrices(self.irreps, slot_labels(comp), self.G, self.field, gens_only)

    def dimV(self, comp):
        return int(np.prod([self.irreps[l].dim for l in slot_labels(comp)])) if sum(comp) else 1


def functor_F(M: MatrixModule, data: MoritaData):
    """F(M)_comp = Hom_{FG^n}(V(comp), M) with the rescaled y-action and the
    place-permutation action of the internal s_j."""
    F, G, n = data.field, data.G, data.n
    out = {}
    for comp in compositions(n, data.r):
        V = data.V(comp, gens_only=True)
        names = sorted(V)
        basis = hom_space([V[k] for k in names], [M.slot(int(k[1:].split(":")[0]),
                                                        int(k.split(":")[1])) for k in names], F) \
            if names else list(_unit_matrices(M.dim, 1))
        if not basis:
            continue
        labels = slot_labels(comp)
        dims_V = [data.irreps[l].dim for l in labels]
        gens = {}
        for k in range(1, n + 1):
            inv = F.inv(data.c[labels[k - 1]])
            Xk = M.x(k)
            gens[f"y{k}"] = operator_on_hom(basis, lambda X, Xk=Xk, inv=inv: F.vmul(F.dot(Xk, X), inv), F)
        for j in internal_reflections(comp):
            P = place_swap(dims_V, j - 1, j)
            S = M.gens[f"s{j}"]
            gens[f"s{j}"] = operator_on_hom(basis, lambda X, S=S, P=P: F.dot(F.dot(S, X), P), F)
        out[comp] = MatrixModule("Hnhat", F, len(basis), gens, n, None, comp)
    return out


def functor_G(family, data: MoritaData):
    """G(U) = sum over comp of ind (V(comp) (x) U_comp) with g -> V(g) (x) 1,
    internal s_j -> P_j (x) U(s_j) and x_k -> c_{l_k} (1 (x) U(y_k))."""
    F, n = data.field, data.n
    total = None
    for comp, U in sorted(family.items(), reverse=True):
        if U.dim == 0:
            continue
        labels = slot_labels(comp)
        dims_V = [data.irreps[l].dim for l in labels]
        dimV = data.dimV(comp)
        I_U = np.eye(U.dim, dtype=np.int64)
        I_V = np.eye(dimV, dtype=np.int64)
        W = {k: linalg.kron(v, I_U, F) for k, v in data.V(comp).items()}
        for j in internal_reflections(comp):
            W[f"s{j}"] = linalg.kron(place_swap(dims_V, j - 1, j), U.gens[f"s{j}"], F)
        for k in range(1, n + 1):
            W[f"x{k}"] = F.vmul(linalg.kron(I_V, U.gens[f"y{k}"], F), data.c[labels[k - 1]])
        piece = induce(data.G, n, comp, W, dimV * U.dim, F, with_x=True, H=data.H)
        total = piece if total is None else total.direct_sum(piece)
    if total is None:
        return MatrixModule("Hn(G)", F, 0, {}, n, data.G)
    return total


def random_affine_module(comp, field, rng, dim=2, kind="jordan"):
    """A small non-simple module over the tensor product of degenerate affine Hecke
    algebras attached to comp (block sizes at most 2)."""
    n = sum(comp)
    p = field.p

    def jordan(d):
        Y = np.zeros((d, d), dtype=np.int64)
        a = rng.randrange(p)
        for i in range(d):
            Y[i, i] = a
            if i + 1 < d:
                Y[i, i + 1] = rng.randrange(1, p)
        return Y

    def random_upper(d):
        Y = np.zeros((d, d), dtype=np.int64)
        for i in range(d):
            for j in range(i, d):
                Y[i, j] = rng.randrange(p)
        return Y

    def poly_in(Y):
        a, b = rng.randrange(p), rng.randrange(p)
        return field.vadd(field.vmul(Y, a), field.vmul(np.eye(len(Y), dtype=np.int64), b))

    blocks = []
    for m in comp:
        if m > 2:
            raise ValueError("random modules are built for block sizes <= 2")
        if m == 0:
            blocks.append(None)
            continue
        Y1 = jordan(dim) if kind == "jordan" else random_upper(dim)
        if m == 1:
            blocks.append({"y1": Y1})
        else:
            Y2 = poly_in(Y1)
            d = dim
            Z = np.zeros((d, d), dtype=np.int64)
            I = np.eye(d, dtype=np.int64)
            s = np.block([[Z, I], [I, Z]])
            y1 = np.block([[Y1, field.vneg(I)], [Z, Y2]])
            y2 = np.block([[Y2, I], [Z, Y1]])
            blocks.append({"s1": s, "y1": y1, "y2": y2})
    # tensor the blocks together
    live = [(m, b) for m, b in zip(comp, blocks) if b is not None]
    dims = [len(b["y1"]) for _, b in live]
    total = int(np.prod(dims)) if dims else 1
    gens = {}
    pos = 0
    for li, (m, b) in enumerate(live):
        for name, Mb in b.items():
            M = np.eye(1, dtype=np.int64)
            for lj, d in enumerate(dims):
                M = linalg.kron(M, Mb if lj == li else np.eye(d, dtype=np.int64), field)
            gens[f"{name[0]}{pos + int(name[1:])}"] = M
        pos += m
    return MatrixModule("Hnhat", field, total, gens, n, None, tuple(comp))


def morita_round_trip(data: MoritaData, M=None, family=None):
    """Checks G(F(M)) ~ M, and F(G(U)) ~ U componentwise, by dimension and conjugacy."""
    checks = []
    if M is not None:
        FM = functor_F(M, data)
        dims = sum(U.dim * data.dimV(c) * len(coset_reps(c)) for c, U in FM.items())
        checks.append({"name": "sum |S_n:S_comp| dim V(comp) dim F(M)_comp = dim M",
                       "pass": dims == M.dim})
        GFM = functor_G(FM, data)
        checks.append({"name": "G(F(M)) ~ M", "pass": is_isomorphic(GFM, M)})
    if family is not None:
        GU = functor_G(family, data)
        checks.append({"name": "G(U) satisfies the relations",
                       "pass": all(c["pass"] for c in GU.check_relations())})
        FGU = functor_F(GU, data)
        ok = set(c for c, U in family.items() if U.dim) == set(FGU)
        for comp, U in family.items():
            if U.dim:
                ok = ok and comp in FGU and is_isomorphic(FGU[comp], U)
        checks.append({"name": "F(G(U)) ~ U", "pass": bool(ok)})
    return checks


# --- decompositions ----------------------------------------------------------------

def isotypic_decompose(M: MatrixModule, data: MoritaData):
    """comp -> (row basis of I_comp M, row basis of M_comp)."""
    F = data.field
    out = {}
    total = 0
    svecs = [M.gens[f"s{i}"] for i in range(1, data.n)]
    for comp in compositions(data.n, data.r):
        V = data.V(comp, gens_only=True)
        names = sorted(V)
        basis = hom_space([V[k] for k in names],
                          [M.slot(int(k[1:].split(":")[0]), int(k.split(":")[1])) for k in names], F) \
            if names else [np.eye(M.dim, dtype=np.int64)]
        if not basis:
            continue
        I = linalg.row_basis(np.concatenate([X.T for X in basis], axis=0), F)
        Mc = linalg.spin(I, svecs, F) if svecs else I
        if Mc.shape[0] != len(coset_reps(comp)) * I.shape[0]:
            raise NotSemisimple(f"M_{comp} has the wrong dimension")
        out[comp] = (I, Mc)
        total += Mc.shape[0]
    stacked = np.concatenate([v[1] for v in out.values()], axis=0) if out else np.zeros((0, M.dim))
    if total != M.dim or linalg.rank(stacked, F) != M.dim:
        raise NotSemisimple("isotypic components do not exhaust the module")
    return out


def projections(decomp, field):
    """Projection matrices (acting on columns) onto the summands of a direct-sum decomposition."""
    keys = list(decomp)
    bases = [decomp[k] if isinstance(decomp[k], np.ndarray) else decomp[k][1] for k in keys]
    T = np.concatenate(bases, axis=0).T
    Ti = linalg.inverse(T, field)
    out = {}
    start = 0
    for k, B in zip(keys, bases):
        D = np.zeros((T.shape[1],) * 2, dtype=np.int64)
        D[start:start + B.shape[0], start:start + B.shape[0]] = np.eye(B.shape[0], dtype=np.int64)
        out[k] = field.dot(T, field.dot(D, Ti))
        start += B.shape[0]
    return out


def _gen_eigenspaces(A, basis, field):
    """Generalized eigenspaces of A restricted to the invariant row space ``basis``."""
    if basis.shape[0] == 0:
        return {}
    R = linalg.restrict(A, basis, field)
    out = {}
    for a in linalg.eigenvalues(R, field):
        K = linalg.generalized_kernel(R, a, field)
        out[a] = linalg.row_basis(field.dot(K, basis), field)
    return out


def eigen_block_decompose(M: MatrixModule, which="last"):
    """'last': {a: Delta_a} for the last polynomial generator.
    'all': {(a_1..a_n): simultaneous generalized eigenspace}."""
    F, n = M.field, M.n
    full = np.eye(M.dim, dtype=np.int64)
    if n == 0 or M.dim == 0:
        return {(): full}
    xs = [M.x(k) for k in range(1, n + 1)]
    if which == "last":
        return _gen_eigenspaces(xs[-1], full, F)
    blocks = {(): full}
    for X in xs:
        new = {}
        for key, B in blocks.items():
            for a, S in _gen_eigenspaces(X, B, F).items():
                new[key + (a,)] = S
        blocks = new
    return blocks


def content_blocks(M: MatrixModule):
    """M[gamma] keyed by the sorted eigenvalue tuple gamma."""
    F = M.field
    out = {}
    for key, B in eigen_block_decompose(M, "all").items():
        g = tuple(sorted(key))
        out[g] = B if g not in out else linalg.row_basis(np.concatenate([out[g], B]), F)
    return out


def block_decompose(M: MatrixModule, data: MoritaData):
    """(comp, gamma) -> row basis of M[comp, gamma] = M_comp intersected with M[gamma]."""
    F = M.field
    iso = isotypic_decompose(M, data)
    cont = content_blocks(M)
    out = {}
    for comp, (_, Mc) in iso.items():
        for gamma, B in cont.items():
            S = linalg.intersect(Mc, B, F)
            if S.shape[0]:
                out[(comp, gamma)] = S
    return out


# --- branching ----------------------------------------------------------------------

@dataclass
class BranchReport:
    group: str
    p: int
    n: int
    entries: list          # dicts: simple, sub, k, a, i, multiplicity
    checks: list

    @property
    def ok(self):
        return all(c["pass"] for c in self.checks)

    def edges(self):
        """Crystal-style edges (source = smaller label, target, color (i, k))."""
        return sorted({(e["sub"], e["simple"], (e["i"], e["k"])) for e in self.entries
                       if e["multiplicity"] > 0})

    def to_json(self):
        return {"group": self.group, "p": self.p, "n": self.n,
                "entries": [dict(e, simple=_label_json(e["simple"]), sub=_label_json(e["sub"]))
                            for e in self.entries],
                "checks": self.checks, "pass": self.ok}


def _label_json(label):
    return [list(mu) for mu in label]


def subgroup_names(n, G):
    names = [f"s{i}" for i in range(1, n - 1)]
    names += [f"g{j}:{a}" for j in range(1, n + 1) for a in G.generators]
    return names


def product_with_irrep(D, V, n, G, field):
    """D' (x) V_k as a module for G_{n-1} x G inside G_n (generators as in subgroup_names)."""
    gens = {}
    I_V = np.eye(V.dim, dtype=np.int64)
    I_D = np.eye(D.dim, dtype=np.int64)
    for i in range(1, n - 1):
        gens[f"s{i}"] = linalg.kron(D.gens[f"s{i}"], I_V, field)
    for j in range(1, n):
        for a in G.generators:
            gens[f"g{j}:{a}"] = linalg.kron(D.slot(j, a), I_V, field)
    for a in G.generators:
        gens[f"g{n}:{a}"] = linalg.kron(I_D, V.matrices[a], field)
    return MatrixModule("FGn", field, D.dim * V.dim, gens, n, G)


def trivial_module(G, field, r):
    return MatrixModule("FGn", field, 1, {}, 0, G, (0,) * r, label=((),) * r)


def socle(D: MatrixModule, smaller, irreps, c, field):
    """Socle of the restriction of a simple FG_n-module to G_{n-1} x G.

    Returns (entries, socle row basis).  Each entry records the multiplicity of
    D' (x) V_k and the eigenvalue a of xi_n on the Hom space (color i = a / c_k)."""
    G, n = D.G, D.n
    names = subgroup_names(n, G)
    Dres = {k: (D.gens[k] if k.startswith("s") else D.slot(int(k[1:].split(":")[0]),
                                                          int(k.split(":")[1]))) for k in names}
    Xi = D.jm_matrix(n)
    entries = []
    images = []
    for Dp in smaller:
        for k, V in enumerate(irreps):
            S = product_with_irrep(Dp, V, n, G, field)
            basis = hom_space([S.gens[nm] for nm in names], [Dres[nm] for nm in names], field) \
                if names else list(_unit_matrices(D.dim, S.dim))
            if not basis:
                continue
            A = operator_on_hom(basis, lambda X: field.dot(Xi, X), field)
            eig = linalg.eigenvalues(A, field)
            for a in eig:
                mult = linalg.generalized_kernel(A, a, field).shape[0]
                entries.append({"simple": D.label, "sub": Dp.label, "k": k, "a": int(a),
                                "i": int(field.div(a, c[k])) if c[k] else None,
                                "multiplicity": int(mult), "scalar": len(eig) == 1 and
                                np.array_equal(A, field.vmul(np.eye(len(A), dtype=np.int64), a))})
            for X in basis:
                images.append(X.T)
    soc = linalg.row_basis(np.concatenate(images, axis=0), field) if images else \
        np.zeros((0, D.dim), dtype=np.int64)
    return entries, soc


def simple_lists(G, p, n_max, field=None):
    """Simple FG_m-modules for m = 0..n_max (with completeness and pairwise checks)."""
    field = field or splitting_field(G, p)
    irreps = group_irreps(G, field)
    r = len(irreps)
    lists = {0: [trivial_module(G, field, r)]}
    for m in range(1, n_max + 1):
        lists[m] = all_simples(G, m, field, irreps, p)
        expected = p_regular_type_count(G, p, m)
        if len(lists[m]) != expected:
            raise IncompleteSimpleList(f"{len(lists[m])} simples for n={m}, expected {expected}")
    return field, irreps, lists


def branch_verify(G, p, n_max, field=None):
    """Socle branching for FG_n, n = 1..n_max: multiplicity-freeness, scalar action of
    xi_n on each socle constituent, and the list of colored edges."""
    field, irreps, lists = simple_lists(G, p, n_max, field)
    try:
        c = [x["c"] for x in c_scalars(G, field, irreps)]
    except Exception:          # p | |G|: colors are not defined
        c = [0] * len(irreps)
    entries = []
    checks = []
    for n in range(1, n_max + 1):
        Ms = lists[n]
        checks.append({"name": f"n={n}: simple count = p-regular class count",
                       "pass": len(Ms) == p_regular_type_count(G, p, n)})
        if G.order % p:
            order = math.factorial(n) * G.order ** n
            if order % p:
                checks.append({"name": f"n={n}: sum dim^2 = |G_n|",
                               "pass": sum(M.dim ** 2 for M in Ms) == order})
        for M in Ms:
            e, soc = socle(M, lists[n - 1], irreps, c, field)
            entries.extend(e)
            checks.append({"name": f"n={n} {M.label}: socle nonzero", "pass": soc.shape[0] > 0})
            checks.append({"name": f"n={n} {M.label}: multiplicity-free",
                           "pass": all(x["multiplicity"] <= 1 and x["scalar"] for x in e)})
    return BranchReport(G.name, p, n_max, entries, checks)


# --- e and f functors -----------------------------------------------------------------

def e_functor(M: MatrixModule, i, k, data: MoritaData):
    """e_{i,chi^k} M = Hom_G(V_k, Delta_a M) with a = i c_k, an H_{n-1}(G)-module."""
    F, G, n = data.field, data.G, M.n
    a = F.mul(F.embed(i), data.c[k])
    X = M.x(n)
    Delta = linalg.generalized_kernel(X, a, F)
    names_small = [f"x{j}" for j in range(1, n)] + [f"s{j}" for j in range(1, n - 1)]
    names_small += [f"g{j}:{b}" for j in range(1, n) for b in range(1, G.order)]
    out_names = names_small
    if Delta.shape[0] == 0:
        return MatrixModule("Hn(G)", F, 0, {}, n - 1, G, label="zero")
    full = {nm: (M.gens[nm] if not nm.startswith("g") else
                 M.slot(int(nm[1:].split(":")[0]), int(nm.split(":")[1])))
            for nm in out_names}
    full.update({f"g{n}:{b}": M.slot(n, b) for b in G.generators})
    full[f"x{n}"] = X
    for j in range(1, n):
        full.setdefault(f"x{j}", M.x(j))
    sub = MatrixModule("Hn(G)", F, M.dim, full, n, G).restrict(Delta)
    V = data.irreps[k]
    basis = hom_space([V.matrices[b] for b in G.generators],
                      [sub.gens[f"g{n}:{b}"] for b in G.generators], F)
    if not basis:
        return MatrixModule("Hn(G)", F, 0, {}, n - 1, G, label="zero")
    gens = {nm: operator_on_hom(basis, lambda Y, A=sub.gens[nm]: F.dot(A, Y), F)
            for nm in out_names}
    return MatrixModule("Hn(G)", F, len(basis), gens, n - 1, G)


def _module_block(M, data, key):
    blocks = block_decompose(M, data)
    if key not in blocks:
        return None
    return M.restrict(blocks[key])


def f_functor(M: MatrixModule, i, k, weight, data_small: MoritaData, data_big: MoritaData):
    """f_{i,chi^k} M: the block [comp + e_k, gamma + i c_k] of the cyclotomic induction
    H^lambda_{n+1}(G) (x)_{H^lambda_n(G) x G} (M (x) V_k), taken block by block of M."""
    from .cyclotomic import CycloAlgebra
    F, G = data_small.field, data_small.G
    n = M.n
    a = F.mul(F.embed(i), data_small.c[k])
    A = CycloAlgebra(G, n + 1, weight, F, check=False)
    total = None
    for (comp, gamma), B in block_decompose(M, data_small).items():
        Mb = M.restrict(B)
        Q = cyclotomic_induction(A, Mb, data_small.irreps[k])
        target_comp = tuple(c + (1 if j == k else 0) for j, c in enumerate(comp))
        target_gamma = tuple(sorted(gamma + (a,)))
        blk = _module_block(Q, data_big, (target_comp, target_gamma))
        if blk is not None:
            total = blk if total is None else total.direct_sum(blk)
    if total is None:
        return MatrixModule("Hn(G)", F, 0, {}, n + 1, G, label="zero")
    return total


def cyclotomic_induction(A, M: MatrixModule, V):
    """A (x)_B (M (x) V) where B is generated by x_1..x_n, s_1..s_{n-1} and G^{n+1}
    inside A = H^lambda_{n+1}(G).  Returns an H_{n+1}(G)-module."""
    from .hecke import HeckeElement
    F, G = A.field, A.G
    n = A.n - 1
    DA = A.dim
    dW = M.dim * V.dim
    I_V = np.eye(V.dim, dtype=np.int64)
    I_M = np.eye(M.dim, dtype=np.int64)
    W = {}
    bnames = [f"x{j}" for j in range(1, n + 1)] + [f"s{j}" for j in range(1, n)]
    for j in range(1, n + 1):
        W[f"x{j}"] = linalg.kron(M.x(j), I_V, F)
    for j in range(1, n):
        W[f"s{j}"] = linalg.kron(M.gens[f"s{j}"], I_V, F)
    for j in range(1, n + 1):
        for b in G.generators:
            W[f"g{j}:{b}"] = linalg.kron(M.slot(j, b), I_V, F)
            bnames.append(f"g{j}:{b}")
    for b in G.generators:
        W[f"g{n + 1}:{b}"] = linalg.kron(I_M, V.matrices[b], F)
        bnames.append(f"g{n + 1}:{b}")

    H = A.H

    def right_matrix(name):
        if name.startswith("x"):
            el = H.x(int(name[1:]))
        elif name.startswith("s"):
            el = H.s(int(name[1:]))
        else:
            j, b = name[1:].split(":")
            el = H.slot(int(b), int(j))
        R = np.zeros((DA, DA), dtype=np.int64)
        for col, key in enumerate(A.basis):
            red = A.reduce(HeckeElement(H, {key: 1}) * el)
            for kk, cc in red.terms.items():
                R[A.index[kk], col] = cc
        return R

    I_A = np.eye(DA, dtype=np.int64)
    I_W = np.eye(dW, dtype=np.int64)
    rel = [F.vsub(linalg.kron(right_matrix(nm), I_W, F), linalg.kron(I_A, W[nm], F))
           for nm in bnames]
    K = linalg.row_basis(np.concatenate(rel, axis=1).T, F)
    left = {f"x{j}": A.mats.dense(A.x_matrix(j)) for j in range(1, n + 2)}
    left.update({f"s{j}": A.mats.dense(A.s_matrix(j)) for j in range(1, n + 1)})
    for j in range(1, n + 2):
        for b in range(1, G.order):
            left[f"g{j}:{b}"] = A.mats.dense(A.slot_matrix(b, j))
    gens = {nm: linalg.quotient(linalg.kron(L, I_W, F), K, F) for nm, L in left.items()}
    dim = DA * dW - K.shape[0]
    return MatrixModule("Hn(G)", F, dim, gens, n + 1, G)


def e_dimension_audit(M: MatrixModule, data: MoritaData):
    """sum over i, k of d_k dim e_{i,k} M equals dim M for integral modules."""
    F = data.field
    total = 0
    for k, V in enumerate(data.irreps):
        for i in range(F.p):
            total += V.dim * e_functor(M, i, k, data).dim
    return total == M.dim


# --- MeatAxe-style splitting ------------------------------------------------------------

def _random_algebra_element(mats, field, rng, terms=4):
    d = mats[0].shape[0]
    A = np.zeros((d, d), dtype=np.int64)
    for _ in range(terms):
        W = np.eye(d, dtype=np.int64)
        for _ in range(rng.randint(1, 3)):
            W = field.dot(W, mats[rng.randrange(len(mats))])
        A = field.vadd(A, field.vmul(W, rng.randrange(1, field.q)))
    return A


def find_submodule(mats, field, rng, tries=200):
    """A proper submodule (row basis), or None once Norton's test proves irreducibility."""
    d = mats[0].shape[0]
    if d <= 1:
        return None
    trans = [M.T for M in mats]
    for _ in range(tries):
        A = _random_algebra_element(mats, field, rng)
        for a in linalg.eigenvalues(A, field):
            B = field.vsub(A, field.vmul(np.eye(d, dtype=np.int64), a))
            K = linalg.nullspace(B, field).T
            for v in K:
                S = linalg.spin(v[None, :], mats, field)
                if S.shape[0] < d:
                    return S
            Kt = linalg.nullspace(B.T, field).T
            for u in Kt:
                U = linalg.spin(u[None, :], trans, field)
                if U.shape[0] < d:
                    ann = linalg.nullspace(U, field).T
                    return linalg.row_basis(ann, field)
            if K.shape[0] == 1:
                return None
    raise RuntimeError("MeatAxe did not decide irreducibility")


def composition_factors(M: MatrixModule, seed=0):
    """Composition factors by repeated splitting (each returned as a MatrixModule)."""
    rng = random.Random(seed)
    names = M.names()
    todo = [M]
    out = []
    while todo:
        X = todo.pop()
        if X.dim == 0:
            continue
        if not names:
            out.extend([MatrixModule(X.algebra, X.field, 1, {}, X.n, X.G)] * X.dim)
            continue
        S = find_submodule([X.gens[k] for k in names], X.field, rng)
        if S is None:
            out.append(X)
        else:
            todo.append(X.restrict(S, names))
            todo.append(X.quotient(S, names))
    return out


def meataxe_cross_check(G, n, p, field=None):
    """Every composition factor of the regular FG_n-module is one of the constructed
    simples, and every constructed simple occurs."""
    field = field or splitting_field(G, p)
    irreps = group_irreps(G, field)
    simples = all_simples(G, n, field, irreps, p)
    reg = regular_module(G, n, field)
    factors = composition_factors(reg)
    found = set()
    ok = True
    for Fm in factors:
        hit = [i for i, S in enumerate(simples) if S.dim == Fm.dim and is_isomorphic(S, Fm)]
        if len(hit) != 1:
            ok = False
        found.update(hit)
    return {"name": f"MeatAxe factors of FG_{n}", "group": G.name, "p": p,
            "factors": len(factors), "pass": ok and found == set(range(len(simples)))}


def cyclo_regular_module(A):
    """A cyclotomic quotient acting on itself by left multiplication."""
    G, n = A.G, A.n
    gens = {f"x{j}": A.mats.dense(A.x_matrix(j)) for j in range(1, n + 1)}
    gens.update({f"s{j}": A.mats.dense(A.s_matrix(j)) for j in range(1, n)})
    for j in range(1, n + 1):
        for b in range(1, G.order):
            gens[f"g{j}:{b}"] = A.mats.dense(A.slot_matrix(b, j))
    return MatrixModule("Hn(G)", A.field, A.dim, gens, n, G)


def adjunction_check(M, N, i, k, weight, data_small, data_big):
    """dim Hom(f M, N) = dim Hom(M, e N) for one color (i, k)."""
    fM = f_functor(M, i, k, weight, data_small, data_big)
    eN = e_functor(N, i, k, data_big)
    lhs = len(hom(fM, N)) if fM.dim else 0
    rhs = len(hom(M, eN)) if eN.dim else 0
    return {"name": f"adjunction ({i},{k})", "lhs": lhs, "rhs": rhs, "f_dim": fM.dim,
            "e_dim": eN.dim, "pass": lhs == rhs}
