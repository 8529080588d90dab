"""
The wreath Hecke algebra H_n(G) in PBW normal form.

An element is a sparse combination of PBW keys ``(alpha, g, w)`` standing for
the monomial ``x^alpha g w`` with ``alpha`` an exponent tuple, ``g`` in G^n and
``w`` a zero-indexed permutation.  Products are computed by pushing simple
reflections to the right with the rule

    s_i g f = (s_i.g) ( (s_i f) s_i + t_{i,i+1} (f - s_i f) / (x_{i+1} - x_i) ),

which only ever produces integer coefficients.  The results of a single push
``s_i * key`` are therefore cached over Z and shared between fields.

The polynomial representation FG^n (x) F[y_1..y_n] is implemented separately
(array-backed) and serves as an independent oracle: ``pbw_extract`` recovers
PBW coefficients from the action of an element on ``e (x) y^Gamma``.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import defaultdict

import numpy as np

from .groups import FiniteGroup, irreps as group_irreps, splitting_field
from .scalars import FieldSpec
from .wreath import (IndexOutOfRange, bruhat_le, perm_identity, perm_inv, perm_mul,
                     reduced_word, simple_reflection, transposition, twist)


class Mismatch(ValueError):
    pass


class DegreeBoundViolated(ValueError):
    pass


class NotScalar(ValueError):
    pass


def key_order(key):
    alpha, g, w = key
    return (sum(alpha), alpha, g, w)


def divided_difference_terms(alpha, i):
    """(x^alpha - x^{s_i alpha}) / (x_{i+1} - x_i) as a list of (exponent, +-1).

    ``i`` is 1-indexed.
    """
    j = i - 1
    a, b = alpha[j], alpha[j + 1]
    if a == b:
        return []
    out = []
    if a > b:
        lo, span, sign = b, a - b, -1
    else:
        lo, span, sign = a, b - a, 1
    for k in range(span):
        beta = list(alpha)
        beta[j] = lo + k
        beta[j + 1] = lo + span - 1 - k
        out.append((tuple(beta), sign))
    return out


class HeckeAlgebra:
    """H_n(G) over a finite field; owns the push cache and generator constructors."""

    def __init__(self, G: FiniteGroup, n: int, field: FieldSpec):
        self.G = G
        self.n = n
        self.field = field
        self._push = _push_cache(G, n)

    def __repr__(self):
        return f"HeckeAlgebra(n={self.n}, G={self.G.name}, {self.field!r})"

    def __eq__(self, other):
        return (isinstance(other, HeckeAlgebra) and self.n == other.n
                and self.G == other.G and self.field == other.field)

    def __hash__(self):
        return hash((self.n, self.G, self.field))

    # --- constructors ---

    @property
    def e(self):
        return (0,) * self.n

    @property
    def id_perm(self):
        return perm_identity(self.n)

    def element(self, terms):
        return HeckeElement(self, terms)

    def zero(self):
        return HeckeElement(self, {})

    def scalar(self, c):
        return HeckeElement(self, {((0,) * self.n, self.e, self.id_perm): self.field.embed(c)})

    def one(self):
        return self.scalar(1)

    def monomial(self, alpha=None, g=None, w=None, coeff=1):
        n = self.n
        alpha = tuple(alpha) if alpha is not None else (0,) * n
        g = tuple(g) if g is not None else self.e
        w = tuple(w) if w is not None else self.id_perm
        if len(alpha) != n or len(g) != n or len(w) != n:
            raise Mismatch("key of the wrong size")
        c = coeff if isinstance(coeff, int) and 0 <= coeff < self.field.p else self.field.embed(coeff)
        return HeckeElement(self, {(alpha, g, w): c})

    def x(self, i):
        self._check(i, self.n)
        alpha = [0] * self.n
        alpha[i - 1] = 1
        return self.monomial(alpha)

    def s(self, i):
        self._check(i, self.n - 1)
        return self.monomial(w=simple_reflection(self.n, i))

    def perm(self, w):
        return self.monomial(w=w)

    def group_element(self, g):
        return self.monomial(g=g)

    def slot(self, x, i):
        """x^{(i)} in G^n."""
        self._check(i, self.n)
        g = [0] * self.n
        g[i - 1] = x
        return self.monomial(g=g)

    def t(self, i, j):
        """t_ij = sum_h h^(i) (h^-1)^(j)."""
        self._check(i, self.n)
        self._check(j, self.n)
        if i == j:
            raise IndexOutOfRange("t_ij needs i != j")
        F, G = self.field, self.G
        terms = {}
        for h in range(G.order):
            g = [0] * self.n
            g[i - 1] = h
            g[j - 1] = G.inverse[h]
            key = ((0,) * self.n, tuple(g), self.id_perm)
            terms[key] = F.add(terms.get(key, 0), 1)
        return HeckeElement(self, terms)

    def omega(self, i):
        """Intertwiner s_i (x_i - x_{i+1}) + t_{i,i+1}."""
        return self.s(i) * (self.x(i) - self.x(i + 1)) + self.t(i, i + 1)

    def poly(self, coeffs):
        """Polynomial in x from a map exponent tuple -> integer coefficient."""
        F = self.field
        return HeckeElement(self, {(tuple(a), self.e, self.id_perm): F.embed(c)
                                   for a, c in coeffs.items()})

    def generator(self, kind, *index):
        kind = kind.lower()
        if kind == "x":
            return self.x(*index)
        if kind == "s":
            return self.s(*index)
        if kind == "t":
            return self.t(*index)
        if kind in ("omega", "o"):
            return self.omega(*index)
        if kind in ("g", "group"):
            if len(index) == 2:
                return self.slot(*index)
            return self.group_element(index[0])
        raise ValueError(f"unknown generator kind {kind!r}")

    def _check(self, i, top):
        if not 1 <= i <= top:
            raise IndexOutOfRange(f"index {i} outside 1..{top}")

    # --- multiplication ---

    def push_key(self, i, key):
        """s_i * (x^gamma h v) as a dict key -> integer coefficient (cached)."""
        return self._push(i, key)

    def left_s(self, i, terms):
        """s_i * (sum of terms) as a dict over field codes."""
        F = self.field
        out = defaultdict(int)
        p = F.p
        if F.m == 1:
            for key, c in terms.items():
                for k2, z in self._push(i, key).items():
                    out[k2] = (out[k2] + c * z) % p
        else:
            for key, c in terms.items():
                for k2, z in self._push(i, key).items():
                    out[k2] = F.add(out[k2], F.mul(c, F.embed(z)))
        return {k: v for k, v in out.items() if v}

    def perm_times(self, w, terms, memo=None):
        """w * (terms), computed along left descents and memoized per call."""
        if memo is None:
            memo = {}
        if w in memo:
            return memo[w]
        n = self.n
        winv = perm_inv(w)
        for i in range(n - 1):
            if winv[i] > winv[i + 1]:
                # w = s_{i+1} w' with l(w') = l(w) - 1
                rest = perm_mul(simple_reflection(n, i + 1), w)
                res = self.left_s(i + 1, self.perm_times(rest, terms, memo))
                memo[w] = res
                return res
        memo[w] = terms
        return terms

    def normal_mul(self, a, b):
        if a.H != self or b.H != self:
            raise Mismatch("elements belong to different algebras")
        F, G = self.field, self.G
        table = G.table
        by_w = defaultdict(list)
        for (alpha, g, w), c in a.terms.items():
            by_w[w].append((alpha, g, c))
        memo = {}
        out = defaultdict(int)
        for w, lst in by_w.items():
            W = self.perm_times(w, b.terms, memo)
            for alpha, g, c in lst:
                for (beta, h, v), d in W.items():
                    key = (tuple(x + y for x, y in zip(alpha, beta)),
                           tuple(table[x][y] for x, y in zip(g, h)), v)
                    out[key] = F.add(out[key], F.mul(c, d))
        return HeckeElement(self, {k: v for k, v in out.items() if v})

    def anti_involution(self, a):
        """The anti-automorphism fixing x_i and s_i and inverting G^n:
        x^alpha g w  ->  w^-1 g^-1 x^alpha."""
        G = self.G
        out = self.zero()
        for (alpha, g, w), c in a.terms.items():
            left = self.perm(perm_inv(w))
            right = HeckeElement(self, {(alpha, tuple(G.inverse[x] for x in g), self.id_perm): c})
            out = out + left * right
        return out

    def left_form(self, a):
        """Write a = sum_u u * p_u with p_u in P_n(G); returns {u: HeckeElement}."""
        G = self.G
        b = self.anti_involution(a)
        parts = defaultdict(dict)
        for (alpha, g, w), c in b.terms.items():
            parts[perm_inv(w)][(alpha, tuple(G.inverse[x] for x in g), self.id_perm)] = c
        return {u: HeckeElement(self, t) for u, t in parts.items()}

    # --- serialization ---

    def from_json(self, data):
        if isinstance(data, str):
            data = json.loads(data)
        F = self.field
        terms = {}
        for item in data:
            alpha = tuple(int(v) for v in item["alpha"])
            g = tuple(int(v) for v in item["g"])
            w = tuple(int(v) - 1 for v in item["w"])
            if len(alpha) != self.n or len(g) != self.n or sorted(w) != list(range(self.n)):
                raise Mismatch(f"term {item} does not match n={self.n}")
            if any(x < 0 or x >= self.G.order for x in g):
                raise Mismatch(f"group index out of range in {item}")
            c = item.get("coeff", 1)
            code = F.from_coeffs([int(v) for v in c]) if isinstance(c, list) else F.embed(int(c))
            key = (alpha, g, w)
            terms[key] = F.add(terms.get(key, 0), code)
        return HeckeElement(self, terms)


def _push_cache(G, n, _store={}):
    """Shared cache of single pushes s_i * key over Z, one per (G, n)."""
    k = (G, n)
    if k in _store:
        return _store[k]
    cache = {}
    table = G.table
    inverse = G.inverse
    order = G.order

    def push(i, key):
        ck = (i, key)
        hit = cache.get(ck)
        if hit is not None:
            return hit
        gamma, h, v = key
        j = i - 1
        sg = list(gamma)
        sg[j], sg[j + 1] = sg[j + 1], sg[j]
        sh = list(h)
        sh[j], sh[j + 1] = sh[j + 1], sh[j]
        sv = list(v)
        # s_i v as functions: (s_i v)(k) = s_i(v(k))
        for idx, val in enumerate(v):
            if val == j:
                sv[idx] = j + 1
            elif val == j + 1:
                sv[idx] = j
        res = {(tuple(sg), tuple(sh), tuple(sv)): 1}
        dd = divided_difference_terms(gamma, i)
        if dd:
            for u in range(order):
                g2 = list(sh)
                g2[j] = table[sh[j]][u]
                g2[j + 1] = table[sh[j + 1]][inverse[u]]
                g2 = tuple(g2)
                for beta, sign in dd:
                    kk = (beta, g2, v)
                    res[kk] = res.get(kk, 0) + sign
            res = {kk: z for kk, z in res.items() if z}
        cache[ck] = res
        return res

    _store[k] = push
    return push


class HeckeElement:
    """Sparse element of H_n(G): map PBW key -> field code, zeros never stored."""

    __slots__ = ("H", "terms")

    def __init__(self, H, terms):
        self.H = H
        self.terms = {k: v for k, v in terms.items() if v}

    @property
    def n(self):
        return self.H.n

    def _other(self, other):
        if isinstance(other, int):
            return self.H.scalar(other)
        if not isinstance(other, HeckeElement) or other.H != self.H:
            raise Mismatch("elements belong to different algebras")
        return other

    def __add__(self, other):
        other = self._other(other)
        F = self.H.field
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = F.add(out.get(k, 0), v)
        return HeckeElement(self.H, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.H.field
        return HeckeElement(self.H, {k: F.neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def scale(self, c):
        F = self.H.field
        return HeckeElement(self.H, {k: F.mul(c, v) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.H.field.embed(other))
        return self.H.normal_mul(self, self._other(other))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(self.H.field.embed(other))
        return NotImplemented

    def __pow__(self, k):
        out = self.H.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.H.scalar(other)
        return isinstance(other, HeckeElement) and self.H == other.H and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: key_order(kv[0]))

    def degree(self):
        return max((sum(k[0]) for k in self.terms), default=0)

    def coeff(self, alpha, g=None, w=None):
        g = tuple(g) if g is not None else self.H.e
        w = tuple(w) if w is not None else self.H.id_perm
        return self.terms.get((tuple(alpha), g, w), 0)

    def to_json(self):
        F = self.H.field
        return [{"alpha": list(a), "g": list(g), "w": [x + 1 for x in w],
                 "coeff": list(F.coeffs(c))} for (a, g, w), c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, g, w), c in self.sorted_terms()[:8]:
            parts.append(f"{c}*x^{a}*g{g}*w{tuple(x + 1 for x in w)}")
        more = " + ..." if len(self.terms) > 8 else ""
        return " + ".join(parts) + more


def normal_mul(a, b):
    return a.H.normal_mul(a, b)


def divided_difference(H, alpha, i):
    """The polynomial (x^alpha - x^{s_i alpha}) / (x_{i+1} - x_i) as an x-only element."""
    H._check(i, H.n - 1)
    return H.poly(dict(divided_difference_terms(tuple(alpha), i)))


# --- polynomial representation ----------------------------------------------

class PolyModule:
    """FG^n (x) F[y_1..y_n] with x_i, g and s_j acting as in the PBW faithfulness argument.

    A vector is a dict exponent tuple -> numpy array of codes indexed by G^n
    (mixed radix, slot 1 least significant).
    """

    def __init__(self, H: HeckeAlgebra):
        self.H = H
        G, n = H.G, H.n
        self.size = G.order ** n
        idx = np.arange(self.size)
        self.digits = np.stack([(idx // G.order ** j) % G.order for j in range(n)], axis=1) \
            if n else np.zeros((1, 0), dtype=np.int64)
        self.radix = np.array([G.order ** j for j in range(n)], dtype=np.int64)
        self._left = {}
        self._twist = {}
        self._tright = {}

    def index(self, h):
        return int(np.dot(np.asarray(h, dtype=np.int64), self.radix)) if self.H.n else 0

    def _encode(self, D):
        return D @ self.radix if self.H.n else np.zeros(len(D), dtype=np.int64)

    def left_map(self, g):
        """Index array L with (g h) at position L[h]."""
        if g not in self._left:
            T = self.H.G.np_table
            D = T[np.asarray(g)[None, :], self.digits] if self.H.n else self.digits
            self._left[g] = self._encode(D)
        return self._left[g]

    def twist_map(self, i):
        if i not in self._twist:
            D = self.digits.copy()
            D[:, [i - 1, i]] = D[:, [i, i - 1]]
            self._twist[i] = self._encode(D)
        return self._twist[i]

    def t_right_maps(self, i):
        """Index arrays R_u with h * u^(i) (u^-1)^(i+1) at R_u[h], one per u in G."""
        if i not in self._tright:
            G = self.H.G
            T = G.np_table
            maps = []
            for u in range(G.order):
                D = self.digits.copy()
                D[:, i - 1] = T[D[:, i - 1], u]
                D[:, i] = T[D[:, i], G.inverse[u]]
                maps.append(self._encode(D))
            self._tright[i] = maps
        return self._tright[i]

    def basis_vector(self, h=None, beta=None):
        H = self.H
        h = tuple(h) if h is not None else H.e
        beta = tuple(beta) if beta is not None else (0,) * H.n
        arr = np.zeros(self.size, dtype=np.int64)
        arr[self.index(h)] = 1
        return {beta: arr}

    def _acc(self, out, beta, arr):
        F = self.H.field
        if beta in out:
            out[beta] = F.vadd(out[beta], arr)
        else:
            out[beta] = arr

    @staticmethod
    def clean(v):
        return {b: a for b, a in v.items() if a.any()}

    def act_s(self, i, v):
        F = self.H.field
        out = {}
        tw = self.twist_map(i)
        rmaps = None
        for beta, arr in v.items():
            new = np.empty_like(arr)
            new[tw] = arr
            sb = list(beta)
            sb[i - 1], sb[i] = sb[i], sb[i - 1]
            self._acc(out, tuple(sb), new)
            dd = divided_difference_terms(beta, i)
            if dd:
                if rmaps is None:
                    rmaps = self.t_right_maps(i)
                tt = np.zeros_like(arr)
                for R in rmaps:
                    moved = np.empty_like(arr)
                    moved[R] = new
                    tt = F.vadd(tt, moved)
                neg = F.vneg(tt)
                for mono, sign in dd:
                    self._acc(out, mono, tt if sign > 0 else neg)
        return self.clean(out)

    def act_g(self, g, v):
        out = {}
        L = self.left_map(tuple(g))
        for beta, arr in v.items():
            new = np.empty_like(arr)
            new[L] = arr
            out[beta] = new
        return out

    def act_x(self, alpha, v):
        return {tuple(b + a for b, a in zip(beta, alpha)): arr for beta, arr in v.items()}

    def act_perm(self, w, v, memo=None):
        if memo is None:
            memo = {}
        if w in memo:
            return memo[w]
        n = self.H.n
        winv = perm_inv(w)
        for i in range(n - 1):
            if winv[i] > winv[i + 1]:
                rest = perm_mul(simple_reflection(n, i + 1), w)
                res = self.act_s(i + 1, self.act_perm(rest, v, memo))
                memo[w] = res
                return res
        memo[w] = v
        return v

    def act(self, a, v):
        """poly_action: the action of a HeckeElement on a vector."""
        if a.H != self.H:
            raise Mismatch("element and module over different algebras")
        F = self.H.field
        out = {}
        memo = {}
        for (alpha, g, w), c in a.terms.items():
            u = self.act_x(alpha, self.act_g(g, self.act_perm(w, v, memo)))
            for beta, arr in u.items():
                self._acc(out, beta, F.vmul(arr, c))
        return self.clean(out)

    def equal(self, u, v):
        u, v = self.clean(u), self.clean(v)
        return u.keys() == v.keys() and all(np.array_equal(u[b], v[b]) for b in u)


def poly_action(a, v, module=None):
    module = module or PolyModule(a.H)
    return module.act(a, v)


def pbw_extract(op, H, D, module=None):
    """Recover the PBW expansion of an operator of x-degree at most D.

    The operator is applied to e (x) y^Gamma with Gamma = (N, 2N, .., nN),
    N = D + 1.  Top-degree monomials g (x) y^{w Gamma + alpha} identify the
    leading keys x^alpha g w, whose full action is then subtracted.
    """
    module = module or PolyModule(H)
    n = H.n
    N = D + 1
    gamma = tuple(N * (k + 1) for k in range(n))
    v0 = module.basis_vector(beta=gamma)
    res = module.clean(op(v0))
    result = H.zero()
    base = sum(gamma)
    G = H.G
    for _ in range(10 * (D + 2) * (len(res) + 2) + 1000):
        if not res:
            return result
        top = max(sum(b) for b in res)
        if top - base > D or top < base:
            raise DegreeBoundViolated(f"degree {top - base} outside 0..{D}")
        terms = {}
        for beta, arr in res.items():
            if sum(beta) != top:
                continue
            q = [b // N - 1 for b in beta]
            alpha = tuple(b % N for b in beta)
            if sorted(q) != list(range(n)):
                raise DegreeBoundViolated(f"monomial {beta} does not decode")
            w = perm_inv(tuple(q))
            for hidx in np.nonzero(arr)[0]:
                g = tuple(int(x) for x in module.digits[hidx])
                terms[(alpha, g, w)] = int(arr[hidx])
        E = HeckeElement(H, terms)
        result = result + E
        act = module.act(E, v0)
        F = H.field
        for beta, arr in act.items():
            module._acc(res, beta, F.vneg(arr))
        res = module.clean(res)
    raise DegreeBoundViolated("extraction did not terminate")


# --- random elements --------------------------------------------------------

def random_element(H, rng, terms=3, max_degree=2):
    """A random element with the given number of terms and x-degree bound."""
    n, G, F = H.n, H.G, H.field
    out = {}
    perms = list(itertools.permutations(range(n)))
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        alpha = [0] * n
        for _ in range(deg):
            alpha[rng.randrange(n)] += 1
        g = tuple(rng.randrange(G.order) for _ in range(n))
        w = perms[rng.randrange(len(perms))]
        c = rng.randrange(1, F.q)
        key = (tuple(alpha), g, w)
        out[key] = F.add(out.get(key, 0), c)
    return HeckeElement(H, out)


# --- identities -------------------------------------------------------------

def _report(name, checks, **meta):
    return dict(meta, name=name, checks=checks, **{"pass": all(c["pass"] for c in checks)})


def relation_suite(H, seed=0):
    """Defining relations, the s/t/g/f identities, t-braid identities and the
    x_1 (1, m+1) transposition identity, as normal-form equalities."""
    n, G = H.n, H.G
    checks = []

    def rec(name, ok):
        checks.append({"name": name, "pass": bool(ok)})

    x = [None] + [H.x(i) for i in range(1, n + 1)]
    s = [None] + [H.s(i) for i in range(1, n)]
    slot_gens = [(a, j) for j in range(1, n + 1) for a in G.generators]
    rng = random.Random(seed)
    gs = [tuple(rng.randrange(G.order) for _ in range(n)) for _ in range(3)]

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rec(f"x{i} x{j} = x{j} x{i}", x[i] * x[j] == x[j] * x[i])
        for a, j in slot_gens:
            g = H.slot(a, j)
            rec(f"x{i} g = g x{i} (g={a} in slot {j})", x[i] * g == g * x[i])
    for i in range(1, n):
        rec(f"s{i}^2 = 1", s[i] * s[i] == H.one())
        for j in range(i + 2, n):
            rec(f"s{i} s{j} = s{j} s{i}", s[i] * s[j] == s[j] * s[i])
        if i + 1 < n:
            rec(f"s{i} s{i + 1} s{i} = s{i + 1} s{i} s{i + 1}",
                s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1])
        t = H.t(i, i + 1)
        rec(f"s{i} x{i} = x{i + 1} s{i} - t", s[i] * x[i] == x[i + 1] * s[i] - t)
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rec(f"s{i} x{j} = x{j} s{i}", s[i] * x[j] == x[j] * s[i])
        for a, j in slot_gens:
            g = H.slot(a, j)
            sg = H.group_element(twist(simple_reflection(n, i), g_tuple(g)))
            rec(f"s{i} g = (s{i}.g) s{i} (g={a} in slot {j})", s[i] * g == sg * s[i])
        # identities derived from the relations
        rec(f"s{i} t = t s{i}", s[i] * t == t * s[i])
        rec(f"s{i} x{i + 1} = x{i} s{i} + t", s[i] * x[i + 1] == x[i] * s[i] + t)
        for gt in gs:
            g = H.group_element(gt)
            sg = H.group_element(twist(simple_reflection(n, i), gt))
            rec(f"t g = (s{i}.g) t (g={gt})", t * g == sg * t)
            for alpha in _small_exponents(n, 3, rng):
                f = H.monomial(alpha)
                sf = H.monomial(_swap(alpha, i))
                dd = divided_difference(H, alpha, i)
                lhs = s[i] * g * f
                rhs = sg * (sf * s[i] + t * dd)
                rec(f"s{i} g f rule (g={gt}, f=x^{alpha})", lhs == rhs)
    for i in range(1, n - 1):
        a, b, c = H.t(i, i + 1), H.t(i, i + 2), H.t(i + 1, i + 2)
        rec(f"t-braid A (i={i})", b * c == a * b and a * b == c * a)
        rec(f"t-braid B (i={i})", a * c == b * a and b * a == c * b)
        rec(f"t-braid C (i={i})", c * b * a == a * b * c)
    for m in range(1, n):
        rec(f"x1 (1,{m + 1}) identity", transposition_identity_holds(H, m))
    return _report("relations", checks, group=G.name, n=n, p=H.field.p)


def g_tuple(elem):
    (key,) = elem.terms
    return key[1]


def _swap(alpha, i):
    a = list(alpha)
    a[i - 1], a[i] = a[i], a[i - 1]
    return tuple(a)


def _small_exponents(n, count, rng):
    out = [tuple([1] + [0] * (n - 1)), tuple([0] * (n - 1) + [2])]
    while len(out) < count:
        out.append(tuple(rng.randrange(3) for _ in range(n)))
    return out


def word_element(H, word):
    out = H.one()
    for i in word:
        out = out * H.s(i)
    return out


def transposition_identity_holds(H, m):
    """x_1 (1,m+1) = (1,m+1) x_{m+1} - sum_l [s_m..s_2 s_1 s_2..s_m without the l-th
    letter of s_1 s_2 .. s_m] t_{l,m+1}."""
    n = H.n
    left = list(range(m, 1, -1))           # s_m ... s_2
    right = list(range(1, m + 1))          # s_1 s_2 ... s_m
    tau = H.perm(transposition(n, 0, m))
    lhs = H.x(1) * tau
    rhs = tau * H.x(m + 1)
    for l in range(1, m + 1):
        word = left + [r for r in right if r != l]
        rhs = rhs - word_element(H, word) * H.t(l, m + 1)
    return lhs == rhs


def triangularity_holds(H, w, g, alpha):
    """w g x^alpha = (w.g) x^{w alpha} w + sum over u < w (Bruhat) of lower-degree terms."""
    prod = H.perm(w) * H.monomial(alpha, g)
    lead = ((twist(w, tuple(alpha))), twist(w, tuple(g)), tuple(w))
    if prod.terms.get(lead) != 1:
        return False
    for (beta, h, u), c in prod.terms.items():
        if (beta, h, u) == lead:
            continue
        if u == tuple(w) or not bruhat_le(u, w) or sum(beta) >= sum(alpha):
            return False
    return True


def verify_intertwiners(H):
    n = H.n
    checks = []
    for i in range(1, n):
        O = H.omega(i)
        t = H.t(i, i + 1)
        dx = H.x(i) - H.x(i + 1)
        checks.append({"name": f"Omega{i}^2 = t^2 - (x{i} - x{i + 1})^2",
                       "pass": O * O == t * t - dx * dx})
        checks.append({"name": f"Omega{i} x{i} = x{i + 1} Omega{i}",
                       "pass": O * H.x(i) == H.x(i + 1) * O})
        checks.append({"name": f"Omega{i} x{i + 1} = x{i} Omega{i}",
                       "pass": O * H.x(i + 1) == H.x(i) * O})
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                checks.append({"name": f"Omega{i} x{j} = x{j} Omega{i}",
                               "pass": O * H.x(j) == H.x(j) * O})
    return _report("intertwiners", checks, group=H.G.name, n=n, p=H.field.p)


# --- center -----------------------------------------------------------------

def is_central(z):
    """Commutation with x_1, every s_i and every g^(j) for group generators g."""
    H = z.H
    gens = [H.x(1)] + [H.s(i) for i in range(1, H.n)]
    gens += [H.slot(a, j) for j in range(1, H.n + 1) for a in H.G.generators]
    return all(z * y == y * z for y in gens)


def center_coeff_check(z):
    """z lies in P_n(G), its coefficients are constant on conjugacy classes of G^n,
    and d_{w.g, w.alpha} = d_{g, alpha} for every permutation w."""
    H = z.H
    G, n = H.G, H.n
    ident = H.id_perm
    coeff = {}
    for (alpha, g, w), c in z.terms.items():
        if w != ident:
            return False
        coeff[(alpha, g)] = c
    for (alpha, g), c in coeff.items():
        for j in range(n):
            for a in G.generators:
                h = list(g)
                h[j] = G.conj(a, g[j])
                if coeff.get((alpha, tuple(h)), 0) != c:
                    return False
        for i in range(1, n):
            if coeff.get((_swap(alpha, i), _swap(g, i)), 0) != c:
                return False
    return True


def elementary_symmetric(H, k):
    out = H.zero()
    for idx in itertools.combinations(range(H.n), k):
        alpha = [0] * H.n
        for i in idx:
            alpha[i] = 1
        out = out + H.monomial(alpha)
    return out


def class_tuple_sum(H, classes):
    """Sum over G^n of the product of the given G-conjugacy classes (class sum of G^n)."""
    G = H.G
    out = {}
    for g in itertools.product(*[sorted(G.classes[c].members) for c in classes]):
        out[((0,) * H.n, tuple(g), H.id_perm)] = 1
    return HeckeElement(H, out)


def random_center_candidate(H, rng, central):
    """An S_n-invariant class-sum combination, optionally perturbed to break centrality."""
    G, n, F = H.G, H.n, H.field
    k = len(G.classes)
    z = H.zero()
    for _ in range(rng.randint(1, 2)):
        classes = tuple(rng.randrange(k) for _ in range(n))
        alpha = tuple(rng.randrange(3) for _ in range(n))
        c = rng.randrange(1, F.q)
        orbit = set()
        for w in itertools.permutations(range(n)):
            orbit.add((twist(w, alpha), twist(w, classes)))
        for a, cl in orbit:
            z = z + (H.monomial(a) * class_tuple_sum(H, cl)).scale(c)
    if not central:
        options = []
        if n > 1:
            options += ["poly", "perm"]
            if G.order > 1:
                options.append("slot")
        if n >= 1 and not _is_abelian(G):
            options.append("noncentral")
        if not options:
            return z          # H_n(G) is commutative here
        kind = options[rng.randrange(len(options))]
        if kind == "poly":
            alpha = [0] * n
            alpha[0] = rng.randint(1, 2)
            z = z + H.monomial(alpha)
        elif kind == "perm":
            z = z + H.s(1)
        elif kind == "slot":
            g = [0] * n
            g[0] = rng.randrange(1, G.order)
            z = z + H.monomial(g=g)
        else:
            a = next(x for x in range(G.order)
                     if any(G.mul(x, y) != G.mul(y, x) for y in range(G.order)))
            g = [0] * n
            g[0] = a
            z = z + H.monomial(g=g)
    return z


def _is_abelian(G):
    return all(G.mul(a, b) == G.mul(b, a) for a in range(G.order) for b in range(G.order))


# --- t-action scalars -------------------------------------------------------

def swap_matrix(d):
    P = np.zeros((d * d, d * d), dtype=np.int64)
    for a in range(d):
        for b in range(d):
            P[b * d + a, a * d + b] = 1
    return P


def c_scalars(G, field=None, irreps=None, p=None):
    """Scalars c_k with t_12 = c_k P on V_k (x) V_k, plus integrality and zero flags."""
    if field is None:
        field = splitting_field(G, p)
    if irreps is None:
        irreps = group_irreps(G, field)
    out = []
    for ir in irreps:
        d = ir.dim
        T = np.zeros((d * d, d * d), dtype=np.int64)
        for h in range(G.order):
            T = field.vadd(T, _kron(field, ir.matrices[h], ir.matrices[G.inverse[h]]))
        P = swap_matrix(d)
        c = int(T[0, 0])
        if not np.array_equal(T, field.vmul(P, c)):
            raise NotScalar(f"t_12 is not a multiple of the swap on V_{ir.label}^2")
        if field.mul(field.embed(d), c) != field.embed(G.order):
            raise NotScalar(f"d_k c_k != |G| for k={ir.label}")
        out.append({"k": ir.label, "dim": d, "c": c, "integral": field.in_prime_field(c),
                    "zero": c == 0})
    return out


def _kron(field, A, B):
    if field.m == 1:
        return np.kron(A, B) % field.p
    da, db = A.shape[0], B.shape[0]
    out = np.zeros((da * db, da * db), dtype=np.int64)
    for i in range(da):
        for j in range(da):
            out[i * db:(i + 1) * db, j * db:(j + 1) * db] = field.vmul(B, int(A[i, j]))
    return out


def tensor_t_action_check(G, field, irreps, labels):
    """On V_{i_1} (x) ... (x) V_{i_n}: t_kl = c_{i_k} P_kl if i_k = i_l, else 0."""
    cs = {c["k"]: c["c"] for c in c_scalars(G, field, irreps)}
    dims = [irreps[k].dim for k in labels]
    n = len(labels)
    total = int(np.prod(dims))
    checks = []

    def rho(gtuple):
        M = np.eye(1, dtype=np.int64)
        for k, g in zip(labels, gtuple):
            M = _kron(field, M, irreps[k].matrices[g])
        return M

    for a in range(n):
        for b in range(a + 1, n):
            T = np.zeros((total, total), dtype=np.int64)
            for h in range(G.order):
                g = [0] * n
                g[a] = h
                g[b] = G.inverse[h]
                T = field.vadd(T, rho(g))
            if labels[a] == labels[b]:
                expected = field.vmul(place_swap(dims, a, b), cs[labels[a]])
            else:
                expected = np.zeros_like(T)
            checks.append({"name": f"t_{a + 1}{b + 1} on labels {labels}",
                           "pass": bool(np.array_equal(T, expected))})
    return checks


def place_swap(dims, a, b):
    """Permutation matrix exchanging tensor factors a and b (requires dims[a] == dims[b])."""
    total = int(np.prod(dims))
    P = np.zeros((total, total), dtype=np.int64)
    for idx in itertools.product(*[range(d) for d in dims]):
        j = list(idx)
        j[a], j[b] = j[b], j[a]
        P[_flat(j, dims), _flat(idx, dims)] = 1
    return P


def _flat(idx, dims):
    out = 0
    for i, d in zip(idx, dims):
        out = out * d + i
    return out
