"""
Affine crystals of type A^(1)_{p-1} on p-regular partitions.

Level-one crystals B(Lambda_s) live on p-regular partitions with the usual
residue/signature rule.  Higher levels are connected components of tensor
products of level-one crystals, and the crystal attached to a wreath product
with r irreducible characters is the r-fold product whose colors are pairs
(i, k).

Signature convention: the i-signature of a node lists its addable (+) and
removable (-) i-cells in reading order, then cancels every "+ -" pair
(a + followed later by a -).  What is left has the form - ... - + ... +;
f adds the cell of the leftmost surviving +, e removes the cell of the
rightmost surviving -.  READING fixes whether rows are read top to bottom
(factors in increasing order) or mirrored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cyclotomic import CycloWeight, ZeroScalar, lambda_bracket

READING = "top_down"
"""Reading order frozen by the branching cross-check (see crystal_vs_branching)."""


class MismatchReport(AssertionError):
    pass


# --- partitions -------------------------------------------------------------------

def residue(row, col, shift, p):
    """Residue of the cell in row ``row`` and column ``col`` (both 1-based)."""
    return (shift + col - row) % p


def addable_cells(mu):
    mu = list(mu)
    out = []
    for r in range(len(mu) + 1):
        length = mu[r] if r < len(mu) else 0
        above = mu[r - 1] if r > 0 else None
        if above is None or above > length:
            out.append((r + 1, length + 1))
    return out


def removable_cells(mu):
    mu = list(mu)
    out = []
    for r, length in enumerate(mu):
        below = mu[r + 1] if r + 1 < len(mu) else 0
        if length > below:
            out.append((r + 1, length))
    return out


def add_cell(mu, cell):
    r, _ = cell
    mu = list(mu)
    if r > len(mu):
        mu.append(1)
    else:
        mu[r - 1] += 1
    return tuple(mu)


def remove_cell(mu, cell):
    r, _ = cell
    mu = list(mu)
    mu[r - 1] -= 1
    return tuple(x for x in mu if x)


def is_p_regular(mu, p):
    return all(list(mu).count(v) < p for v in set(mu) if v)


def reduce_signature(sig):
    """Cancel "+ -" pairs; return the surviving entries (in order)."""
    stack = []
    for sym, data in sig:
        if sym == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append((sym, data))
    return stack


# --- crystals -------------------------------------------------------------------------

class Crystal:
    """Interface: highest node, e, f, eps, phi and a residue count for weights."""

    p: int

    def e(self, b, i):
        raise NotImplementedError

    def f(self, b, i):
        raise NotImplementedError

    def eps(self, b, i):
        n = 0
        while True:
            b = self.e(b, i)
            if b is None:
                return n
            n += 1

    def phi(self, b, i):
        raise NotImplementedError


class PartitionCrystal(Crystal):
    """B(Lambda_shift) on p-regular partitions."""

    def __init__(self, p, shift=0, reading=None):
        if p < 2:
            raise ValueError("p must be at least 2")
        self.p, self.shift = p, shift % p
        self.reading = reading or READING
        self.highest = ()

    def signature(self, mu, i):
        cells = [("+", c) for c in addable_cells(mu) if residue(*c, self.shift, self.p) == i]
        cells += [("-", c) for c in removable_cells(mu) if residue(*c, self.shift, self.p) == i]
        cells.sort(key=lambda t: t[1][0], reverse=(self.reading != "top_down"))
        return cells

    def reduced(self, mu, i):
        return reduce_signature(self.signature(mu, i))

    def f(self, mu, i):
        for sym, cell in self.reduced(mu, i):
            if sym == "+":
                return add_cell(mu, cell)
        return None

    def e(self, mu, i):
        last = None
        for sym, cell in self.reduced(mu, i):
            if sym == "-":
                last = cell
        return None if last is None else remove_cell(mu, last)

    def eps(self, mu, i):
        return sum(1 for s, _ in self.reduced(mu, i) if s == "-")

    def phi(self, mu, i):
        return sum(1 for s, _ in self.reduced(mu, i) if s == "+")

    def content(self, mu):
        out = [0] * self.p
        for r, length in enumerate(mu):
            for c in range(1, length + 1):
                out[residue(r + 1, c, self.shift, self.p)] += 1
        return out

    def hw(self):
        """<h_i, Lambda_shift>."""
        return [1 if i == self.shift else 0 for i in range(self.p)]


class TensorCrystal(Crystal):
    """A (x) B under the tensor rule matching concatenated signatures."""

    def __init__(self, A, B):
        if A.p != B.p:
            raise ValueError("tensor factors have different rank")
        self.A, self.B, self.p = A, B, A.p
        self.highest = (A.highest, B.highest)

    def eps(self, b, i):
        a, c = b
        return self.A.eps(a, i) + max(0, self.B.eps(c, i) - self.A.phi(a, i))

    def phi(self, b, i):
        a, c = b
        return self.B.phi(c, i) + max(0, self.A.phi(a, i) - self.B.eps(c, i))

    def f(self, b, i):
        a, c = b
        if self.A.phi(a, i) > self.B.eps(c, i):
            x = self.A.f(a, i)
            return None if x is None else (x, c)
        y = self.B.f(c, i)
        return None if y is None else (a, y)

    def e(self, b, i):
        a, c = b
        if self.B.eps(c, i) > self.A.phi(a, i):
            y = self.B.e(c, i)
            return None if y is None else (a, y)
        x = self.A.e(a, i)
        return None if x is None else (x, c)

    def content(self, b):
        return [u + v for u, v in zip(self.A.content(b[0]), self.B.content(b[1]))]

    def hw(self):
        return [u + v for u, v in zip(self.A.hw(), self.B.hw())]


class FlatTensor(Crystal):
    """Tensor of level-one crystals acting on a flat tuple of partitions through the
    concatenated signature (factors in order, rows in reading order)."""

    def __init__(self, p, shifts, reading=None):
        self.p = p
        self.reading = reading or READING
        self.factors = [PartitionCrystal(p, s, self.reading) for s in shifts]
        self.highest = tuple(() for _ in shifts)

    def _sig(self, b, i):
        order = range(len(b)) if self.reading == "top_down" else reversed(range(len(b)))
        sig = []
        for j in order:
            sig += [(s, (j, c)) for s, c in self.factors[j].signature(b[j], i)]
        return reduce_signature(sig)

    def f(self, b, i):
        for sym, (j, cell) in self._sig(b, i):
            if sym == "+":
                return b[:j] + (add_cell(b[j], cell),) + b[j + 1:]
        return None

    def e(self, b, i):
        last = None
        for sym, data in self._sig(b, i):
            if sym == "-":
                last = data
        if last is None:
            return None
        j, cell = last
        return b[:j] + (remove_cell(b[j], cell),) + b[j + 1:]

    def eps(self, b, i):
        return sum(1 for s, _ in self._sig(b, i) if s == "-")

    def phi(self, b, i):
        return sum(1 for s, _ in self._sig(b, i) if s == "+")

    def content(self, b):
        out = [0] * self.p
        for F, mu in zip(self.factors, b):
            out = [u + v for u, v in zip(out, F.content(mu))]
        return out

    def hw(self):
        out = [0] * self.p
        for F in self.factors:
            out = [u + v for u, v in zip(out, F.hw())]
        return out


def cartan(p):
    """Affine Cartan matrix of type A^(1)_{p-1} (off-diagonal -2 when p = 2)."""
    A = [[0] * p for _ in range(p)]
    for i in range(p):
        A[i][i] = 2
        for j in ((i + 1) % p, (i - 1) % p):
            if j != i:
                A[i][j] -= 1
    return A


def weight_pairing(C, b):
    """<h_j, wt(b)> = <h_j, Lambda> - sum_i (number of i-cells) a_{ji}."""
    A = cartan(C.p)
    cnt = C.content(b)
    return [C.hw()[j] - sum(A[j][i] * cnt[i] for i in range(C.p)) for j in range(C.p)]


def level_shifts(levels):
    """Factor shifts for a dominant weight given as <h_i, .> multiplicities."""
    out = []
    for i, m in enumerate(levels):
        out += [i] * m
    return out if READING == "top_down" else out[::-1]


def component(C, depth):
    """Breadth-first generation of the connected component of C.highest (f-edges only)."""
    layers = [[C.highest]]
    edges = []
    seen = {C.highest}
    for _ in range(depth):
        nxt = []
        for b in layers[-1]:
            for i in range(C.p):
                c = C.f(b, i)
                if c is None:
                    continue
                edges.append((b, c, i))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        layers.append(sorted(nxt))
    return layers, edges


# --- the colored product graph -------------------------------------------------------------

@dataclass
class CrystalGraph:
    p: int
    r: int
    layers: list        # depth -> sorted list of nodes (r-tuples of flat partition tuples)
    edges: list         # (node, node', i, k)

    def nodes(self):
        return [b for layer in self.layers for b in layer]

    def counts(self):
        return [len(layer) for layer in self.layers]

    def to_json(self):
        return {"p": self.p, "r": self.r,
                "nodes": [_node_json(b) for b in self.nodes()],
                "edges": [{"from": _node_json(a), "to": _node_json(b), "i": i, "k": k}
                          for a, b, i, k in self.edges]}

    def to_dot(self):
        lines = ["digraph crystal {"]
        ids = {b: f"n{j}" for j, b in enumerate(self.nodes())}
        for b, name in ids.items():
            lines.append(f'  {name} [label="{_node_text(b)}"];')
        for a, b, i, k in self.edges:
            lines.append(f'  {ids[a]} -> {ids[b]} [label="{i}:{k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _node_json(b):
    return [[list(mu) for mu in comp] for comp in b]


def _node_text(b):
    def part(mu):
        return "(" + ",".join(map(str, mu)) + ")" if mu else "()"
    return " | ".join(" ".join(part(mu) for mu in comp) for comp in b)


def build_crystal(weight: CycloWeight, c, depth):
    """The product of B(lambda[k]) over k with colors (i, k), down to ``depth``.

    Each node is an r-tuple; entry k is the flat tuple of partitions realizing the
    node of B(lambda[k]) inside a tensor of level-one crystals."""
    p = weight.p
    codes = [x["c"] if isinstance(x, dict) else x for x in c]
    if any(x % p == 0 for x in codes):
        raise ZeroScalar("some c_k vanishes in GF(p)")
    r = len(codes)
    crystals = []
    for k in range(r):
        lam_k = lambda_bracket(weight, k, codes)
        levels = [int(lam_k[i]) for i in range(p)]
        crystals.append(FlatTensor(p, level_shifts(levels)))
    root = tuple(C.highest for C in crystals)
    layers = [[root]]
    edges = []
    seen = {root}
    for _ in range(depth):
        nxt = []
        for b in layers[-1]:
            for k, C in enumerate(crystals):
                for i in range(p):
                    y = C.f(b[k], i)
                    if y is None:
                        continue
                    t = b[:k] + (y,) + b[k + 1:]
                    edges.append((b, t, i, k))
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
        layers.append(sorted(nxt))
    return CrystalGraph(p, r, layers, edges)


# --- counting oracle ---------------------------------------------------------------------

def p_regular_series(p, n_max):
    """Coefficients of prod_k (1 - x^{pk}) / (1 - x^k) up to x^{n_max}."""
    coeffs = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        # multiply by 1/(1-x^k)
        for m in range(k, n_max + 1):
            coeffs[m] += coeffs[m - k]
    for k in range(1, n_max // p + 1):
        step = p * k
        for m in range(n_max, step - 1, -1):
            coeffs[m] -= coeffs[m - step]
    return coeffs


# --- verification ---------------------------------------------------------------------------

def axiom_checks(C: Crystal, depth):
    """e f = id, f e = id, string lengths and phi - eps = <h_i, wt> on every node."""
    layers, _ = component(C, depth)
    bad = []
    total = 0
    for layer in layers:
        for b in layer:
            wt = weight_pairing(C, b)
            for i in range(C.p):
                total += 1
                fb, eb = C.f(b, i), C.e(b, i)
                if fb is not None and C.e(fb, i) != b:
                    bad.append(("ef", b, i))
                if eb is not None and C.f(eb, i) != b:
                    bad.append(("fe", b, i))
                eps, phi = C.eps(b, i), C.phi(b, i)
                if phi - eps != wt[i]:
                    bad.append(("weight", b, i))
                if (eps == 0) != (eb is None) or (phi == 0) != (fb is None):
                    bad.append(("string", b, i))
                if fb is not None:
                    w2 = weight_pairing(C, fb)
                    A = cartan(C.p)
                    if any(w2[j] != wt[j] - A[j][i] for j in range(C.p)):
                        bad.append(("wt(f b) = wt(b) - alpha_i", b, i))
    return {"name": "crystal axioms", "checks": total, "failures": bad[:5], "pass": not bad}


def count_check(p, n_max):
    """Depth counts of B(Lambda_0) against the partition generating function."""
    layers, _ = component(PartitionCrystal(p), n_max)
    counts = [len(x) for x in layers]
    expected = p_regular_series(p, n_max)
    regular = all(is_p_regular(mu, p) for layer in layers for mu in layer)
    return {"name": f"B(Lambda0) counts p={p}", "counts": counts, "expected": expected,
            "pass": counts == expected and regular}


def associativity_check(p, shifts, depth):
    """(B1 (x) B2) (x) B3 and B1 (x) (B2 (x) B3) agree with the flat signature operators."""
    B = [PartitionCrystal(p, s) for s in shifts]
    left = TensorCrystal(TensorCrystal(B[0], B[1]), B[2])
    right = TensorCrystal(B[0], TensorCrystal(B[1], B[2]))
    flat = FlatTensor(p, shifts)
    to_left = lambda t: ((t[0], t[1]), t[2])
    to_right = lambda t: (t[0], (t[1], t[2]))
    layers, _ = component(flat, depth)
    mism = 0
    total = 0
    for layer in layers:
        for t in layer:
            for i in range(p):
                total += 1
                for op in ("f", "e"):
                    a = getattr(flat, op)(t, i)
                    l = getattr(left, op)(to_left(t), i)
                    r = getattr(right, op)(to_right(t), i)
                    if not (l == (None if a is None else to_left(a))
                            and r == (None if a is None else to_right(a))):
                        mism += 1
    return {"name": f"tensor associativity shifts={list(shifts)}", "checks": total,
            "pass": mism == 0}


def crystal_vs_branching(G, p, n_max, field=None):
    """Compare the socle branching graph of simple FG_m-modules, m <= n_max, with the
    colored graph of B(Lambda_0)^{(x) r}."""
    from .hecke import c_scalars
    from .repmod import branch_verify
    report = branch_verify(G, p, n_max, field)
    from .groups import irreps as group_irreps, splitting_field
    fieldc = field or splitting_field(G, p)
    cs = [x["c"] for x in c_scalars(G, fieldc, group_irreps(G, fieldc))]
    graph = build_crystal(CycloWeight.fundamental(p, 0), cs, n_max)

    def flat(b):
        return tuple(comp[0] for comp in b)

    crystal_nodes = {m: sorted(flat(b) for b in layer) for m, layer in enumerate(graph.layers)}
    crystal_edges = sorted({(flat(a), flat(b), (i, k)) for a, b, i, k in graph.edges})
    branch_edges = report.edges()
    branch_nodes = {}
    for e in report.entries:
        branch_nodes.setdefault(sum(map(sum, e["simple"])), set()).add(e["simple"])
    branch_nodes = {m: sorted(v) for m, v in branch_nodes.items()}
    branch_nodes[0] = [tuple(() for _ in range(graph.r))]
    checks = [
        {"name": "branching report", "pass": report.ok},
        {"name": "node bijection", "pass": all(crystal_nodes[m] == branch_nodes.get(m, [])
                                               for m in range(n_max + 1))},
        {"name": "edge sets equal", "pass": crystal_edges == branch_edges},
    ]
    return {"group": G.name, "p": p, "n_max": n_max, "reading": READING,
            "nodes": [len(crystal_nodes[m]) for m in range(n_max + 1)],
            "edges": len(crystal_edges),
            "only_crystal": [_edge_json(e) for e in crystal_edges if e not in branch_edges][:5],
            "only_branching": [_edge_json(e) for e in branch_edges if e not in crystal_edges][:5],
            "checks": checks, "pass": all(c["pass"] for c in checks)}


def _edge_json(e):
    a, b, (i, k) = e
    return {"from": [list(mu) for mu in a], "to": [list(mu) for mu in b], "i": i, "k": k}


def dumps(graph: CrystalGraph, fmt="json"):
    if fmt == "dot":
        return graph.to_dot()
    return json.dumps(graph.to_json(), sort_keys=True)
