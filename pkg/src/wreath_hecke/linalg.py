"""
Dense exact linear algebra over a :class:`FieldSpec`.

Matrices are 2-d numpy int64 arrays of field codes.  Vectors are rows
unless stated otherwise; ``nullspace`` returns a basis as the *columns*
of the result so that ``dot(A, nullspace(A)) == 0``.
"""

from __future__ import annotations

import numpy as np

from .scalars import FieldSpec


def as_matrix(A):
    A = np.asarray(A, dtype=np.int64)
    if A.ndim == 1:
        A = A[None, :]
    return A


def identity(field, n):
    return np.eye(n, dtype=np.int64)


def zeros(n, m=None):
    return np.zeros((n, n if m is None else m), dtype=np.int64)


def rref(A, field: FieldSpec):
    """Reduced row echelon form and pivot columns."""
    R = as_matrix(A).copy()
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        inv = field.inv(int(R[r, c]))
        R[r, c:] = field.vmul(R[r, c:], inv)
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if others.size:
            f = R[others, c][:, None]
            R[np.ix_(others, np.arange(c, cols))] = field.vsub(
                R[np.ix_(others, np.arange(c, cols))], field.vmul(f, R[r, c:][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A, field):
    A = as_matrix(A)
    if A.size == 0:
        return 0
    return len(rref(A, field)[1])


def row_basis(A, field):
    """Rows forming a reduced echelon basis of the row space."""
    A = as_matrix(A)
    if A.shape[0] == 0:
        return A.copy()
    R, piv = rref(A, field)
    return R[:len(piv)]


def nullspace(A, field):
    """Basis of {x : A x = 0}, returned as columns."""
    A = as_matrix(A)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(A, field)
    free = [c for c in range(n) if c not in set(piv)]
    N = np.zeros((n, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        N[f, j] = 1
        for i, pc in enumerate(piv):
            N[pc, j] = field.neg(int(R[i, f]))
    return N


def left_nullspace(A, field):
    """Basis of {y : y A = 0}, returned as rows."""
    return nullspace(as_matrix(A).T, field).T


def solve(A, b, field):
    """Some x with A x = b (b a vector or a matrix of columns), or None."""
    A = as_matrix(A)
    b = np.asarray(b, dtype=np.int64)
    vec = b.ndim == 1
    B = b[:, None] if vec else b
    aug = np.concatenate([A, B], axis=1)
    R, piv = rref(aug, field)
    n = A.shape[1]
    if any(p >= n for p in piv):
        return None
    X = np.zeros((n, B.shape[1]), dtype=np.int64)
    for i, pc in enumerate(piv):
        X[pc] = R[i, n:]
    return X[:, 0] if vec else X


def inverse(A, field):
    A = as_matrix(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, piv = rref(np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1), field)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("singular matrix")
    return R[:, n:]


def is_invertible(A, field):
    A = as_matrix(A)
    return A.shape[0] == A.shape[1] and rank(A, field) == A.shape[0]


def mat_pow(A, k, field):
    R = np.eye(A.shape[0], dtype=np.int64)
    B = A
    while k:
        if k & 1:
            R = field.dot(R, B)
        B = field.dot(B, B)
        k >>= 1
    return R


def intersect(U, W, field):
    """Row basis of the intersection of the row spaces of U and W."""
    U, W = as_matrix(U), as_matrix(W)
    if U.shape[0] == 0 or W.shape[0] == 0:
        return np.zeros((0, U.shape[1]), dtype=np.int64)
    # y U = z W  <=>  [y z] [U; -W] = 0
    K = left_nullspace(np.concatenate([U, field.vneg(W)], axis=0), field)
    if K.shape[0] == 0:
        return np.zeros((0, U.shape[1]), dtype=np.int64)
    return row_basis(field.dot(K[:, :U.shape[0]], U), field)


def generalized_kernel(A, a, field):
    """Row basis of the generalized a-eigenspace of A, i.e. ker (A - a)^dim as columns -> rows."""
    n = A.shape[0]
    B = field.vsub(A, field.vmul(np.eye(n, dtype=np.int64), a))
    return nullspace(mat_pow(B, n, field), field).T


def eigenvalues(A, field):
    """All a in the field with A - a singular (brute force over the field)."""
    n = A.shape[0]
    out = []
    for a in field.elements():
        B = field.vsub(A, field.vmul(np.eye(n, dtype=np.int64), a))
        if rank(B, field) < n:
            out.append(a)
    return out


def spin(vectors, gens, field):
    """Row basis of the smallest subspace containing `vectors` and stable under every
    matrix in `gens` (matrices act on column vectors, so row v maps to v @ M.T).

    The basis is kept fully reduced, so new images are reduced against it with a
    single product and only the residual needs echelon work.
    """
    B, piv = rref(as_matrix(vectors), field)
    B = B[:len(piv)]
    piv = list(piv)
    frontier = B
    while frontier.shape[0]:
        images = np.concatenate([field.dot(frontier, M.T) for M in gens], axis=0)
        if piv:
            images = field.vsub(images, field.dot(images[:, piv], B))
        images = images[images.any(axis=1)]
        if images.shape[0] == 0:
            break
        R, rpiv = rref(images, field)
        R = R[:len(rpiv)]
        if piv:
            B = field.vsub(B, field.dot(B[:, rpiv], R))
        B = np.concatenate([B, R], axis=0)
        piv += list(rpiv)
        frontier = R
    if not piv:
        return B
    order = np.argsort(piv)
    return B[order]


def complement_basis(S, field):
    """Rows C such that [S; C] is a basis of the ambient space."""
    S = as_matrix(S)
    n = S.shape[1]
    if S.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(S, field)
    free = [c for c in range(n) if c not in set(piv)]
    C = np.zeros((len(free), n), dtype=np.int64)
    for j, f in enumerate(free):
        C[j, f] = 1
    return C


def restrict(M, S, field):
    """Matrix of M on the invariant subspace with row basis S (acting on coordinates)."""
    # M S^T = S^T A  ->  A = solve(S^T, M S^T)
    St = S.T
    A = solve(St, field.dot(M, St), field)
    if A is None:
        raise ValueError("subspace is not invariant")
    return A


def quotient(M, S, field):
    """Matrix of M on V / span(S), w.r.t. the complement basis from complement_basis."""
    C = complement_basis(S, field)
    T = np.concatenate([S, C], axis=0).T          # columns: basis [S | C]
    Ti = inverse(T, field)
    A = field.dot(Ti, field.dot(M, T))
    k = S.shape[0]
    return A[k:, k:]


def kron(A, B, field):
    """Kronecker product of code matrices."""
    A, B = as_matrix(A), as_matrix(B)
    if field.m == 1:
        return np.kron(A, B) % field.p
    ra, ca = A.shape
    rb, cb = B.shape
    out = np.zeros((ra * rb, ca * cb), dtype=np.int64)
    for i in range(ra):
        for j in range(ca):
            out[i * rb:(i + 1) * rb, j * cb:(j + 1) * cb] = field.vmul(B, int(A[i, j]))
    return out


def block_diag(mats):
    mats = [as_matrix(M) for M in mats]
    r = sum(M.shape[0] for M in mats)
    c = sum(M.shape[1] for M in mats)
    out = np.zeros((r, c), dtype=np.int64)
    i = j = 0
    for M in mats:
        out[i:i + M.shape[0], j:j + M.shape[1]] = M
        i += M.shape[0]
        j += M.shape[1]
    return out
