"""
Exact Linear Algebra Engine

Dense matrices over the rationals, stored as numpy object arrays of
fractions.Fraction. Every space the other apps compute (derivation spaces,
cocycles, coboundaries, invariant subspaces) is a kernel or an image
computed here.

Usage:
    from apps.ratlinalg.linalg import as_matrix, kernel_basis
    kernel_basis(as_matrix([[1, -1]])).dim   # 1
"""

import logging
from dataclasses import dataclass

import numpy as np

from apps.ratlinalg.exceptions import DimensionMismatch, SingularMatrix, SubspaceNotContained
from apps.ratlinalg.scalars import ONE, ZERO, to_scalar

logger = logging.getLogger(__name__)

coerce_array = np.vectorize(to_scalar, otypes=[object])


# ============================================================================
# CONSTRUCTION
# ============================================================================

def as_matrix(data, cols=None):
    """Build a 2-D object array of Fractions from nested rows."""
    arr = np.array(data, dtype=object)
    if arr.size == 0:
        rows = arr.shape[0] if arr.ndim >= 1 else 0
        if cols is None:
            cols = arr.shape[1] if arr.ndim == 2 else 0
        return zeros(rows, cols)
    if arr.ndim != 2:
        raise DimensionMismatch(f'Expected a 2-D matrix, got shape {arr.shape}')
    return coerce_array(arr)


def as_vector(data):
    arr = np.array(data, dtype=object)
    if arr.ndim != 1:
        arr = arr.reshape(-1)
    if arr.size == 0:
        return np.empty(0, dtype=object)
    return coerce_array(arr)


def zeros(rows, cols):
    return np.full((rows, cols), ZERO, dtype=object)


def zero_vector(n):
    return np.full(n, ZERO, dtype=object)


def identity(n):
    m = zeros(n, n)
    np.fill_diagonal(m, ONE)
    return m


def unit_vector(n, i):
    v = zero_vector(n)
    v[i] = ONE
    return v


def is_zero(arr):
    return np.count_nonzero(arr) == 0


# ============================================================================
# PRODUCTS
# ============================================================================

def matmul(a, b):
    """Exact matrix product that skips zero entries of both factors."""
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f'Cannot multiply {a.shape} by {b.shape}')
    out = zeros(a.shape[0], b.shape[1])
    for k in range(a.shape[1]):
        rows = np.flatnonzero(a[:, k])
        if rows.size == 0:
            continue
        cols = np.flatnonzero(b[k, :])
        if cols.size == 0:
            continue
        out[np.ix_(rows, cols)] += np.multiply.outer(a[rows, k], b[k, cols])
    return out


def matvec(m, v):
    if m.shape[1] != len(v):
        raise DimensionMismatch(f'Matrix with {m.shape[1]} columns applied to vector of length {len(v)}')
    return matmul(m, np.asarray(v, dtype=object).reshape(-1, 1))[:, 0]


# ============================================================================
# ELIMINATION
# ============================================================================

def rref(m):
    """
    Reduced row-echelon form by Gauss-Jordan elimination over Fractions.

    Returns (reduced matrix, pivot columns). Row operations only touch rows
    whose entry in the pivot column is nonzero.
    """
    a = np.array(m, dtype=object)
    a = coerce_array(a) if a.size else a.copy()
    if a.ndim != 2:
        raise DimensionMismatch(f'Expected a 2-D matrix, got shape {a.shape}')
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.flatnonzero(a[r:, c])
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r, c:] = a[r, c:] / a[r, c]
        pivot_row = a[r, c:]
        for i in np.flatnonzero(a[:, c]):
            if i != r:
                a[i, c:] = a[i, c:] - a[i, c] * pivot_row
        pivots.append(c)
        r += 1
    return a, tuple(pivots)


def rank(m):
    return len(rref(m)[1])


# ============================================================================
# SUBSPACES
# ============================================================================

@dataclass(frozen=True, eq=False)
class Subspace:
    """
    A subspace of Q^ambient_dim held by its canonical basis.

    The basis rows are the nonzero rows of a reduced row-echelon form, so
    two Subspace values are equal exactly when their bases are equal.
    """

    ambient_dim: int
    basis: np.ndarray

    @property
    def dim(self):
        return self.basis.shape[0]

    @property
    def pivots(self):
        return tuple(int(np.flatnonzero(row)[0]) for row in self.basis)

    def vectors(self):
        return [row.copy() for row in self.basis]

    def contains(self, v):
        return member(self, v)

    def contains_subspace(self, other):
        return all(member(self, v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and np.array_equal(self.basis, other.basis)

    __hash__ = None

    def __repr__(self):
        return f'Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})'


def span(vectors, ambient_dim):
    """Canonical subspace spanned by arbitrary (possibly dependent) vectors."""
    rows = []
    for v in vectors:
        v = as_vector(v) if not isinstance(v, np.ndarray) else v
        if len(v) != ambient_dim:
            raise DimensionMismatch(f'Vector of length {len(v)} in a space of dimension {ambient_dim}')
        if np.count_nonzero(v):
            rows.append(v)
    if not rows:
        return Subspace(ambient_dim, zeros(0, ambient_dim))
    reduced, pivots = rref(np.vstack(rows))
    basis = reduced[:len(pivots)].copy()
    basis.flags.writeable = False
    return Subspace(ambient_dim, basis)


def full_space(n):
    return span([unit_vector(n, i) for i in range(n)], n)


def zero_space(n):
    return Subspace(n, zeros(0, n))


def kernel_basis(m):
    """Full null space of m: every returned vector v has m.v = 0."""
    rows, cols = m.shape
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    vectors = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = zero_vector(cols)
        v[free] = ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, free]
        vectors.append(v)
    logger.debug('kernel of %dx%d matrix: rank %d, nullity %d', rows, cols, len(pivots), len(vectors))
    return span(vectors, cols)


def image_basis(m):
    """Canonical basis of the column space of m."""
    return span(list(m.T), m.shape[0])


def _residual(s, v):
    r = np.array(v, dtype=object, copy=True)
    for row, p in zip(s.basis, s.pivots):
        if r[p]:
            r = r - r[p] * row
    return r


def member(s, v):
    """True iff v lies in the span of s."""
    if len(v) != s.ambient_dim:
        raise DimensionMismatch(f'Vector of length {len(v)} in a space of dimension {s.ambient_dim}')
    v = as_vector(v)
    return np.count_nonzero(_residual(s, v)) == 0


def intersection(s, t):
    if s.ambient_dim != t.ambient_dim:
        raise DimensionMismatch('Subspaces live in different ambient spaces')
    if s.dim == 0 or t.dim == 0:
        return zero_space(s.ambient_dim)
    stacked = np.hstack([s.basis.T, -t.basis.T])
    coefficients = kernel_basis(stacked)
    vectors = [matvec(s.basis.T, c[:s.dim]) for c in coefficients.basis]
    return span(vectors, s.ambient_dim)


def quotient_dim_and_reps(z, b):
    """
    dim(z/b) and coset representatives: the basis of b is extended by
    canonical basis vectors of z that are independent modulo the span so far.
    """
    if z.ambient_dim != b.ambient_dim:
        raise DimensionMismatch('Subspaces live in different ambient spaces')
    for i, v in enumerate(b.basis):
        if not member(z, v):
            raise SubspaceNotContained(f'Basis vector {i + 1} of the subspace is not in the containing space')
    current = b
    reps = []
    for v in z.basis:
        if not member(current, v):
            reps.append(v.copy())
            current = span(list(current.basis) + [v], z.ambient_dim)
    return z.dim - b.dim, reps


# ============================================================================
# SYSTEMS
# ============================================================================

def solve(m, rhs):
    """One exact solution of m.x = rhs, or None when inconsistent."""
    rhs = as_vector(rhs)
    if len(rhs) != m.shape[0]:
        raise DimensionMismatch(f'Right-hand side of length {len(rhs)} for a matrix with {m.shape[0]} rows')
    cols = m.shape[1]
    augmented = np.hstack([m, rhs.reshape(-1, 1)])
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == cols:
        return None
    x = zero_vector(cols)
    for i, p in enumerate(pivots):
        x[p] = reduced[i, cols]
    return x


def inverse(m):
    n = m.shape[0]
    if m.shape != (n, n):
        raise DimensionMismatch(f'Only square matrices are invertible, got {m.shape}')
    reduced, pivots = rref(np.hstack([m, identity(n)]))
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrix(f'{n}x{n} matrix is singular')
    return reduced[:, n:].copy()
