"""
Zigzag Complex

Cochain spaces C^n(A, V), the constrained subspaces A^n(A, V) and the two
operator families

    d^n f(x1, ..., x_{n+1}) = Σ_i ρ(x_i) f(..., x̂_i, ..., x_{n+1})
                            + Σ_i μ(x_{n+1}) f(..., x̂_i, ..., x_n, x_i)
                            + Σ_i f(..., x̂_i, ..., x_n, x_i·x_{n+1})
                            + Σ_{i<j} f(x_i∗x_j, ..., x̂_i, ..., x̂_j, ..., x_{n+1})

with i, j running over 1..n, and δ^n, which is d^n with the last two sums
subtracted. In degree zero both are v ↦ ρ(·)v + μ(·)v on C⁰ = V^{r.Aas}.

A^n (n ≥ 2) holds the cochains skew-symmetric in their first n-1 arguments
with ↺_{u,v,w} f(u∗v, y_1, ..., y_{n-2}, w·z) = 0. A¹ = C¹ and A⁰ = C⁰.

Matrices are assembled one output tuple (x1, ..., x_{n+1}) at a time. Each
row block is independent, so blocks are spread over PJJ_ASSEMBLY_JOBS joblib
workers when that setting is above one.
"""

import itertools
import logging
from dataclasses import dataclass
from math import comb

import numpy as np
from django.conf import settings
from joblib import Parallel, delayed

from apps.algebras.structures import sub_adjacent_constants
from apps.cohomology.cochains import Cochain
from apps.cohomology.exceptions import NotInDomain
from apps.ratlinalg.exceptions import ContractViolation, DimensionMismatch
from apps.ratlinalg.linalg import full_space, identity, kernel_basis, matmul, matvec, member, zeros
from apps.representations.constructions import invariant_subspaces

logger = logging.getLogger(__name__)

DIFFERENTIAL = 1
DELTA = -1


def cochain_dim(r, n):
    return r.alg.dim ** n * r.vdim


def _offset(indices, d):
    out = 0
    for i in indices:
        out = out * d + int(i)
    return out


def _require_degree(n, least=0):
    if n < least:
        raise ValueError(f'Degree must be at least {least}, got {n}')


# ============================================================================
# ROW-BLOCK ASSEMBLY
# ============================================================================

def _row_block(r, n, x, sign, star):
    """The vdim rows of the operator matrix belonging to output tuple x."""
    a, m = r.alg, r.vdim
    d = a.dim
    if n == 0:
        return r.rho[x[0]] + r.mu[x[0]]
    block = zeros(m, d ** n * m)
    eye = identity(m)

    def add(indices, coefficient):
        col = _offset(indices, d) * m
        block[:, col:col + m] += coefficient

    head, last = x[:n], x[n]
    for i in range(n):
        rest = head[:i] + head[i + 1:]
        add(rest + (last,), r.rho[head[i]])
        add(rest + (head[i],), r.mu[last])
        for k in np.flatnonzero(a.sc[head[i], last]):
            add(rest + (k,), sign * a.sc[head[i], last, k] * eye)
    for i in range(n):
        for j in range(i + 1, n):
            rest = head[:i] + head[i + 1:j] + head[j + 1:] + (last,)
            for k in np.flatnonzero(star[head[i], head[j]]):
                add((k,) + rest, sign * star[head[i], head[j], k] * eye)
    return block


def _row_blocks(r, n, outputs, sign, star):
    if not outputs:
        return zeros(0, cochain_dim(r, n))
    return np.vstack([_row_block(r, n, x, sign, star) for x in outputs])


def operator_matrix(r, n, sign=DIFFERENTIAL):
    """
    Matrix of d^n (sign=DIFFERENTIAL) or δ^n (sign=DELTA) on all of C^n,
    shape dim C^{n+1} x dim C^n.
    """
    _require_degree(n)
    outputs = list(itertools.product(range(r.alg.dim), repeat=n + 1))
    star = sub_adjacent_constants(r.alg.sc)
    jobs = settings.PJJ_ASSEMBLY_JOBS
    if jobs > 1 and len(outputs) > 1:
        chunks = [chunk for chunk in np.array_split(np.arange(len(outputs)), jobs) if len(chunk)]
        parts = Parallel(n_jobs=jobs)(
            delayed(_row_blocks)(r, n, [outputs[i] for i in chunk], sign, star) for chunk in chunks
        )
        matrix = np.vstack(parts)
    else:
        matrix = _row_blocks(r, n, outputs, sign, star)
    logger.debug("%s^%d of '%s' on '%s': %dx%d (jobs=%d)",
                 'd' if sign == DIFFERENTIAL else 'delta', n, r.alg.name, r.name,
                 matrix.shape[0], matrix.shape[1], jobs)
    return matrix


# ============================================================================
# SPACES
# ============================================================================

def c0_space(r):
    """C⁰ = A⁰ = V^{r.Aas}, the shared domain of d⁰ and δ⁰."""
    return invariant_subspaces(r).r_aas


def _block(coefficients, d, n, m):
    """m constraint rows Σ coefficient · f(indices) = 0."""
    block = zeros(m, d ** n * m)
    eye = identity(m)
    for indices, coefficient in coefficients:
        col = _offset(indices, d) * m
        block[:, col:col + m] += coefficient * eye
    return block


def a_constraints(r, n):
    """Rows cutting A^n out of C^n, n ≥ 2."""
    _require_degree(n, 2)
    a, m = r.alg, r.vdim
    d = a.dim
    star = sub_adjacent_constants(a.sc)
    blocks = []
    # skew-symmetry in the first n-1 arguments, one adjacent swap at a time
    for t in itertools.product(range(d), repeat=n):
        for p in range(n - 2):
            if t[p] <= t[p + 1]:
                swapped = t[:p] + (t[p + 1], t[p]) + t[p + 2:]
                blocks.append(_block([(t, 1), (swapped, 1)], d, n, m))
    # the cyclic sum is symmetric in (u, v, w)
    for u, v, w in itertools.combinations_with_replacement(range(d), 3):
        for middle in itertools.product(range(d), repeat=n - 2):
            for z in range(d):
                coefficients = []
                for p, q, s in ((u, v, w), (v, w, u), (w, u, v)):
                    for k in np.flatnonzero(star[p, q]):
                        for l in np.flatnonzero(a.sc[s, z]):
                            coefficients.append(((k,) + middle + (l,), star[p, q, k] * a.sc[s, z, l]))
                if coefficients:
                    blocks.append(_block(coefficients, d, n, m))
    if not blocks:
        return zeros(0, cochain_dim(r, n))
    return np.vstack(blocks)


def a_space(r, n):
    _require_degree(n)
    if n == 0:
        return c0_space(r)
    if n == 1:
        return full_space(cochain_dim(r, 1))
    space = kernel_basis(a_constraints(r, n))
    bound = comb(r.alg.dim, n - 1) * r.alg.dim * r.vdim
    if space.dim > bound:
        raise ContractViolation(f'dim A^{n} = {space.dim} exceeds the skew-symmetric bound {bound}')
    logger.debug("A^%d of '%s' on '%s': dim %d of %d", n, r.alg.name, r.name, space.dim, space.ambient_dim)
    return space


# ============================================================================
# OPERATORS
# ============================================================================

def _restrict(matrix, subspace):
    return matmul(matrix, subspace.basis.T.copy())


def differential_matrix(r, n):
    """d^n on C^n; for n = 0 the domain is the c0_space basis."""
    matrix = operator_matrix(r, n, DIFFERENTIAL)
    return _restrict(matrix, c0_space(r)) if n == 0 else matrix


def delta_matrix(r, n):
    """δ^n with its domain written in the a_space basis."""
    if n == 0:
        return differential_matrix(r, 0)
    return _restrict(operator_matrix(r, n, DELTA), a_space(r, n))


def verify_zigzag(r, n):
    """d^n ∘ δ^{n-1} = 0 as an exact matrix product."""
    _require_degree(n, 1)
    product = matmul(differential_matrix(r, n), delta_matrix(r, n - 1))
    if np.count_nonzero(product) == 0:
        return True
    position = np.unravel_index(np.argmax(np.abs(product)), product.shape)
    logger.warning("d^%d delta^%d != 0 for '%s' on '%s': %d nonzero entries, largest %s at %s",
                   n, n - 1, r.alg.name, r.name, np.count_nonzero(product), product[position], position)
    return False


def _check_cochain(r, f):
    if f.algdim != r.alg.dim or f.vdim != r.vdim:
        raise DimensionMismatch(
            f'Cochain on a {f.algdim}-dim algebra with {f.vdim}-dim values used with '
            f"'{r.alg.name}' (dim {r.alg.dim}) and '{r.name}' (dim {r.vdim})"
        )


def apply_differential(r, f):
    _check_cochain(r, f)
    image = matvec(operator_matrix(r, f.degree, DIFFERENTIAL), f.as_vector())
    return Cochain.from_vector(f.degree + 1, f.algdim, f.vdim, image)


def apply_delta(r, f):
    _check_cochain(r, f)
    if not member(a_space(r, f.degree), f.as_vector()):
        raise NotInDomain(f'Degree-{f.degree} cochain is not in A^{f.degree}')
    sign = DELTA if f.degree else DIFFERENTIAL
    image = matvec(operator_matrix(r, f.degree, sign), f.as_vector())
    return Cochain.from_vector(f.degree + 1, f.algdim, f.vdim, image)


# ============================================================================
# COMPLEX SLICE
# ============================================================================

@dataclass(frozen=True, eq=False)
class ComplexSlice:
    degree: int
    c_dim: int
    a_basis: object
    d_matrix: np.ndarray
    delta_matrix: np.ndarray


def complex_slice(r, k):
    """Everything about degree k, with d^{k+1} ∘ δ^k = 0 checked."""
    _require_degree(k)
    piece = ComplexSlice(
        degree=k,
        c_dim=c0_space(r).dim if k == 0 else cochain_dim(r, k),
        a_basis=a_space(r, k),
        d_matrix=differential_matrix(r, k),
        delta_matrix=delta_matrix(r, k),
    )
    if np.count_nonzero(matmul(differential_matrix(r, k + 1), piece.delta_matrix)):
        raise ContractViolation(f"d^{k + 1} delta^{k} != 0 for '{r.alg.name}' on '{r.name}'")
    return piece
