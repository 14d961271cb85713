"""
Algebra Constructions

Opposite and sub-adjacent algebras, tensor products with commutative
associative algebras, morphisms, centers and changes of basis. Every
construction whose output property is a theorem checks that property on the
result and raises ContractViolation if it fails.
"""

import logging

import numpy as np

from apps.algebras.axioms import (
    is_jacobi_jordan,
    is_left_prejj,
    is_right_prejj,
    require_commutative_associative,
    require_left_prejj,
)
from apps.algebras.reports import CheckResult, InvariantSubspaces, Witness, witness_cap
from apps.algebras.structures import (
    Algebra,
    left_multiplications,
    multiply,
    right_multiplications,
    sub_adjacent_constants,
    zero_tensor,
)
from apps.ratlinalg.exceptions import ContractViolation, DimensionMismatch
from apps.ratlinalg.linalg import as_matrix, inverse, kernel_basis, matmul, matvec

logger = logging.getLogger(__name__)


def opposite(a, check=False):
    out = Algebra(np.transpose(a.sc, (1, 0, 2)), f'{a.name}^op')
    if check:
        if is_left_prejj(a) != is_right_prejj(out) or is_right_prejj(a) != is_left_prejj(out):
            raise ContractViolation(f"Opposite of '{a.name}' swaps left and right pre-JJ incorrectly")
    return out


def sub_adjacent(a):
    """The Jacobi-Jordan algebra A^C with x∗y = x·y + y·x."""
    require_left_prejj(a)
    out = Algebra(sub_adjacent_constants(a.sc), f'{a.name}^C')
    if not is_jacobi_jordan(out):
        raise ContractViolation(f"Sub-adjacent algebra of '{a.name}' is not Jacobi-Jordan")
    return out


def tensor_with_comm_assoc(a, b):
    """A ⊗ B on basis e_i⊗f_p, ordered (i, p) ↦ i·dim B + p."""
    require_left_prejj(a)
    require_commutative_associative(b)
    n = a.dim * b.dim
    sc = np.multiply.outer(a.sc, b.sc).transpose(0, 3, 1, 4, 2, 5).reshape(n, n, n)
    out = Algebra(sc, f'{a.name}(x){b.name}')
    if not is_left_prejj(out):
        raise ContractViolation(f"Tensor product '{out.name}' is not left pre-JJ")
    return out


def direct_sum(a, b):
    n = a.dim + b.dim
    sc = zero_tensor(n, n, n)
    sc[:a.dim, :a.dim, :a.dim] = a.sc
    sc[a.dim:, a.dim:, a.dim:] = b.sc
    return Algebra(sc, f'{a.name}(+){b.name}')


def scale(a, factor):
    return Algebra(a.sc * factor, a.name)


def transport(a, g):
    """
    The same algebra written in another basis: g maps old coordinates to new
    ones, and x·'y = g(g⁻¹x · g⁻¹y). g is an isomorphism a → transport(a, g).
    """
    g = as_matrix(g)
    if g.shape != (a.dim, a.dim):
        raise DimensionMismatch(f'Change of basis must be {a.dim}x{a.dim}, got {g.shape}')
    g_inv = inverse(g)
    sc = zero_tensor(a.dim, a.dim, a.dim)
    for i in range(a.dim):
        for j in range(a.dim):
            sc[i, j] = matvec(g, multiply(a, g_inv[:, i], g_inv[:, j]))
    return Algebra(sc, a.name)


def check_morphism(f, a, b, cap=None):
    """f(e_i·e_j) = f(e_i)·f(e_j) on every basis pair; f is dim b x dim a."""
    f = as_matrix(f)
    if f.shape != (b.dim, a.dim):
        raise DimensionMismatch(f'Map must be {b.dim}x{a.dim}, got {f.shape}')
    limit = witness_cap(cap)
    witnesses = []
    holds = True
    for i in range(a.dim):
        for j in range(a.dim):
            defect = matvec(f, a.sc[i, j]) - multiply(b, f[:, i], f[:, j])
            if np.count_nonzero(defect):
                holds = False
                if limit is None or len(witnesses) < limit:
                    witnesses.append(Witness('morphism', (i + 1, j + 1), defect))
    return CheckResult(holds, tuple(witnesses))


# ============================================================================
# INVARIANT SUBSPACES
# ============================================================================

def action(stack, x):
    """Σ x_i stack[i] for a stack of matrices indexed by the algebra basis."""
    return np.tensordot(x, stack, axes=(0, 0))


def invariant_subspaces_of(a, rho, mu):
    """
    The five invariant subspaces of V for actions rho, mu (stacks of vdim x vdim
    matrices indexed by the basis of a), each the exact kernel of its condition.
    """
    vdim = rho.shape[1] if rho.ndim == 3 else 0
    r_aas, l_aas = [], []
    for i in range(a.dim):
        for j in range(a.dim):
            product = a.sc[i, j]
            r_aas.append(action(rho, product) + matmul(rho[i], rho[j]))
            l_aas.append(action(mu, product) + matmul(mu[j], mu[i]))

    def kernel(blocks):
        if not blocks:
            return kernel_basis(as_matrix([], cols=vdim))
        return kernel_basis(np.vstack(blocks))

    subspaces = InvariantSubspaces(
        r_aas=kernel(r_aas),
        l_aas=kernel(l_aas),
        r_inv=kernel(list(rho)),
        l_inv=kernel(list(mu)),
        inv=kernel(list(rho + mu)),
    )
    if not (subspaces.r_aas.contains_subspace(subspaces.r_inv)
            and subspaces.l_aas.contains_subspace(subspaces.l_inv)):
        raise ContractViolation('Invariant subspaces are not contained in the anti-associative ones')
    return subspaces


def centers(a):
    """Invariant subspaces of the algebra acting on itself by L and R."""
    return invariant_subspaces_of(a, left_multiplications(a), right_multiplications(a))


def product_span_matrix(a):
    """Columns e_i·e_j for every basis pair; its column space is A²."""
    return a.sc.reshape(a.dim * a.dim, a.dim).T.copy()
