"""
Representation Constructions

Regular, scalar, dual, sum and morphism-induced representations, ideals of
Jacobi-Jordan algebras, semidirect products and invariant subspaces.

The dual representation is plain transposition: the pairing
(ρ*(x)f)(v) = f(ρ(x)v) carries no sign.
"""

import logging

import numpy as np

from apps.algebras.axioms import is_left_prejj, require_jacobi_jordan, require_left_prejj
from apps.algebras.constructions import check_morphism, invariant_subspaces_of, sub_adjacent
from apps.algebras.exceptions import NotMorphism
from apps.algebras.structures import (
    Algebra,
    left_multiplication,
    left_multiplications,
    right_multiplication,
    right_multiplications,
    zero_tensor,
)
from apps.ratlinalg.exceptions import ContractViolation, DimensionMismatch
from apps.ratlinalg.linalg import as_matrix, matvec, member, solve, span
from apps.representations.checks import check_hp, check_jj_representation, check_prejj_representation
from apps.representations.exceptions import HypothesisHpViolated, NotIdeal, NotRepresentation
from apps.representations.structures import JJRepresentation, Representation

logger = logging.getLogger(__name__)


def _ensure(result, message):
    if not result.holds:
        raise ContractViolation(message)


def require_representation(r):
    if not check_prejj_representation(r).holds:
        raise NotRepresentation(f"'{r.name}' is not a representation of '{r.alg.name}'")


# ============================================================================
# BASIC REPRESENTATIONS
# ============================================================================

def regular_representation(a):
    """ρ = L, μ = R acting on A itself."""
    require_left_prejj(a)
    r = Representation(a, left_multiplications(a), right_multiplications(a), f'{a.name}-regular')
    _ensure(check_prejj_representation(r), f"Regular representation of '{a.name}' fails its identities")
    return r


def zero_representation(a, vdim):
    rho = zero_tensor(a.dim, vdim, vdim)
    return Representation(a, rho, rho, f'zero-{vdim}')


def scalar_representation(a):
    """The trivial one-dimensional representation K."""
    return zero_representation(a, 1)


def jj_regular_representation(a):
    require_jacobi_jordan(a)
    r = JJRepresentation(a, left_multiplications(a), f'{a.name}-regular')
    _ensure(check_jj_representation(r), f"Regular representation of '{a.name}' fails its identity")
    return r


def dual_representation(r):
    require_representation(r)
    hp = check_hp(r)
    if not hp.holds:
        raise HypothesisHpViolated(hp.witnesses[0].indices)
    dual = Representation(r.alg, r.rho.transpose(0, 2, 1), r.mu.transpose(0, 2, 1), f'{r.name}*')
    _ensure(check_prejj_representation(dual), f"Dual of '{r.name}' is not a representation")
    return dual


def sum_representation(r):
    """ρ+μ as a representation of the sub-adjacent Jacobi-Jordan algebra."""
    require_representation(r)
    jj = JJRepresentation(sub_adjacent(r.alg), r.rho + r.mu, f'{r.name}(rho+mu)')
    _ensure(check_jj_representation(jj), f"Sum representation of '{r.name}' fails its identity")
    return jj


# ============================================================================
# MORPHISMS AND IDEALS
# ============================================================================

def _require_morphism(f, a, b):
    f = as_matrix(f)
    if not check_morphism(f, a, b).holds:
        raise NotMorphism(f"Map is not a morphism '{a.name}' -> '{b.name}'")
    return f


def representation_from_morphism(f, a, b):
    """ρ(x)v = f(x)·v and μ(x)v = v·f(x) on the space of b."""
    require_left_prejj(a)
    require_left_prejj(b)
    f = _require_morphism(f, a, b)
    rho = np.array([left_multiplication(b, f[:, i]) for i in range(a.dim)], dtype=object)
    mu = np.array([right_multiplication(b, f[:, i]) for i in range(a.dim)], dtype=object)
    r = Representation(a, rho.reshape(a.dim, b.dim, b.dim), mu.reshape(a.dim, b.dim, b.dim), f'{b.name}<-{a.name}')
    _ensure(check_prejj_representation(r), 'Morphism-induced action is not a representation')
    return r


def jj_representation_from_morphism(f, a, b):
    """ρ(x)v = f(x)∗v for a morphism of Jacobi-Jordan algebras."""
    require_jacobi_jordan(a)
    require_jacobi_jordan(b)
    f = _require_morphism(f, a, b)
    rho = np.array([left_multiplication(b, f[:, i]) for i in range(a.dim)], dtype=object)
    r = JJRepresentation(a, rho.reshape(a.dim, b.dim, b.dim), f'{b.name}<-{a.name}')
    _ensure(check_jj_representation(r), 'Morphism-induced action is not a representation')
    return r


def ideal_representation(a, vectors):
    """
    An ideal I of a Jacobi-Jordan algebra as a representation, ρ(x)b = x∗b,
    written in the canonical basis of I.
    """
    require_jacobi_jordan(a)
    ideal = span(vectors, a.dim)
    basis_t = ideal.basis.T
    rho = zero_tensor(a.dim, ideal.dim, ideal.dim)
    for i in range(a.dim):
        action = left_multiplications(a)[i]
        for q, b in enumerate(ideal.basis):
            image = matvec(action, b)
            if not member(ideal, image):
                raise NotIdeal(f'e{i + 1} * (basis vector {q + 1}) leaves the subspace')
            rho[i, :, q] = solve(basis_t, image)
    r = JJRepresentation(a, rho, f'ideal-{ideal.dim}')
    _ensure(check_jj_representation(r), 'Ideal action is not a representation')
    return r


# ============================================================================
# SEMIDIRECT PRODUCT
# ============================================================================

def semidirect_product(a, r):
    """
    A ⊕ V with (x, u)(y, v) = (x·y, ρ(x)v + μ(y)u), basis A first then V.

    When a is left pre-JJ the result is left pre-JJ exactly when r is a
    representation; both sides are computed and compared.
    """
    if r.alg.dim != a.dim:
        raise DimensionMismatch(f"Representation of a {r.alg.dim}-dim algebra used with '{a.name}' (dim {a.dim})")
    d, m = a.dim, r.vdim
    sc = zero_tensor(d + m, d + m, d + m)
    sc[:d, :d, :d] = a.sc
    for i in range(d):
        sc[i, d:, d:] = r.rho[i].T
        sc[d:, i, d:] = r.mu[i].T
    out = Algebra(sc, f'{a.name}|x{r.name}')
    if is_left_prejj(a):
        algebra_side = is_left_prejj(out)
        rep_side = check_prejj_representation(Representation(a, r.rho, r.mu, r.name)).holds
        logger.debug("Semidirect '%s': left pre-JJ %s, representation %s", out.name, algebra_side, rep_side)
        if algebra_side != rep_side:
            raise ContractViolation(
                f"Semidirect product '{out.name}' is left pre-JJ={algebra_side} "
                f"but the representation check says {rep_side}"
            )
    return out


# ============================================================================
# INVARIANT SUBSPACES
# ============================================================================

def invariant_subspaces(r):
    return invariant_subspaces_of(r.alg, r.rho, r.mu)


def closed_under(subspace, stack):
    return all(member(subspace, matvec(m, v)) for m in stack for v in subspace.basis)


def closure_table(r):
    """Whether the left and right invariant subspaces are closed under ρ and under μ."""
    spaces = invariant_subspaces(r)
    return {
        (label, action): closed_under(subspace, stack)
        for label, subspace in (('l_inv', spaces.l_inv), ('r_inv', spaces.r_inv))
        for action, stack in (('rho', r.rho), ('mu', r.mu))
    }
