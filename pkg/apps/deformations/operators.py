"""
Nijenhuis and Rota-Baxter Operators

N is Nijenhuis when N(x)·N(y) = N(x·_N y) with x·_N y = N(x)·y + x·N(y) - N(x·y).
A Nijenhuis operator gives the left pre-Jacobi-Jordan algebra A_N, which N
maps morphically onto A, and the trivial deformation generated by δ¹N.

Usage:
    nijenhuis_check(a1(), as_matrix([[0, 0], [1, 0]])).holds   # True
    deformed_product_N(a1(), identity(2)) == a1()                # True
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from apps.algebras.axioms import is_left_prejj, require_jacobi_jordan, require_left_prejj
from apps.algebras.constructions import check_morphism, sub_adjacent
from apps.algebras.reports import CheckResult, collect_witnesses
from apps.algebras.structures import Algebra
from apps.cohomology.cochains import Cochain
from apps.cohomology.complex import apply_delta
from apps.deformations.exceptions import (
    NotNijenhuis,
    PreconditionNotIdempotent,
    PreconditionNotNilpotent,
)
from apps.deformations.linear import (
    DeformationCheck,
    candidate_maps,
    check_deformation,
    deformation_samples,
    deformed_algebra,
)
from apps.deformations.tensors import pull_back, push_forward, square_map, twisted_constants
from apps.ratlinalg.exceptions import ContractViolation
from apps.ratlinalg.linalg import identity, is_zero, matmul
from apps.ratlinalg.scalars import to_scalar
from apps.representations.constructions import regular_representation

logger = logging.getLogger(__name__)


# ============================================================================
# DEFECTS
# ============================================================================

def nijenhuis_defects(sc, n):
    """N(e_i)·N(e_j) - N(e_i ·_N e_j), indexed [i, j, out]."""
    return pull_back(sc, n, n) - push_forward(n, twisted_constants(sc, n))


def rota_baxter_defects(sc, p, weight):
    eye = identity(p.shape[0])
    inner = pull_back(sc, p, eye) + pull_back(sc, eye, p) + weight * push_forward(p, sc)
    return pull_back(sc, p, p) - push_forward(p, inner)


def _result(axiom, defects, cap):
    found, total = collect_witnesses(axiom, defects, cap)
    return CheckResult(total == 0, tuple(found))


# ============================================================================
# CHECKS
# ============================================================================

def nijenhuis_check(a, n, cap=None):
    n = square_map(n, a.dim)
    return _result('nijenhuis', nijenhuis_defects(a.sc, n), cap)


def rota_baxter_check(a, p, weight, cap=None):
    p = square_map(p, a.dim)
    weight = to_scalar(weight)
    result = _result('rota_baxter', rota_baxter_defects(a.sc, p, weight), cap)
    if weight == -1 and result.holds != nijenhuis_check(a, p, cap=1).holds:
        raise ContractViolation(f"Rota-Baxter of weight -1 and Nijenhuis disagree on '{a.name}'")
    return result


def nijenhuis_jj_check(a, n, cap=None):
    """N(u)∗N(v) = N(N(u)∗v + u∗N(v) - N(u∗v)) for the commutative product of a."""
    require_jacobi_jordan(a)
    n = square_map(n, a.dim)
    return _result('nijenhuis_jj', nijenhuis_defects(a.sc, n), cap)


def require_nijenhuis(a, n):
    if not nijenhuis_check(a, n, cap=1).holds:
        raise NotNijenhuis(f"Map is not a Nijenhuis operator on '{a.name}'")


# ============================================================================
# DEFORMED PRODUCT AND TRIVIAL DEFORMATION
# ============================================================================

def deformed_product_N(a, n):
    """The algebra A_N; n must be Nijenhuis on a."""
    n = square_map(n, a.dim)
    require_left_prejj(a)
    require_nijenhuis(a, n)
    deformed = Algebra(twisted_constants(a.sc, n), f'{a.name}_N')
    if not is_left_prejj(deformed):
        raise ContractViolation(f"A_N of '{a.name}' is not left pre-Jacobi-Jordan")
    if not check_morphism(n, deformed, a, cap=1).holds:
        raise ContractViolation(f"Nijenhuis operator is not a morphism A_N -> '{a.name}'")
    if not nijenhuis_jj_check(sub_adjacent(a), n, cap=1).holds:
        raise ContractViolation(f"Nijenhuis operator on '{a.name}' fails on the sub-adjacent algebra")
    return deformed


def triviality_holds(a, n, t, w=None):
    """(Id+tN)(x·_t y) = (Id+tN)x·(Id+tN)y on every basis pair, ω = δ¹N unless given."""
    n = square_map(n, a.dim)
    if w is None:
        w = Cochain.from_bilinear(twisted_constants(a.sc, n))
    t = to_scalar(t)
    return check_morphism(identity(a.dim) + t * n, deformed_algebra(a, w, t), a, cap=1).holds


@dataclass(frozen=True)
class TrivialDeformation:
    w: Cochain
    check: DeformationCheck
    samples: tuple = field(default=())

    @property
    def trivial(self):
        return all(ok for _, ok in self.samples)


def nijenhuis_trivial_deformation(a, n):
    n = square_map(n, a.dim)
    require_left_prejj(a)
    require_nijenhuis(a, n)
    w = apply_delta(regular_representation(a), Cochain.from_map(n))
    if not np.array_equal(w.values, twisted_constants(a.sc, n)):
        raise ContractViolation(f"delta^1 N differs from the product x ._N y on '{a.name}'")
    check = check_deformation(a, w)
    if not check.generates:
        raise ContractViolation(f"delta^1 N does not generate a deformation of '{a.name}'")
    samples = tuple((t, triviality_holds(a, n, t, w)) for t in deformation_samples())
    failed = [t for t, ok in samples if not ok]
    if failed:
        raise ContractViolation(f"Id + tN is not a morphism A_t -> '{a.name}' at t = {failed}")
    return TrivialDeformation(w, check, samples)


# ============================================================================
# THE ALGEBRA OF OPERATORS
# ============================================================================

@dataclass(frozen=True)
class OperatorEquivalence:
    nijenhuis: bool
    rota_baxter: bool


def shift_preserves(a, n, shift):
    """Whether N + λId is Nijenhuis; for Nijenhuis N it always is."""
    n = square_map(n, a.dim)
    shift = to_scalar(shift)
    shifted = nijenhuis_check(a, n + shift * identity(a.dim), cap=1).holds
    if shifted != nijenhuis_check(a, n, cap=1).holds:
        raise ContractViolation(f"N + ({shift})Id and N disagree on being Nijenhuis on '{a.name}'")
    return shifted


def _equivalence(a, n, weight):
    nijenhuis = nijenhuis_check(a, n, cap=1).holds
    rota_baxter = rota_baxter_check(a, n, weight, cap=1).holds
    if nijenhuis != rota_baxter:
        raise ContractViolation(f"Nijenhuis and Rota-Baxter of weight {weight} disagree on '{a.name}'")
    return OperatorEquivalence(nijenhuis, rota_baxter)


def nilpotent_equivalence(a, n):
    n = square_map(n, a.dim)
    if not is_zero(matmul(n, n)):
        raise PreconditionNotNilpotent('N^2 is not zero')
    return _equivalence(a, n, 0)


def idempotent_equivalence(a, n):
    n = square_map(n, a.dim)
    if not np.array_equal(matmul(n, n), n):
        raise PreconditionNotIdempotent('N^2 is not N')
    return _equivalence(a, n, -1)


@dataclass(frozen=True)
class OperatorAlgebraReport:
    nijenhuis: bool
    shifts: dict
    nilpotent_equiv: object
    idempotent_equiv: object

    def shift_ok(self, shift):
        return self.shifts[to_scalar(shift)]


DEFAULT_SHIFTS = (0, 1, -2, '5/7')


def nijenhuis_algebra_of_operators(a, n, shifts=DEFAULT_SHIFTS):
    """
    The three facts about N together. nilpotent_equiv / idempotent_equiv are
    None when N² ≠ 0 / N² ≠ N.
    """
    n = square_map(n, a.dim)
    square = matmul(n, n)
    return OperatorAlgebraReport(
        nijenhuis=nijenhuis_check(a, n, cap=1).holds,
        shifts={to_scalar(s): shift_preserves(a, n, s) for s in shifts},
        nilpotent_equiv=nilpotent_equivalence(a, n) if is_zero(square) else None,
        idempotent_equiv=idempotent_equivalence(a, n) if np.array_equal(square, n) else None,
    )


# ============================================================================
# SEARCH
# ============================================================================

def search_nijenhuis(a, entries=None, limit=None):
    """Nijenhuis operators among the candidate maps; best effort, not exhaustive."""
    found = [n for n in candidate_maps(a.dim, entries, limit) if nijenhuis_check(a, n, cap=1).holds]
    logger.info("Found %d Nijenhuis operators on '%s'", len(found), a.name)
    return found
