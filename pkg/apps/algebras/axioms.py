"""
Axiom Checks

Every identity is multilinear, so it is verified on basis tuples only and the
answer is exact. Defects are computed as whole tensors (basis indices on the
leading axes, output coordinates on the last one).

Usage:
    report = check_axioms(a1())
    report.left_prejj, report.witnesses_for('commutative')
"""

import itertools
import logging

import numpy as np

from apps.algebras.exceptions import NotCommAssoc, NotJJ, NotPreJJ
from apps.algebras.reports import AxiomReport, Witness, collect_witnesses
from apps.algebras.structures import (
    _check_vector,
    bilinear,
    multiply,
    sub_adjacent_constants,
    triple_products,
)
from apps.ratlinalg.linalg import is_zero

logger = logging.getLogger(__name__)


# ============================================================================
# MULTILINEAR EXPRESSIONS
# ============================================================================

def anti_associator(a, x, y, z):
    """(x·y)·z + x·(y·z)."""
    return multiply(a, multiply(a, x, y), z) + multiply(a, x, multiply(a, y, z))


def jacobian_constants(a):
    """Structure constants the Jacobian is taken with, and the product's name."""
    if is_commutative(a):
        return a.sc, 'product'
    return sub_adjacent_constants(a.sc), 'sub-adjacent'


def jacobian(a, x, y, z):
    """Cyclic sum (x∗y)∗z + (y∗z)∗x + (z∗x)∗y."""
    x, y, z = (_check_vector(a, v) for v in (x, y, z))
    sc, _ = jacobian_constants(a)
    return (
        bilinear(sc, bilinear(sc, x, y), z)
        + bilinear(sc, bilinear(sc, y, z), x)
        + bilinear(sc, bilinear(sc, z, x), y)
    )


# ============================================================================
# DEFECT TENSORS
# ============================================================================

def commutator_defects(sc):
    return sc - np.transpose(sc, (1, 0, 2))


def anti_associator_defects(sc):
    left, right = triple_products(sc)
    return left + right


def left_prejj_defects(sc):
    aasso = anti_associator_defects(sc)
    return aasso + np.transpose(aasso, (1, 0, 2, 3))


def right_prejj_defects(sc):
    aasso = anti_associator_defects(sc)
    return aasso + np.transpose(aasso, (0, 2, 1, 3))


def jacobian_defects(sc):
    left, _ = triple_products(sc)
    return left + np.transpose(left, (2, 0, 1, 3)) + np.transpose(left, (1, 2, 0, 3))


def associator_defects(sc):
    left, right = triple_products(sc)
    return left - right


def cube_defects(sc):
    """Full symmetrization of (x∗y)∗z; zero exactly when (x∗x)∗x = 0 for every x."""
    left, _ = triple_products(sc)
    return sum(np.transpose(left, perm + (3,)) for perm in itertools.permutations(range(3)))


# ============================================================================
# PREDICATES
# ============================================================================

def is_commutative(a):
    return is_zero(commutator_defects(a.sc))


def is_left_prejj(a):
    return is_zero(left_prejj_defects(a.sc))


def is_right_prejj(a):
    return is_zero(right_prejj_defects(a.sc))


def is_associative(a):
    return is_zero(associator_defects(a.sc))


def is_jacobi_jordan(a):
    return is_commutative(a) and is_zero(jacobian_defects(a.sc))


def require_left_prejj(a):
    if not is_left_prejj(a):
        raise NotPreJJ(f"Algebra '{a.name}' is not left pre-Jacobi-Jordan")


def require_jacobi_jordan(a):
    if not is_jacobi_jordan(a):
        raise NotJJ(f"Algebra '{a.name}' is not Jacobi-Jordan")


def require_commutative_associative(b):
    if not (is_commutative(b) and is_associative(b)):
        raise NotCommAssoc(f"Algebra '{b.name}' is not commutative and associative")


# ============================================================================
# REPORT
# ============================================================================

def check_axioms(a, witness_cap=None):
    """
    Evaluate every axiom flag on basis tuples.

    witness_cap: witnesses kept per axiom (None = PJJ_WITNESS_CAP, 0 = all).
    """
    sc = a.sc
    witnesses = []
    violations = {}

    def record(axiom, defects, keep=None):
        found, total = collect_witnesses(axiom, defects, witness_cap, keep)
        witnesses.extend(found)
        violations[axiom] = total
        return total == 0

    commutative = record('commutative', commutator_defects(sc), keep=lambda idx: idx[0] < idx[1])
    anti_associative = record('anti_associative', anti_associator_defects(sc))
    left = record('left_prejj', left_prejj_defects(sc), keep=lambda idx: idx[0] <= idx[1])
    right = record('right_prejj', right_prejj_defects(sc), keep=lambda idx: idx[1] <= idx[2])

    jsc, product = jacobian_constants(a)
    jacobian_vanishes = record('jacobi_jordan', jacobian_defects(jsc))
    jacobi_jordan = commutative and jacobian_vanishes
    if not jacobi_jordan and jacobian_vanishes:
        first = next(w for w in witnesses if w.axiom == 'commutative')
        witnesses.append(Witness('jacobi_jordan', first.indices, first.defect))
        violations['jacobi_jordan'] = violations['commutative']
    cubes_vanish = record('cubes_vanish', cube_defects(jsc), keep=lambda idx: idx[0] <= idx[1] <= idx[2])

    logger.debug("Axioms of '%s' (dim %d): %s", a.name, a.dim, violations)
    return AxiomReport(
        commutative=commutative,
        anti_associative=anti_associative,
        left_prejj=left,
        right_prejj=right,
        jacobi_jordan=jacobi_jordan,
        cubes_vanish=cubes_vanish,
        jacobian_product=product,
        witnesses=tuple(witnesses),
        violations=violations,
    )
