"""
Linear Deformations

x·_t y = x·y + tω(x, y) is left pre-Jacobi-Jordan for every t exactly when
ω is a 2-cocycle of the regular representation and (A, ω) is itself left
pre-Jacobi-Jordan; the anti-associator identity of ·_t is t times the first
condition plus t² times the second. The parameter t is never symbolic: the
two t-free conditions are checked exactly, and the family is spot-checked at
the rational samples in PJJ_DEFORMATION_SAMPLES.

Equivalence through Id + tN splits into the coefficients of t, t² and t³.
"""

import itertools
import logging
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from apps.algebras.axioms import is_left_prejj, left_prejj_defects, require_left_prejj
from apps.algebras.constructions import check_morphism
from apps.algebras.reports import collect_witnesses
from apps.algebras.structures import Algebra
from apps.cohomology.cochains import Cochain
from apps.cohomology.complex import apply_differential
from apps.cohomology.groups import cohomology, coboundaries
from apps.deformations.exceptions import NotCocycle, NotGenerating
from apps.deformations.tensors import pull_back, push_forward, square_map, twisted_constants
from apps.ratlinalg.exceptions import ContractViolation, DimensionMismatch
from apps.ratlinalg.linalg import as_matrix, identity, member, solve
from apps.ratlinalg.scalars import parse_scalar, to_scalar
from apps.representations.constructions import regular_representation

logger = logging.getLogger(__name__)


def deformation_samples():
    return [parse_scalar(text.strip()) for text in settings.PJJ_DEFORMATION_SAMPLES]


def search_alphabet():
    return [parse_scalar(text.strip()) for text in settings.PJJ_SEARCH_ENTRIES]


def _bilinear_on(a, w):
    if not isinstance(w, Cochain):
        w = Cochain.from_bilinear(w)
    if w.degree != 2 or w.algdim != a.dim or w.vdim != a.dim:
        raise DimensionMismatch(f"Expected a bilinear map on '{a.name}' (dim {a.dim}), got {w!r}")
    return w


def _symmetric_pairs(idx):
    return idx[0] <= idx[1]


# ============================================================================
# GENERATING A DEFORMATION
# ============================================================================

@dataclass(frozen=True)
class DeformationCheck:
    is_two_cocycle: bool
    is_prejj_square: bool
    generates: bool
    witnesses: tuple = ()

    def __bool__(self):
        return self.generates


def cocycle_defects(sc, w):
    """
    ω(x,y)·z + ω(y,x)·z + ω(x·y,z) + ω(y·x,z) + ω(x,y·z) + ω(y,x·z)
    + x·ω(y,z) + y·ω(x,z), indexed [x, y, z, out].
    """
    w_then_product = np.tensordot(w, sc, axes=(2, 0))
    product_then_w = np.tensordot(sc, w, axes=(2, 0))
    w_of_right_product = np.tensordot(w, sc, axes=(1, 2)).transpose(0, 2, 3, 1)
    product_with_w = np.tensordot(sc, w, axes=(1, 2)).transpose(0, 2, 3, 1)
    half = w_then_product + product_then_w + w_of_right_product + product_with_w
    return half + half.transpose(1, 0, 2, 3)


def deformed_algebra(a, w, t):
    w = _bilinear_on(a, w)
    t = to_scalar(t)
    return Algebra(a.sc + t * w.values, f'{a.name}+({t})w')


def check_deformation(a, w, cap=None):
    require_left_prejj(a)
    w = _bilinear_on(a, w)
    cocycle = cocycle_defects(a.sc, w.values)
    differential = apply_differential(regular_representation(a), w)
    if not np.array_equal(cocycle, differential.values):
        raise ContractViolation(f"Cocycle identity and d^2 disagree on a bilinear map of '{a.name}'")
    square = left_prejj_defects(w.values)
    cocycle_witnesses, cocycle_total = collect_witnesses('two_cocycle', cocycle, cap, keep=_symmetric_pairs)
    square_witnesses, square_total = collect_witnesses('prejj_square', square, cap, keep=_symmetric_pairs)
    check = DeformationCheck(cocycle_total == 0, square_total == 0, cocycle_total == 0 and square_total == 0,
                             tuple(cocycle_witnesses + square_witnesses))
    _spot_check(a, w, check.generates)
    return check


def _spot_check(a, w, generates):
    # the defect of ·_t has no constant term and degree two, so two distinct
    # nonzero samples already decide the family
    samples = [t for t in deformation_samples() if t]
    if len(set(samples)) < 2:
        return
    on_samples = all(is_left_prejj(deformed_algebra(a, w, t)) for t in samples)
    if on_samples != generates:
        raise ContractViolation(
            f"Deformation of '{a.name}': conditions give {generates}, samples {samples} give {on_samples}"
        )


def require_generating(a, w):
    check = check_deformation(a, w)
    if not check.generates:
        raise NotGenerating(f"Bilinear map does not generate a deformation of '{a.name}'")
    return check


# ============================================================================
# EQUIVALENCE
# ============================================================================

@dataclass(frozen=True)
class EquivalenceCheck:
    eq49: bool
    eq50: bool
    eq56: bool
    equivalent: bool
    witnesses: tuple = ()

    def __bool__(self):
        return self.equivalent


def equivalence_defects(sc, w, w2, n):
    eye = identity(n.shape[0])
    first = w2 - w + twisted_constants(sc, n)
    second = push_forward(n, w) - pull_back(sc, n, n) - pull_back(w2, n, eye) - pull_back(w2, eye, n)
    third = pull_back(w2, n, n)
    return first, second, third


def _equivalence(a, w, w2, n, cap=None):
    parts = [
        collect_witnesses(label, defects, cap)
        for label, defects in zip(('eq49', 'eq50', 'eq56'), equivalence_defects(a.sc, w.values, w2.values, n))
    ]
    flags = [total == 0 for _, total in parts]
    witnesses = tuple(wit for found, _ in parts for wit in found)
    return EquivalenceCheck(*flags, all(flags), witnesses)


def check_equivalence(a, w, w2, n, cap=None):
    """Whether Id + tN: A_t → A'_t is a morphism for every t."""
    w, w2 = _bilinear_on(a, w), _bilinear_on(a, w2)
    n = square_map(n, a.dim)
    require_generating(a, w)
    require_generating(a, w2)
    check = _equivalence(a, w, w2, n, cap)
    if check.equivalent:
        _confirm_equivalence(a, w, w2, n)
    return check


def _confirm_equivalence(a, w, w2, n):
    r = regular_representation(a)
    difference = w - w2
    if not np.array_equal(difference.values, twisted_constants(a.sc, n)):
        raise ContractViolation(f"Equivalent deformations of '{a.name}' do not differ by delta^1 N")
    if not member(coboundaries(r, 2), difference.as_vector()):
        raise ContractViolation(f"Equivalent deformations of '{a.name}' are not cohomologous")
    eye = identity(a.dim)
    for t in deformation_samples():
        if not check_morphism(eye + t * n, deformed_algebra(a, w, t), deformed_algebra(a, w2, t)).holds:
            raise ContractViolation(f"Id + ({t})N is not a morphism between the deformations of '{a.name}'")


def candidate_maps(dim, entries=None, limit=None):
    """Square maps with entries from the search alphabet, at most `limit` of them."""
    entries = entries if entries is not None else search_alphabet()
    limit = limit if limit is not None else settings.PJJ_SEARCH_LIMIT
    for count, values in enumerate(itertools.product(entries, repeat=dim * dim)):
        if count >= limit:
            logger.warning('Operator search over %dx%d maps stopped after %d candidates', dim, dim, limit)
            return
        yield as_matrix(np.array(values, dtype=object).reshape(dim, dim))


def search_equivalence(a, w, w2, entries=None, limit=None):
    """
    First N (in search order) making the two deformations equivalent, or None.
    Best effort: only maps over the search alphabet are tried.
    """
    w, w2 = _bilinear_on(a, w), _bilinear_on(a, w2)
    require_generating(a, w)
    require_generating(a, w2)
    for n in candidate_maps(a.dim, entries, limit):
        if _equivalence(a, w, w2, n, cap=1).equivalent:
            _confirm_equivalence(a, w, w2, n)
            return n
    return None


# ============================================================================
# CLASSES IN H²(A, A)
# ============================================================================

def deformation_class(a, w, report=None):
    """Coordinates of [ω] against the representatives of H²(A, A)."""
    w = _bilinear_on(a, w)
    report = report or cohomology(regular_representation(a), 2)
    vector = w.as_vector()
    if not member(report.cocycles, vector):
        raise NotCocycle(f"Bilinear map is not a 2-cocycle of '{a.name}'")
    columns = list(report.coboundaries.basis) + [rep.as_vector() for rep in report.representatives]
    if not columns:
        return ()
    coordinates = solve(np.vstack(columns).T.copy(), vector)
    if coordinates is None:
        raise ContractViolation(f"Cocycle of '{a.name}' is outside the span of B^2 and the representatives")
    return tuple(coordinates[report.dim_b:])


def class_representative(a, coordinates, report=None):
    report = report or cohomology(regular_representation(a), 2)
    if len(coordinates) != report.dim_h:
        raise DimensionMismatch(f'H^2 has dimension {report.dim_h}, got {len(coordinates)} coordinates')
    out = Cochain.zero(2, a.dim, a.dim)
    for c, rep in zip(coordinates, report.representatives):
        out = out + Cochain(2, a.dim, a.dim, to_scalar(c) * rep.values)
    return out
