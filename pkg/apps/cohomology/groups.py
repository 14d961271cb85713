"""
Cohomology Groups

Z^k = Ker d^k, B^k = Im δ^{k-1} (B⁰ = 0) and H^k = Z^k / B^k, with coset
representatives taken from the canonical basis of Z^k.

Usage:
    report = cohomology(regular_representation(a2()), 1)
    report.dim_z, report.dim_b, report.dim_h   # 7, 2, 5
"""

import logging
from dataclasses import dataclass

from apps.algebras.constructions import product_span_matrix
from apps.cohomology.cochains import Cochain
from apps.cohomology.complex import c0_space, delta_matrix, differential_matrix
from apps.ratlinalg.exceptions import ContractViolation
from apps.ratlinalg.linalg import (
    Subspace,
    image_basis,
    kernel_basis,
    matvec,
    quotient_dim_and_reps,
    rank,
    span,
    zero_space,
)
from apps.representations.constructions import scalar_representation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CohomologyReport:
    degree: int
    dim_z: int
    dim_b: int
    dim_h: int
    representatives: tuple
    cocycles: Subspace
    coboundaries: Subspace

    def summary(self):
        return {'degree': self.degree, 'dimZ': self.dim_z, 'dimB': self.dim_b, 'dimH': self.dim_h}


def cocycles(r, k):
    if k == 0:
        c0 = c0_space(r)
        coordinates = kernel_basis(differential_matrix(r, 0))
        basis_t = c0.basis.T.copy()
        return span([matvec(basis_t, c) for c in coordinates.basis], r.vdim)
    return kernel_basis(differential_matrix(r, k))


def coboundaries(r, k):
    if k == 0:
        return zero_space(r.vdim)
    return image_basis(delta_matrix(r, k - 1))


def cohomology(r, k):
    if k < 0:
        raise ValueError(f'Degree must be non-negative, got {k}')
    z = cocycles(r, k)
    b = coboundaries(r, k)
    dim_h, reps = quotient_dim_and_reps(z, b)
    logger.info("H^%d('%s', '%s'): dim Z %d, dim B %d, dim H %d", k, r.alg.name, r.name, z.dim, b.dim, dim_h)
    representatives = tuple(Cochain.from_vector(k, r.alg.dim, r.vdim, v) for v in reps)
    return CohomologyReport(k, z.dim, b.dim, dim_h, representatives, z, b)


def scalar_cohomology_h1(a):
    """H¹(A, K) ≅ (A/A²)*: functionals vanishing on every product."""
    report = cohomology(scalar_representation(a), 1)
    expected = a.dim - rank(product_span_matrix(a))
    if report.dim_h != expected:
        raise ContractViolation(f"dim H^1('{a.name}', K) = {report.dim_h} but dim A/A^2 = {expected}")
    return report
