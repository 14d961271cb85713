"""
Brackets of (anti)derivations of an algebra acting on itself.

Closure table for the commutator [D1, D2] = D1D2 - D2D1:

    (Der,  Der)  -> Der
    (ADer, ADer) -> Der
    (ADer, Der)  -> ADer
    (Der,  ADer) -> ADer

For the anticommutator {D1, D2} = D1D2 + D2D1, with X(u, v) =
(D1u)·(D2v) + (D2u)·(D1v), define

    antider condition:  2({D1,D2}u)·v + 2u·({D1,D2}v) + 2X(u, v) = 0
    der condition:      2X(u, v) = 0

When D1, D2 have the same kind, {D1,D2} is an antiderivation iff the antider
condition holds and a derivation iff the der condition holds; for mixed
kinds the two conditions swap roles.
"""

import logging
from dataclasses import dataclass

import numpy as np

from apps.algebras.structures import multiply
from apps.derivations.exceptions import ConditionMembershipMismatch, MembershipFailed
from apps.derivations.spaces import ANTIDERIVATION, DERIVATION, antiderivation_space, derivation_space
from apps.ratlinalg.exceptions import ContractViolation, DimensionMismatch
from apps.ratlinalg.linalg import as_matrix, matmul, solve, unit_vector
from apps.ratlinalg.scalars import ZERO
from apps.representations.constructions import regular_representation

logger = logging.getLogger(__name__)

CLOSURE_TABLE = {
    (DERIVATION, DERIVATION): DERIVATION,
    (ANTIDERIVATION, ANTIDERIVATION): DERIVATION,
    (ANTIDERIVATION, DERIVATION): ANTIDERIVATION,
    (DERIVATION, ANTIDERIVATION): ANTIDERIVATION,
}


def _square(d, n=None):
    d = as_matrix(d)
    if d.shape[0] != d.shape[1] or (n is not None and d.shape[0] != n):
        raise DimensionMismatch(f'Expected a square map of size {n}, got {d.shape}')
    return d


def bracket(d1, d2):
    d1, d2 = _square(d1), _square(d2, as_matrix(d1).shape[0])
    return matmul(d1, d2) - matmul(d2, d1)


def anticommutator(d1, d2):
    d1, d2 = _square(d1), _square(d2, as_matrix(d1).shape[0])
    return matmul(d1, d2) + matmul(d2, d1)


def adjoint_spaces(a):
    r = regular_representation(a)
    return {DERIVATION: derivation_space(r), ANTIDERIVATION: antiderivation_space(r)}


def kinds_of(d, spaces):
    return [kind for kind, space in spaces.items() if space.contains(d)]


def classify(d1_kind, d2_kind, result, a, spaces=None):
    """Kind the closure table promises for a bracket, verified by membership."""
    expected = CLOSURE_TABLE[(d1_kind, d2_kind)]
    spaces = spaces or adjoint_spaces(a)
    if not spaces[expected].contains(result):
        raise MembershipFailed(f"Bracket of {d1_kind} and {d2_kind} of '{a.name}' is not a {expected}")
    return expected


# ============================================================================
# ANTICOMMUTATOR CRITERION
# ============================================================================

@dataclass(frozen=True)
class AnticommutatorReport:
    antider_condition: bool
    der_condition: bool
    is_ader: bool
    is_der: bool
    checked_cases: tuple = ()


def _conditions(d1, d2, a):
    n = a.dim
    anti = anticommutator(d1, d2)
    antider, der = True, True
    for i in range(n):
        u = unit_vector(n, i)
        for j in range(n):
            v = unit_vector(n, j)
            cross = multiply(a, d1[:, i], d2[:, j]) + multiply(a, d2[:, i], d1[:, j])
            if np.count_nonzero(cross):
                der = False
            ends = multiply(a, anti[:, i], v) + multiply(a, u, anti[:, j])
            if np.count_nonzero(ends + cross):
                antider = False
    return antider, der


def anticommutator_condition(d1, d2, a):
    """
    Evaluate both anticommutator conditions on basis pairs and cross-check
    them against direct membership of {D1, D2} in ADer(A) and Der(A).
    """
    d1, d2 = _square(d1, a.dim), _square(d2, a.dim)
    antider, der = _conditions(d1, d2, a)
    spaces = adjoint_spaces(a)
    anti = anticommutator(d1, d2)
    is_ader = spaces[ANTIDERIVATION].contains(anti)
    is_der = spaces[DERIVATION].contains(anti)
    cases = []
    for k1 in kinds_of(d1, spaces):
        for k2 in kinds_of(d2, spaces):
            same = k1 == k2
            ader_via, der_via = (antider, der) if same else (der, antider)
            if ader_via != is_ader or der_via != is_der:
                raise ConditionMembershipMismatch(
                    f'Anticommutator of {k1} and {k2}: conditions give ADer={ader_via}, Der={der_via}; '
                    f'membership gives ADer={is_ader}, Der={is_der}'
                )
            cases.append((k1, k2))
    return AnticommutatorReport(antider, der, is_ader, is_der, tuple(cases))


# ============================================================================
# LIE ALGEBRA OF DERIVATIONS
# ============================================================================

@dataclass(frozen=True)
class LieStructure:
    """Structure constants of Der(A) under the commutator, in its canonical basis."""

    sc: np.ndarray
    antisymmetric: bool
    jacobi: bool

    @property
    def dim(self):
        return self.sc.shape[0]


def derivation_lie_algebra(a):
    space = derivation_space(regular_representation(a))
    maps = space.maps()
    k = len(maps)
    coordinates = space.basis.basis.T.copy()
    sc = np.full((k, k, k), ZERO, dtype=object)
    for p in range(k):
        for q in range(k):
            commutator = bracket(maps[p], maps[q])
            coords = solve(coordinates, commutator.T.reshape(-1))
            if coords is None:
                raise MembershipFailed(f"Commutator of two derivations of '{a.name}' is not a derivation")
            sc[p, q] = coords
    antisymmetric = np.count_nonzero(sc + sc.transpose(1, 0, 2)) == 0
    nested = np.tensordot(sc, sc, axes=(2, 0))  # [[x_p, x_q], x_r]
    cyclic = nested + nested.transpose(1, 2, 0, 3) + nested.transpose(2, 0, 1, 3)
    jacobi = np.count_nonzero(cyclic) == 0
    if not (antisymmetric and jacobi):
        raise ContractViolation(f"Derivations of '{a.name}' do not form a Lie algebra")
    return LieStructure(sc, antisymmetric, jacobi)
