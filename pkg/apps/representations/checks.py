"""
Representation Checks

Both defining identities of a representation are bilinear in the algebra
arguments, so they are checked on basis pairs. Defects are (dim, dim, vdim,
vdim) tensors; witnesses report the pair and the flattened defect matrix.

    left_action:   ρ(x∗y) + ρ(x)ρ(y) + ρ(y)ρ(x) = 0
    right_action:  μ(x·y) + μ(y)μ(x) + μ(y)ρ(x) + ρ(x)μ(y) = 0
    jj_action:     ρ(x∗y) + ρ(x)ρ(y) + ρ(y)ρ(x) = 0   (∗ the Jacobi-Jordan product)
    mu_commute:    μ(x)μ(y) = μ(y)μ(x)
"""

import numpy as np

from apps.algebras.axioms import require_jacobi_jordan, require_left_prejj
from apps.algebras.reports import CheckResult, collect_witnesses
from apps.algebras.structures import sub_adjacent_constants


def pairwise(first, second):
    """out[i, j] = first[i] @ second[j]."""
    return np.matmul(first[:, None], second[None, :])


def _flat(defects):
    d = defects.shape[0]
    return defects.reshape(d, d, -1)


def _combine(*parts):
    witnesses = []
    for found, _ in parts:
        witnesses.extend(found)
    return CheckResult(all(total == 0 for _, total in parts), tuple(witnesses))


def left_action_defects(sc, rho):
    return np.tensordot(sub_adjacent_constants(sc), rho, axes=(2, 0)) + pairwise(rho, rho) + pairwise(rho, rho).transpose(1, 0, 2, 3)


def right_action_defects(sc, rho, mu):
    # [i, j] = μ(e_i e_j) + μ_j μ_i + μ_j ρ_i + ρ_i μ_j
    return (
        np.tensordot(sc, mu, axes=(2, 0))
        + pairwise(mu, mu).transpose(1, 0, 2, 3)
        + pairwise(mu, rho).transpose(1, 0, 2, 3)
        + pairwise(rho, mu)
    )


def check_prejj_representation(r, cap=None):
    require_left_prejj(r.alg)
    if r.vdim == 0:
        return CheckResult(True)
    return _combine(
        collect_witnesses('left_action', _flat(left_action_defects(r.alg.sc, r.rho)), cap,
                          keep=lambda idx: idx[0] <= idx[1]),
        collect_witnesses('right_action', _flat(right_action_defects(r.alg.sc, r.rho, r.mu)), cap),
    )


def check_jj_representation(r, cap=None):
    require_jacobi_jordan(r.alg)
    if r.vdim == 0:
        return CheckResult(True)
    rho = r.rho
    defects = np.tensordot(r.alg.sc, rho, axes=(2, 0)) + pairwise(rho, rho) + pairwise(rho, rho).transpose(1, 0, 2, 3)
    return _combine(
        collect_witnesses('jj_action', _flat(defects), cap, keep=lambda idx: idx[0] <= idx[1]),
    )


def check_hp(r, cap=None):
    if r.vdim == 0:
        return CheckResult(True)
    products = pairwise(r.mu, r.mu)
    defects = products - products.transpose(1, 0, 2, 3)
    return _combine(
        collect_witnesses('mu_commute', _flat(defects), cap, keep=lambda idx: idx[0] < idx[1]),
    )
