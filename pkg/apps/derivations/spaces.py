"""
Derivation Spaces

Derivations and antiderivations of A with values in a representation V,
and the inner antiderivations D_w = ρ(·)w + μ(·)w for w in V^{r.Aas}.

A map D: A → V is a vdim x dim matrix (column j = D(e_j)) flattened
column-major, so coordinate j·vdim + r holds D[r, j]. This is the same
coordinate order as one-cochains, so these spaces compare directly with the
cocycles and coboundaries of the cohomology app.

Usage:
    space = antiderivation_space(regular_representation(a1()))
    space.dim, space.maps()
"""

import logging
from dataclasses import dataclass

import numpy as np

from apps.algebras.constructions import invariant_subspaces_of
from apps.ratlinalg.exceptions import ContractViolation
from apps.ratlinalg.linalg import identity, image_basis, kernel_basis, matmul, member, zeros

logger = logging.getLogger(__name__)

DERIVATION = 'derivation'
ANTIDERIVATION = 'antiderivation'
INNER_ANTIDERIVATION = 'inner_antiderivation'


def map_to_vector(d):
    return np.asarray(d, dtype=object).T.reshape(-1).copy()


def vector_to_map(v, vdim, dim):
    return np.asarray(v, dtype=object).reshape(dim, vdim).T.copy()


@dataclass(frozen=True, eq=False)
class DerivationSpace:
    kind: str
    rep: object
    basis: object

    @property
    def dim(self):
        return self.basis.dim

    def maps(self):
        return [vector_to_map(v, self.rep.vdim, self.rep.alg.dim) for v in self.basis.basis]

    def contains(self, d):
        return member(self.basis, map_to_vector(d))

    def __repr__(self):
        return f'DerivationSpace(kind={self.kind}, dim={self.dim})'


def identity_system(r, sign):
    """
    Matrix of D ↦ (D(e_i·e_j) + sign·(μ(e_j)D(e_i) + ρ(e_i)D(e_j)))_{i,j}.

    Rows are indexed by (i, j, output coordinate), columns by flattened D.
    """
    a, m = r.alg, r.vdim
    d = a.dim
    system = zeros(d * d * m, d * m)
    eye = identity(m)
    for i in range(d):
        for j in range(d):
            rows = slice((i * d + j) * m, (i * d + j + 1) * m)
            for k in np.flatnonzero(a.sc[i, j]):
                system[rows, k * m:(k + 1) * m] += a.sc[i, j, k] * eye
            system[rows, i * m:(i + 1) * m] += sign * r.mu[j]
            system[rows, j * m:(j + 1) * m] += sign * r.rho[i]
    return system


def derivation_space(r):
    """D(u·v) = μ(v)D(u) + ρ(u)D(v)."""
    space = kernel_basis(identity_system(r, -1))
    logger.debug("Der of '%s' in '%s': dim %d", r.alg.name, r.name, space.dim)
    return DerivationSpace(DERIVATION, r, space)


def antiderivation_space(r):
    """D(u·v) = -μ(v)D(u) - ρ(u)D(v)."""
    space = kernel_basis(identity_system(r, 1))
    logger.debug("ADer of '%s' in '%s': dim %d", r.alg.name, r.name, space.dim)
    return DerivationSpace(ANTIDERIVATION, r, space)


def inner_map_matrix(r):
    """Matrix of w ↦ D_w on all of V: block k is ρ(e_k) + μ(e_k)."""
    return np.vstack([r.rho[k] + r.mu[k] for k in range(r.alg.dim)]) if r.alg.dim else zeros(0, r.vdim)


def inner_antiderivation_space(r):
    """Image of w ↦ D_w restricted to V^{r.Aas}; every element is an antiderivation."""
    r_aas = invariant_subspaces_of(r.alg, r.rho, r.mu).r_aas
    space = image_basis(matmul(inner_map_matrix(r), r_aas.basis.T.copy()))
    antiderivations = antiderivation_space(r)
    for v in space.basis:
        if not member(antiderivations.basis, v):
            raise ContractViolation(f"An inner antiderivation of '{r.alg.name}' is not an antiderivation")
    return DerivationSpace(INNER_ANTIDERIVATION, r, space)


def space_of_kind(r, kind):
    if kind == DERIVATION:
        return derivation_space(r)
    if kind == ANTIDERIVATION:
        return antiderivation_space(r)
    if kind == INNER_ANTIDERIVATION:
        return inner_antiderivation_space(r)
    raise ValueError(f"Unknown derivation kind '{kind}'")
