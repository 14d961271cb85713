"""
Representation Structures

A representation of an algebra A on V = Q^vdim is two stacks of vdim x vdim
matrices indexed by the basis of A: rho[i] = ρ(e_i) and mu[i] = μ(e_i).
A representation of a Jacobi-Jordan algebra carries rho only.
"""

from dataclasses import dataclass

import numpy as np

from apps.algebras.structures import freeze
from apps.ratlinalg.exceptions import DimensionMismatch
from apps.ratlinalg.linalg import coerce_array, as_vector
from apps.ratlinalg.scalars import ZERO


def _stack(data, alg, vdim, label):
    stack = np.array(data, dtype=object)
    if stack.size == 0:
        stack = np.full((alg.dim, vdim, vdim), ZERO, dtype=object)
    if stack.shape != (alg.dim, vdim, vdim):
        raise DimensionMismatch(f'{label} must have shape {(alg.dim, vdim, vdim)}, got {stack.shape}')
    return freeze(coerce_array(stack) if stack.size else stack)


def _vdim(data):
    shape = np.shape(data)
    return shape[1] if len(shape) == 3 else 0


def _action(stack, x):
    return np.tensordot(as_vector(x), stack, axes=(0, 0))


@dataclass(frozen=True, eq=False)
class Representation:
    alg: object
    rho: np.ndarray
    mu: np.ndarray
    name: str = 'V'

    def __post_init__(self):
        vdim = _vdim(self.rho)
        object.__setattr__(self, 'rho', _stack(self.rho, self.alg, vdim, 'rho'))
        object.__setattr__(self, 'mu', _stack(self.mu, self.alg, vdim, 'mu'))

    @property
    def vdim(self):
        return self.rho.shape[1]

    def rho_of(self, x):
        return _action(self.rho, x)

    def mu_of(self, x):
        return _action(self.mu, x)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.rho.shape == other.rho.shape
            and np.array_equal(self.rho, other.rho)
            and np.array_equal(self.mu, other.mu)
        )

    __hash__ = None

    def __repr__(self):
        return f"Representation(name='{self.name}', alg='{self.alg.name}', vdim={self.vdim})"


@dataclass(frozen=True, eq=False)
class JJRepresentation:
    alg: object
    rho: np.ndarray
    name: str = 'V'

    def __post_init__(self):
        object.__setattr__(self, 'rho', _stack(self.rho, self.alg, _vdim(self.rho), 'rho'))

    @property
    def vdim(self):
        return self.rho.shape[1]

    def rho_of(self, x):
        return _action(self.rho, x)

    def __repr__(self):
        return f"JJRepresentation(name='{self.name}', alg='{self.alg.name}', vdim={self.vdim})"
