"""
Algebra Structures

An algebra is a dimension plus structure constants sc[i, j, k], the
coefficient of e_k in e_i·e_j (0-based in memory, 1-based in files and
reports). Structure tensors are immutable numpy object arrays of Fractions.

Usage:
    a = Algebra.from_entries('A1', 2, [(1, 1, 2, 1)])
    multiply(a, unit_vector(2, 0), unit_vector(2, 0))   # e2
"""

from dataclasses import dataclass

import numpy as np

from apps.ratlinalg.exceptions import DimensionMismatch
from apps.ratlinalg.linalg import coerce_array, as_vector
from apps.ratlinalg.scalars import ZERO, to_scalar


def freeze(arr):
    arr.flags.writeable = False
    return arr


def zero_tensor(*shape):
    return np.full(shape, ZERO, dtype=object)


@dataclass(frozen=True, eq=False)
class Algebra:
    sc: np.ndarray
    name: str = 'A'

    def __post_init__(self):
        sc = np.array(self.sc, dtype=object)
        if sc.ndim != 3 or not (sc.shape[0] == sc.shape[1] == sc.shape[2]):
            raise DimensionMismatch(f'Structure constants must be a dim x dim x dim array, got {sc.shape}')
        sc = coerce_array(sc) if sc.size else sc.copy()
        object.__setattr__(self, 'sc', freeze(sc))

    @classmethod
    def from_entries(cls, name, dim, entries):
        """Build from 1-based (i, j, k, coefficient) entries; unlisted ones are zero."""
        sc = zero_tensor(dim, dim, dim)
        for i, j, k, value in entries:
            sc[i - 1, j - 1, k - 1] = to_scalar(value)
        return cls(sc, name)

    @property
    def dim(self):
        return self.sc.shape[0]

    def entries(self):
        """Nonzero structure constants as sorted 1-based (i, j, k, coefficient)."""
        return [
            (int(i) + 1, int(j) + 1, int(k) + 1, self.sc[i, j, k])
            for i, j, k in np.argwhere(self.sc.astype(bool))
        ]

    def renamed(self, name):
        return Algebra(self.sc, name)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.sc.shape == other.sc.shape and np.array_equal(self.sc, other.sc)

    __hash__ = None

    def __repr__(self):
        return f"Algebra(name='{self.name}', dim={self.dim})"


def _check_vector(a, x):
    x = as_vector(x)
    if len(x) != a.dim:
        raise DimensionMismatch(f'Vector of length {len(x)} for an algebra of dimension {a.dim}')
    return x


def bilinear(sc, x, y):
    """Σ x_i y_j sc[i, j, :]."""
    return np.tensordot(y, np.tensordot(x, sc, axes=(0, 0)), axes=(0, 0))


def multiply(a, x, y):
    return bilinear(a.sc, _check_vector(a, x), _check_vector(a, y))


def left_multiplication(a, x):
    """Matrix of L_x: y ↦ x·y."""
    return np.tensordot(_check_vector(a, x), a.sc, axes=(0, 0)).T


def right_multiplication(a, x):
    """Matrix of R_x: y ↦ y·x."""
    return np.tensordot(_check_vector(a, x), a.sc, axes=(0, 1)).T


def left_multiplications(a):
    """Stack L[i] = L(e_i), shape (dim, dim, dim)."""
    return np.transpose(a.sc, (0, 2, 1))


def right_multiplications(a):
    """Stack R[i] = R(e_i), shape (dim, dim, dim)."""
    return np.transpose(a.sc, (1, 2, 0))


def sub_adjacent_constants(sc):
    return sc + np.transpose(sc, (1, 0, 2))


def triple_products(sc):
    """
    Both bracketings of every basis triple, shape (dim, dim, dim, dim):
    left[i, j, k] = (e_i e_j) e_k and right[i, j, k] = e_i (e_j e_k).
    """
    left = np.tensordot(sc, sc, axes=(2, 0))
    right = np.transpose(np.tensordot(sc, sc, axes=([1], [2])), (0, 2, 3, 1))
    return left, right
