"""
Bilinear maps A × A → A as (dim, dim, dim) tensors, composed with linear maps.
"""

import numpy as np

from apps.ratlinalg.exceptions import DimensionMismatch
from apps.ratlinalg.linalg import as_matrix, identity


def square_map(n, dim):
    n = as_matrix(n)
    if n.shape != (dim, dim):
        raise DimensionMismatch(f'Expected a {dim}x{dim} map, got {n.shape}')
    return n


def pull_back(sc, f, g):
    """[i, j] = f(e_i)·g(e_j) for the product with constants sc."""
    left = np.tensordot(f, sc, axes=(0, 0))
    return np.tensordot(left, g, axes=(1, 0)).transpose(0, 2, 1)


def push_forward(n, tensor):
    """Apply n to the output axis of a tensor."""
    return np.tensordot(tensor, n, axes=(-1, 1))


def twisted_constants(sc, n):
    """x·_N y = N(x)·y + x·N(y) - N(x·y)."""
    eye = identity(n.shape[0])
    return pull_back(sc, n, eye) + pull_back(sc, eye, n) - push_forward(n, sc)
