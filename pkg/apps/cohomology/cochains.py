"""
Cochains

An n-cochain f: A^{⊗n} → V is stored as an array of shape
(algdim,) * n + (vdim,): values[i1, ..., in] holds the coordinates of
f(e_i1, ..., e_in). Flattening in C order gives the coordinate vector used by
the differential matrices (multi-index major, V coordinate minor). A
0-cochain is a single vector of V.
"""

from dataclasses import dataclass

import numpy as np

from apps.algebras.structures import freeze
from apps.ratlinalg.exceptions import DimensionMismatch
from apps.ratlinalg.linalg import as_vector, coerce_array
from apps.ratlinalg.scalars import ZERO


@dataclass(frozen=True, eq=False)
class Cochain:
    degree: int
    algdim: int
    vdim: int
    values: np.ndarray

    def __post_init__(self):
        if self.degree < 0:
            raise DimensionMismatch(f'Cochain degree must be non-negative, got {self.degree}')
        values = np.array(self.values, dtype=object)
        if values.shape != self.shape:
            raise DimensionMismatch(f'Degree-{self.degree} cochain needs shape {self.shape}, got {values.shape}')
        values = coerce_array(values) if values.size else values
        object.__setattr__(self, 'values', freeze(values))

    @property
    def shape(self):
        return (self.algdim,) * self.degree + (self.vdim,)

    @property
    def size(self):
        return self.algdim ** self.degree * self.vdim

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, degree, algdim, vdim):
        return cls(degree, algdim, vdim, np.full((algdim,) * degree + (vdim,), ZERO, dtype=object))

    @classmethod
    def from_vector(cls, degree, algdim, vdim, vector):
        vector = np.asarray(vector, dtype=object)
        if vector.size != algdim ** degree * vdim:
            raise DimensionMismatch(f'Coordinate vector of length {vector.size} for a degree-{degree} cochain')
        return cls(degree, algdim, vdim, vector.reshape((algdim,) * degree + (vdim,)))

    @classmethod
    def from_map(cls, d):
        """A linear map A → V given as a vdim x algdim matrix (column j = f(e_j))."""
        d = np.asarray(d, dtype=object)
        if d.ndim != 2:
            raise DimensionMismatch(f'Expected a matrix, got shape {d.shape}')
        return cls(1, d.shape[1], d.shape[0], d.T)

    @classmethod
    def from_bilinear(cls, tensor):
        """A bilinear map from a (algdim, algdim, vdim) tensor."""
        tensor = np.asarray(tensor, dtype=object)
        if tensor.ndim != 3 or tensor.shape[0] != tensor.shape[1]:
            raise DimensionMismatch(f'Expected an (n, n, m) tensor, got shape {tensor.shape}')
        return cls(2, tensor.shape[0], tensor.shape[2], tensor)

    # ------------------------------------------------------------------
    # views
    # ------------------------------------------------------------------

    def as_vector(self):
        return self.values.reshape(-1).copy()

    def as_map(self):
        if self.degree != 1:
            raise DimensionMismatch(f'Only 1-cochains are linear maps, this one has degree {self.degree}')
        return self.values.T.copy()

    def evaluate(self, *vectors):
        """f(x1, ..., xn) for arbitrary vectors of A."""
        if len(vectors) != self.degree:
            raise DimensionMismatch(f'Degree-{self.degree} cochain applied to {len(vectors)} arguments')
        out = self.values
        for x in vectors:
            x = as_vector(x)
            if len(x) != self.algdim:
                raise DimensionMismatch(f'Argument of length {len(x)} for an algebra of dimension {self.algdim}')
            out = np.tensordot(x, out, axes=(0, 0))
        return np.asarray(out, dtype=object)

    def entries(self):
        """Nonzero (1-based index tuple, value) pairs in lexicographic order."""
        return [(tuple(int(i) + 1 for i in idx), self.values[tuple(idx)])
                for idx in np.argwhere(self.values.astype(bool))]

    def is_zero(self):
        return np.count_nonzero(self.values) == 0

    def _compatible(self, other):
        if not isinstance(other, Cochain) or self.shape != other.shape:
            raise DimensionMismatch('Cochains of different degree or dimensions')

    def __add__(self, other):
        self._compatible(other)
        return Cochain(self.degree, self.algdim, self.vdim, self.values + other.values)

    def __sub__(self, other):
        self._compatible(other)
        return Cochain(self.degree, self.algdim, self.vdim, self.values - other.values)

    def __neg__(self):
        return Cochain(self.degree, self.algdim, self.vdim, -self.values)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.values, other.values)

    __hash__ = None

    def __repr__(self):
        return f'Cochain(degree={self.degree}, algdim={self.algdim}, vdim={self.vdim})'
