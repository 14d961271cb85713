"""
Result records returned by the checkers of every app.

A check never answers with a bare boolean: the failing basis tuples travel
with it so the CLI can print them.
"""

from dataclasses import dataclass, field

import numpy as np
from django.conf import settings


@dataclass(frozen=True)
class Witness:
    """One violated identity: its name, 1-based basis indices and the defect."""

    axiom: str
    indices: tuple
    defect: np.ndarray = field(compare=False)

    def describe(self):
        return f"{self.axiom} at {self.indices}: defect {format_defect(self.defect)}"


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    witnesses: tuple = ()

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class AxiomReport:
    commutative: bool
    anti_associative: bool
    left_prejj: bool
    right_prejj: bool
    jacobi_jordan: bool
    cubes_vanish: bool
    jacobian_product: str
    witnesses: tuple = ()
    violations: dict = field(default_factory=dict)

    def flags(self):
        return {
            'commutative': self.commutative,
            'anti_associative': self.anti_associative,
            'left_prejj': self.left_prejj,
            'right_prejj': self.right_prejj,
            'jacobi_jordan': self.jacobi_jordan,
            'cubes_vanish': self.cubes_vanish,
        }

    def witnesses_for(self, axiom):
        return [w for w in self.witnesses if w.axiom == axiom]


@dataclass(frozen=True)
class InvariantSubspaces:
    r_aas: object
    l_aas: object
    r_inv: object
    l_inv: object
    inv: object

    def items(self):
        return [
            ('r_aas', self.r_aas),
            ('l_aas', self.l_aas),
            ('r_inv', self.r_inv),
            ('l_inv', self.l_inv),
            ('inv', self.inv),
        ]


def format_defect(defect):
    defect = np.asarray(defect, dtype=object)
    return '[' + ' '.join(str(x) for x in defect.reshape(-1)) + ']'


def witness_cap(cap=None):
    """Resolve a cap: None reads PJJ_WITNESS_CAP, 0 means unlimited."""
    if cap is None:
        cap = settings.PJJ_WITNESS_CAP
    return cap or None


def collect_witnesses(axiom, defects, cap=None, keep=None):
    """
    Witnesses for every index tuple whose defect vector (last axis) is nonzero,
    in lexicographic order. Returns (witnesses, total violation count).
    """
    limit = witness_cap(cap)
    mask = np.count_nonzero(defects, axis=-1) > 0
    found = []
    total = 0
    for idx in np.argwhere(mask):
        idx = tuple(int(i) for i in idx)
        if keep is not None and not keep(idx):
            continue
        total += 1
        if limit is None or len(found) < limit:
            found.append(Witness(axiom, tuple(i + 1 for i in idx), defects[idx].copy()))
    return found, total
