"""
Exact scalars.

Every coefficient in the system is a fractions.Fraction. Fractions are kept
in lowest terms with a positive denominator by the standard library, which
is the canonical form the rest of the code relies on for equality.
"""

import re
from fractions import Fraction

import numpy as np

from apps.ratlinalg.exceptions import InvalidScalar

ZERO = Fraction(0)
ONE = Fraction(1)

SCALAR_PATTERN = re.compile(r'^([+-]?\d+)(?:/(\d+))?$')


def parse_scalar(text):
    """Parse `p` or `p/q` (q > 0) into a Fraction."""
    match = SCALAR_PATTERN.match(text.strip())
    if not match:
        raise InvalidScalar(text)
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InvalidScalar(text, zero_denominator=True)
    return Fraction(int(numerator), int(denominator or 1))


def to_scalar(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError('Booleans are not scalars')
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f'Cannot use {type(value).__name__} as an exact scalar')


def format_scalar(value):
    return str(to_scalar(value))
