"""
Catalog of small algebras used by the CLI and the test corpus.

    A1   2-dim:  e1·e1 = e2
    A2   4-dim:  e1·e1 = 1/2 e2, e1·e3 = 5/9 e4, e3·e1 = 4/9 e4
    K    1-dim unital field:  f1·f1 = f1
    D    2-dim dual numbers:  f1·f1 = f1, f1·f2 = f2·f1 = f2
    N3   3-dim anti-associative:  e1e1 = e2, e1e2 = e3, e2e1 = -e3
    N6   6-dim anti-associative whose right multiplications do not commute
    Z<n> n-dim zero algebra

A1, A2, N3 and N6 are left pre-Jacobi-Jordan; K and D are commutative and
associative (the second factor of tensor products).
"""

from fractions import Fraction

from apps.algebras.structures import Algebra, zero_tensor


def a1():
    return Algebra.from_entries('A1', 2, [(1, 1, 2, 1)])


def a2():
    return Algebra.from_entries('A2', 4, [
        (1, 1, 2, Fraction(1, 2)),
        (1, 3, 4, Fraction(5, 9)),
        (3, 1, 4, Fraction(4, 9)),
    ])


def zero_algebra(n):
    return Algebra(zero_tensor(n, n, n), f'Z{n}')


def unital_field():
    return Algebra.from_entries('K', 1, [(1, 1, 1, 1)])


def dual_numbers():
    return Algebra.from_entries('D', 2, [(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1)])


def anti_associative_3():
    return Algebra.from_entries('N3', 3, [(1, 1, 2, 1), (1, 2, 3, 1), (2, 1, 3, -1)])


def anti_associative_6():
    # graded by degree; every product of total degree 4 vanishes
    return Algebra.from_entries('N6', 6, [
        (1, 2, 3, 1),
        (2, 1, 4, 1),
        (3, 1, 5, 1),
        (1, 4, 5, -1),
        (4, 2, 6, 1),
        (2, 3, 6, -1),
    ])


CATALOG = {
    'A1': a1,
    'A2': a2,
    'K': unital_field,
    'D': dual_numbers,
    'N3': anti_associative_3,
    'N6': anti_associative_6,
    'Z1': lambda: zero_algebra(1),
    'Z2': lambda: zero_algebra(2),
    'Z3': lambda: zero_algebra(3),
}


def get_algebra(name):
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"Unknown catalog algebra '{name}'. Choose from: {', '.join(CATALOG)}") from None
