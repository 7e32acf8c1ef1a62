import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pbwlab.cyclic import CyclicWord, Potential
from pbwlab.presentations import LieData, QuadData, from_lie
from pbwlab.cyclic import potential_to_presentation
from pbwlab.scalars import HPoly


@pytest.fixture
def sl2():
    """Basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return LieData(3, {(1, 2, 3): Fraction(1),
                       (1, 3, 1): Fraction(-2),
                       (2, 3, 2): Fraction(2)})


@pytest.fixture
def sl2_presentation(sl2):
    return from_lie(sl2)


@pytest.fixture
def heisenberg():
    return LieData(3, {(1, 2, 3): Fraction(1)})


@pytest.fixture
def strange_potential():
    """h * Cycl(-zyx) with (x, y, z) = (x1, x2, x3)."""
    return Potential(3, {CyclicWord(3, (3, 2, 1)): -HPoly.h()})


@pytest.fixture
def strange_presentation(strange_potential):
    return potential_to_presentation(strange_potential)


@pytest.fixture
def quantum_plane():
    return QuadData(2, {(1, 2, 1, 2): Fraction(1)})


@pytest.fixture
def non_jacobi():
    """c_12^1 = c_13^2 = 1: the jacobiator for (1,2,3) is h^2 x2."""
    return LieData(3, {(1, 2, 1): Fraction(1), (1, 3, 2): Fraction(1)})


@pytest.fixture
def poisson_not_special():
    """Frozen by random search: passes the Jacobi test for the symmetrized
    bivector but fails the stronger cyclic coefficient condition."""
    return QuadData(3, {(1, 2, 3, 2): Fraction(-1),
                        (2, 3, 1, 2): Fraction(1),
                        (2, 3, 3, 2): Fraction(-1)})


@pytest.fixture
def multiparameter_quantum():
    """phi_ij = h * q_ij x_i x_j; generically PBW though the cyclic condition fails."""
    return QuadData(3, {(1, 2, 1, 2): Fraction(2),
                        (1, 3, 1, 3): Fraction(-1),
                        (2, 3, 2, 3): Fraction(3)})
