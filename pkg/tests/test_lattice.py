import math

import pytest
from hypothesis import assume, given, strategies as st
from sympy import Matrix

from core.cayley import GklParams
from core.errors import NotGenerating, UsageError
from core.lattice import (ClassificationTag, classify_generators, classify_involution_presentation,
                          column_hermite, kernel_lattice)
from tests.strategies import PROPERTY_SETTINGS


class TestColumnHermite:
    def test_unimodular_transform(self):
        A = Matrix([[4, 6, 0], [2, 3, -5]])
        H, U, pivots = column_hermite(A)
        assert A * U == H
        assert abs(U.det()) == 1
        assert len(pivots) == 2


class TestClassify:
    def test_square_grid(self):
        result = classify_generators(0, (1, 0), (0, 1))
        assert result.tag == ClassificationTag.SQUARE_GRID

    def test_cyclic_group(self):
        result = classify_generators(1, 2, -3)
        assert result.tag == ClassificationTag.GKL
        assert result.params == GklParams(3, 2)

    def test_z_plus_z2(self):
        result = classify_generators(2, (-1, 1), (1, 0))
        assert result.tag == ClassificationTag.GKL
        assert result.params == GklParams(2, 2)

    def test_not_generating(self):
        with pytest.raises(NotGenerating):
            classify_generators(0, (2, 0), (0, 1))

    def test_coinciding_generators(self):
        result = classify_generators(1, 1, -1)
        assert result.tag == ClassificationTag.NOT_FOUR_REGULAR_INFINITE

    def test_kernel_is_the_relation(self):
        assert kernel_lattice(1, 2, -3) in ([(3, 2)], [(-3, -2)])

    @PROPERTY_SETTINGS
    @given(st.data(), st.integers(2, 40))
    def test_cyclic_presentation_recovers_the_pair(self, data, k):
        l = data.draw(st.integers(1, k - 1))
        assume(math.gcd(k, l) == 1)
        result = classify_generators(1, l, -k)
        assert result.tag == ClassificationTag.GKL
        assert result.params == GklParams(k, l)


class TestInvolutions:
    def test_three_generators(self):
        result = classify_involution_presentation(3)
        assert result.tag == ClassificationTag.GKL
        assert result.params == GklParams(4, 0)

    def test_four_generators(self):
        assert classify_involution_presentation(4).tag == ClassificationTag.FINITE_GROUP

    def test_out_of_table(self):
        with pytest.raises(UsageError):
            classify_involution_presentation(2)
