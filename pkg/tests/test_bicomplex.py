import pytest
from hypothesis import given, settings

from src.models.bicomplex import (
    I,
    J,
    K,
    ONE,
    ZERO,
    Axis,
    Bicomplex,
    bc_add,
    bc_conj,
    bc_from_scalar,
    bc_map,
    bc_mul,
    bc_pow,
    bc_real_norm_sq,
    bc_scale,
    bc_selfprod,
    complex_pair_view,
    from_complex_pair,
)
from src.models.exactnum import ALPHA, QuadElem
from tests.oracles import table_product
from tests.strategies import bicomplex_ints, bicomplex_quads


class TestUnitTable:
    def test_squares(self):
        assert bc_mul(I, I) == -ONE
        assert bc_mul(J, J) == -ONE
        assert bc_mul(K, K) == ONE

    def test_mixed_products(self):
        assert bc_mul(I, J) == K
        assert bc_mul(J, I) == K
        assert bc_mul(J, K) == -I
        assert bc_mul(K, J) == -I
        assert bc_mul(I, K) == -J
        assert bc_mul(K, I) == -J

    def test_bf0_times_bf1(self):
        assert bc_mul(Bicomplex(0, 1, 1, 2), Bicomplex(1, 1, 2, 3)) == Bicomplex(3, -6, -4, 5)

    def test_zero_divisors_exist(self):
        # (1 + k)(1 - k) = 1 - k^2 = 0
        assert bc_mul(Bicomplex(1, 0, 0, 1), Bicomplex(1, 0, 0, -1)) == ZERO


class TestRingAxioms:
    @settings(max_examples=1000)
    @given(bicomplex_ints(), bicomplex_ints())
    def test_product_matches_table_expansion(self, x, y):
        assert bc_mul(x, y) == table_product(x, y)

    @given(bicomplex_ints(), bicomplex_ints())
    def test_commutative(self, x, y):
        assert bc_mul(x, y) == bc_mul(y, x)

    @given(bicomplex_ints(), bicomplex_ints(), bicomplex_ints())
    def test_associative(self, x, y, z):
        assert bc_mul(bc_mul(x, y), z) == bc_mul(x, bc_mul(y, z))

    @given(bicomplex_ints(), bicomplex_ints(), bicomplex_ints())
    def test_distributive(self, x, y, z):
        assert bc_mul(x, bc_add(y, z)) == bc_add(bc_mul(x, y), bc_mul(x, z))

    @given(bicomplex_ints())
    def test_identities(self, x):
        assert bc_mul(x, ONE) == x
        assert x + ZERO == x
        assert x - x == ZERO

    @given(bicomplex_quads(), bicomplex_quads())
    def test_generic_over_quadratic_field(self, x, y):
        assert bc_mul(x, y) == bc_mul(y, x)
        assert bc_mul(x, y) == table_product(x, y)


class TestConjugations:
    def test_component_signs(self):
        x = Bicomplex(1, 2, 3, 4)
        assert bc_conj(Axis.I, x) == Bicomplex(1, -2, 3, -4)
        assert bc_conj(Axis.J, x) == Bicomplex(1, 2, -3, -4)
        assert bc_conj(Axis.K, x) == Bicomplex(1, -2, -3, 4)
        assert x.conj(Axis.K) == bc_conj(Axis.K, x)

    @given(bicomplex_ints())
    def test_involutions(self, x):
        for axis in Axis:
            assert bc_conj(axis, bc_conj(axis, x)) == x

    @given(bicomplex_ints())
    def test_composition(self, x):
        assert bc_conj(Axis.I, bc_conj(Axis.J, x)) == bc_conj(Axis.K, x)

    @given(bicomplex_ints(), bicomplex_ints())
    def test_multiplicative(self, x, y):
        for axis in Axis:
            assert bc_conj(axis, bc_mul(x, y)) == bc_mul(bc_conj(axis, x), bc_conj(axis, y))

    @given(bicomplex_ints())
    def test_self_product_shapes(self, x):
        with_i = bc_selfprod(Axis.I, x)
        with_j = bc_selfprod(Axis.J, x)
        with_k = bc_selfprod(Axis.K, x)
        assert with_i.x == 0 and with_i.z == 0
        assert with_j.y == 0 and with_j.z == 0
        assert with_k.x == 0 and with_k.y == 0
        assert with_k.w == bc_real_norm_sq(x)


class TestHelpers:
    def test_powers(self):
        assert bc_pow(I, 2) == -ONE
        assert bc_pow(K, 3) == K
        assert bc_pow(Bicomplex(2, 1, 0, 0), 0) == ONE
        assert Bicomplex(0, 1, 0, 0) ** 4 == ONE

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            bc_pow(ONE, -1)

    def test_scalar_multiples(self):
        x = Bicomplex(1, -2, 3, -4)
        assert bc_scale(3, x) == Bicomplex(3, -6, 9, -12)
        assert 3 * x == x * 3 == bc_scale(3, x)

    def test_from_scalar_over_quadratic_field(self):
        embedded = bc_from_scalar(ALPHA)
        assert embedded == Bicomplex(ALPHA, QuadElem(0, 0), QuadElem(0, 0), QuadElem(0, 0))
        assert embedded.is_zero() is False
        assert bc_from_scalar(QuadElem(0, 0)).is_zero()

    def test_map(self):
        assert bc_map(abs, Bicomplex(-1, 2, -3, 4)) == Bicomplex(1, 2, 3, 4)

    @given(bicomplex_ints())
    def test_complex_pair_round_trip(self, x):
        pair = complex_pair_view(x)
        assert (pair.z1_re, pair.z1_im, pair.z2_re, pair.z2_im) == x.components()
        assert from_complex_pair(pair) == x
