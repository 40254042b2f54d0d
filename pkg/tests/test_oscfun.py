"""Scalar oscillatory functions and the two-block diagonal calculus."""

import math
from fractions import Fraction

import numpy as np
import pytest

from erkn import BlockScalar, Partition, block_apply, block_eval, block_expand, phi_series, sinc


def sinc_rational(x: float) -> float:
    # exact-rational Taylor sum, plenty of terms for |x| <= 1e-2
    fx = Fraction(x)
    x2 = fx * fx
    acc, term = Fraction(0), Fraction(1)
    for k in range(1, 12):
        acc += term
        term *= -x2 / (2 * k * (2 * k + 1))
    return float(acc + term)


def test_sinc_reference_points():
    assert sinc(0.0) == 1.0
    assert abs(sinc(math.pi)) < 1e-16
    assert sinc(5.0) == pytest.approx(-0.1917848549326277, abs=1e-15)


def test_sinc_equals_ratio_above_switch():
    for x in (0.02, 0.5, 1.0, 3.0, 9.7):
        assert sinc(x) == math.sin(x) / x


def test_sinc_accurate_below_switch():
    xs = np.linspace(-9.9e-3, 9.9e-3, 201)
    for x in xs:
        got = sinc(float(x))
        want = sinc_rational(float(x))
        assert abs(got - want) <= 2 * np.spacing(abs(want))


def test_sinc_is_even_bitwise():
    for x in np.linspace(0.0, 10.0, 501):
        assert sinc(float(x)) == sinc(float(-x))


def test_phi_series_matches_cos_and_sinc():
    # truncation at 30 terms is comfortably below 1e-12 on nu in [0, 10]
    grid = [0.1 * k for k in range(101)]
    for nu in grid:
        v = nu * nu
        assert phi_series(0, v, 30) == pytest.approx(math.cos(nu), abs=1e-12)
        assert phi_series(1, v, 30) == pytest.approx(sinc(nu), abs=1e-12)


def test_phi_series_second_kind():
    for nu in (0.5, 1.0, 4.0, 8.0):
        v = nu * nu
        want = (1.0 - math.cos(nu)) / v
        assert phi_series(2, v, 30) == pytest.approx(want, abs=1e-12)


def test_phi_series_at_zero_is_inverse_factorial():
    for j in range(6):
        assert phi_series(j, 0.0, 5) == pytest.approx(1.0 / math.factorial(j), rel=1e-15)


def test_phi_series_rejects_bad_arguments():
    with pytest.raises(ValueError):
        phi_series(-1, 1.0, 10)
    with pytest.raises(ValueError):
        phi_series(0, 1.0, 0)


def test_block_eval_splits_slow_and_fast():
    part = Partition(d1=2, d2=3, omega=50.0)
    b = block_eval(math.cos, 0.1, part)
    assert b.slow == 1.0
    assert b.fast == math.cos(5.0)


def test_block_apply_identity_and_zero():
    part = Partition(d1=2, d2=2, omega=10.0)
    rng = np.random.default_rng(3)
    v = rng.standard_normal(4)
    np.testing.assert_array_equal(block_apply(BlockScalar(1.0, 1.0), v, part), v)
    np.testing.assert_array_equal(block_apply(BlockScalar(0.0, 0.0), v, part), np.zeros(4))


def test_block_apply_scales_each_block():
    part = Partition(d1=1, d2=2, omega=10.0)
    v = np.array([1.0, 2.0, 3.0])
    out = block_apply(BlockScalar(2.0, -1.0), v, part)
    np.testing.assert_array_equal(out, [2.0, -2.0, -3.0])


def test_block_apply_rejects_wrong_shape():
    part = Partition(d1=1, d2=2, omega=10.0)
    with pytest.raises(ValueError):
        block_apply(BlockScalar(1.0, 1.0), np.zeros(4), part)


def test_block_product_composes():
    """Evaluating f*g in one block equals applying f's block then g's block."""
    part = Partition(d1=1, d2=1, omega=7.0)
    h = 0.3
    f, g = math.cos, sinc
    rng = np.random.default_rng(5)
    v = rng.standard_normal(2)
    combined = block_apply(block_eval(lambda x: f(x) * g(x), h, part), v, part)
    chained = block_apply(block_eval(f, h, part), block_apply(block_eval(g, h, part), v, part), part)
    for a, b in zip(combined, chained):
        assert abs(a - b) <= 2 * np.spacing(abs(b))


def test_block_expand_layout():
    part = Partition(d1=2, d2=3, omega=4.0)
    arr = block_expand(BlockScalar(1.5, -2.0), part)
    np.testing.assert_array_equal(arr, [1.5, 1.5, -2.0, -2.0, -2.0])
