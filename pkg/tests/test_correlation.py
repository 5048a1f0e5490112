import numpy as np
import pytest

from golay2d import (
    CorrelationValue,
    QaryArray,
    auto_correlation_table,
    construct_gcap_general,
    construct_mate,
    correlation_sum,
    cross_correlation,
    cross_correlation_table,
    cyclotomic_polynomial,
)

import golden
from helpers import naive_cross_correlation, random_array


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_is_zero_examples():
    assert CorrelationValue(4, (1, 0, 1, 0)).is_zero()
    assert not CorrelationValue(4, (1, 0, 0, 0)).is_zero()
    full_orbit = CorrelationValue(4, (1, 1, 1, 1))
    assert full_orbit.is_zero()
    assert abs(full_orbit.to_complex()) < 1e-12
    # sum over a proper subgroup orbit: the cube roots of unity inside q=6
    assert CorrelationValue(6, (1, 0, 1, 0, 1, 0)).is_zero()
    assert not CorrelationValue(6, (1, 0, 1, 0, 0, 0)).is_zero()


def test_value_arithmetic_and_equality():
    a = CorrelationValue.from_int(3, 2)
    b = CorrelationValue.from_int(3, 4)
    assert a == b == 3 and hash(a) == hash(b) == hash(3)
    assert (a - CorrelationValue.from_int(3, 2)).is_zero()
    i_unit = CorrelationValue(4, (0, 1, 0, 0))
    assert i_unit.to_complex() == pytest.approx(1j)
    assert i_unit.conjugate().to_complex() == pytest.approx(-1j)
    assert i_unit != 0 and i_unit.as_int() is None
    with pytest.raises(ValueError):
        a + i_unit


def test_to_complex_examples():
    assert CorrelationValue(4, (2, 0, 0, 0)).to_complex() == pytest.approx(2 + 0j)
    assert CorrelationValue(4, (0, 1, 0, 0)).to_complex() == pytest.approx(1j)


def test_counts_length_validation():
    with pytest.raises(ValueError):
        CorrelationValue(4, (1, 0))


def test_center_value_is_array_size():
    rng = np.random.default_rng(3)
    for _ in range(10):
        arr = random_array(rng)
        assert cross_correlation(arr, arr, 0, 0) == arr.L1 * arr.L2


def test_golden_auto_tables():
    c, d = construct_gcap_general(golden.general_q2_spec())
    tc, td = auto_correlation_table(c), auto_correlation_table(d)
    for r, u1 in enumerate(range(-3, 4)):
        for col, u2 in enumerate(range(-7, 8)):
            assert tc.value(u1, u2) == golden.AUTO_GENERAL_C[r][col]
            assert td.value(u1, u2) == golden.AUTO_GENERAL_D[r][col]
    assert tc.value(-3, -7) == 1
    assert tc.value(-2, -3).to_complex() == pytest.approx(6 + 0j)
    assert tc.value(0, 0) == 32


def test_golden_pair_sum_vanishes():
    c, d = construct_gcap_general(golden.general_q2_spec())
    total = auto_correlation_table(c) + auto_correlation_table(d)
    for u1, u2 in total.shifts():
        if (u1, u2) == (0, 0):
            assert total.value(u1, u2) == 64
        else:
            assert total.value(u1, u2).is_zero()


def test_golden_cross_tables():
    spec = golden.general_q2_spec()
    c, d = construct_gcap_general(spec)
    cp, dp = construct_mate(spec)
    t1 = cross_correlation_table(c, cp)
    t2 = cross_correlation_table(d, dp)
    for r, u1 in enumerate(range(-3, 4)):
        for col, u2 in enumerate(range(-7, 8)):
            assert t1.value(u1, u2) == golden.CROSS_C_CPRIME[r][col]
            assert t2.value(u1, u2) == golden.CROSS_D_DPRIME[r][col]
    assert t1.value(1, -3) == -7 and t2.value(1, -3) == 7


def test_correlation_sum():
    c, d = construct_gcap_general(golden.general_q2_spec())
    v = correlation_sum(
        [cross_correlation(c, c, 2, 3), cross_correlation(d, d, 2, 3)]
    )
    assert v.is_zero()
    center = correlation_sum(
        [cross_correlation(c, c, 0, 0), cross_correlation(d, d, 0, 0)]
    )
    assert center == 64
    assert correlation_sum([], q=4).is_zero()
    with pytest.raises(ValueError):
        correlation_sum([])
    with pytest.raises(ValueError):
        correlation_sum([CorrelationValue.zero(2)], q=4)


def test_single_cell_table():
    t = auto_correlation_table(QaryArray(2, [[0]]))
    assert list(t.shifts()) == [(0, 0)]
    assert t.value(0, 0) == 1


def test_autocorrelation_symmetry_exact():
    rng = np.random.default_rng(5)
    for _ in range(20):
        arr = random_array(rng)
        t = auto_correlation_table(arr)
        for u1, u2 in t.shifts():
            assert t.value(u1, -u2).counts == t.value(-u1, u2).conjugate().counts


def test_cross_agrees_with_naive_complex():
    rng = np.random.default_rng(9)
    for _ in range(15):
        q = int(rng.choice((2, 4, 6, 8)))
        L1, L2 = int(rng.integers(1, 4)), int(rng.integers(1, 5))
        c = random_array(rng, q=q, L1=L1, L2=L2)
        d = random_array(rng, q=q, L1=L1, L2=L2)
        for u1 in range(-(L1 - 1), L1):
            for u2 in range(-(L2 - 1), L2):
                exact = cross_correlation(c, d, u1, u2).to_complex()
                naive = naive_cross_correlation(c, d, u1, u2)
                assert abs(exact - naive) < 1e-9


def test_binary_values_are_rational_integers():
    rng = np.random.default_rng(15)
    for _ in range(10):
        arr = random_array(rng, q=2)
        t = auto_correlation_table(arr)
        for (_, _), v in t.items():
            k = v.as_int()
            assert k is not None and k == v.counts[0] - v.counts[1]


def test_is_zero_matches_numeric_on_random_counts():
    rng = np.random.default_rng(2026)
    qs = (2, 4, 6, 8, 10, 12)
    checked = zeros_seen = 0
    for trial in range(10_000):
        q = qs[trial % len(qs)]
        counts = rng.integers(-64, 65, q)
        if trial % 10 == 0:
            # plant exact zeros: multiples of the full orbit plus opposite pairs
            counts = np.full(q, int(rng.integers(-8, 9)))
            e = int(rng.integers(0, q))
            w = int(rng.integers(-8, 9))
            counts[e] += w
            counts[(e + q // 2) % q] += w
        v = CorrelationValue(q, counts)
        assert v.is_zero() == (abs(v.to_complex()) < 1e-9)
        checked += 1
        zeros_seen += v.is_zero()
    assert checked == 10_000 and zeros_seen >= 1_000


def test_shift_and_shape_errors():
    a = QaryArray(2, [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        cross_correlation(a, a, 2, 0)
    with pytest.raises(ValueError):
        cross_correlation(a, a, 0, -2)
    with pytest.raises(ValueError):
        cross_correlation(a, QaryArray(2, [[0, 1]]), 0, 0)
    with pytest.raises(ValueError):
        cross_correlation(a, QaryArray(4, [[0, 1], [1, 0]]), 0, 0)
    t = auto_correlation_table(a)
    with pytest.raises(ValueError):
        t.value(2, 0)
    with pytest.raises(ValueError):
        t + auto_correlation_table(QaryArray(2, [[0, 1]]))
