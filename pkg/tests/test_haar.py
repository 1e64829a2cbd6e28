"""Haar wavelet layer: coefficients, cross-correlations, core function, A matrix."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locpacf import (
    CrossCorrWaveletTable,
    InvalidArgumentError,
    a_matrix,
    haar_coefficients,
    haar_value,
    omega_core,
    psi_auto,
    psi_cross_bruteforce,
    psi_cross_closed,
)

SQ2 = 2.0**-0.5


def test_haar_coefficients_values():
    assert np.allclose(haar_coefficients(1), [SQ2, -SQ2])
    w2 = haar_coefficients(2)
    assert w2[3] == -0.5
    assert np.allclose(w2, [0.5, 0.5, -0.5, -0.5])


@pytest.mark.parametrize("j", range(1, 11))
def test_haar_sum_and_energy(j):
    w = haar_coefficients(j)
    assert len(w) == 2**j
    assert abs(w.sum()) < 1e-14
    assert abs((w**2).sum() - 1.0) < 1e-12


def test_haar_value_outside_support_is_zero():
    assert haar_value(3, 8) == 0.0
    assert haar_value(3, -1) == 0.0
    assert np.all(haar_value(2, np.array([4, 5, -2])) == 0.0)


def test_haar_scale_validation():
    with pytest.raises(InvalidArgumentError):
        haar_coefficients(0)
    with pytest.raises(InvalidArgumentError):
        haar_coefficients(31)


def test_psi_cross_bruteforce_examples():
    # j=l, tau=0 is the energy
    assert psi_cross_bruteforce(3, 3, 0) == pytest.approx(1.0, abs=1e-15)
    # direct summation over k in {1,2} of psi_{2,k} psi_{1,k-1}
    assert psi_cross_bruteforce(2, 1, -1) == pytest.approx(SQ2, abs=1e-15)
    # single term psi_{2,0} psi_{1,1}
    assert psi_cross_bruteforce(2, 1, 1) == pytest.approx(-(2.0**-1.5), abs=1e-15)


def test_psi_auto_values():
    assert psi_auto(1, 0) == 1.0
    assert psi_auto(1, 1) == -0.5  # Psi_H(1/2) = 1 - 3/2
    assert psi_auto(3, 8) == 0.0
    # matches the j = l brute force everywhere
    for j in range(1, 7):
        for tau in range(-(2**j) - 2, 2**j + 3):
            assert psi_auto(j, tau) == pytest.approx(
                psi_cross_bruteforce(j, j, tau), abs=1e-13
            )


def test_psi_cross_closed_examples():
    assert psi_cross_closed(2, 1, -1) == pytest.approx(SQ2, abs=1e-15)
    assert psi_cross_closed(1, 2, 1) == pytest.approx(SQ2, abs=1e-15)
    for tau in range(6, 12):
        assert psi_cross_closed(2, 1, tau) == 0.0
    with pytest.raises(InvalidArgumentError):
        psi_cross_closed(2, 2, 0)


def test_closed_equals_bruteforce_full_grid():
    worst = 0.0
    for j in range(1, 9):
        for l in range(1, 9):
            if j == l:
                continue
            for tau in range(-(2**l) - 2, 2**j + 3):
                worst = max(
                    worst,
                    abs(psi_cross_closed(j, l, tau) - psi_cross_bruteforce(j, l, tau)),
                )
    assert worst <= 1e-12


@settings(max_examples=200, deadline=None)
@given(
    j=st.integers(1, 8),
    l=st.integers(1, 8),
    tau=st.integers(-300, 300),
)
def test_symmetry_property(j, l, tau):
    assert psi_cross_bruteforce(j, l, tau) == psi_cross_bruteforce(l, j, -tau)


def test_omega_examples():
    assert omega_core(1, 2.0) == 0.0
    assert omega_core(1, -0.75) == pytest.approx(-SQ2 / 4, abs=1e-15)
    assert omega_core(2, 0.0) == 0.0


def test_omega_zero_order_is_continuous_autocorrelation():
    # Omega_0(u) = Psi_H(u); cross-check against numerical quadrature of
    # int psi_H(x) psi_H(x-u) dx on an oversampled grid
    xs = np.linspace(-2, 3, 50001)
    dx = xs[1] - xs[0]

    def psi_h(x):
        return np.where((x >= 0) & (x < 0.5), -1.0, np.where((x >= 0.5) & (x < 1), 1.0, 0.0))

    for u in (-0.75, -0.4, -0.25, 0.2, 0.5, 0.8):
        ref = float(np.sum(psi_h(xs) * psi_h(xs - u)) * dx)
        assert omega_core(0, u) == pytest.approx(ref, abs=2e-4)


def test_omega_one_matches_scaled_quadrature():
    # Omega_1(u) = int psi_1(x) psi(x-u) dx with psi_1(x) = 2^{-1/2} psi(x/2)
    xs = np.linspace(-2, 4, 60001)
    dx = xs[1] - xs[0]

    def psi_h(x):
        return np.where((x >= 0) & (x < 0.5), -1.0, np.where((x >= 0.5) & (x < 1), 1.0, 0.0))

    for u in (-0.75, -0.3, 0.4, 0.9, 1.4, 1.9):
        ref = float(np.sum(SQ2 * psi_h(xs / 2) * psi_h(xs - u)) * dx)
        assert omega_core(1, u) == pytest.approx(ref, abs=2e-4)


def test_omega_consistency_with_closed_form():
    for l in range(1, 8):
        for j in range(l + 1, 9):
            for tau in range(-(2**l) - 2, 2**j + 3):
                assert psi_cross_closed(j, l, tau) == pytest.approx(
                    omega_core(j - l, 2.0 ** (-l) * (-tau)), abs=1e-13
                )


def test_cross_corr_table():
    table = CrossCorrWaveletTable(4)
    assert table.value(3, 3, 0) == pytest.approx(1.0)
    for j in range(1, 5):
        for l in range(1, 5):
            assert table.value(j, l, 2**j + 2**l + 1) == 0.0
            for tau in (-3, 0, 2, 5):
                assert table.value(j, l, tau) == pytest.approx(
                    table.value(l, j, -tau), abs=1e-15
                )


def test_a_matrix_values():
    assert a_matrix(1)[0, 0] == pytest.approx(1.5, abs=1e-14)
    A = a_matrix(2)
    assert A[1, 1] == pytest.approx(1.75, abs=1e-14)
    assert A[0, 1] == A[1, 0]
    assert A[0, 1] == pytest.approx(0.75, abs=1e-14)


@pytest.mark.parametrize("J", [1, 3, 6, 8])
def test_a_matrix_diagonal_identity_and_invertibility(J):
    A = a_matrix(J)
    for l in range(1, J + 1):
        assert A[l - 1, l - 1] == pytest.approx(
            (2 ** (2 * l) + 5) * 2.0 ** (-l) / 3.0, abs=1e-10
        )
    assert np.all(np.linalg.eigvalsh(A) > 0)
