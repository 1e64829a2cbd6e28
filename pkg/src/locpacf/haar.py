"""Discrete non-decimated Haar wavelets and derived deterministic objects.

The canonical cross-scale autocorrelation wavelet here is the discrete sum
Psi_{j,l}(tau) = sum_k psi_{j,k} psi_{l,k+tau}.  The closed-form piecewise
expressions were derived through the continuous convolution and produce the
discrete values at the reflected lag; ``psi_cross_closed`` therefore
evaluates them at -tau.  The continuous mother wavelet is -1 then +1 while
the discrete sequence is + then -; products of two wavelets are unaffected,
so no further correction is needed.

All sums over "infinite" lag ranges are computed exactly over the finite
supports (N_j = 2^j); no truncation tolerance exists anywhere in this
module.  Everything is a pure function of its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError
from .kernels import RECTANGULAR, TaperKernel

__all__ = [
    "haar_coefficients",
    "haar_value",
    "psi_auto",
    "psi_cross_bruteforce",
    "psi_cross_closed",
    "omega_core",
    "CrossCorrWaveletTable",
    "i_windowed",
    "i_windowed_support",
    "WindowedXcorr",
    "lemma_bound_thresholds",
    "a_matrix",
    "b_product",
    "BProduct",
]

MAX_SCALE = 30


def _check_scale(j: int, name: str = "j", limit: int = MAX_SCALE) -> int:
    j = int(j)
    if not 1 <= j <= limit:
        raise InvalidArgumentError(f"scale {name}={j} outside [1, {limit}]")
    return j


def haar_coefficients(j: int) -> np.ndarray:
    """Discrete Haar wavelet psi_{j,.} of length N_j = 2^j.

    psi_{j,k} = +2^{-j/2} for 0 <= k < 2^{j-1}, -2^{-j/2} for
    2^{j-1} <= k < 2^j.  Memory grows as 2^j; prefer :func:`haar_value`
    for pointwise evaluation at deep scales.
    """
    j = _check_scale(j)
    n = 1 << j
    out = np.full(n, 2.0 ** (-j / 2))
    out[n // 2 :] *= -1.0
    return out


def haar_value(j: int, k) -> np.ndarray:
    """psi_{j,k} evaluated pointwise (0 outside the support [0, 2^j))."""
    j = _check_scale(j)
    k = np.asarray(k)
    half, full = 1 << (j - 1), 1 << j
    amp = 2.0 ** (-j / 2)
    return np.where(
        (k >= 0) & (k < half), amp, np.where((k >= half) & (k < full), -amp, 0.0)
    )


def psi_auto(j: int, tau) -> np.ndarray | float:
    """Regular Haar autocorrelation wavelet Psi_j(tau) = Psi_H(2^{-j}|tau|).

    Psi_H(u) is 1 - 3|u| on |u| <= 1/2 and |u| - 1 on 1/2 < |u| <= 1.
    """
    j = _check_scale(j)
    u = np.abs(np.asarray(tau, dtype=float)) * 2.0 ** (-j)
    val = np.where(u <= 0.5, 1.0 - 3.0 * u, np.where(u <= 1.0, u - 1.0, 0.0))
    return float(val) if val.ndim == 0 else val


def psi_cross_bruteforce(j: int, l: int, tau: int) -> float:
    """Psi_{j,l}(tau) = sum_k psi_{j,k} psi_{l,k+tau} by exact summation."""
    j = _check_scale(j, "j")
    l = _check_scale(l, "l")
    tau = int(tau)
    lo = max(0, -tau)
    hi = min(1 << j, (1 << l) - tau)
    if hi <= lo:
        return 0.0
    k = np.arange(lo, hi)
    return float(np.sum(haar_value(j, k) * haar_value(l, k + tau)))


def omega_core(i: int, u: float) -> float:
    """Core function Omega_i(u); Omega_0(u) = Psi_H(u).

    Ten-branch piecewise formula with prefactor 2^{-i/2}.  At i = 0 the
    stated branch intervals overlap and the matching branch values add up
    (for i >= 1 the intervals are disjoint, so summing equals taking the
    single match).
    """
    i = int(i)
    if not 0 <= i <= MAX_SCALE:
        raise InvalidArgumentError(f"order i={i} outside [0, {MAX_SCALE}]")
    u = float(u)
    half = 2.0 ** (i - 1)
    full = 2.0**i
    total = 0.0
    if -1.0 <= u < -0.5:
        total += -(u + 1.0)
    if -0.5 <= u < 0.0:
        total += u
    if half - 1.0 <= u < half - 0.5:
        total += 2.0 * u - full + 2.0
    if half - 0.5 <= u < half:
        total += full - 2.0 * u
    if full - 1.0 <= u < full - 0.5:
        total += full - u - 1.0
    if full - 0.5 <= u < full:
        total += u - full
    return 2.0 ** (-i / 2) * total


def _xcorr_closed_lower(j: int, l: int, t: int) -> float:
    # piecewise form for l < j, half-open intervals [a, b)
    nl, nl2 = 1 << l, 1 << (l - 1)
    nj, nj2 = 1 << j, 1 << (j - 1)
    pref = 2.0 ** (-(j - l) / 2)
    il = 2.0 ** (-l)
    if t < -nl:
        return 0.0
    if t < -nl2:
        return pref * (-(il * t + 1.0))
    if t < 0:
        return pref * il * t
    if t < nj2 - nl:
        return 0.0
    if t < nj2 - nl2:
        return pref * il * (2 * t - nj + 2 * nl)
    if t < nj2:
        return pref * il * (nj - 2 * t)
    if t < nj - nl:
        return 0.0
    if t < nj - nl2:
        return pref * il * (nj - t - nl)
    if t < nj:
        return pref * il * (t - nj)
    return 0.0


def _xcorr_closed_upper(j: int, l: int, t: int) -> float:
    # piecewise form for l > j, half-open intervals (a, b]
    nl, nl2 = 1 << l, 1 << (l - 1)
    nj, nj2 = 1 << j, 1 << (j - 1)
    pref = 2.0 ** (-(l - j) / 2)
    ij = 2.0 ** (-j)
    if t <= -nl:
        return 0.0
    if t <= -nl + nj2:
        return pref * (-ij * (t + nl))
    if t <= -nl + nj:
        return pref * ij * (nl + t - nj)
    if t <= -nl2:
        return 0.0
    if t <= -nl2 + nj2:
        return pref * ij * (nl + 2 * t)
    if t <= -nl2 + nj:
        return pref * ij * (2 * nj - nl - 2 * t)
    if t <= 0:
        return 0.0
    if t <= nj2:
        return pref * (-ij * t)
    if t <= nj:
        return pref * (-(1.0 - ij * t))
    return 0.0


def psi_cross_closed(j: int, l: int, tau: int) -> float:
    """Closed-form Psi_{j,l}(tau) in the discrete lag convention.

    Evaluates the piecewise expressions at the reflected lag -tau (see
    module docstring).  Requires j != l; use :func:`psi_auto` for j = l.
    """
    j = _check_scale(j, "j")
    l = _check_scale(l, "l")
    if j == l:
        raise InvalidArgumentError("psi_cross_closed requires j != l; use psi_auto")
    tau = int(tau)
    if l < j:
        return _xcorr_closed_lower(j, l, -tau)
    return _xcorr_closed_upper(j, l, -tau)


class CrossCorrWaveletTable:
    """Precomputed Psi_{j,l}(tau) for all 1 <= j, l <= max_scale.

    Values are computed once by brute-force summation and are immutable
    afterwards; lags outside the finite support return 0.
    """

    def __init__(self, max_scale: int):
        self.max_scale = _check_scale(max_scale, "max_scale", limit=16)
        self._table = {}
        for j in range(1, max_scale + 1):
            for l in range(1, max_scale + 1):
                lo, hi = -(1 << l), 1 << j  # support of the discrete sum
                vals = np.array(
                    [psi_cross_bruteforce(j, l, t) for t in range(lo, hi + 1)]
                )
                vals.setflags(write=False)
                self._table[(j, l)] = (lo, vals)

    def value(self, j: int, l: int, tau: int) -> float:
        lo, vals = self._table[(j, l)]
        idx = int(tau) - lo
        if idx < 0 or idx >= len(vals):
            return 0.0
        return float(vals[idx])


def i_windowed_support(N: int, zT: int, l: int) -> tuple[int, int]:
    """Smallest and largest k with possibly nonzero i_{N,z}(., l, k)."""
    return zT - N // 2 + 1, zT + N // 2 + (1 << l) - 1


class WindowedXcorr:
    """Windowed cross-scale autocorrelation wavelets for one (N, zT, kernel).

    Values i_{N,z}(j, l, k) are computed on first access per scale pair and
    cached; anything outside the finite support window is 0.
    """

    def __init__(self, N: int, zT: int, kernel: TaperKernel = RECTANGULAR):
        if N <= 0 or N % 2:
            raise InvalidArgumentError(
                f"window length N={N} must be a positive even integer"
            )
        self.N = int(N)
        self.zT = int(zT)
        self.kernel = kernel
        self._cache: dict[tuple[int, int], tuple[int, np.ndarray]] = {}

    def support(self, l: int) -> tuple[int, int]:
        return i_windowed_support(self.N, self.zT, l)

    def value(self, j: int, l: int, k: int) -> float:
        key = (int(j), int(l))
        if key not in self._cache:
            kmin, kmax = self.support(l)
            vals = np.array(
                [
                    i_windowed(self.N, self.zT, j, l, kk, self.kernel)
                    for kk in range(kmin, kmax + 1)
                ]
            )
            vals.setflags(write=False)
            self._cache[key] = (kmin, vals)
        kmin, vals = self._cache[key]
        idx = int(k) - kmin
        if idx < 0 or idx >= len(vals):
            return 0.0
        return float(vals[idx])


def lemma_bound_thresholds(N: int, zT: int, l: int) -> tuple[int, int]:
    """Thresholds b1 = zT + N/2 + 1 and b2 = zT + N/2 + N_l - 1."""
    return zT + N // 2 + 1, zT + N // 2 + (1 << l) - 1


def i_windowed(
    N: int,
    zT: int,
    j: int,
    l: int,
    k: int,
    kernel: TaperKernel = RECTANGULAR,
) -> float:
    """Windowed cross-scale autocorrelation wavelet i_{N,z}(j, l, k).

    Direct evaluation of
    sum_{s=zT-N+1}^{zT} psi_{j,s} psi_{l,s+k-2*zT+N/2-1} h((zT-s)/N)
    over the window of N positions ending at zT.
    """
    if N <= 0 or N % 2:
        raise InvalidArgumentError(f"window length N={N} must be a positive even integer")
    j = _check_scale(j, "j")
    l = _check_scale(l, "l")
    zT, k = int(zT), int(k)
    r = k - 2 * zT + N // 2 - 1
    lo = max(zT - N + 1, 0, -r)
    hi = min(zT, (1 << j) - 1, (1 << l) - 1 - r)
    if hi < lo:
        return 0.0
    s = np.arange(lo, hi + 1)
    w = kernel.h((zT - s) / N)
    return float(np.sum(haar_value(j, s) * haar_value(l, s + r) * w))


def a_matrix(J: int) -> np.ndarray:
    """Gram matrix A_{j,l} = sum_tau Psi_j(tau) Psi_l(tau), J x J.

    Symmetric positive definite; diagonal entries satisfy
    A_{l,l} = (1/3) 2^{-l} (2^{2l} + 5).
    """
    J = _check_scale(J, "J", limit=20)
    A = np.zeros((J, J))
    for j in range(1, J + 1):
        for l in range(j, J + 1):
            m = 1 << max(j, l)
            taus = np.arange(-m + 1, m)
            s = float(np.sum(psi_auto(j, taus) * psi_auto(l, taus)))
            A[j - 1, l - 1] = A[l - 1, j - 1] = s
    return A


@dataclass(frozen=True)
class BProduct:
    """A B-product value plus how the closed form supports it.

    kind is "exact" when the closed form is an equality, "approx" when it
    is the stated large-scale approximation (error bounded by
    5 * 2^{-l} * 2^{-(c-l)/2}, c the non-equal scale), and "bound" when
    only an upper bound is available.
    """

    value: float
    kind: str


def _psi_xcorr_vector(j: int, l: int) -> tuple[np.ndarray, np.ndarray]:
    # full Psi_{j,l}(tau) over its support, via one correlation
    pj, pl = haar_coefficients(j), haar_coefficients(l)
    vals = np.correlate(pl, pj, "full")
    taus = np.arange(-(len(pj) - 1), len(pl))
    return taus, vals


def b_product(l: int, j: int, i: int, method: str = "closed") -> BProduct:
    """Fourth-order absolute product B_l(j, i) = sum_p |Psi_{j,l}(p) Psi_{i,l}(p)|.

    ``method="bruteforce"`` computes the exact finite sum (cost grows with
    2^max(scale); scales are capped at 14).  ``method="closed"`` evaluates
    the applicable closed-form case; see :class:`BProduct` for how equality
    versus bound-only cases are reported.
    """
    if method not in ("closed", "bruteforce"):
        raise InvalidArgumentError(f"unknown method {method!r}")
    limit = 14 if method == "bruteforce" else MAX_SCALE
    l = _check_scale(l, "l", limit=limit)
    j = _check_scale(j, "j", limit=limit)
    i = _check_scale(i, "i", limit=limit)

    if method == "bruteforce":
        t1, v1 = _psi_xcorr_vector(j, l)
        t2, v2 = _psi_xcorr_vector(i, l)
        lo, hi = max(t1[0], t2[0]), min(t1[-1], t2[-1])
        if hi < lo:
            return BProduct(0.0, "exact")
        a = v1[lo - t1[0] : hi - t1[0] + 1]
        b = v2[lo - t2[0] : hi - t2[0] + 1]
        return BProduct(float(np.sum(np.abs(a * b))), "exact")

    a, b = min(i, j), max(i, j)
    if a == l and b == l:
        # all indices equal: B = A_{l,l}
        return BProduct((1.0 / 3.0) * 2.0 ** (-l) * (2 ** (2 * l) + 5), "exact")
    if a > l:
        if a == b:
            return BProduct(2.0 ** (-b) * (2 ** (2 * l - 1) + 1), "exact")
        if b == a + 1:
            return BProduct(2.0 ** (-a) * (2 ** (2 * l - 1) + 1) * 2.0**-1.5, "exact")
        return BProduct(
            2.0 ** (-a / 2) * 2.0 ** (-b / 2) * (2 ** (2 * l - 1) + 1) / 6.0, "exact"
        )
    if b < l:
        if a == b:
            return BProduct(2.0 ** (-l) * (2 ** (2 * a - 1) + 1), "exact")
        return BProduct(1.5 * 2.0 ** (-l) * 2.0 ** (-b / 2) * 2.0 ** (2.5 * a - 1), "exact")
    if a < l < b:
        if b == l + 1:
            return BProduct(
                0.125 * 2.0 ** (-(l + 1) / 2) * 2.0 ** (1.5 * a) * (2.0 ** (a - l) + 2),
                "exact",
            )
        return BProduct(
            0.125 * 2.0 ** (-b / 2) * 2.0 ** (1.5 * a) * (2.0 - 2.0 ** (a - l)), "exact"
        )
    # one scale equals l
    c = b if a == l else a
    if c > l:
        # large-scale approximation, not an equality at finite l
        factor = 17.0 / 9.0 if c == l + 1 else 17.0 / 27.0
        return BProduct(2.0 ** (-(c - l) / 2) * factor * 2.0 ** (l - 3), "approx")
    return BProduct(2.0 ** (1.5 * c) * 2.0 ** (-l / 2), "bound")
