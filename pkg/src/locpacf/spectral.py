"""Evolutionary wavelet spectrum estimation.

Pipeline: non-decimated Haar transform -> raw periodogram (squared
coefficients) -> running-mean smoothing over time -> inverse-A correction
-> local autocovariance synthesis c_hat(z, tau) = sum_j S_hat_j(z) Psi_j(tau).

Boundary policy: the non-decimated transform wraps periodically (dyadic
convention); tapered local periodograms near the series ends clip the
window and recompute the normalizer over retained points.  Per-time-point
computations are independent; all grids are write-once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundaryError, InvalidArgumentError
from .haar import a_matrix, haar_coefficients, psi_auto
from .kernels import RECTANGULAR, TaperKernel
from .series import TimeSeries, as_series

__all__ = [
    "nondecimated_haar_transform",
    "raw_wavelet_periodogram",
    "local_wavelet_periodogram_tapered",
    "integrated_periodogram",
    "smooth_and_correct",
    "local_autocovariance",
    "EwsGrid",
    "LocalAcvGrid",
    "default_max_scale",
    "default_smoothing_span",
]


def default_max_scale(T: int) -> int:
    """min(log2 T, 8); deeper scales are noise-dominated at desk-scale T."""
    return min(int(np.log2(T)), 8)


def default_smoothing_span(T: int) -> int:
    """Default running-mean half-span s = ceil(T^(1/3))."""
    return int(np.ceil(T ** (1.0 / 3.0)))


def _dyadic_series(ts, pad: bool) -> tuple[TimeSeries, int]:
    ts = as_series(ts)
    if ts.is_dyadic():
        return ts, ts.T
    if not pad:
        raise InvalidArgumentError(
            f"series length T={ts.T} is not a power of two; enable padding"
        )
    return ts.pad_to_dyadic()


def nondecimated_haar_transform(ts, max_scale: int | None = None, pad: bool = False):
    """Coefficients d_{j,k} = sum_t X_t psi_{j,(t-k) mod T}, scales 1..max_scale.

    Returns an array of shape (max_scale, T).  Linear in the input;
    periodic boundary.
    """
    ts, orig_T = _dyadic_series(ts, pad)
    T = ts.T
    J = int(np.log2(T))
    if max_scale is None:
        max_scale = default_max_scale(T)
    if not 1 <= max_scale <= J:
        raise InvalidArgumentError(f"max_scale={max_scale} outside [1, {J}] for T={T}")
    X = np.fft.rfft(ts.values)
    d = np.empty((max_scale, T))
    for j in range(1, max_scale + 1):
        p = np.zeros(T)
        p[: 1 << j] = haar_coefficients(j)
        # circular cross-correlation: d[k] = sum_t X_t p[(t-k) mod T]
        d[j - 1] = np.fft.irfft(X * np.conj(np.fft.rfft(p)), T)
    return d[:, :orig_T]


def raw_wavelet_periodogram(ts, max_scale: int | None = None, pad: bool = False):
    """Squared non-decimated coefficients I_{j,k} = d_{j,k}^2."""
    d = nondecimated_haar_transform(ts, max_scale, pad)
    return d * d


def local_wavelet_periodogram_tapered(
    ts,
    zT: int,
    N: int,
    j: int,
    kernel: TaperKernel = RECTANGULAR,
    boundary: str = "strict",
) -> float:
    """Uncorrected tapered local wavelet periodogram I*_N(zT/T, j).

    I* = H_N^{-1} | sum_{t<N} h(t/N) X_{zT+t-N/2+1} psi_{j,(t-N/2+1) mod N} |^2.
    The wavelet anchor is chosen so that with a rectangular kernel and
    N = T the value reproduces the global non-decimated periodogram at the
    center point (up to the H_N normalizer).

    With ``boundary="strict"`` a window leaving [0, T-1] raises
    BoundaryError; with ``boundary="clip"`` the window is clipped and H
    recomputed over the retained points.
    """
    ts = as_series(ts)
    T = ts.T
    if N <= 0 or N % 2:
        raise InvalidArgumentError(f"N={N} must be a positive even integer")
    if not 1 <= j <= int(np.log2(N)):
        raise InvalidArgumentError(f"scale j={j} needs 2^j <= N={N}")
    if boundary not in ("strict", "clip"):
        raise InvalidArgumentError(f"unknown boundary policy {boundary!r}")
    t = np.arange(N)
    s = zT + t - N // 2 + 1
    if boundary == "strict":
        if s[0] < 0 or s[-1] > T - 1:
            raise BoundaryError(
                f"window [{s[0]}, {s[-1]}] exceeds series bounds [0, {T - 1}]"
            )
        keep = slice(None)
    else:
        keep = (s >= 0) & (s <= T - 1)
        if not np.any(keep):
            raise BoundaryError(f"window around zT={zT} has no overlap with the series")
    h = kernel.h(t / N)[keep]
    full = np.zeros(N)
    full[: 1 << j] = haar_coefficients(j)
    wav = full[(t - N // 2 + 1) % N][keep]
    hn = float(np.sum(h * h))
    if hn <= 0.0:
        raise BoundaryError("no taper mass left after clipping")
    inner = float(np.sum(h * ts.values[s[keep]] * wav))
    return inner * inner / hn


def integrated_periodogram(
    ts,
    zT: int,
    N: int,
    phi,
    kernel: TaperKernel = RECTANGULAR,
    boundary: str = "strict",
) -> float:
    """J_N(z, phi) = sum_j phi_j I*_N(z, j) for a finite weight sequence."""
    phi = np.asarray(phi, dtype=float)
    total = 0.0
    for j, w in enumerate(phi, start=1):
        if w == 0.0:
            continue
        total += w * local_wavelet_periodogram_tapered(ts, zT, N, j, kernel, boundary)
    return total


@dataclass(frozen=True)
class EwsGrid:
    """Evolutionary wavelet spectrum estimates on a scale x time grid.

    ``spectrum[j-1, k]`` holds S_hat_j(k/T).  Entries may be negative after
    the inverse-A correction; ``negative_cells`` counts them.  Synthesis
    into autocovariances floors them at zero.
    """

    spectrum: np.ndarray
    span: int
    negative_cells: int

    @property
    def max_scale(self) -> int:
        return self.spectrum.shape[0]

    @property
    def T(self) -> int:
        return self.spectrum.shape[1]


def smooth_and_correct(raw: np.ndarray, span: int | None = None) -> EwsGrid:
    """Running-mean smooth each scale over 2*span+1 neighbors, then apply A^{-1}.

    Edges are reflected for the smoothing.  span=0 leaves the raw values
    untouched before correction.
    """
    raw = np.asarray(raw, dtype=float)
    J, T = raw.shape
    if span is None:
        span = default_smoothing_span(T)
    if span < 0:
        raise InvalidArgumentError(f"span={span} must be nonnegative")
    if span > 0:
        ker = np.full(2 * span + 1, 1.0 / (2 * span + 1))
        padded = np.pad(raw, ((0, 0), (span, span)), mode="reflect")
        sm = np.vstack([np.convolve(padded[r], ker, "valid") for r in range(J)])
    else:
        sm = raw.copy()
    A = a_matrix(J)
    spectrum = np.linalg.solve(A, sm)
    spectrum.setflags(write=False)
    return EwsGrid(spectrum, span, int(np.sum(spectrum < 0.0)))


@dataclass(frozen=True)
class LocalAcvGrid:
    """Local autocovariance estimates c_hat(z, tau) on a time x lag grid.

    ``values[tau, k]`` holds c_hat(k/T, tau) for tau = 0..max_lag.  Negative
    lags follow by symmetry.  ``floored_cells`` counts spectrum cells set to
    zero before synthesis.
    """

    values: np.ndarray
    floored_cells: int

    @property
    def max_lag(self) -> int:
        return self.values.shape[0] - 1

    @property
    def T(self) -> int:
        return self.values.shape[1]

    def at(self, k: int, tau: int) -> float:
        return float(self.values[abs(int(tau)), int(k)])

    def midpoint(self, ta: int, tb: int) -> float:
        """c_hat at the rescaled midpoint of the index pair (ta, tb).

        The lag is |ta - tb|; a half-integer midpoint averages the two
        adjacent integer-time entries.
        """
        lag = abs(int(ta) - int(tb))
        twice = int(ta) + int(tb)
        if twice % 2 == 0:
            return float(self.values[lag, twice // 2])
        lo = twice // 2
        return 0.5 * float(self.values[lag, lo] + self.values[lag, lo + 1])


def local_autocovariance(ews: EwsGrid, max_lag: int) -> LocalAcvGrid:
    """Synthesize c_hat(z, tau) = sum_j max(S_hat_j(z), 0) Psi_j(tau)."""
    if not 0 <= max_lag < (1 << ews.max_scale):
        raise InvalidArgumentError(
            f"max_lag={max_lag} must satisfy 0 <= max_lag < 2^max_scale"
        )
    floored = int(np.sum(ews.spectrum < 0.0))
    S = np.maximum(ews.spectrum, 0.0)
    psi = np.array(
        [psi_auto(j, np.arange(max_lag + 1)) for j in range(1, ews.max_scale + 1)]
    )
    values = psi.T @ S
    values.setflags(write=False)
    return LocalAcvGrid(values, floored)
