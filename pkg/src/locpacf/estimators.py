"""Local partial autocorrelation estimators.

Two estimators are provided.  The windowed estimator computes the
classical partial autocorrelation from a kernel-weighted window of
observations around each requested time point.  The plug-in estimator
replaces every population autocovariance in the prediction-theoretic
representation

    q(z, tau) = phi_{tau,tau}(z) * sqrt(backward MSPE / forward MSPE)

with the wavelet local autocovariance estimate, solving a local
Yule-Walker system for phi and two prediction systems for the MSPEs.

Both assume mean-zero input; pass demean=True to subtract the
(kernel-weighted, for the windowed estimator) local mean first.
Estimation at distinct time points is independent; the implementations
vectorize over points and produce deterministic output ordering.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateInputError,
    InsufficientWindowError,
    InvalidArgumentError,
    NumericalError,
)
from .kernels import EPANECHNIKOV, TaperKernel, get_kernel
from .series import as_series
from .spectral import (
    LocalAcvGrid,
    default_max_scale,
    default_smoothing_span,
    local_autocovariance,
    raw_wavelet_periodogram,
    smooth_and_correct,
)

__all__ = [
    "confidence_halfwidth",
    "default_bandwidth",
    "levinson_pacf",
    "classical_pacf",
    "weighted_local_acv",
    "windowed_lpacf",
    "local_yule_walker",
    "LocalYwSolution",
    "prediction_system",
    "PredictionSystem",
    "wavelet_lpacf",
    "LpacfGrid",
]

_RIDGE_START = 1e-8
_RIDGE_STOP = 1e-2
_PACF_SLACK = 1e-6


def confidence_halfwidth(L: int) -> float:
    """Approximate 95% half-width 1.96/sqrt(L) for a window of L points."""
    if L < 1:
        raise InvalidArgumentError(f"L={L} must be >= 1")
    return 1.96 / np.sqrt(L)


def default_bandwidth(T: int) -> int:
    """Default window width: round(T^0.8) rounded to an even number."""
    return max(4, 2 * round(T**0.8 / 2))


def levinson_pacf(gamma: np.ndarray) -> np.ndarray:
    """Order-recursive Yule-Walker solve; returns pacf at lags 1..len-1.

    ``gamma`` holds autocovariances at lags 0..max_lag.  The input may be
    batched with shape (max_lag+1, npoints); the recursion then runs for
    every column at once.
    """
    gamma = np.asarray(gamma, dtype=float)
    squeeze = gamma.ndim == 1
    if squeeze:
        gamma = gamma[:, None]
    max_lag = gamma.shape[0] - 1
    npts = gamma.shape[1]
    if np.any(gamma[0] <= 0.0):
        raise DegenerateInputError("zero sample variance at lag 0")
    pacf = np.zeros((max_lag, npts))
    phi = np.zeros((max_lag, npts))
    v = gamma[0].copy()
    for k in range(1, max_lag + 1):
        acc = gamma[k].copy()
        for j in range(1, k):
            acc -= phi[j - 1] * gamma[k - j]
        with np.errstate(divide="ignore", invalid="ignore"):
            refl = np.where(v > 0.0, acc / np.where(v > 0.0, v, 1.0), 0.0)
        pacf[k - 1] = refl
        phi[: k - 1] = phi[: k - 1] - refl * phi[: k - 1][::-1]
        phi[k - 1] = refl
        v = v * (1.0 - refl * refl)
    pacf = np.clip(pacf, -1.0, 1.0)
    return pacf[:, 0] if squeeze else pacf


def classical_pacf(ts, max_lag: int, demean: bool = False) -> np.ndarray:
    """Sample partial autocorrelation of the whole series at lags 1..max_lag.

    Sample autocovariances use the biased 1/T normalization and do not
    subtract the mean unless ``demean`` is set.
    """
    ts = as_series(ts)
    T = ts.T
    if not 1 <= max_lag < T // 2:
        raise InvalidArgumentError(f"max_lag={max_lag} outside [1, T/2) for T={T}")
    x = ts.values - ts.values.mean() if demean else ts.values
    gamma = np.array([np.dot(x[: T - k], x[k:]) / T for k in range(max_lag + 1)])
    if gamma[0] <= 0.0:
        raise DegenerateInputError("series has zero sample variance")
    return levinson_pacf(gamma)


def weighted_local_acv(ts, center: int, L: int, kernel=EPANECHNIKOV, max_lag: int = 1):
    """Kernel-weighted local autocovariances around one time point.

    gamma_z(tau) = sum_t w_t X_t X_{t+tau} / sum_t w_t over pairs lying
    inside the window [center-L/2+1, center+L/2], weighted by the left
    index via w_t = h((t - center + L/2)/L).  The rectangular kernel
    reproduces the classical biased autocovariance of the length-L
    sub-series exactly.

    Returns (gamma, effective_length, clipped) where effective_length is
    the number of in-bounds window points and clipped tells whether the
    nominal window left the series.
    """
    ts = as_series(ts)
    kernel = get_kernel(kernel)
    T = ts.T
    if max_lag >= L / 2:
        raise InvalidArgumentError(f"max_lag={max_lag} must be < L/2 = {L / 2}")
    t = np.arange(center - L // 2 + 1, center + L // 2 + 1)
    w = kernel.h((t - center + L / 2) / L)
    inb = (t >= 0) & (t <= T - 1)
    clipped = bool(np.any(~inb))
    eff = int(np.sum(inb))
    if eff < max_lag + 1:
        raise InsufficientWindowError(
            f"window at center={center} retains {eff} points < max_lag+1"
        )
    denom = float(np.sum(w[inb]))
    if denom <= 0.0:
        raise InsufficientWindowError(f"window at center={center} has zero weight mass")
    x = ts.values
    win_end = t[-1]
    gamma = np.zeros(max_lag + 1)
    for tau in range(max_lag + 1):
        ok = inb & (t + tau <= min(T - 1, win_end))
        tt = t[ok]
        gamma[tau] = float(np.sum(w[ok] * x[tt] * x[tt + tau])) / denom
    return gamma, eff, clipped


@dataclass(frozen=True)
class LpacfGrid:
    """Local partial autocorrelation estimates on a time x lag grid.

    ``estimates[p, tau-1]`` is the estimate at ``points[p]`` and lag tau.
    ``boundary`` flags points whose window was clipped (windowed) or that
    sit within the wavelet boundary margin.  ``ci_halfwidth`` is
    1.96/sqrt(effective L) per point for the windowed estimator and None
    for the wavelet estimator (no distributional band is defined for it).
    Points dropped for having too little data or failing numerically are
    listed separately; every retained estimate is finite and in [-1, 1].
    """

    kind: str
    points: np.ndarray
    estimates: np.ndarray
    boundary: np.ndarray
    bandwidth: int | None
    kernel: str | None
    ci_halfwidth: np.ndarray | None
    clamp_count: int
    dropped_points: np.ndarray = field(default_factory=lambda: np.array([], dtype=int))
    effective_length: np.ndarray | None = None

    @property
    def max_lag(self) -> int:
        return self.estimates.shape[1]

    @property
    def lags(self) -> np.ndarray:
        return np.arange(1, self.max_lag + 1)


def _select_points(T: int, points, stride) -> np.ndarray:
    if points is not None and stride is not None:
        raise InvalidArgumentError("give either explicit points or a stride, not both")
    if points is not None:
        pts = np.asarray(points, dtype=int)
        if pts.size and (pts.min() < 0 or pts.max() > T - 1):
            raise InvalidArgumentError(f"points outside [0, {T - 1}]")
        return pts
    if stride is not None:
        if stride < 1:
            raise InvalidArgumentError(f"stride={stride} must be >= 1")
        return np.arange(0, T, stride)
    return np.arange(T)


def _pair_products(x: np.ndarray, max_lag: int) -> np.ndarray:
    T = len(x)
    prod = np.zeros((max_lag + 1, T))
    for tau in range(max_lag + 1):
        prod[tau, : T - tau] = x[: T - tau] * x[tau:]
    return prod


def windowed_lpacf(
    ts,
    L: int | None = None,
    kernel=EPANECHNIKOV,
    max_lag: int = 4,
    points=None,
    stride=None,
    demean: bool = False,
) -> LpacfGrid:
    """Windowed local partial autocorrelation at the requested points.

    Per point: kernel-weighted local autocovariances over the length-L
    window centred there, then the classical order-recursive partial
    autocorrelation.  Window clipping at the series ends is flagged and
    the effective window length is used for the CI half-width; points
    retaining fewer than 2*max_lag observations are dropped.
    """
    ts = as_series(ts).require_length()
    kernel = get_kernel(kernel)
    T = ts.T
    if L is None:
        L = default_bandwidth(T)
    if not 1 < L < T:
        raise InvalidArgumentError(f"bandwidth L={L} must lie in (1, T={T})")
    if not 1 <= max_lag < L / 2:
        raise InvalidArgumentError(f"max_lag={max_lag} outside [1, L/2) for L={L}")
    pts = _select_points(T, points, stride)

    # One pass of windowed sums for every time point via correlation with
    # the weight profile; per-point loops would repeat identical work.
    offs = np.arange(-L // 2 + 1, L // 2 + 1)
    w = kernel.h((offs + L / 2) / L)
    x = ts.values
    if demean:
        ones = np.ones(T)
        wsum = _sliding_dot(ones, w, offs, T)
        x = x - _sliding_dot(x, w, offs, T) / wsum
    prod = _pair_products(x, max_lag)
    denom = _sliding_dot(np.ones(T), w, offs, T)
    # pairs must lie fully inside the window: weight on the left index,
    # last tau window slots carry none
    gamma = np.empty((max_lag + 1, T))
    for tau in range(max_lag + 1):
        w_tau = w.copy()
        if tau:
            w_tau[L - tau :] = 0.0
        gamma[tau] = _sliding_dot(prod[tau], w_tau, offs, T)
    gamma /= denom

    eff = _sliding_dot(np.ones(T), np.ones(L), offs, T).round().astype(int)
    keep_mask = (eff[pts] >= 2 * max_lag) & (gamma[0, pts] > 0.0)
    kept = pts[keep_mask]
    dropped = pts[~keep_mask]

    pacf = levinson_pacf(gamma[:, kept]) if kept.size else np.zeros((max_lag, 0))
    clamp_count = int(np.sum(np.abs(pacf) >= 1.0))
    boundary = (eff[kept] < L).astype(np.uint8)
    ci = 1.96 / np.sqrt(eff[kept].astype(float))
    return LpacfGrid(
        kind="windowed",
        points=kept,
        estimates=pacf.T.copy(),
        boundary=boundary,
        bandwidth=int(L),
        kernel=kernel.kind,
        ci_halfwidth=ci,
        clamp_count=clamp_count,
        dropped_points=dropped,
        effective_length=eff[kept],
    )


def _sliding_dot(arr: np.ndarray, w: np.ndarray, offs: np.ndarray, T: int) -> np.ndarray:
    """out[c] = sum_k arr[c + offs[k]] * w[k], zero outside [0, T-1]."""
    L = len(w)
    pad = np.zeros(T + 2 * L)
    pad[L : L + T] = arr
    full = np.correlate(pad, w, "valid")
    idx = np.arange(T) + offs[0] + L
    return full[idx]


@dataclass(frozen=True)
class LocalYwSolution:
    """Solution of a tau x tau local Yule-Walker system.

    ``coefficients[i-1]`` multiplies the observation i steps back from the
    target; the last element is the partial autocorrelation.  ``residual``
    is ||B phi - r|| relative to ||B||; ``ridge`` the regularization that
    was needed (0 when none).
    """

    lag: int
    coefficients: np.ndarray
    residual: float
    ridge: float

    @property
    def last(self) -> float:
        return float(self.coefficients[-1])


def _solve_regularized(B: np.ndarray, r: np.ndarray, scale: float):
    """Solve B phi = r, escalating ridge regularization until the system is
    positive definite and the trailing coefficient is a valid correlation."""
    ridge = 0.0
    eps = _RIDGE_START
    eye = np.eye(B.shape[0])
    while True:
        M = B + ridge * eye
        try:
            np.linalg.cholesky(M)  # positive-definiteness gate
            phi = np.linalg.solve(M, r)
            if abs(phi[-1]) <= 1.0 + _PACF_SLACK and np.all(np.isfinite(phi)):
                return phi, ridge
        except np.linalg.LinAlgError:
            pass
        if eps > _RIDGE_STOP:
            cond = float(np.linalg.cond(B)) if np.all(np.isfinite(B)) else np.inf
            raise NumericalError(
                f"Yule-Walker system unusable after ridge {_RIDGE_STOP}", condition=cond
            )
        ridge = eps * scale
        eps *= 2.0


def local_yule_walker(acv, tau: int) -> LocalYwSolution:
    """Solve the order-tau Yule-Walker system for a lag-indexed accessor.

    ``acv`` is a callable lag -> covariance (or a sequence indexed by lag)
    defined for lags 0..tau with acv(0) > 0.  Ridge regularization is
    applied on failure; a system still unusable at the maximum ridge
    raises NumericalError carrying a condition estimate.
    """
    if tau < 1:
        raise InvalidArgumentError(f"tau={tau} must be >= 1")
    c = [float(acv(k)) if callable(acv) else float(acv[k]) for k in range(tau + 1)]
    if c[0] <= 0.0:
        raise DegenerateInputError("acv(0) must be positive")
    idx = np.arange(tau)
    B = np.array(c)[np.abs(idx[:, None] - idx[None, :])]
    r = np.array(c[1:])
    phi, ridge = _solve_regularized(B, r, c[0])
    resid = float(np.linalg.norm(B @ phi - r) / max(np.linalg.norm(B), 1e-300))
    return LocalYwSolution(tau, phi, resid, ridge)


@dataclass(frozen=True)
class PredictionSystem:
    """Backcast and forecast prediction systems at one point and lag.

    The backcast predicts the observation at zT from the tau-1 following
    ones; the forecast predicts the observation at zT+tau from the same
    predictor set.  Coefficient vectors carry -1 at the target position,
    so each MSPE is the quadratic form b' B b.
    """

    lag: int
    backcast: np.ndarray
    forecast: np.ndarray
    backward_matrix: np.ndarray
    forward_matrix: np.ndarray
    mspe_backward: float
    mspe_forward: float

    @property
    def ratio(self) -> float:
        """sqrt(backward MSPE / forward MSPE)."""
        return float(np.sqrt(self.mspe_backward / self.mspe_forward))


def _pair_cov_matrix(lacv: LocalAcvGrid, times: np.ndarray) -> np.ndarray:
    n = len(times)
    M = np.empty((n, n))
    for a in range(n):
        for b in range(a, n):
            M[a, b] = M[b, a] = lacv.midpoint(times[a], times[b])
    return M


def prediction_system(lacv: LocalAcvGrid, zT: int, tau: int) -> PredictionSystem:
    """Build both prediction systems from a local autocovariance grid.

    Covariance entries are evaluated at the rescaled midpoint of each
    index pair, so the backward and forward matrices genuinely differ
    under nonstationarity.  MSPEs must come out positive; ridge
    regularization is escalated otherwise and NumericalError raised once
    exhausted.
    """
    if tau < 1:
        raise InvalidArgumentError(f"tau={tau} must be >= 1")
    if zT < 0 or zT + tau > lacv.T - 1:
        raise InvalidArgumentError(
            f"point zT={zT} with tau={tau} needs entries up to time {zT + tau}"
        )
    bt = np.arange(zT, zT + tau)  # backcast span, target first
    ft = np.arange(zT + 1, zT + tau + 1)  # forecast span, target last
    Bb = _pair_cov_matrix(lacv, bt)
    Bf = _pair_cov_matrix(lacv, ft)
    scale = max(lacv.at(zT, 0), 1e-300)
    if tau == 1:
        bb = np.array([-1.0])
        bf = np.array([-1.0])
        mb, mf = float(Bb[0, 0]), float(Bf[0, 0])
    else:
        beta_b, _ = _solve_regularized(Bb[1:, 1:], Bb[1:, 0], scale)
        beta_f, _ = _solve_regularized(Bf[:-1, :-1], Bf[:-1, -1], scale)
        bb = np.concatenate([[-1.0], beta_b])
        bf = np.concatenate([beta_f, [-1.0]])
        mb = float(bb @ Bb @ bb)
        mf = float(bf @ Bf @ bf)
    if not (mb > 0.0 and mf > 0.0 and np.isfinite(mb) and np.isfinite(mf)):
        raise NumericalError(
            f"non-positive MSPE at zT={zT}, tau={tau}",
            condition=float(np.linalg.cond(Bf)),
        )
    return PredictionSystem(tau, bb, bf, Bb, Bf, mb, mf)


def _yw_phi_last(lacv: LocalAcvGrid, zT: int, tau: int) -> float:
    """phi_{tau,tau} from the local Yule-Walker system anchored at zT."""
    times = np.arange(zT + tau - 1, zT - 1, -1)  # zT+tau-1 down to zT
    B = _pair_cov_matrix(lacv, times)
    r = np.array([lacv.midpoint(zT + tau, tt) for tt in times])
    phi, _ = _solve_regularized(B, r, max(lacv.at(zT, 0), 1e-300))
    return float(phi[-1])


def wavelet_lpacf(
    ts,
    max_scale: int | None = None,
    span: int | None = None,
    max_lag: int = 4,
    points=None,
    stride=None,
    demean: bool = False,
    pad: bool = False,
    lacv: LocalAcvGrid | None = None,
) -> LpacfGrid:
    """Wavelet plug-in local partial autocorrelation estimator.

    Pipeline: spectral estimation (non-decimated Haar periodogram,
    smoothing, inverse-A correction) -> local autocovariance grid -> per
    point and lag, the local Yule-Walker coefficient times the square-root
    MSPE ratio, clamped to [-1, 1].  A precomputed ``lacv`` grid bypasses
    the spectral stage (used by tests and by callers estimating on a known
    covariance surface).

    Points failing numerically are dropped and reported, not fatal.
    """
    ts = as_series(ts).require_length()
    T = ts.T
    if not 1 <= max_lag <= 10:
        raise InvalidArgumentError(f"max_lag={max_lag} outside [1, 10]")
    if lacv is None:
        if max_scale is None:
            max_scale = default_max_scale(T)
        if span is None:
            span = default_smoothing_span(T)
        x = ts.values - ts.values.mean() if demean else ts.values
        raw = raw_wavelet_periodogram(x, max_scale, pad=pad)
        ews = smooth_and_correct(raw, span)
        lacv = local_autocovariance(ews, max(max_lag, 1))
        margin = (1 << (max_scale - 1)) + max_lag
    else:
        max_scale = 0
        margin = max_lag
    pts = _select_points(T, points, stride)
    usable = pts[(pts >= 0) & (pts + max_lag <= lacv.T - 1) & (lacv.values[0, pts] > 0)]
    dropped = np.setdiff1d(pts, usable)

    estimates = np.empty((len(usable), max_lag))
    failed = []
    for i, zT in enumerate(usable):
        try:
            for tau in range(1, max_lag + 1):
                phi = _yw_phi_last(lacv, int(zT), tau)
                ps = prediction_system(lacv, int(zT), tau)
                estimates[i, tau - 1] = phi * ps.ratio
        except NumericalError:
            failed.append(i)
    if failed:
        ok = np.setdiff1d(np.arange(len(usable)), np.array(failed))
        dropped = np.concatenate([dropped, usable[np.array(failed, dtype=int)]])
        usable = usable[ok]
        estimates = estimates[ok]
    clamp_count = int(np.sum(np.abs(estimates) > 1.0))
    estimates = np.clip(estimates, -1.0, 1.0)
    boundary = ((usable < margin) | (usable > T - 1 - margin)).astype(np.uint8)
    return LpacfGrid(
        kind="wavelet",
        points=usable,
        estimates=estimates,
        boundary=boundary,
        bandwidth=None,
        kernel=None,
        ci_halfwidth=None,
        clamp_count=clamp_count,
        dropped_points=np.sort(dropped),
    )
