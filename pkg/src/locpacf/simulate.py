"""Time-varying AR generators, the exact local PACF truth, and the
Monte-Carlo RMSE benchmark harness.

Replicates are independent and seeded as ``seed + replicate_index``, so
results are identical however the work is partitioned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import InvalidArgumentError
from .estimators import levinson_pacf, wavelet_lpacf, windowed_lpacf
from .series import TimeSeries

__all__ = [
    "ArPathSpec",
    "simulate_tvar",
    "simulate_piecewise_ar",
    "ar_autocovariances",
    "true_tv_pacf",
    "true_pacf_curve",
    "EstimatorConfig",
    "RmseRow",
    "RmseReport",
    "monte_carlo_rmse",
]

DEFAULT_BURN_IN = 500


@dataclass(frozen=True)
class ArPathSpec:
    """Coefficient path(s) of a time-varying AR(p) process.

    ``paths[i]`` maps rescaled time z = t/T to the lag-(i+1) coefficient.
    Every instantaneous coefficient vector must define a stationary AR
    model (all roots of the AR polynomial outside the unit circle).
    """

    paths: tuple[Callable[[float], float], ...]
    sigma: float = 1.0
    burn_in: int = DEFAULT_BURN_IN

    @property
    def order(self) -> int:
        return len(self.paths)

    def coefficients(self, z: float) -> np.ndarray:
        return np.array([p(z) for p in self.paths], dtype=float)

    @classmethod
    def constant(cls, coefs: Sequence[float], sigma: float = 1.0) -> "ArPathSpec":
        coefs = tuple(float(c) for c in coefs)
        return cls(tuple((lambda z, c=c: c) for c in coefs), sigma=sigma)

    @classmethod
    def linear_ramp(
        cls, start: Sequence[float] | float, end: Sequence[float] | float, sigma: float = 1.0
    ) -> "ArPathSpec":
        """Coefficients interpolating linearly in rescaled time."""
        start = np.atleast_1d(np.asarray(start, dtype=float))
        end = np.atleast_1d(np.asarray(end, dtype=float))
        if start.shape != end.shape:
            raise InvalidArgumentError("start and end must have the same length")
        paths = tuple(
            (lambda z, a=a, b=b: a + (b - a) * z) for a, b in zip(start, end)
        )
        return cls(paths, sigma=sigma)

    @classmethod
    def piecewise(
        cls, segments: Sequence[tuple[int, Sequence[float]]], sigma: float = 1.0
    ) -> "ArPathSpec":
        """Piecewise-constant coefficients from (length, coefficients) pairs.

        Segment boundaries are interpreted on the rescaled-time axis of the
        concatenated series; shorter-order segments are zero-padded to the
        maximum order.
        """
        if not segments:
            raise InvalidArgumentError("need at least one segment")
        lengths = np.array([int(n) for n, _ in segments])
        if np.any(lengths <= 0):
            raise InvalidArgumentError("segment lengths must be positive")
        total = int(lengths.sum())
        p = max(len(c) for _, c in segments)
        coef_table = np.zeros((len(segments), p))
        for row, (_, c) in enumerate(segments):
            coef_table[row, : len(c)] = np.asarray(c, dtype=float)
        edges = np.cumsum(lengths) / total  # right edges in rescaled time

        def make(i):
            def path(z, edges=edges, col=coef_table[:, i]):
                seg = int(np.searchsorted(edges, z, side="right"))
                return float(col[min(seg, len(col) - 1)])

            return path

        return cls(tuple(make(i) for i in range(p)), sigma=sigma)


def _check_stationary_at(coefs: np.ndarray, where: str) -> None:
    if not np.any(coefs):
        return
    roots = np.roots(np.concatenate([[1.0], -coefs]))
    if roots.size and np.max(np.abs(roots)) >= 1.0 - 1e-12:
        raise InvalidArgumentError(
            f"coefficient path is not instantaneously stationary at {where}: "
            f"phi={coefs.tolist()}"
        )


def validate_stability(spec: ArPathSpec, T: int) -> None:
    """Instantaneous-stationarity check of the AR polynomial at every t."""
    for t in range(T):
        # companion-matrix eigenvalues equal the inverse characteristic roots
        _check_stationary_at(spec.coefficients(t / T), f"t={t}")


def simulate_tvar(spec: ArPathSpec, T: int, seed: int) -> TimeSeries:
    """Simulate X_t = sum_i phi_i(t/T) X_{t-i} + sigma eps_t.

    The burn-in (spec.burn_in samples, discarded) runs with the t=0
    coefficients frozen; innovations are standard normal and the output is
    bit-identical for identical (spec, T, seed).
    """
    if T < 1:
        raise InvalidArgumentError(f"T={T} must be positive")
    validate_stability(spec, T)
    p = spec.order
    rng = np.random.default_rng(seed)
    n = T + spec.burn_in
    eps = rng.standard_normal(n) * spec.sigma
    coefs = np.empty((n, p))
    coefs[: spec.burn_in] = spec.coefficients(0.0)
    for t in range(T):
        coefs[spec.burn_in + t] = spec.coefficients(t / T)
    x = np.zeros(n)
    for t in range(n):
        acc = eps[t]
        for i in range(1, min(p, t) + 1):
            acc += coefs[t, i - 1] * x[t - i]
        x[t] = acc
    return TimeSeries(x[spec.burn_in :], origin=f"tvar(seed={seed})")


def simulate_piecewise_ar(
    segments: Sequence[tuple[int, Sequence[float]]], seed: int, sigma: float = 1.0
) -> TimeSeries:
    """Concatenated AR segments with a continuous sample path.

    Each segment starts from the previous segment's tail; only the
    coefficients switch at the joins.
    """
    spec = ArPathSpec.piecewise(segments, sigma=sigma)
    T = int(sum(n for n, _ in segments))
    ts = simulate_tvar(spec, T, seed)
    return TimeSeries(ts.values, origin=f"piecewise-ar(seed={seed})")


def ar_autocovariances(phi: Sequence[float], sigma: float, max_lag: int) -> np.ndarray:
    """Exact autocovariances gamma(0..max_lag) of a stationary AR(p).

    Solves the Yule-Walker moment equations
    gamma(k) = sum_i phi_i gamma(k-i) + sigma^2 delta_{k0} for gamma(0..p),
    then extends recursively.
    """
    phi = np.asarray(phi, dtype=float)
    p = len(phi)
    _check_stationary_at(phi, "constant coefficients")
    if p == 0:
        out = np.zeros(max_lag + 1)
        out[0] = sigma**2
        return out
    # unknowns gamma(0..p)
    A = np.zeros((p + 1, p + 1))
    b = np.zeros(p + 1)
    b[0] = sigma**2
    for k in range(p + 1):
        A[k, k] += 1.0
        for i in range(1, p + 1):
            A[k, abs(k - i)] -= phi[i - 1]
    gam = np.linalg.solve(A, b)
    out = np.empty(max_lag + 1)
    out[: p + 1] = gam[: max_lag + 1]
    for k in range(p + 1, max_lag + 1):
        out[k] = np.dot(phi, out[k - 1 : k - p - 1 : -1] if p > 1 else out[k - 1 : k])
    return out


def true_tv_pacf(spec: ArPathSpec, t: int, tau: int, T: int) -> float:
    """PACF at lag tau of the AR model frozen at the instantaneous
    coefficients phi(t/T); exactly zero for tau beyond the order."""
    if tau < 1:
        raise InvalidArgumentError(f"tau={tau} must be >= 1")
    coefs = spec.coefficients(t / T)
    coefs = np.trim_zeros(coefs, "b")  # effective order at this t
    if tau > len(coefs):
        return 0.0
    gam = ar_autocovariances(coefs, spec.sigma, tau)
    return float(levinson_pacf(gam)[tau - 1])


def true_pacf_curve(spec: ArPathSpec, T: int, lags: Sequence[int]) -> np.ndarray:
    """true_tv_pacf evaluated on the full grid; shape (len(lags), T)."""
    out = np.empty((len(lags), T))
    for i, tau in enumerate(lags):
        for t in range(T):
            out[i, t] = true_tv_pacf(spec, t, int(tau), T)
    return out


@dataclass(frozen=True)
class EstimatorConfig:
    """Which estimator the benchmark runs, and with which knobs."""

    method: str  # "windowed" | "wavelet"
    binwidth: int | None = None
    kernel: str = "epanechnikov"
    smooth_span: int | None = None
    max_scale: int | None = None
    max_lag: int = 4

    def __post_init__(self):
        if self.method not in ("windowed", "wavelet"):
            raise InvalidArgumentError(f"unknown method {self.method!r}")

    def estimate(self, ts: TimeSeries):
        if self.method == "windowed":
            return windowed_lpacf(
                ts, L=self.binwidth, kernel=self.kernel, max_lag=self.max_lag
            )
        return wavelet_lpacf(
            ts, max_scale=self.max_scale, span=self.smooth_span, max_lag=self.max_lag
        )


@dataclass(frozen=True)
class RmseRow:
    estimator: str
    lag: int
    rmse: float
    stderr: float
    replicates: int
    excluded: int
    bandwidth: int | None
    elapsed_seconds: float


@dataclass(frozen=True)
class RmseReport:
    rows: tuple[RmseRow, ...]
    seed: int

    def row(self, lag: int) -> RmseRow:
        for r in self.rows:
            if r.lag == lag:
                return r
        raise KeyError(lag)


def monte_carlo_rmse(
    spec: ArPathSpec,
    config: EstimatorConfig,
    reps: int,
    lags: Sequence[int],
    seed: int,
    T: int,
) -> RmseReport:
    """Per-lag RMSE of an estimator against the frozen-coefficient truth.

    For each replicate: simulate, estimate at all points, drop
    boundary-flagged points, take the root-mean-square deviation from
    true_tv_pacf over the retained points, then average over replicates
    (standard error = sample s.d. / sqrt(reps)).  A replicate in which the
    estimator fails at more than 10% of points is excluded and counted.
    """
    if reps < 2:
        raise InvalidArgumentError(f"reps={reps} must be >= 2")
    lags = [int(v) for v in lags]
    if max(lags) > config.max_lag:
        raise InvalidArgumentError("requested lag exceeds config.max_lag")
    truth = true_pacf_curve(spec, T, lags)
    t0 = time.perf_counter()
    per_rep = []
    excluded = 0
    for r in range(reps):
        ts = simulate_tvar(spec, T, seed + r)
        grid = config.estimate(ts)
        if len(grid.dropped_points) > 0.1 * (len(grid.points) + len(grid.dropped_points)):
            excluded += 1
            continue
        interior = grid.boundary == 0
        pts = grid.points[interior]
        if pts.size == 0:
            excluded += 1
            continue
        errs = []
        for i, tau in enumerate(lags):
            e = grid.estimates[interior, tau - 1] - truth[i, pts]
            errs.append(np.sqrt(np.mean(e * e)))
        per_rep.append(errs)
    elapsed = time.perf_counter() - t0
    per_rep = np.asarray(per_rep)
    used = per_rep.shape[0]
    rows = []
    for i, tau in enumerate(lags):
        vals = per_rep[:, i]
        rows.append(
            RmseRow(
                estimator=config.method,
                lag=tau,
                rmse=float(np.mean(vals)),
                stderr=float(np.std(vals, ddof=1) / np.sqrt(used)),
                replicates=used,
                excluded=excluded,
                bandwidth=config.binwidth,
                elapsed_seconds=elapsed,
            )
        )
    return RmseReport(tuple(rows), seed)
