#!/usr/bin/env python3
"""Why local partial autocorrelation: a time-varying AR(1) example.

A TVAR(1) whose lag-one coefficient ramps linearly from 0.9 to -0.9 has a
true lag-1 partial autocorrelation equal to that ramp and exactly zero
partial autocorrelation at every higher lag.  The classical whole-series
PACF is misleading here twice over: it averages the ramp to roughly zero
at lag 1 and invents strong spurious structure at lag 2.  Both local
estimators recover the ramp.

Writes CSV and SVG output next to this script under output/.
"""

import os

import numpy as np

from locpacf import (
    ArPathSpec,
    classical_pacf,
    simulate_tvar,
    svg_plot,
    true_pacf_curve,
    wavelet_lpacf,
    windowed_lpacf,
    write_long_csv,
)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

T = 512
spec = ArPathSpec.linear_ramp([0.9], [-0.9])
ts = simulate_tvar(spec, T, seed=1)
truth = true_pacf_curve(spec, T, [1, 2])

print("classical whole-series PACF (lags 1..4):")
cp = classical_pacf(ts, 4)
band = 1.96 / np.sqrt(T)
for lag, v in enumerate(cp, start=1):
    flag = "significant" if abs(v) > band else "inside band"
    print(f"  lag {lag}: {v:+.3f}  ({flag}; white-noise band +-{band:.3f})")
print("  -> the true lag-2 partial autocorrelation is identically zero;")
print("     the 'significant' lag-2 value is an artifact of nonstationarity.")

windowed = windowed_lpacf(ts, L=64, kernel="epanechnikov", max_lag=2)
wavelet = wavelet_lpacf(ts, max_scale=6, span=16, max_lag=2)

for grid, name in ((windowed, "windowed"), (wavelet, "wavelet")):
    interior = grid.boundary == 0
    pts = grid.points[interior]
    err = grid.estimates[interior, 0] - truth[0, pts]
    corr = np.corrcoef(grid.estimates[interior, 0], truth[0, pts])[0, 1]
    print(
        f"{name} estimator: lag-1 ramp correlation {corr:.3f}, "
        f"lag-1 RMSE {np.sqrt(np.mean(err**2)):.3f}, "
        f"lag-2 mean abs {np.mean(np.abs(grid.estimates[interior, 1])):.3f}"
    )
    write_long_csv(os.path.join(OUT, f"tvar_{name}.csv"), grid, T)
    svg_plot(
        os.path.join(OUT, f"tvar_{name}.svg"),
        grid,
        T,
        title=f"local pacf of a TVAR(1) ramp ({name})",
    )

print(f"wrote CSV + SVG under {OUT}/")
