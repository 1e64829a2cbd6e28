"""Command-line front end.

Subcommands: ``simulate tvar``, ``simulate piecewise-ar``, ``estimate``,
``pacf``, ``benchmark``, ``sweep-bandwidth``, ``verify``.  Estimates are
written as long-format CSV (``t,z,lag,estimate,ci_lower,ci_upper,
boundary_flag``) with an optional SVG line plot.  Command-line flags
override an optional ``--config`` key=value file, which overrides
defaults.

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure,
4 verification failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import io as _io
from .errors import DataError, InvalidArgumentError, LocpacfError, NumericalError
from .estimators import LpacfGrid, classical_pacf, wavelet_lpacf, windowed_lpacf
from .simulate import (
    ArPathSpec,
    EstimatorConfig,
    monte_carlo_rmse,
    simulate_piecewise_ar,
    simulate_tvar,
)
from .verify import run_all

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3
EXIT_VERIFY = 4


class UsageError(LocpacfError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_point_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all-points", action="store_true", help="estimate at every index")
    g.add_argument("--stride", type=int, help="estimate every n-th index")
    g.add_argument("--points", type=str, help="comma-separated explicit indices")


def _add_estimator_flags(p):
    p.add_argument("--method", choices=("windowed", "wavelet"), default="windowed")
    p.add_argument("--binwidth", type=int, help="window width L (windowed)")
    p.add_argument(
        "--kernel", choices=("rectangular", "epanechnikov"), default="epanechnikov"
    )
    p.add_argument("--max-lag", type=int, default=4)
    p.add_argument("--smooth-span", type=int, help="running-mean half-span s (wavelet)")
    p.add_argument("--max-scale", type=int, help="deepest wavelet scale J* (wavelet)")
    p.add_argument("--demean", action="store_true", help="subtract the local mean first")


def build_parser() -> _Parser:
    top = _Parser(prog="locpacf", description=__doc__)
    top.add_argument("--config", type=str, help="key=value file of flag defaults")
    sub = top.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="simulate a test process")
    simsub = sim.add_subparsers(dest="process", required=True)
    tv = simsub.add_parser("tvar", help="time-varying AR(1) with a linear ramp")
    tv.add_argument("--T", type=int, default=512)
    tv.add_argument("--phi-start", type=float, default=0.9)
    tv.add_argument("--phi-end", type=float, default=-0.9)
    tv.add_argument("--sigma", type=float, default=1.0)
    tv.add_argument("--seed", type=int, default=0)
    tv.add_argument("--output", type=str, required=True)
    pw = simsub.add_parser("piecewise-ar", help="piecewise-constant AR segments")
    pw.add_argument(
        "--segments",
        type=str,
        default="85:-0.2;86:0.5,0.2;85:-0.2",
        help="length:coef,coef;length:... (default: the three-segment AR study)",
    )
    pw.add_argument("--sigma", type=float, default=1.0)
    pw.add_argument("--seed", type=int, default=0)
    pw.add_argument("--output", type=str, required=True)

    est = sub.add_parser("estimate", help="local partial autocorrelation of a series")
    est.add_argument("--input", type=str, required=True)
    est.add_argument("--output", type=str, required=True)
    _add_estimator_flags(est)
    _add_point_flags(est)
    est.add_argument("--pad", action="store_true", help="reflect-pad non-dyadic input")
    est.add_argument("--plot", type=str, help="also write an SVG line plot")

    pac = sub.add_parser("pacf", help="classical whole-series partial autocorrelation")
    pac.add_argument("--input", type=str, required=True)
    pac.add_argument("--output", type=str, required=True)
    pac.add_argument("--max-lag", type=int, default=10)
    pac.add_argument("--demean", action="store_true")

    ben = sub.add_parser("benchmark", help="Monte-Carlo RMSE study")
    ben.add_argument("--study", choices=("tvar", "piecewise-ar"), default="tvar")
    ben.add_argument("--T", type=int, help="series length (tvar study only)")
    ben.add_argument("--reps", type=int, default=100)
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--output", type=str, required=True)
    _add_estimator_flags(ben)

    sw = sub.add_parser("sweep-bandwidth", help="windowed estimates at several widths")
    sw.add_argument("--input", type=str, required=True)
    sw.add_argument("--output", type=str, required=True, help="output path stem")
    sw.add_argument("--widths", type=str, required=True, help="e.g. 160,80,40")
    sw.add_argument(
        "--kernel", choices=("rectangular", "epanechnikov"), default="epanechnikov"
    )
    sw.add_argument("--max-lag", type=int, default=4)
    sw.add_argument("--demean", action="store_true")
    sw.add_argument("--plot", type=str, help="SVG path stem (one per width)")

    ver = sub.add_parser("verify", help="run the wavelet formula/property suites")
    ver.add_argument("--output", type=str, help="also write the results as CSV")
    return top


def _coerce(val: str):
    if val.lower() in ("true", "false"):
        return val.lower() == "true"
    for cast in (int, float):
        try:
            return cast(val)
        except ValueError:
            pass
    return val


def _load_config(path: str) -> dict:
    out = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}: line {lineno}: expected key=value")
                key, val = line.split("=", 1)
                out[key.strip().replace("-", "_")] = val.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    return out


def _points_kwargs(args) -> dict:
    if getattr(args, "points", None):
        try:
            pts = [int(v) for v in args.points.split(",") if v.strip() != ""]
        except ValueError:
            raise UsageError("--points must be comma-separated integers") from None
        return {"points": np.array(pts, dtype=int)}
    if getattr(args, "stride", None):
        return {"stride": args.stride}
    return {}


def _parse_segments(text: str):
    segments = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            length, coefs = part.split(":")
            segments.append(
                (int(length), [float(c) for c in coefs.split(",") if c.strip() != ""])
            )
        except ValueError:
            raise UsageError(
                f"bad segment {part!r}; expected length:coef[,coef...]"
            ) from None
    if not segments:
        raise UsageError("--segments is empty")
    return segments


def _cmd_simulate(args) -> int:
    if args.process == "tvar":
        spec = ArPathSpec.linear_ramp([args.phi_start], [args.phi_end], sigma=args.sigma)
        ts = simulate_tvar(spec, args.T, args.seed)
    else:
        ts = simulate_piecewise_ar(_parse_segments(args.segments), args.seed, args.sigma)
    _io.write_series(args.output, ts)
    return EXIT_OK


def _cmd_estimate(args) -> int:
    ts = _io.read_series(args.input)
    kw = _points_kwargs(args)
    if args.method == "windowed":
        grid = windowed_lpacf(
            ts,
            L=args.binwidth,
            kernel=args.kernel,
            max_lag=args.max_lag,
            demean=args.demean,
            **kw,
        )
    else:
        grid = wavelet_lpacf(
            ts,
            max_scale=args.max_scale,
            span=args.smooth_span,
            max_lag=args.max_lag,
            demean=args.demean,
            pad=args.pad,
            **kw,
        )
    _io.write_long_csv(args.output, grid, ts.T)
    if args.plot:
        _io.svg_plot(args.plot, grid, ts.T, title=f"local pacf ({grid.kind})")
    return EXIT_OK


def _cmd_pacf(args) -> int:
    ts = _io.read_series(args.input)
    vals = classical_pacf(ts, args.max_lag, demean=args.demean)
    grid = LpacfGrid(
        kind="classical",
        points=np.array([ts.T // 2]),
        estimates=vals[None, :],
        boundary=np.array([0], dtype=np.uint8),
        bandwidth=ts.T,
        kernel=None,
        ci_halfwidth=np.array([1.96 / np.sqrt(ts.T)]),
        clamp_count=0,
    )
    _io.write_long_csv(args.output, grid, ts.T)
    return EXIT_OK


def _cmd_benchmark(args) -> int:
    if args.study == "tvar":
        spec = ArPathSpec.linear_ramp([0.9], [-0.9])
        T = args.T or 512
    else:
        spec = ArPathSpec.piecewise([(85, [-0.2]), (86, [0.5, 0.2]), (85, [-0.2])])
        T = 256
    config = EstimatorConfig(
        method=args.method,
        binwidth=args.binwidth,
        kernel=args.kernel,
        smooth_span=args.smooth_span,
        max_scale=args.max_scale,
        max_lag=args.max_lag,
    )
    lags = list(range(1, args.max_lag + 1))
    report = monte_carlo_rmse(spec, config, args.reps, lags, args.seed, T)
    _io.write_rmse_csv(args.output, report)
    for r in report.rows:
        print(
            f"{r.estimator} lag {r.lag}: rmse*100 = {100 * r.rmse:.3f} "
            f"(se {100 * r.stderr:.3f}), reps {r.replicates}, excluded {r.excluded}"
        )
    return EXIT_OK


def _stem_with_suffix(stem: str, suffix: str) -> str:
    if "." in stem.rsplit("/", 1)[-1]:
        base, ext = stem.rsplit(".", 1)
        return f"{base}_{suffix}.{ext}"
    return f"{stem}_{suffix}"


def _cmd_sweep(args) -> int:
    ts = _io.read_series(args.input)
    try:
        widths = [int(w) for w in args.widths.split(",") if w.strip() != ""]
    except ValueError:
        raise UsageError("--widths must be comma-separated integers") from None
    if not widths:
        raise UsageError("--widths is empty")
    for L in widths:
        grid = windowed_lpacf(
            ts, L=L, kernel=args.kernel, max_lag=args.max_lag, demean=args.demean
        )
        _io.write_long_csv(_stem_with_suffix(args.output, f"L{L}"), grid, ts.T)
        if args.plot:
            _io.svg_plot(
                _stem_with_suffix(args.plot, f"L{L}"),
                grid,
                ts.T,
                title=f"windowed local pacf, L={L}",
            )
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_all()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write("check,passed,detail\n")
            for r in results:
                fh.write(f"{r.name},{int(r.passed)},\"{r.detail}\"\n")
    if not all(r.passed for r in results):
        return EXIT_VERIFY
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        # flags override config-file values, which override defaults
        if "--config" in argv:
            cfg_path = argv[argv.index("--config") + 1]
            cfg = _load_config(cfg_path)
            ns = parser.parse_args(argv)
            for key, val in cfg.items():
                if hasattr(ns, key) and f"--{key.replace('_', '-')}" not in argv:
                    setattr(ns, key, _coerce(val))
            args = ns
        else:
            args = parser.parse_args(argv)
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "estimate":
            return _cmd_estimate(args)
        if args.command == "pacf":
            return _cmd_pacf(args)
        if args.command == "benchmark":
            return _cmd_benchmark(args)
        if args.command == "sweep-bandwidth":
            return _cmd_sweep(args)
        if args.command == "verify":
            return _cmd_verify(args)
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, InvalidArgumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
