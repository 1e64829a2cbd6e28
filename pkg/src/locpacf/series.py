"""The TimeSeries container used throughout the package."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DataError

__all__ = ["TimeSeries", "as_series"]

MIN_LENGTH = 8


@dataclass(frozen=True)
class TimeSeries:
    """A finite real-valued sequence observed at t = 0..T-1.

    Rescaled time maps each index t to z = t/T.  The origin label records
    where the values came from (file path, simulator, ...).
    """

    values: np.ndarray
    origin: str = ""

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1:
            raise DataError(f"series must be one-dimensional, got shape {vals.shape}")
        if len(vals) < 1:
            raise DataError("series is empty")
        if not np.all(np.isfinite(vals)):
            bad = int(np.flatnonzero(~np.isfinite(vals))[0])
            raise DataError(f"non-finite value at index {bad}")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def T(self) -> int:
        return len(self.values)

    def require_length(self, minimum: int = MIN_LENGTH) -> "TimeSeries":
        if self.T < minimum:
            raise DataError(f"series too short for estimation: T={self.T} < {minimum}")
        return self

    def is_dyadic(self) -> bool:
        t = self.T
        return t & (t - 1) == 0

    def pad_to_dyadic(self) -> tuple["TimeSeries", int]:
        """Reflection-pad to the next power of two.

        Returns the padded series and the original length, so estimates can
        be reported on the original indices only.
        """
        t = self.T
        if self.is_dyadic():
            return self, t
        target = 1 << int(np.ceil(np.log2(t)))
        pad = target - t
        padded = np.concatenate([self.values, self.values[-2 : -2 - pad : -1]])
        return TimeSeries(padded, origin=self.origin), t


def as_series(x, origin: str = "") -> TimeSeries:
    """Coerce an array-like or TimeSeries into a TimeSeries."""
    if isinstance(x, TimeSeries):
        return x
    return TimeSeries(np.asarray(x, dtype=float), origin=origin)
