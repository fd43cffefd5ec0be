"""Piecewise-linear cumulative vehicle-count curves N(t).

A curve records breakpoints (t_i, N_i) with t strictly increasing, N
nondecreasing and Lipschitz with the link capacity as constant.  Every
curve starts at (0, 0), encoding the initially empty network.  Values
before the first breakpoint evaluate to 0 and values beyond the last
breakpoint extend flat; during a live simulation a query past the end
indicates an engine sequencing bug and can be made to raise.
"""

from __future__ import annotations

import numpy as np

_LIPSCHITZ_SLACK = 1e-9  # absolute, vehicles


class SequencingError(RuntimeError):
    """Query past the recorded horizon while a simulation is running."""


class CumulativeCurve:
    __slots__ = ("cap", "_t", "_n", "_size")

    def __init__(self, cap: float):
        if cap <= 0.0:
            raise ValueError(f"Lipschitz cap must be positive, got {cap}")
        self.cap = float(cap)
        self._t = np.zeros(64)
        self._n = np.zeros(64)
        self._size = 1  # holds the mandatory (0, 0) breakpoint

    @classmethod
    def from_breakpoints(cls, times, values, cap: float) -> "CumulativeCurve":
        times = np.asarray(times, dtype=float)
        values = np.asarray(values, dtype=float)
        if times.ndim != 1 or times.shape != values.shape or times.size == 0:
            raise ValueError("times and values must be equal-length 1-d arrays")
        if times[0] != 0.0 or values[0] != 0.0:
            raise ValueError("curve must start at breakpoint (0, 0)")
        dt = np.diff(times)
        dn = np.diff(values)
        if np.any(dt <= 0.0):
            raise ValueError("breakpoint times must be strictly increasing")
        if np.any(dn < -_LIPSCHITZ_SLACK):
            raise ValueError("curve values must be nondecreasing")
        if np.any(dn > cap * dt + _LIPSCHITZ_SLACK):
            raise ValueError(f"curve violates Lipschitz bound {cap}")
        curve = cls(cap)
        m = times.size
        curve._t = times.copy()
        curve._n = values.copy()
        curve._size = m
        return curve

    @property
    def times(self) -> np.ndarray:
        return self._t[: self._size]

    @property
    def values(self) -> np.ndarray:
        return self._n[: self._size]

    @property
    def last_time(self) -> float:
        return self._t[self._size - 1]

    @property
    def last_value(self) -> float:
        return self._n[self._size - 1]

    def append(self, t_next: float, rate: float) -> None:
        """Extend the curve to t_next at constant flow rate."""
        t_last = self._t[self._size - 1]
        dt = t_next - t_last
        if dt <= 0.0:
            raise ValueError(f"append time {t_next} not beyond last breakpoint {t_last}")
        if rate < 0.0:
            raise ValueError(f"negative flow rate {rate}")
        if rate * dt > self.cap * dt + _LIPSCHITZ_SLACK:
            raise ValueError(f"rate {rate} above Lipschitz cap {self.cap}")
        if self._size == self._t.size:
            self._t = np.concatenate([self._t, np.zeros(self._t.size)])
            self._n = np.concatenate([self._n, np.zeros(self._n.size)])
        self._t[self._size] = t_next
        self._n[self._size] = self._n[self._size - 1] + rate * dt
        self._size += 1

    def eval(self, t, strict: bool = False):
        """Linear interpolation; clamps to 0 before t=0 and flat past the end.

        strict=True raises SequencingError on queries past the last
        breakpoint (used inside the engine loop).
        """
        if strict and np.any(np.asarray(t) > self.last_time + 1e-12):
            raise SequencingError(
                f"curve queried at t={t} beyond recorded horizon {self.last_time}"
            )
        return np.interp(t, self.times, self.values)

    def __call__(self, t):
        return self.eval(t)

    def __len__(self) -> int:
        return self._size


def vehicles_on_link(n_up: CumulativeCurve, n_down: CumulativeCurve, t) -> float:
    """Vehicle count between the two boundaries at time t."""
    return n_up.eval(t) - n_down.eval(t)
