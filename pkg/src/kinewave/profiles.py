"""Piecewise-constant demand-rate profiles.

A profile is a right-continuous step function of time: rate(t) = rates[i]
for t in [times[i], times[i+1]), zero before times[0], and rates[-1] from
times[-1] on.  Profiles are plain functions of time so the engine, the
CTM oracle and the front tracker can all evaluate the same inflow on
their own grids.
"""

from __future__ import annotations

import numpy as np


class StepProfile:
    __slots__ = ("times", "rates")

    def __init__(self, times, rates):
        self.times = np.asarray(times, dtype=float)
        self.rates = np.asarray(rates, dtype=float)
        if self.times.ndim != 1 or self.times.shape != self.rates.shape or self.times.size == 0:
            raise ValueError("times and rates must be equal-length 1-d arrays")
        if np.any(np.diff(self.times) <= 0.0):
            raise ValueError("profile times must be strictly increasing")
        if np.any(self.rates < 0.0):
            raise ValueError("profile rates must be nonnegative")

    def rate(self, t):
        """Rate at time t (scalar or array)."""
        idx = np.searchsorted(self.times, t, side="right") - 1
        res = np.where(idx >= 0, self.rates[np.maximum(idx, 0)], 0.0)
        return float(res) if np.isscalar(t) else res

    def shifted(self, dt: float) -> "StepProfile":
        """Same profile advanced in time by dt: shifted.rate(t) == rate(t+dt)."""
        times = self.times - dt
        keep = times > 0.0
        if keep.all():
            return StepProfile(times, self.rates)
        # merge every step at or before t=0 into a single leading step
        last = int(keep.argmax()) - 1 if keep.any() else self.times.size - 1
        times = np.concatenate([[0.0], times[last + 1:]])
        rates = np.concatenate([[self.rates[last]], self.rates[last + 1:]])
        return StepProfile(times, rates)

    @property
    def max_rate(self) -> float:
        return float(self.rates.max())

    def integral(self, t_end: float) -> float:
        """Total volume through t_end (vehicles)."""
        t = np.minimum(np.append(self.times, max(t_end, self.times[-1])), t_end)
        return float(np.sum(self.rates * np.maximum(np.diff(t), 0.0)))


def constant(rate: float, t_on: float = 0.0) -> StepProfile:
    if t_on > 0.0:
        return StepProfile([0.0, t_on], [0.0, rate])
    return StepProfile([0.0], [rate])


def generate_inflow(cap: float, interval, dt: float, seed: int) -> StepProfile:
    """Seeded random inflow: per-step draws from Uniform(0, cap) inside
    the interval, zero outside.

    Steps are the dt-grid cells whose start lies in [t0, t1).  Draws come
    from numpy's default PCG64 generator, so a fixed seed fully
    determines the series.
    """
    t0, t1 = float(interval[0]), float(interval[1])
    if cap < 0.0 or t1 <= t0 or dt <= 0.0:
        raise ValueError("need cap >= 0, interval[0] < interval[1], dt > 0")
    j0 = int(np.ceil(t0 / dt - 1e-9))
    j1 = int(np.ceil(t1 / dt - 1e-9))
    rng = np.random.default_rng(seed)
    draws = rng.uniform(0.0, cap, j1 - j0)
    times = np.concatenate([[0.0], (j0 + np.arange(j1 - j0)) * dt, [j1 * dt]])
    rates = np.concatenate([[0.0], draws, [0.0]])
    if times[1] == 0.0:
        times, rates = times[1:], rates[1:]
    return StepProfile(times, rates)
