"""Per-link boundary dynamics driven by cumulative curves.

Demand is how much the link can send through its exit over the next
step, supply how much it can receive at its entrance.  Both come from
translates of the boundary curves:

    demand  = min( (N_up(t+dt-L/k) - N_down(t)) / dt,            C )
    supply  = min( (N_down(t+dt-L/w) + rho_jam*L - N_up(t)) / dt, C )

When the link is free-flowing at the exit the demand branch reduces to
the inflow delayed by the forward transit time L/k; under spillback the
supply branch is the outflow delayed by the backward transit time L/w.
The min() caps the literal two-branch form so that a queue emptying in
the middle of a step cannot be over-drawn; away from those sub-step
crossings the two forms coincide, and the flux-limited form keeps the
curve equalities below exact to floating-point precision.

The latent-shock detectors classify where the separating shock sits:
at the entrance (spillback) iff  N_up(t) >= N_down(t-L/w) + rho_jam*L,
at the exit (all free)      iff  N_up(t-L/k) <= N_down(t),
both read within the tolerance eps_N on accumulated vehicle counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .curves import CumulativeCurve
from .fundamental import LinkParams

DEFAULT_EPS_N = 1e-6  # vehicles


class LinkState:
    """Boundary record of one link: the two curves plus the step flow series."""

    __slots__ = ("link_id", "params", "n_up", "n_down", "q_in", "q_out")

    def __init__(self, params: LinkParams, link_id: str = ""):
        self.link_id = link_id
        self.params = params
        self.n_up = CumulativeCurve(params.C)
        self.n_down = CumulativeCurve(params.C)
        self.q_in: list = []
        self.q_out: list = []

    def advance(self, t_next: float, q_in: float, q_out: float) -> None:
        self.n_up.append(t_next, q_in)
        self.n_down.append(t_next, q_out)
        self.q_in.append(q_in)
        self.q_out.append(q_out)

    def vehicles(self, t: float) -> float:
        return self.n_up.eval(t) - self.n_down.eval(t)


def demand(link: LinkState, t: float, dt: float) -> float:
    """Maximum flow the link can send over [t, t+dt]."""
    p = link.params
    available = link.n_up.eval(t + dt - p.tau_free, strict=True) - link.n_down.eval(t, strict=True)
    return min(max(available, 0.0) / dt, p.C)


def supply(link: LinkState, t: float, dt: float) -> float:
    """Maximum flow the link can receive over [t, t+dt]."""
    p = link.params
    room = (link.n_down.eval(t + dt - p.tau_back, strict=True)
            + p.jam_vehicles - link.n_up.eval(t, strict=True))
    return min(max(room, 0.0) / dt, p.C)


def detect_spillback(link: LinkState, t: float, eps: float = DEFAULT_EPS_N) -> bool:
    """Separating shock resting at the entrance: congestion fills the link."""
    p = link.params
    return bool(link.n_up.eval(t) >= link.n_down.eval(t - p.tau_back) + p.jam_vehicles - eps)


def detect_freeflow_exit(link: LinkState, t: float, eps: float = DEFAULT_EPS_N) -> bool:
    """Separating shock resting at the exit: the whole link is in free flow."""
    return bool(link.n_up.eval(t - link.params.tau_free) <= link.n_down.eval(t) + eps)


def shock_gap(link: LinkState, t: float, x):
    """g(x) = N_up-translate minus N_down-translate at position x.

    Negative left of the separating shock, positive right of it, and
    nondecreasing in x because the translate slopes bracket each other.
    """
    p = link.params
    x = np.asarray(x, dtype=float)
    up = link.n_up.eval(t - x / p.k)
    down = link.n_down.eval(t - (p.L - x) / p.w) + p.rho_jam * (p.L - x)
    return up - down


def shock_position(link: LinkState, t: float, tol: float = 1e-6) -> float:
    """Position of the separating shock at time t, to tol miles.

    Returns 0 under spillback and L when the link is entirely free; in
    between, bisection finds the sign change of the monotone gap.
    """
    L = link.params.L
    g_lo = float(shock_gap(link, t, 0.0))
    if g_lo >= 0.0:
        return 0.0
    g_hi = float(shock_gap(link, t, L))
    if g_hi <= 0.0:
        return L
    lo, hi = 0.0, L
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if float(shock_gap(link, t, mid)) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass
class MoskowitzGrid:
    """Vehicle-count surface N(t, x) with the shock trajectory x*(t)."""

    link_id: str
    times: np.ndarray
    positions: np.ndarray
    values: np.ndarray  # shape (times, positions)
    shock: np.ndarray   # x*(t), shape (times,)


def reconstruct_moskowitz(link: LinkState, t_grid, x_grid) -> MoskowitzGrid:
    """Offline N(t, x) from the boundary curves via the two-wave minimum."""
    p = link.params
    t_grid = np.asarray(t_grid, dtype=float)
    x_grid = np.asarray(x_grid, dtype=float)
    values = _kernels.moskowitz_surface(
        link.n_up.times, link.n_up.values, link.n_down.times, link.n_down.values,
        t_grid, x_grid, p.k, p.w, p.rho_jam, p.L,
    )
    shock = np.array([shock_position(link, t) for t in t_grid])
    return MoskowitzGrid(link.link_id, t_grid, x_grid, values, shock)
