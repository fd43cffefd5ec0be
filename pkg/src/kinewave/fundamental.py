"""Triangular fundamental diagram and the (flow, regime) traffic state.

Units are fixed throughout the package: miles, hours, vehicles.
"""

from __future__ import annotations

from dataclasses import dataclass

FREE = 0
CONGESTED = 1

_CONSISTENCY_RTOL = 1e-9


@dataclass(frozen=True)
class LinkParams:
    """Geometry and triangular flow-density relation of one link.

    rho_jam : jam density (veh/mile)
    k       : forward wave speed (mile/hr), slope of the free-flow branch
    w       : backward wave speed (mile/hr), magnitude of the congested slope
    C       : flow capacity (veh/hr); must equal k*w*rho_jam/(k+w)
    L       : length (mile)

    C is stored redundantly and validated against the wave speeds and jam
    density so that malformed network files are caught at construction.
    """

    rho_jam: float
    k: float
    w: float
    C: float
    L: float

    def __post_init__(self):
        for name in ("rho_jam", "k", "w", "C", "L"):
            v = getattr(self, name)
            if not v > 0.0:
                raise ValueError(f"LinkParams.{name} must be strictly positive, got {v}")
        expected = self.k * self.w * self.rho_jam / (self.k + self.w)
        if abs(self.C - expected) > _CONSISTENCY_RTOL * max(1.0, abs(expected)):
            raise ValueError(
                f"inconsistent capacity: C={self.C} but k*w*rho_jam/(k+w)={expected}"
            )
        rc = self.rho_crit
        if not (0.0 < rc < self.rho_jam):
            raise ValueError(f"critical density {rc} outside (0, {self.rho_jam})")

    @property
    def rho_crit(self) -> float:
        """Density at which flow attains capacity."""
        return self.C / self.k

    @property
    def jam_vehicles(self) -> float:
        """Storage of the fully jammed link, rho_jam * L."""
        return self.rho_jam * self.L

    @property
    def tau_free(self) -> float:
        """Forward wave transit time L/k."""
        return self.L / self.k

    @property
    def tau_back(self) -> float:
        """Backward wave transit time L/w."""
        return self.L / self.w


@dataclass(frozen=True)
class TrafficState:
    """Flow plus regime flag; determines density uniquely on a given link.

    q : flow (veh/hr), in [0, C] of the owning link
    r : FREE (0) or CONGESTED (1)
    """

    q: float
    r: int

    def __post_init__(self):
        if self.r not in (FREE, CONGESTED):
            raise ValueError(f"regime must be 0 or 1, got {self.r}")
        if self.q < 0.0:
            raise ValueError(f"flow must be nonnegative, got {self.q}")


def flux(rho: float, params: LinkParams) -> float:
    """Flow at density rho on the triangular diagram."""
    if rho < 0.0 or rho > params.rho_jam:
        raise ValueError(f"density {rho} outside [0, {params.rho_jam}]")
    if rho <= params.rho_crit:
        return params.k * rho
    return params.w * (params.rho_jam - rho)


def psi(state: TrafficState, params: LinkParams) -> float:
    """Density of a (flow, regime) state; inverse of the two flux branches."""
    if state.q > params.C * (1.0 + 1e-12):
        raise ValueError(f"flow {state.q} exceeds capacity {params.C}")
    if state.r == FREE:
        return state.q / params.k
    return params.rho_jam - state.q / params.w


def legendre(u: float, params: LinkParams) -> float:
    """Concave transform of the flux, C - rho_crit*u for wave speed u.

    Equals sup over densities of (flux(rho) - u*rho) on [-w, k].
    """
    if u < -params.w - 1e-12 or u > params.k + 1e-12:
        raise ValueError(f"wave speed {u} outside [{-params.w}, {params.k}]")
    return params.C - params.rho_crit * u


def shock_speed(left: TrafficState, right: TrafficState, params: LinkParams) -> float:
    """Rankine-Hugoniot speed of the discontinuity between two states."""
    rho_l = psi(left, params)
    rho_r = psi(right, params)
    drho = rho_r - rho_l
    if drho == 0.0:
        raise ValueError("degenerate shock: left and right densities coincide")
    return (right.q - left.q) / drho
