"""Hot numeric kernels with numba and pure-numpy backends.

The jitted path is the default whenever numba imports; set the
environment variable KINEWAVE_NUMBA=0 before import to force the
vectorized numpy fallback.  Both backends are importable directly (the
benchmark under benchmarks/ times them side by side).
"""

from __future__ import annotations

import os

import numpy as np


def _numba_requested() -> bool:
    return os.environ.get("KINEWAVE_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


NUMBA_ENABLED = False
if _numba_requested():
    try:
        from numba import njit as _njit

        NUMBA_ENABLED = True
    except ImportError:
        NUMBA_ENABLED = False


# --- CTM cell sweep ---------------------------------------------------------
#
# One Godunov step for the cells of a single link: interior interface
# flows are min(sending, receiving) of the adjacent cells; the two
# boundary flows were already fixed by the junction solvers.  rho is
# updated in place.

def _ctm_advance_numpy(rho, q_in, q_out, k, w, rho_jam, C, dt_over_dx):
    demand = np.minimum(k * rho[:-1], C)
    supply = np.minimum(C, w * (rho_jam - rho[1:]))
    flows = np.empty(rho.size + 1)
    flows[0] = q_in
    flows[-1] = q_out
    flows[1:-1] = np.minimum(demand, supply)
    rho += dt_over_dx * (flows[:-1] - flows[1:])
    return rho


def _ctm_advance_loop(rho, q_in, q_out, k, w, rho_jam, C, dt_over_dx):
    # interface flows must read pre-step densities, so the previous cell's
    # old value rides along in prev_rho while cells update in place
    n = rho.size
    prev_flow = q_in
    prev_rho = rho[0]
    for i in range(n):
        if i + 1 < n:
            demand = min(k * prev_rho, C)
            supply = min(C, w * (rho_jam - rho[i + 1]))
            flow_out = min(demand, supply)
        else:
            flow_out = q_out
        updated = prev_rho + dt_over_dx * (prev_flow - flow_out)
        if i + 1 < n:
            prev_rho = rho[i + 1]
        rho[i] = updated
        prev_flow = flow_out
    return rho


# --- Moskowitz surface ------------------------------------------------------
#
# Two-branch minimum of the boundary-curve translates:
#   N(t, x) = min(N_up(t - x/k), N_down(t - (L-x)/w) + rho_jam*(L-x))
# evaluated over a (time, position) grid.  Curves are piecewise linear;
# np.interp clamps to 0 before t=0, encoding the empty initial network.

def _moskowitz_numpy(tu, nu, td, nd, t_grid, x_grid, k, w, rho_jam, L):
    tq_up = t_grid[:, None] - x_grid[None, :] / k
    tq_dn = t_grid[:, None] - (L - x_grid[None, :]) / w
    up = np.interp(tq_up.ravel(), tu, nu).reshape(tq_up.shape)
    down = np.interp(tq_dn.ravel(), td, nd).reshape(tq_dn.shape)
    down += rho_jam * (L - x_grid)[None, :]
    return np.minimum(up, down)


def _moskowitz_loop(tu, nu, td, nd, t_grid, x_grid, k, w, rho_jam, L):
    out = np.empty((t_grid.size, x_grid.size))
    for i in range(t_grid.size):
        t = t_grid[i]
        for j in range(x_grid.size):
            x = x_grid[j]
            up = np.interp(t - x / k, tu, nu)
            down = np.interp(t - (L - x) / w, td, nd) + rho_jam * (L - x)
            out[i, j] = min(up, down)
    return out


if NUMBA_ENABLED:
    ctm_advance = _njit(cache=True)(_ctm_advance_loop)
    moskowitz_surface = _njit(cache=True)(_moskowitz_loop)
else:
    ctm_advance = _ctm_advance_numpy
    moskowitz_surface = _moskowitz_numpy
