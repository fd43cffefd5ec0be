"""Riemann solvers for merge and diverge junctions.

Both solvers map boundary demands and supplies to junction fluxes in
closed form.  The diverge keeps first-in-first-out behaviour through the
turning fractions; the merge maximizes throughput and settles ties with a
right-of-way parameter p: when the downstream supply binds and neither
demand clamps, the two approach flows satisfy q_second = p * q_first.

The grid-search oracles at the bottom re-derive the same solutions by
brute force over the feasible polytope and are used only in tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class JunctionFlows:
    """Per-link exit flows of incoming links and entry flows of outgoing links."""

    q_out: tuple
    q_in: tuple

    @property
    def total(self) -> float:
        return sum(self.q_out)


def solve_diverge(D1: float, S2: float, S3: float,
                  alpha12: float, alpha13: float) -> JunctionFlows:
    """FIFO diverge: one approach splitting into two branches.

    The exit flow is min(D1, S2/alpha12, S3/alpha13); a zero turning
    fraction disables its branch constraint entirely.
    """
    if min(D1, S2, S3) < 0.0:
        raise ValueError("demands and supplies must be nonnegative")
    if abs(alpha12 + alpha13 - 1.0) > 1e-9 or alpha12 < 0.0 or alpha13 < 0.0:
        raise ValueError(f"turning fractions ({alpha12}, {alpha13}) must be in [0,1] and sum to 1")
    q1 = D1
    if alpha12 > 0.0:
        q1 = min(q1, S2 / alpha12)
    if alpha13 > 0.0:
        q1 = min(q1, S3 / alpha13)
    return JunctionFlows(q_out=(q1,), q_in=(alpha12 * q1, alpha13 * q1))


def solve_merge(D4: float, D5: float, S6: float, p: float) -> JunctionFlows:
    """Priority merge: two approaches competing for one downstream link.

    Throughput is maximized subject to q4 <= D4, q5 <= D5, q4+q5 <= S6;
    among the maximizers the point closest to the priority line
    q5 = p*q4 is selected, which reduces to clamping the priority point
    (S6/(1+p), p*S6/(1+p)) against the demands.
    """
    if min(D4, D5, S6) < 0.0:
        raise ValueError("demands and supplies must be nonnegative")
    if not (0.0 < p < 1.0):
        raise ValueError(f"right-of-way parameter {p} outside (0, 1)")
    if D4 + D5 <= S6:
        q4, q5 = D4, D5
    else:
        q4 = S6 / (1.0 + p)
        q5 = p * q4
        if q4 > D4:
            q4, q5 = D4, S6 - D4
        elif q5 > D5:
            q4, q5 = S6 - D5, D5
    return JunctionFlows(q_out=(q4, q5), q_in=(q4 + q5,))


def diverge_oracle(D1: float, S2: float, S3: float,
                   alpha12: float, alpha13: float, step: float) -> JunctionFlows:
    """Brute-force diverge solution: scan exit flows at the given resolution.

    Feasible candidates are the grid points q1 in [0, D1] whose branch
    flows respect both supplies; the largest one wins.
    """
    grid = np.arange(0.0, D1, step) if D1 > 0.0 else np.zeros(1)
    grid = np.append(grid, D1)
    ok = (alpha12 * grid <= S2 + 1e-9) & (alpha13 * grid <= S3 + 1e-9)
    q1 = float(grid[ok].max()) if ok.any() else 0.0
    return JunctionFlows(q_out=(q1,), q_in=(alpha12 * q1, alpha13 * q1))


def merge_oracle(D4: float, D5: float, S6: float, p: float, step: float) -> JunctionFlows:
    """Brute-force merge solution over the feasible polytope.

    Candidates are the cartesian grid at the given resolution plus, for
    each grid abscissa, the point on the polytope boundary above it (and
    symmetrically), so the flux-maximizing face is sampled at full
    resolution.  Among the total-flux maximizers the candidate closest to
    the line q5 = p*q4 is returned.
    """
    g4 = np.append(np.arange(0.0, D4, step) if D4 > 0.0 else np.zeros(1), D4)
    g5 = np.append(np.arange(0.0, D5, step) if D5 > 0.0 else np.zeros(1), D5)
    q4c = [np.repeat(g4, g5.size), g4, np.minimum(D4, S6 - g5)]
    q5c = [np.tile(g5, g4.size), np.minimum(D5, S6 - g4), g5]
    q4 = np.concatenate(q4c)
    q5 = np.concatenate(q5c)
    ok = (q4 >= 0.0) & (q5 >= 0.0) & (q4 + q5 <= S6 + 1e-9)
    q4, q5 = q4[ok], q5[ok]
    if q4.size == 0:
        return JunctionFlows(q_out=(0.0, 0.0), q_in=(0.0,))
    total = q4 + q5
    best = total.max()
    top = total >= best - 1e-9
    q4, q5 = q4[top], q5[top]
    dist = np.abs(p * q4 - q5)  # monotone in the Euclidean distance to the line
    i = int(np.argmin(dist))
    return JunctionFlows(q_out=(float(q4[i]), float(q5[i])), q_in=(float(q4[i] + q5[i]),))
