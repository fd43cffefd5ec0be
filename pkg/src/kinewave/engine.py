"""Fixed-step network integration of the link-boundary flow system.

Each step reads every link's demand and supply from the recorded curves,
resolves all nodes with the closed-form junction solvers, then advances
the curves holding flows constant over the step.  All node evaluations
read only data up to the step start, so node order is irrelevant and the
output through time T depends only on inputs through T.

Origins are vertical point queues by default: the desired rate feeds a
queue that discharges into the first link at the link's supply.  The
alternative spatial-queue model routes departures through a generated
long virtual link (config origin_model="virtual_link"); its injection is
advanced by the virtual free-flow transit time so departures at the
network proper stay comparable between the two models.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .curves import CumulativeCurve
from .fundamental import LinkParams
from .junctions import solve_diverge, solve_merge
from .linkdyn import LinkState, demand, detect_spillback, supply
from .network import Destination, Diverge, Merge, Network, Origin
from .profiles import StepProfile, generate_inflow  # noqa: F401  (re-export)

_FLOW_SLACK = 1e-9  # veh/hr


class SimulationAbort(RuntimeError):
    """A computed flow left its admissible range; names the node."""


@dataclass(frozen=True)
class SimConfig:
    dt: float = 0.05
    horizon: float = 5.0
    eps_N: float = 1e-6
    origin_model: str = "queue"  # "queue" | "virtual_link"

    def __post_init__(self):
        if self.dt <= 0.0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        steps = self.horizon / self.dt
        if abs(steps - round(steps)) > 1e-6 or self.horizon <= 0.0:
            raise ValueError(f"horizon {self.horizon} is not a multiple of dt {self.dt}")
        if self.origin_model not in ("queue", "virtual_link"):
            raise ValueError(f"unknown origin model {self.origin_model!r}")

    @property
    def n_steps(self) -> int:
        return round(self.horizon / self.dt)


class OriginQueue:
    """Vertical queue at an origin: desired vs actually released vehicles."""

    __slots__ = ("node_id", "link_id", "profile", "desired", "released")

    def __init__(self, node_id: str, link_id: str, profile: StepProfile, release_cap: float):
        self.node_id = node_id
        self.link_id = link_id
        self.profile = profile
        self.desired = CumulativeCurve(max(profile.max_rate, 1.0))
        self.released = CumulativeCurve(release_cap)

    def queue(self, t: float) -> float:
        return max(0.0, self.desired.eval(t) - self.released.eval(t))


@dataclass
class SimOutput:
    network: Network
    config: SimConfig
    times: np.ndarray
    links: dict            # link id -> LinkState
    spillback: dict        # link id -> bool array over times
    origins: dict          # origin node id -> OriginQueue
    queue_series: dict     # origin node id -> vehicles array over times
    virtual_links: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def flows(self, link_id: str):
        state = self.links[link_id]
        return np.asarray(state.q_in), np.asarray(state.q_out)

    def total_released(self) -> float:
        return sum(o.released.last_value for o in self.origins.values())

    def vehicle_balance(self) -> float:
        """Released minus (on links + arrived at sinks); 0 when mass closes."""
        t = self.times[-1]
        on_links = sum(s.vehicles(t) for s in self.links.values())
        arrived = sum(
            self.links[n.in_links[0]].n_down.eval(t) for n in self.network.destinations
        )
        return self.total_released() - on_links - arrived


def validate_dt(links: dict, dt: float) -> None:
    """Delayed lookups may not reach past the step start."""
    for lid, p in links.items():
        bound = min(p.tau_free, p.tau_back)
        if dt > bound + 1e-12:
            raise ValueError(
                f"dt={dt} exceeds min(L/k, L/w)={bound} of link {lid}; "
                "delayed lookups would need future data"
            )


def _virtual_params(down: LinkParams, profile: StepProfile, config: SimConfig) -> LinkParams:
    cap = max(down.C, profile.max_rate * (1.0 + 1e-12), 1.0)
    k, w = down.k, down.w
    rho_jam = cap * (k + w) / (k * w)
    storage = profile.integral(config.horizon) + 1.0
    length = max(storage / rho_jam, k * config.dt, w * config.dt) * (1.0 + 1e-9)
    return LinkParams(rho_jam=rho_jam, k=k, w=w, C=cap, L=length)


def run(network: Network, profiles: dict, config: SimConfig) -> SimOutput:
    """Integrate the whole network over [0, horizon]."""
    t_start = time.perf_counter()
    for node in network.origins:
        if node.spec.demand not in profiles:
            raise ValueError(f"origin {node.id} references unknown demand profile "
                             f"{node.spec.demand!r}")

    virtual = config.origin_model == "virtual_link"
    links = dict(network.links)
    vmap: dict = {}
    shifted: dict = {}
    if virtual:
        for node in network.origins:
            vid = f"__origin_{node.id}"
            profile = profiles[node.spec.demand]
            links[vid] = _virtual_params(links[node.out_links[0]], profile, config)
            vmap[node.id] = vid
            shifted[node.id] = profile.shifted(links[vid].tau_free)
    validate_dt(links, config.dt)

    states = {lid: LinkState(p, lid) for lid, p in links.items()}
    origins = {
        node.id: OriginQueue(node.id, node.out_links[0], profiles[node.spec.demand],
                             links[node.out_links[0]].C)
        for node in network.origins
    }

    # who sets each flow, for abort diagnostics
    entry_by: dict = {}
    exit_by: dict = {}
    for node in network.nodes:
        for lid in node.in_links:
            exit_by[lid] = node.id
        for lid in node.out_links:
            entry_by[lid] = node.id
    for oid, vid in vmap.items():
        entry_by[vid] = f"injection of origin {oid}"
        exit_by[vid] = oid

    dt = config.dt
    n = config.n_steps
    times = np.arange(n + 1) * dt
    flags = {lid: np.zeros(n + 1, dtype=bool) for lid in network.links}
    queues = {oid: np.zeros(n + 1) for oid in origins}

    for j in range(n):
        t = times[j]
        D = {lid: demand(s, t, dt) for lid, s in states.items()}
        S = {lid: supply(s, t, dt) for lid, s in states.items()}

        q_in: dict = {}
        q_out: dict = {}
        for node in network.nodes:
            spec = node.spec
            if isinstance(spec, Origin):
                first = node.out_links[0]
                if virtual:
                    vid = vmap[node.id]
                    rate = shifted[node.id].rate(t)
                    if rate > S[vid] + _FLOW_SLACK:
                        raise SimulationAbort(
                            f"virtual link of origin {node.id} overflowed at t={t}"
                        )
                    q_in[vid] = rate
                    q = min(D[vid], S[first])
                    q_out[vid] = q
                    q_in[first] = q
                else:
                    oq = origins[node.id]
                    h = oq.profile.rate(t)
                    release = min(h + oq.queue(t) / dt, S[first])
                    q_in[first] = max(0.0, release)
            elif isinstance(spec, Destination):
                q_out[node.in_links[0]] = D[node.in_links[0]]
            elif isinstance(spec, Diverge):
                i0 = node.in_links[0]
                o0, o1 = node.out_links
                sol = solve_diverge(D[i0], S[o0], S[o1], spec.alpha[0], spec.alpha[1])
                q_out[i0] = sol.q_out[0]
                q_in[o0], q_in[o1] = sol.q_in
            elif isinstance(spec, Merge):
                i0, i1 = node.in_links
                o0 = node.out_links[0]
                sol = solve_merge(D[i0], D[i1], S[o0], spec.p)
                q_out[i0], q_out[i1] = sol.q_out
                q_in[o0] = sol.q_in[0]

        for lid, p in links.items():
            if not (-_FLOW_SLACK <= q_in[lid] <= p.C + _FLOW_SLACK):
                raise SimulationAbort(
                    f"entry flow {q_in[lid]} of link {lid} outside [0, {p.C}] "
                    f"at node {entry_by[lid]}, t={t}"
                )
            if not (-_FLOW_SLACK <= q_out[lid] <= p.C + _FLOW_SLACK):
                raise SimulationAbort(
                    f"exit flow {q_out[lid]} of link {lid} outside [0, {p.C}] "
                    f"at node {exit_by[lid]}, t={t}"
                )

        for lid in network.links:
            flags[lid][j] = detect_spillback(states[lid], t, config.eps_N)
        for oid, oq in origins.items():
            queues[oid][j] = oq.queue(t)

        t_next = times[j + 1]
        for lid, s in states.items():
            s.advance(t_next, q_in[lid], q_out[lid])
        for node in network.origins:
            oq = origins[node.id]
            oq.desired.append(t_next, oq.profile.rate(t))
            oq.released.append(t_next, q_in[node.out_links[0]])

    t_end = times[-1]
    for lid in network.links:
        flags[lid][n] = detect_spillback(states[lid], t_end, config.eps_N)
    for oid, oq in origins.items():
        queues[oid][n] = oq.queue(t_end)

    return SimOutput(
        network=network,
        config=config,
        times=times,
        links={lid: states[lid] for lid in network.links},
        spillback=flags,
        origins=origins,
        queue_series=queues,
        virtual_links={vid: states[vid] for vid in vmap.values()},
        wall_time=time.perf_counter() - t_start,
    )
