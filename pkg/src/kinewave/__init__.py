"""Continuous-time link-based kinematic wave network traffic simulator."""

from .curves import CumulativeCurve, vehicles_on_link
from .engine import OriginQueue, SimConfig, SimOutput, SimulationAbort, run
from .fundamental import CONGESTED, FREE, LinkParams, TrafficState, flux, legendre, psi, shock_speed
from .junctions import JunctionFlows, solve_diverge, solve_merge
from .linkdyn import (
    LinkState,
    MoskowitzGrid,
    demand,
    detect_freeflow_exit,
    detect_spillback,
    reconstruct_moskowitz,
    shock_position,
    supply,
)
from .network import Destination, Diverge, Merge, Network, Node, Origin
from .profiles import StepProfile, generate_inflow

__version__ = "0.1.0"

__all__ = [
    "CONGESTED",
    "CumulativeCurve",
    "Destination",
    "Diverge",
    "FREE",
    "JunctionFlows",
    "LinkParams",
    "LinkState",
    "Merge",
    "MoskowitzGrid",
    "Network",
    "Node",
    "Origin",
    "OriginQueue",
    "SimConfig",
    "SimOutput",
    "SimulationAbort",
    "StepProfile",
    "TrafficState",
    "demand",
    "detect_freeflow_exit",
    "detect_spillback",
    "flux",
    "generate_inflow",
    "legendre",
    "psi",
    "reconstruct_moskowitz",
    "run",
    "shock_position",
    "shock_speed",
    "solve_diverge",
    "solve_merge",
    "supply",
    "vehicles_on_link",
    "__version__",
]
