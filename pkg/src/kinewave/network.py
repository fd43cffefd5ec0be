"""Directed link-node network with typed junctions.

Supported node types are the two basic junction geometries (one-in
two-out diverge, two-in one-out merge) plus origin and destination
endpoints.  Turning fractions follow the order of a diverge's outgoing
list; a merge's right-of-way parameter p gives priority to the first
listed approach (q_second = p * q_first on the supply-constrained face).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fundamental import LinkParams


@dataclass(frozen=True)
class Diverge:
    alpha: tuple  # fractions per outgoing link, in list order; sum to 1

    def __post_init__(self):
        a = self.alpha
        if len(a) != 2 or min(a) < 0.0 or abs(a[0] + a[1] - 1.0) > 1e-9:
            raise ValueError(f"diverge fractions {a} must be two values in [0,1] summing to 1")


@dataclass(frozen=True)
class Merge:
    p: float  # right-of-way in (0, 1)

    def __post_init__(self):
        if not (0.0 < self.p < 1.0):
            raise ValueError(f"right-of-way parameter {self.p} outside (0, 1)")


@dataclass(frozen=True)
class Origin:
    demand: str  # key into the scenario's demand profiles


@dataclass(frozen=True)
class Destination:
    pass


@dataclass(frozen=True)
class Node:
    id: str
    spec: object  # Diverge | Merge | Origin | Destination
    in_links: tuple
    out_links: tuple


_DEGREE = {Diverge: (1, 2), Merge: (2, 1), Origin: (0, 1), Destination: (1, 0)}


@dataclass
class Network:
    links: dict = field(default_factory=dict)  # id -> LinkParams, insertion-ordered
    nodes: list = field(default_factory=list)

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        for lid, params in self.links.items():
            if not isinstance(params, LinkParams):
                raise ValueError(f"link {lid} has no parameters")
        tail: dict = {}
        head: dict = {}
        for node in self.nodes:
            n_in, n_out = _DEGREE[type(node.spec)]
            kind = type(node.spec).__name__.lower()
            if len(node.in_links) != n_in or len(node.out_links) != n_out:
                raise ValueError(
                    f"node {node.id}: a {kind} needs {n_in} incoming and "
                    f"{n_out} outgoing links, got {len(node.in_links)}/{len(node.out_links)}"
                )
            for lid in node.in_links:
                if lid not in self.links:
                    raise ValueError(f"node {node.id} references unknown link {lid}")
                if lid in head:
                    raise ValueError(f"link {lid} has two head nodes ({head[lid]}, {node.id})")
                head[lid] = node.id
            for lid in node.out_links:
                if lid not in self.links:
                    raise ValueError(f"node {node.id} references unknown link {lid}")
                if lid in tail:
                    raise ValueError(f"link {lid} has two tail nodes ({tail[lid]}, {node.id})")
                tail[lid] = node.id
        for lid in self.links:
            if lid not in tail or lid not in head:
                raise ValueError(f"link {lid} must have exactly one tail and one head node")
        self._check_connected()

    def _check_connected(self) -> None:
        if not self.nodes:
            raise ValueError("network has no nodes")
        adjacency: dict = {n.id: set() for n in self.nodes}
        by_link: dict = {}
        for node in self.nodes:
            for lid in node.in_links + node.out_links:
                by_link.setdefault(lid, []).append(node.id)
        for ends in by_link.values():
            a, b = ends  # each link has exactly one tail and head by now
            adjacency[a].add(b)
            adjacency[b].add(a)
        seen = {self.nodes[0].id}
        stack = [self.nodes[0].id]
        while stack:
            for other in adjacency[stack.pop()]:
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        if len(seen) != len(self.nodes):
            raise ValueError("network graph is not connected")

    @property
    def origins(self) -> list:
        return [n for n in self.nodes if isinstance(n.spec, Origin)]

    @property
    def destinations(self) -> list:
        return [n for n in self.nodes if isinstance(n.spec, Destination)]

    @property
    def junctions(self) -> list:
        return [n for n in self.nodes if isinstance(n.spec, (Diverge, Merge))]

    def node(self, node_id: str) -> Node:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)
