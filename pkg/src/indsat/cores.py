"""Core reductions: (k,l)-core, 2-/3-core, 3*-core, (1,1)-core, 2-edge-core,
2-non-edge-core.

Each reduction iteratively removes vertices (or, for the 3*-core, vertex
pairs) until no rule fires.  The firing order is pinned: the single-vertex
rule fires on the lowest-index eligible vertex first; if none is eligible the
pair rule fires on the lexicographically least eligible pair.  Deterministic
traces make cores replayable inside certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graphs import Graph, _bits


@dataclass(frozen=True)
class CoreKind:
    """Selector for one of the reduction rule families.

    tag "kl" uses the (k, l) thresholds; the other tags ignore them.
    """

    tag: str  # "kl" | "three_star" | "two_edge" | "two_nonedge"
    k: int = 0
    l: int = 0

    def __post_init__(self):
        if self.tag not in ("kl", "three_star", "two_edge", "two_nonedge"):
            raise ValueError(f"unknown core tag {self.tag!r}")
        if self.k < 0 or self.l < 0:
            raise ValueError("k and l must be non-negative")

    def label(self) -> str:
        if self.tag == "kl":
            return f"({self.k},{self.l})-core"
        return {"three_star": "3*-core", "two_edge": "2-edge-core",
                "two_nonedge": "2-non-edge-core"}[self.tag]


def kl_core(k: int, l: int) -> CoreKind:
    return CoreKind("kl", k, l)


TWO = kl_core(2, 0)
THREE = kl_core(3, 0)
ONE_ONE = kl_core(1, 1)
THREE_STAR = CoreKind("three_star")
TWO_EDGE = CoreKind("two_edge")
TWO_NONEDGE = CoreKind("two_nonedge")

_NAMED = {"two": TWO, "three": THREE, "one_one": ONE_ONE,
          "three_star": THREE_STAR, "two_edge": TWO_EDGE,
          "two_nonedge": TWO_NONEDGE}


def named_core(name: str) -> CoreKind:
    """Look up a core kind by its wire name ("two", "three", "kl:2,1", ...)."""
    if name in _NAMED:
        return _NAMED[name]
    if name.startswith("kl:"):
        k, l = name[3:].split(",")
        return kl_core(int(k), int(l))
    raise ValueError(f"unknown core kind {name!r}")


def core_name(kind: CoreKind) -> str:
    for name, k in _NAMED.items():
        if k == kind:
            return name
    return f"kl:{kind.k},{kind.l}"


@dataclass(frozen=True)
class RemovedCluster:
    """One removal step: the vertices taken out, with enough context to undo it.

    `attachment` maps each removed vertex (original label) to the neighbors it
    had, at removal time, outside the cluster.  `internal_edge` records the
    adjacency inside a removed pair.
    """

    vertices: tuple[int, ...]
    attachment: dict[int, tuple[int, ...]]
    internal_edge: bool
    rule: str

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "attachment": {str(v): list(ns) for v, ns in self.attachment.items()},
                "internal_edge": self.internal_edge,
                "rule": self.rule}


@dataclass(frozen=True)
class CoreResult:
    """Core graph plus the data needed to reconstruct the input.

    `vertices[i]` is the original label of core vertex i; `trace` lists the
    removed clusters in firing order.
    """

    graph: Graph
    vertices: tuple[int, ...]
    trace: tuple[RemovedCluster, ...]


def _single_rule_fires(g: Graph, present: int, v: int, kind: CoreKind) -> Optional[str]:
    deg = bin(g.adj[v] & present).count("1")
    n_present = bin(present).count("1")
    nondeg = n_present - 1 - deg
    if kind.tag == "kl":
        if deg < kind.k:
            return "degree"
        if nondeg < kind.l:
            return "nondegree"
        return None
    if kind.tag == "three_star":
        return "degree" if deg <= 2 else None
    # 2-edge-core and 2-non-edge-core: degree < 2 always goes; a degree-2
    # vertex goes when its two neighbors are adjacent (resp. non-adjacent).
    if deg < 2:
        return "degree"
    if deg == 2:
        a, b = _bits(g.adj[v] & present)
        adjacent = g.has_edge(a, b)
        if kind.tag == "two_edge" and adjacent:
            return "triangle"
        if kind.tag == "two_nonedge" and not adjacent:
            return "open_path"
    return None


def _pair_rule_fires(g: Graph, present: int, u: int, v: int, kind: CoreKind) -> bool:
    if kind.tag != "three_star":
        return False
    closed = (g.adj[u] | g.adj[v] | 1 << u | 1 << v) & present
    return bin(closed).count("1") <= 4


def core(g: Graph, kind: CoreKind) -> CoreResult:
    """Reduce g to its core of the given kind, recording a replayable trace."""
    present = (1 << g.n) - 1
    trace: list[RemovedCluster] = []
    while True:
        fired = False
        for v in range(g.n):
            if not present >> v & 1:
                continue
            rule = _single_rule_fires(g, present, v, kind)
            if rule:
                trace.append(RemovedCluster(
                    vertices=(v,),
                    attachment={v: tuple(_bits(g.adj[v] & present & ~(1 << v)))},
                    internal_edge=False,
                    rule=rule))
                present &= ~(1 << v)
                fired = True
                break
        if fired:
            continue
        if kind.tag == "three_star":
            for u, v in combinations(_bits(present), 2):
                if _pair_rule_fires(g, present, u, v, kind):
                    rest = present & ~(1 << u) & ~(1 << v)
                    trace.append(RemovedCluster(
                        vertices=(u, v),
                        attachment={u: tuple(_bits(g.adj[u] & rest)),
                                    v: tuple(_bits(g.adj[v] & rest))},
                        internal_edge=g.has_edge(u, v),
                        rule="pair"))
                    present = rest
                    fired = True
                    break
        if not fired:
            break
    vertices = tuple(_bits(present))
    return CoreResult(graph=g.induced(vertices), vertices=vertices, trace=tuple(trace))


def core_fixed_point_check(g: Graph, kind: CoreKind) -> bool:
    """True iff no rule of the given kind fires on g."""
    present = (1 << g.n) - 1
    for v in range(g.n):
        if _single_rule_fires(g, present, v, kind):
            return False
    if kind.tag == "three_star":
        for u, v in combinations(range(g.n), 2):
            if _pair_rule_fires(g, present, u, v, kind):
                return False
    return True


def rebuild(result: CoreResult, n: int) -> Graph:
    """Replay the trace in reverse; returns the original n-vertex graph."""
    present = 0
    for v in result.vertices:
        present |= 1 << v
    rows = [0] * n
    cg = result.graph
    for i, u in enumerate(result.vertices):
        for j in _bits(cg.adj[i]):
            rows[u] |= 1 << result.vertices[j]
    for cluster in reversed(result.trace):
        for v in cluster.vertices:
            if present >> v & 1:
                raise ValueError(f"trace replays vertex {v} twice")
            present |= 1 << v
        for v in cluster.vertices:
            for w in cluster.attachment[v]:
                if not present >> w & 1:
                    raise ValueError(f"attachment {v}->{w} targets an absent vertex")
                rows[v] |= 1 << w
                rows[w] |= 1 << v
        if len(cluster.vertices) == 2 and cluster.internal_edge:
            u, v = cluster.vertices
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    if present != (1 << n) - 1:
        raise ValueError("trace does not account for all vertices")
    return Graph(n, rows)
