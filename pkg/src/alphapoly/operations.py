"""Graph transformations: union, coalescence, line graph, complement,
subdivision, the edge-vertex variants R/Q, the total graph and pendant
attachment.

Output labelings are deterministic: original vertices keep their
identifiers and new vertices are appended in the canonical edge order, so
the closed-form and direct computations compare without isomorphism tests.
The one exception is coalescence, whose merged vertex becomes vertex 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphParameterError


@dataclass(frozen=True)
class CoalescenceSpec:
    """Identify vertex u of g with vertex v of h."""

    g: Graph
    h: Graph
    u: int
    v: int

    def __post_init__(self):
        if not (0 <= self.u < self.g.n):
            raise GraphParameterError(f"vertex {self.u} not in first graph")
        if not (0 <= self.v < self.h.n):
            raise GraphParameterError(f"vertex {self.v} not in second graph")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g plus a copy of h with vertices shifted by g.n."""
    shift = g.n
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    return Graph(g.n + h.n, edges)


def coalesce(spec: CoalescenceSpec) -> Graph:
    """Merge u of g with v of h; the merged vertex gets identifier 0."""
    g, h, u, v = spec.g, spec.h, spec.u, spec.v

    def map_g(x: int) -> int:
        if x == u:
            return 0
        return x + 1 if x < u else x

    def map_h(x: int) -> int:
        if x == v:
            return 0
        return g.n + x if x < v else g.n + x - 1

    edges = [(map_g(a), map_g(b)) for a, b in g.edges]
    edges += [(map_h(a), map_h(b)) for a, b in h.edges]
    return Graph(g.n + h.n - 1, edges)


def line_graph(g: Graph) -> Graph:
    """Vertex j is edge j of g; adjacency is sharing an endpoint."""
    if g.m == 0:
        raise GraphParameterError("line graph needs at least one edge")
    edges = []
    for i in range(g.m):
        a, b = g.edges[i]
        for j in range(i + 1, g.m):
            c, d = g.edges[j]
            if a in (c, d) or b in (c, d):
                edges.append((i, j))
    return Graph(g.m, edges)


def complement(g: Graph) -> Graph:
    present = set(g.edges)
    edges = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)
             if (i, j) not in present]
    return Graph(g.n, edges)


def subdivision(g: Graph) -> Graph:
    """One new vertex n+j inserted into edge j."""
    edges = []
    for j, (u, v) in enumerate(g.edges):
        w = g.n + j
        edges.append((u, w))
        edges.append((v, w))
    return Graph(g.n + g.m, edges)


def r_graph(g: Graph) -> Graph:
    """g plus, per edge j, a new vertex n+j adjacent to both endpoints."""
    edges = list(g.edges)
    for j, (u, v) in enumerate(g.edges):
        w = g.n + j
        edges.append((u, w))
        edges.append((v, w))
    return Graph(g.n + g.m, edges)


def q_graph(g: Graph) -> Graph:
    """Subdivision plus edges between new vertices on adjacent edges."""
    sub = subdivision(g)
    edges = list(sub.edges)
    for i in range(g.m):
        a, b = g.edges[i]
        for j in range(i + 1, g.m):
            c, d = g.edges[j]
            if a in (c, d) or b in (c, d):
                edges.append((g.n + i, g.n + j))
    return Graph(g.n + g.m, edges)


def total_graph(g: Graph) -> Graph:
    """Vertices V+E; adjacency or incidence in g makes an edge."""
    edges = list(r_graph(g).edges)
    for i in range(g.m):
        a, b = g.edges[i]
        for j in range(i + 1, g.m):
            c, d = g.edges[j]
            if a in (c, d) or b in (c, d):
                edges.append((g.n + i, g.n + j))
    return Graph(g.n + g.m, edges)


def attach_pendants(g: Graph, targets) -> Graph:
    """One new leaf per target vertex; leaf for targets[i] is vertex n+i."""
    targets = list(targets)
    if len(set(targets)) != len(targets):
        raise GraphParameterError("pendant targets must be distinct")
    for t in targets:
        if not (0 <= t < g.n):
            raise GraphParameterError(f"pendant target {t} out of range")
    edges = list(g.edges)
    edges += [(t, g.n + i) for i, t in enumerate(targets)]
    return Graph(g.n + len(targets), edges)


def add_pendants_at(g: Graph, v: int, s: int) -> Graph:
    """s new leaves n..n+s-1, all attached to the single vertex v."""
    if not (0 <= v < g.n):
        raise GraphParameterError(f"vertex {v} out of range")
    if s < 0:
        raise GraphParameterError("pendant count must be nonnegative")
    edges = list(g.edges) + [(v, g.n + i) for i in range(s)]
    return Graph(g.n + s, edges)
