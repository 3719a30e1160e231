"""Simple undirected graphs, named families and structural predicates.

Vertices are the integers 0..n-1.  Graphs are immutable; every operation in
the package returns a new Graph, which makes results safe to share and to
cache by value.

Vertex labelings of the generators are fixed so that downstream
constructions are reproducible:

* path/cycle: vertices in walk order.
* complete: all pairs.
* star(n): center 0, leaves 1..n-1.
* complete_bipartite(a, b): first part 0..a-1, second part a..a+b-1.
* pineapple(m, n): clique 0..m-1 with apex 0, pendant vertices m..m+n-1
  attached to the apex.
* double_star(m, n): adjacent centers 0 and 1 carrying m and n pendant
  leaves; leaves of 0 come first.
* double_broom(q, n, m): path 0..q-1, n pendants at vertex 0, then m
  pendants at vertex q-1.
* petersen: outer cycle 0..4, spokes i-(i+5), inner 5-cycle with step 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class GraphParameterError(ValueError):
    """Invalid construction parameter (bad size, vertex out of range...)."""


class EdgeListError(ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_degrees", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphParameterError("vertex count must be nonnegative")
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphParameterError(f"edge ({u},{v}) out of range for n={n}")
            es.add(_normalize_edge(u, v))
        self.n = n
        self.edges = tuple(sorted(es))
        degs = [0] * n
        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
            adj[u].add(v)
            adj[v].add(u)
        self._degrees = tuple(degs)
        self._adj = tuple(frozenset(s) for s in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def describe(self) -> str:
        return f"n={self.n};m={self.m}"

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "complete_bipartite": 2,
    "pineapple": 2,
    "double_star": 2,
    "double_broom": 3,
    "petersen": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    """Tagged family choice, e.g. FamilySpec("complete", (5,))."""

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _FAMILY_ARITY:
            raise GraphParameterError(f"unknown family {self.kind!r}")
        if len(self.params) != _FAMILY_ARITY[self.kind]:
            raise GraphParameterError(
                f"family {self.kind} takes {_FAMILY_ARITY[self.kind]} parameters")
        if any(p < 1 for p in self.params):
            raise GraphParameterError("family size parameters must be >= 1")
        if self.kind == "cycle" and self.params[0] < 3:
            raise GraphParameterError("cycle needs at least 3 vertices")
        if self.kind == "double_broom" and self.params[0] < 2:
            raise GraphParameterError("double broom needs a path of length >= 2")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse CLI syntax like "complete:5" or "double_broom:3,2,4"."""
        name, _, rest = text.partition(":")
        name = name.strip().lower()
        params = tuple(int(p) for p in rest.split(",")) if rest else ()
        return cls(name, params)

    def __str__(self):
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


def family_generate(spec: FamilySpec) -> Graph:
    """Build the named family graph with its documented labeling."""
    kind, p = spec.kind, spec.params
    if kind == "path":
        n = p[0]
        return Graph(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        n = p[0]
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        n = p[0]
        return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
    if kind == "star":
        n = p[0]
        return Graph(n, ((0, i) for i in range(1, n)))
    if kind == "complete_bipartite":
        a, b = p
        return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))
    if kind == "pineapple":
        m, n = p
        clique = [(i, j) for i in range(m) for j in range(i + 1, m)]
        pendants = [(0, m + k) for k in range(n)]
        return Graph(m + n, clique + pendants)
    if kind == "double_star":
        m, n = p
        edges = [(0, 1)]
        edges += [(0, 2 + k) for k in range(m)]
        edges += [(1, 2 + m + k) for k in range(n)]
        return Graph(m + n + 2, edges)
    if kind == "double_broom":
        q, n, m = p
        edges = [(i, i + 1) for i in range(q - 1)]
        edges += [(0, q + k) for k in range(n)]
        edges += [(q - 1, q + n + k) for k in range(m)]
        return Graph(q + n + m, edges)
    if kind == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph(10, edges)
    raise GraphParameterError(f"unknown family {kind!r}")


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def degree_profile(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """(min degree, max degree, per-vertex degree sequence)."""
    if g.n == 0:
        return (0, 0, ())
    return (min(g.degrees), max(g.degrees), g.degrees)


def is_regular(g: Graph) -> int | None:
    """Common degree r when all degrees agree, else None."""
    if g.n == 0:
        return None
    r = g.degrees[0]
    return r if all(d == r for d in g.degrees) else None


def _two_color(g: Graph) -> list[int] | None:
    """BFS 2-coloring from vertex 0 (graph assumed connected); None if odd cycle."""
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for w in g.neighbors(v):
            if color[w] == -1:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                return None
    return color


def is_semiregular_bipartite(g: Graph) -> tuple[int, int, int, int] | None:
    """Parameters (n1, n2, r1, r2) with n1 >= n2 and n1*r1 = n2*r2, or None.

    Requires a connected bipartite graph whose two parts each have constant
    degree.  On equal part sizes, part 1 is the part containing vertex 0.
    """
    if g.n < 2 or g.m == 0 or not g.is_connected():
        return None
    color = _two_color(g)
    if color is None:
        return None
    part0 = [v for v in range(g.n) if color[v] == 0]
    part1 = [v for v in range(g.n) if color[v] == 1]
    if not part0 or not part1:
        return None
    d0 = {g.degree(v) for v in part0}
    d1 = {g.degree(v) for v in part1}
    if len(d0) != 1 or len(d1) != 1:
        return None
    n0, n1 = len(part0), len(part1)
    r0, r1 = d0.pop(), d1.pop()
    if n1 > n0:
        (n0, r0), (n1, r1) = (n1, r1), (n0, r0)
    assert n0 * r0 == n1 * r1 == g.m
    return (n0, n1, r0, r1)


# ---------------------------------------------------------------------------
# incidence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 vertex-by-edge matrix; columns follow the canonical edge order."""

    n: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.rows[i][j] for i in range(self.n))


def incidence_matrix(g: Graph) -> IncidenceMatrix:
    rows = [[0] * g.m for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        rows[u][j] = 1
        rows[v][j] = 1
    return IncidenceMatrix(g.n, g.m, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse "n m" header plus m lines "u v" (0 <= u < v < n)."""
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx >= len(lines):
        raise EdgeListError("missing header", 1)
    header = lines[idx].split()
    if len(header) != 2:
        raise EdgeListError("header must be 'n m'", idx + 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListError("header must contain two integers", idx + 1) from None
    if n < 0 or m < 0:
        raise EdgeListError("negative counts in header", idx + 1)
    edges = []
    lineno = idx + 1
    for raw in lines[idx + 1:]:
        lineno += 1
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < v < n):
            raise EdgeListError(f"edge ({u},{v}) violates 0 <= u < v < n", lineno)
        if (u, v) in edges:
            raise EdgeListError(f"duplicate edge ({u},{v})", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise EdgeListError(f"expected {m} edges, found {len(edges)}", lineno + 1)
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines)
