"""Finite simple connected graphs with fixed 0-based vertex labels.

Everything downstream (distance matrices, arithmetic progressions, coloring
searches) works on the immutable Graph defined here.  Vertices are the ints
0..n-1 and the labeling is part of the object: Cartesian products and grid
coordinate maps rely on it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import AwgraphError


class GraphError(AwgraphError, ValueError):
    """Invalid graph construction (non-simple, bad labels, wrong sizes)."""


class DisconnectedGraphError(GraphError):
    """The vertex set does not form a single connected component."""


class GraphFormatError(GraphError):
    """Malformed graph file text."""


class MalformedHeaderError(GraphFormatError):
    """First non-comment line is not '<n> <m>' with n >= 1, m >= 0."""


class MalformedEdgeError(GraphFormatError):
    """An edge line is not '<u> <v>' with u < v, or the edge count is off."""


class VertexRangeError(GraphFormatError):
    """An edge endpoint is negative or >= n."""


class DuplicateEdgeError(GraphFormatError):
    """The same unordered edge appears twice."""


class SelfLoopError(GraphFormatError):
    """An edge joins a vertex to itself."""


# ======================================================================
# Core types
# ======================================================================


@dataclass(frozen=True)
class Graph:
    """Simple connected graph on vertices 0..n-1 with sorted adjacency lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError(
                f"adjacency has {len(self.adjacency)} rows for n={self.n}"
            )
        for u, row in enumerate(self.adjacency):
            prev = -1
            for v in row:
                if not 0 <= v < self.n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                if v <= prev:
                    raise GraphError(f"adjacency row {u} not strictly sorted")
                prev = v
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u not in self.adjacency[v]:
                    raise GraphError(f"edge {u}-{v} missing its reverse")
        if self._component_size(0) != self.n:
            raise DisconnectedGraphError(
                "graph is disconnected (all graphs here must be connected)"
            )

    def _component_size(self, start: int) -> int:
        seen = bytearray(self.n)
        seen[start] = 1
        queue = deque([start])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    queue.append(v)
        return count

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(row) for row in self.adjacency) // 2

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return tuple(
            (u, v) for u in range(self.n) for v in self.adjacency[u] if u < v
        )

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build a Graph from an iterable of unordered endpoint pairs."""
        rows: list[set[int]] = [set() for _ in range(max(n, 0))]
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in rows[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            rows[u].add(v)
            rows[v].add(u)
        return Graph(n, tuple(tuple(sorted(row)) for row in rows))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path distances of a connected graph."""

    n: int
    dist: tuple[tuple[int, ...], ...]

    def d(self, u: int, v: int) -> int:
        return self.dist[u][v]


@dataclass(frozen=True)
class GridCoordinates:
    """1-based (row, column) coordinates for the product of two paths.

    Row i in 1..m and column j in 1..n map to vertex (i-1)*n + (j-1), the
    row-major order produced by cartesian_product(path(m), path(n)).
    """

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise GraphError(f"grid needs m, n >= 1, got {self.m}x{self.n}")

    def vertex(self, i: int, j: int) -> int:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise GraphError(f"({i}, {j}) outside {self.m}x{self.n} grid")
        return (i - 1) * self.n + (j - 1)

    def coords(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.m * self.n:
            raise GraphError(f"vertex {v} outside {self.m}x{self.n} grid")
        return v // self.n + 1, v % self.n + 1

    def row_vertices(self, i: int) -> tuple[int, ...]:
        return tuple(self.vertex(i, j) for j in range(1, self.n + 1))

    def column_vertices(self, j: int) -> tuple[int, ...]:
        return tuple(self.vertex(i, j) for i in range(1, self.m + 1))


# ======================================================================
# Builders
# ======================================================================


def build_path(n: int) -> Graph:
    """Path 0-1-...-(n-1); n >= 1."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0; n >= 3."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def build_complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def build_star(n: int) -> Graph:
    """Star on n >= 2 vertices: center 0, leaves 1..n-1."""
    if n < 2:
        raise GraphError(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: vertex (a, b) becomes a*h.n + b.

    (a, b) ~ (a', b') iff the pairs agree in one coordinate and are adjacent
    in the other.  Connectedness of both factors makes the product connected.
    """
    hn = h.n
    edges: list[tuple[int, int]] = []
    for a in range(g.n):
        base = a * hn
        for b in range(hn):
            for b2 in h.adjacency[b]:
                if b < b2:
                    edges.append((base + b, base + b2))
        for a2 in g.adjacency[a]:
            if a < a2:
                base2 = a2 * hn
                for b in range(hn):
                    edges.append((base + b, base2 + b))
    return Graph.from_edges(g.n * hn, edges)


def build_grid(m: int, n: int) -> tuple[Graph, GridCoordinates]:
    """Product of path(m) and path(n) plus its 1-based coordinate map."""
    return cartesian_product(build_path(m), build_path(n)), GridCoordinates(m, n)


def layer_vertices(g_n: int, h_n: int, h_index: int) -> tuple[int, ...]:
    """Vertices of the copy of the left factor at right-factor vertex h_index.

    In cartesian_product(G, H) the copy of G sitting over a fixed H-vertex j
    is {a*|H| + j : a in V(G)}.
    """
    if not 0 <= h_index < h_n:
        raise GraphError(f"layer index {h_index} out of range for |H|={h_n}")
    return tuple(a * h_n + h_index for a in range(g_n))


# ======================================================================
# File format
# ======================================================================


def parse_graph(text: str) -> Graph:
    """Parse the plain-text graph format.

    Line 1: "<n> <m>".  Then exactly m lines "<u> <v>" with 0 <= u < v < n.
    Lines starting with '#' and blank lines are ignored.  Duplicate edges,
    self-loops, out-of-range ids and disconnected graphs are rejected, each
    with its own error class.
    """
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise MalformedHeaderError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedHeaderError(f"header must be '<n> <m>', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedHeaderError(
            f"header must be two integers, got {lines[0]!r}"
        ) from None
    if n < 1 or m < 0:
        raise MalformedHeaderError(f"need n >= 1 and m >= 0, got n={n} m={m}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedEdgeError(f"expected {m} edge lines, found {len(body)}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedEdgeError(f"edge line must be '<u> <v>', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedEdgeError(
                f"edge line must be two integers, got {ln!r}"
            ) from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if u > v:
            raise MalformedEdgeError(f"edge ({u}, {v}) must satisfy u < v")
        if (u, v) in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except DisconnectedGraphError:
        raise DisconnectedGraphError(
            "graph file describes a disconnected graph"
        ) from None


def graph_to_text(g: Graph) -> str:
    """Inverse of parse_graph: canonical text with sorted edge lines."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# ======================================================================
# Distances and metric subgraphs
# ======================================================================


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every source.  Symmetric with zero diagonal by construction."""
    rows: list[tuple[int, ...]] = []
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = du + 1
                    queue.append(v)
        if min(dist) < 0:
            raise DisconnectedGraphError(f"vertex unreachable from {s}")
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph relabeled to 0..len(vertices)-1 in sorted id order.

    Raises DisconnectedGraphError when the induced graph is not connected.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("empty vertex subset")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise GraphError(f"subset {vs} not within 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for u in vs
        for v in g.adjacency[u]
        if u < v and v in index
    ]
    return Graph.from_edges(len(vs), edges)


def is_isometric_subgraph(g: Graph, vertices, dist: DistanceMatrix | None = None) -> bool:
    """True iff the induced subgraph is connected and preserves all distances.

    Internal shortest paths of the induced subgraph must equal the distances
    measured in g for every vertex pair of the subset.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("empty vertex subset")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise GraphError(f"subset {vs} not within 0..{g.n - 1}")
    if dist is None:
        dist = all_pairs_distances(g)
    index = {v: i for i, v in enumerate(vs)}
    adj: list[list[int]] = [[] for _ in vs]
    for u in vs:
        for v in g.adjacency[u]:
            if v in index:
                adj[index[u]].append(index[v])
    size = len(vs)
    for si, s in enumerate(vs):
        local = [-1] * size
        local[si] = 0
        queue = deque([si])
        while queue:
            u = queue.popleft()
            du = local[u]
            for v in adj[u]:
                if local[v] < 0:
                    local[v] = du + 1
                    queue.append(v)
        for ti in range(size):
            if local[ti] != dist.d(s, vs[ti]):
                return False  # unreachable (-1) or a detour: not isometric
    return True
