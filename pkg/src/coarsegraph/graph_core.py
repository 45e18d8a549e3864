"""Finite connected graphs, their shortest-path metric, balls and geodesics.

Vertices are dense 0-based integer ids.  All distances are exact
nonnegative integers computed by breadth-first search; nothing here is
approximate.  External labels (grid coordinates, arc positions, ...) are the
caller's business.
"""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass

import numpy as np


class GraphError(ValueError):
    pass


class SelfLoop(GraphError):
    """An edge (v, v) was supplied."""


class DisconnectedGraph(GraphError):
    """The edge list does not describe a connected graph."""

    def __init__(self, components):
        self.components = [sorted(c) for c in components]
        preview = ", ".join(str(c[:8]) for c in self.components[:4])
        super().__init__(
            f"graph is disconnected: {len(self.components)} components ({preview}...)"
        )


class Graph:
    """Simple undirected connected graph with sorted adjacency lists."""

    __slots__ = ("vertex_count", "adjacency", "duplicate_edges")

    def __init__(self, vertex_count: int, adjacency, duplicate_edges: int = 0):
        self.vertex_count = vertex_count
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self.duplicate_edges = duplicate_edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return tuple(sorted((v, *self.adjacency[v])))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_list(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    def edge_count(self) -> int:
        return len(self.edge_list())

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count()})"


def _components(n: int, adj) -> list[list[int]]:
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(comp)
    return out


def build_graph(edge_list, vertex_count: int | None = None) -> Graph:
    """Build a Graph from an iterable of unordered vertex-id pairs.

    Self-loops are rejected, duplicate edges are dropped (counted on the
    returned graph), and disconnected inputs raise DisconnectedGraph naming
    the components.  ``vertex_count`` defaults to max id + 1 (or 1 for an
    empty edge list, giving the one-vertex graph).
    """
    edges = set()
    dupes = 0
    max_id = -1
    for u, v in edge_list:
        u, v = int(u), int(v)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if u < 0 or v < 0:
            raise GraphError(f"negative vertex id in edge ({u}, {v})")
        key = (u, v) if u < v else (v, u)
        if key in edges:
            dupes += 1
        else:
            edges.add(key)
        max_id = max(max_id, u, v)
    n = vertex_count if vertex_count is not None else max(max_id + 1, 1)
    if max_id >= n:
        raise GraphError(f"vertex id {max_id} out of range 0..{n - 1}")
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    comps = _components(n, adj)
    if len(comps) > 1:
        raise DisconnectedGraph(comps)
    if dupes:
        warnings.warn(f"ignored {dupes} duplicate edge(s)", stacklevel=2)
    return Graph(n, adj, duplicate_edges=dupes)


class PathMetric:
    """Shortest-path distance oracle for a Graph.

    Distance rows are materialized lazily, one BFS per queried source, and
    memoized.  A dense all-pairs matrix is built on demand for graphs with
    at most ``dense_cap`` vertices; larger graphs stay row-based.
    """

    def __init__(self, graph: Graph, dense_cap: int = 4096):
        self.graph = graph
        self.dense_cap = dense_cap
        self._rows: dict[int, list[int]] = {}
        self._dense = None
        self._diameter = None

    def row(self, u: int) -> list[int]:
        cached = self._rows.get(u)
        if cached is not None:
            return cached
        n = self.graph.vertex_count
        adj = self.graph.adjacency
        dist = [-1] * n
        dist[u] = 0
        queue = deque([u])
        while queue:
            x = queue.popleft()
            dx = dist[x] + 1
            for w in adj[x]:
                if dist[w] < 0:
                    dist[w] = dx
                    queue.append(w)
        self._rows[u] = dist
        return dist

    def distance(self, u: int, v: int) -> int:
        return self.row(u)[v]

    def ball(self, v: int, radius: int) -> set[int]:
        row = self.row(v)
        return {u for u, d in enumerate(row) if d <= radius}

    def eccentricity(self, v: int) -> int:
        return max(self.row(v))

    def diameter(self) -> int:
        if self._diameter is None:
            self._diameter = max(self.eccentricity(v) for v in range(self.graph.vertex_count))
        return self._diameter

    def dense_matrix(self):
        """All-pairs distance matrix as int32 ndarray, or None above the cap."""
        if self.graph.vertex_count > self.dense_cap:
            return None
        if self._dense is None:
            n = self.graph.vertex_count
            mat = np.empty((n, n), dtype=np.int32)
            for v in range(n):
                mat[v] = self.row(v)
            self._dense = mat
        return self._dense

    def distances_from_set(self, sources) -> list[int]:
        """Multi-source BFS: distance from each vertex to the nearest source."""
        n = self.graph.vertex_count
        adj = self.graph.adjacency
        dist = [-1] * n
        queue = deque()
        for s in sorted(set(sources)):
            dist[s] = 0
            queue.append(s)
        if not queue:
            raise ValueError("empty source set")
        while queue:
            x = queue.popleft()
            dx = dist[x] + 1
            for w in adj[x]:
                if dist[w] < 0:
                    dist[w] = dx
                    queue.append(w)
        return dist


def distance(m: PathMetric, u: int, v: int) -> int:
    """Length of a shortest u-v path."""
    return m.distance(u, v)


def ball(m: PathMetric, v: int, radius: int) -> set[int]:
    """All vertices at distance <= radius from v."""
    return m.ball(v, radius)


@dataclass(frozen=True)
class GeodesicPath:
    """Vertex sequence v0..vm with consecutive edges and d(v0, vm) = m."""

    vertices: tuple[int, ...]

    def length(self) -> int:
        return len(self.vertices) - 1

    def validate(self, m: PathMetric) -> None:
        vs = self.vertices
        for a, b in zip(vs, vs[1:]):
            if b not in m.graph.adjacency[a]:
                raise ValueError(f"non-adjacent step ({a}, {b})")
        if m.distance(vs[0], vs[-1]) != len(vs) - 1:
            raise ValueError("sequence is not distance-realizing")


def geodesic_between(m: PathMetric, u: int, v: int) -> GeodesicPath:
    """Deterministic geodesic from u to v.

    The path is reconstructed backward from v, always stepping to the
    smallest-id neighbor one BFS layer closer to u.
    """
    row = m.row(u)
    if row[v] < 0:
        raise GraphError(f"no path between {u} and {v}")
    path = [v]
    cur = v
    while cur != u:
        target = row[cur] - 1
        for w in m.graph.adjacency[cur]:  # ascending ids
            if row[w] == target:
                cur = w
                break
        path.append(cur)
    path.reverse()
    return GeodesicPath(tuple(path))


@dataclass(frozen=True)
class MetricEntourage:
    """Radius-indexed entourage {(x, y): d(x, y) <= radius}."""

    radius: int

    def ball(self, m: PathMetric, x: int) -> set[int]:
        return m.ball(x, self.radius)

    def contains(self, m: PathMetric, x: int, y: int) -> bool:
        return m.distance(x, y) <= self.radius


def entourage_algebra(r: int, s: int) -> int:
    """Radius of the composition of the radius-r and radius-s entourages.

    The composite relation {(x,y): exists z, d(x,z)<=r, d(z,y)<=s} is
    contained in the radius r+s entourage; r+s is returned as the composite
    radius.  Radius 0 (the diagonal) is neutral.
    """
    if r < 0 or s < 0:
        raise ValueError("entourage radii are nonnegative")
    return r + s
