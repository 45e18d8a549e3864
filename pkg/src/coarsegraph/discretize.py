"""Sampled geodesic spaces, greedy separation nets, and the net graph.

Distances are exact rationals.  A net is a maximal subset with pairwise
distance strictly above 2 (unit balls around distinct net points are
disjoint); net points u, v are joined when some sample point lies within 2
of both, which in a geodesic space is the unit-ball intersection rule at
the sampling resolution.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph_core import DisconnectedGraph, Graph, PathMetric, build_graph


class StepTooCoarse(ValueError):
    pass


class DisconnectedNetGraph(ValueError):
    def __init__(self, components):
        self.components = components
        super().__init__(f"net graph is disconnected: {len(components)} components")


@dataclass
class FiniteMetricSpace:
    """Finite point set with an exact rational metric and sampling density delta."""

    points: list
    dist_matrix: list[list[Fraction]]
    delta: Fraction

    @property
    def n(self) -> int:
        return len(self.points)

    def dist(self, i: int, j: int) -> Fraction:
        return self.dist_matrix[i][j]

    def check_metric_axioms(self) -> None:
        n = self.n
        if n > 512:
            raise ValueError("exhaustive axiom check capped at 512 points")
        d = self.dist_matrix
        for i in range(n):
            if d[i][i] != 0:
                raise ValueError(f"d({i},{i}) != 0")
            for j in range(n):
                if d[i][j] != d[j][i]:
                    raise ValueError(f"asymmetric at ({i},{j})")
                if i != j and d[i][j] <= 0:
                    raise ValueError(f"non-positive distance at ({i},{j})")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if d[i][k] > d[i][j] + d[j][k]:
                        raise ValueError(f"triangle fails at ({i},{j},{k})")

    def is_chain_connected(self) -> bool:
        """Every pair joined by a chain with steps <= delta."""
        n = self.n
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and self.dist_matrix[i][j] <= self.delta:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n


def _check_step(step: Fraction) -> Fraction:
    step = Fraction(step)
    if step > Fraction(1, 2):
        raise StepTooCoarse(f"step {step} > 1/2")
    if step <= 0:
        raise ValueError("step must be positive")
    return step


def _count(total, step: Fraction) -> int:
    ratio = Fraction(total) / step
    if ratio.denominator != 1:
        raise ValueError(f"step {step} does not divide {total}")
    return int(ratio)


def sample_space(shape, step) -> FiniteMetricSpace:
    """Sample a segment, circle or rectangle at the given step.

    ``shape`` is ("segment", length), ("circle", circumference) or
    ("rectangle", width, height).  Segments and circles carry their
    intrinsic arc metric; rectangles are sampled on the grid with the L1
    intrinsic metric.  Requires step <= 1/2.
    """
    step = _check_step(step)
    kind = shape[0]
    if kind == "segment":
        count = _count(shape[1], step) + 1
        pts = [step * k for k in range(count)]
        mat = [[abs(x - y) for y in pts] for x in pts]
        return FiniteMetricSpace(pts, mat, step)
    if kind == "circle":
        circumference = Fraction(shape[1])
        count = _count(circumference, step)
        pts = [step * k for k in range(count)]
        mat = [
            [min(abs(x - y), circumference - abs(x - y)) for y in pts]
            for x in pts
        ]
        return FiniteMetricSpace(pts, mat, step)
    if kind == "rectangle":
        w = _count(shape[1], step) + 1
        h = _count(shape[2], step) + 1
        pts = [(step * i, step * j) for i in range(w) for j in range(h)]
        mat = [
            [abs(x1 - x2) + abs(y1 - y2) for (x2, y2) in pts]
            for (x1, y1) in pts
        ]
        return FiniteMetricSpace(pts, mat, step)
    raise ValueError(f"unknown shape {kind!r}")


@dataclass(frozen=True)
class Net:
    indices: tuple[int, ...]


def greedy_net(space: FiniteMetricSpace) -> Net:
    """Scan points in index order; admit when all admitted are beyond 2."""
    chosen: list[int] = []
    for i in range(space.n):
        if all(space.dist(i, j) > 2 for j in chosen):
            chosen.append(i)
    return Net(tuple(chosen))


def net_is_valid(space: FiniteMetricSpace, net: Net) -> bool:
    pts = net.indices
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            if space.dist(pts[a], pts[b]) <= 2:
                return False
    return all(
        min(space.dist(i, u) for u in pts) <= 2 for i in range(space.n)
    )


def edge_witness(space: FiniteMetricSpace, u: int, v: int):
    """Lowest-index sample within 2 of both points, or None."""
    for x in range(space.n):
        if space.dist(x, u) <= 2 and space.dist(x, v) <= 2:
            return x
    return None


def net_graph(space: FiniteMetricSpace, net: Net) -> Graph:
    """Graph on net points under the shared-witness rule.

    Net point i of ``net.indices`` becomes graph vertex i.  Raises
    DisconnectedNetGraph when the witness rule does not connect the net.
    """
    pts = net.indices
    edges = []
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            if edge_witness(space, pts[a], pts[b]) is not None:
                edges.append((a, b))
    try:
        return build_graph(edges, vertex_count=len(pts))
    except DisconnectedGraph as exc:
        raise DisconnectedNetGraph(exc.components) from exc


@dataclass(frozen=True)
class NetCertificate:
    largeness: Fraction
    max_ambient_over_4graph: Fraction
    max_4graph_over_ambient: Fraction


def certify_net(space: FiniteMetricSpace, net: Net, graph: Graph) -> NetCertificate:
    """Covering radius of the net and exact ambient/graph comparability."""
    pts = net.indices
    largeness = max(
        min(space.dist(i, u) for u in pts) for i in range(space.n)
    )
    metric = PathMetric(graph)
    up = Fraction(0)
    down = Fraction(0)
    for a in range(len(pts)):
        row = metric.row(a)
        for b in range(a + 1, len(pts)):
            ambient = space.dist(pts[a], pts[b])
            graph_d = row[b]
            up = max(up, Fraction(ambient, 4 * graph_d))
            down = max(down, Fraction(4 * graph_d, 1) / ambient)
    return NetCertificate(largeness, up, down)


def write_sample_file(space: FiniteMetricSpace) -> str:
    lines = [f"points {space.n}"]
    for i in range(space.n):
        for j in range(i + 1, space.n):
            d = space.dist(i, j)
            lines.append(f"{i} {j} {d.numerator}/{d.denominator}")
    return "\n".join(lines) + "\n"


def parse_sample_file(text: str) -> FiniteMetricSpace:
    """Parse the textual sample format; delta is the max nearest-neighbor gap."""
    lines = text.splitlines()
    header = None
    entries = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if header is None:
            parts = stripped.split()
            if len(parts) != 2 or parts[0] != "points":
                raise ValueError(f"line {lineno}, column 1: expected 'points N'")
            header = int(parts[1])
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}, column 1: expected 'i j num/den'")
        try:
            i, j = int(parts[0]), int(parts[1])
            d = Fraction(parts[2])
        except ValueError as exc:
            col = raw.index(parts[-1]) + 1
            raise ValueError(f"line {lineno}, column {col}: {exc}") from exc
        entries.append((i, j, d))
    if header is None:
        raise ValueError("line 1, column 1: missing 'points N' header")
    n = header
    if len(entries) != n * (n - 1) // 2:
        raise ValueError(
            f"expected {n * (n - 1) // 2} distance entries for {n} points, "
            f"got {len(entries)}"
        )
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i, j, d in entries:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ValueError(f"bad point indices in entry ({i}, {j})")
        mat[i][j] = d
        mat[j][i] = d
    space = FiniteMetricSpace(list(range(n)), mat, Fraction(0))
    if n > 1:
        delta = max(
            min(mat[i][j] for j in range(n) if j != i) for i in range(n)
        )
        space.delta = delta
    return space
