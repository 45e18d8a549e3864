"""Two-selectors on vertex pairs and their macro-uniformity modulus.

A two-selector picks one element from every 2-subset of the vertex set.
Its modulus is the least r such that pairs at Hausdorff distance <= 1 have
choices at distance <= r; a violating pair of pairs is a self-verifying
witness against a claimed modulus.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_core import PathMetric
from .hyperspace import hausdorff_distance, neighbor_pair_candidates, vpair


class NonInjectiveCoordinate(ValueError):
    pass


class InvalidSelector(ValueError):
    pass


# Extensional tables are only materialized up to this many pairs.
PAIR_TABLE_CAP = 200_000


@dataclass(frozen=True)
class Holds:
    pass


@dataclass(frozen=True)
class Witness:
    """Pair of pairs with d_H <= 1 whose images violate the claimed bound."""

    pair_a: tuple[int, int]
    pair_b: tuple[int, int]


@dataclass(frozen=True)
class Modulus:
    r: int
    witness: tuple[tuple[int, int], tuple[int, int]]


class TwoSelector:
    """Choice function on unordered vertex pairs.

    Stored intensionally (a coordinate whose minimum is chosen) or
    extensionally (a table with one choice per pair).  Coordinate form
    scales and enables the vectorized modulus path; tables are what random
    tournaments and search assignments produce.
    """

    __slots__ = ("coord", "table", "name")

    def __init__(self, coord=None, table=None, name: str = "selector"):
        if (coord is None) == (table is None):
            raise InvalidSelector("exactly one of coord/table required")
        self.coord = list(coord) if coord is not None else None
        self.table = table
        self.name = name
        if self.coord is not None and len(set(self.coord)) != len(self.coord):
            raise NonInjectiveCoordinate("coordinate values must be distinct")
        if table is not None:
            for (a, b), c in table.items():
                if c != a and c != b:
                    raise InvalidSelector(f"choice {c} outside pair {{{a}, {b}}}")

    def choose(self, a: int, b: int) -> int:
        if a == b:
            raise ValueError("selector is defined on 2-subsets only")
        if self.coord is not None:
            return a if self.coord[a] < self.coord[b] else b
        return self.table[(a, b) if a < b else (b, a)]

    def choose_pair(self, pair) -> int:
        return self.choose(pair[0], pair[1])

    def __repr__(self):
        kind = "coord" if self.coord is not None else f"table[{len(self.table)}]"
        return f"TwoSelector({self.name}, {kind})"


class PrecRelation:
    """Tournament induced by a selector: a strictly-before b iff f({a,b}) = a."""

    def __init__(self, selector: TwoSelector):
        self.selector = selector

    def prec(self, a: int, b: int) -> bool:
        return a != b and self.selector.choose(a, b) == a

    __call__ = prec


def min_selector(coord) -> TwoSelector:
    """Selector choosing the element with the smaller coordinate value."""
    return TwoSelector(coord=coord, name="min")


def order_to_selector(order) -> TwoSelector:
    """Selector choosing the order-minimum of each pair.

    ``order`` is anything with a ``rank`` sequence (vertex -> position) or a
    bare rank sequence.
    """
    rank = getattr(order, "rank", order)
    return TwoSelector(coord=rank, name="order-min")


def selector_from_table(table: dict, name: str = "table") -> TwoSelector:
    return TwoSelector(table=dict(table), name=name)


@dataclass(frozen=True)
class BornologousSelector:
    """Coordinate-minimum choice on arbitrary nonempty finite subsets."""

    coord: tuple

    def choose(self, vertices) -> int:
        vs = list(vertices)
        if not vs:
            raise ValueError("nonempty subset required")
        return min(vs, key=lambda v: self.coord[v])

    def restrict_to_pairs(self) -> TwoSelector:
        return TwoSelector(coord=list(self.coord), name="min")


def lift_bornologous(coord) -> BornologousSelector:
    coord = tuple(coord)
    if len(set(coord)) != len(coord):
        raise NonInjectiveCoordinate("coordinate values must be distinct")
    return BornologousSelector(coord)


def _dense_setup(m: PathMetric, f: TwoSelector):
    if f.coord is None:
        return None
    dist = m.dense_matrix()
    if dist is None:
        return None
    g = m.graph
    n = g.vertex_count
    if n < 2:
        return None
    width = max(g.degree(v) for v in range(n)) + 1
    nbr = np.empty((n, width), dtype=np.int64)
    for v in range(n):
        row = list(g.adjacency[v])
        row += [v] * (width - len(row))
        nbr[v] = row
    coord = np.asarray(f.coord, dtype=np.int64)
    ia, ib = np.triu_indices(n, 1)
    return dist, coord, nbr, ia, ib, width


def _max_jump_dense(setup) -> int:
    """Vectorized max of d(f(A), f(B)) over all d_H <= 1 pair neighborhoods."""
    dist, coord, nbr, ia, ib, width = setup
    fa = np.where(coord[ia] < coord[ib], ia, ib)
    best = 0
    for si in range(width):
        x = nbr[ia, si]
        cx = coord[x]
        for sj in range(width):
            y = nbr[ib, sj]
            fb = np.where(cx < coord[y], x, y)
            jump = dist[fa, fb]
            jump = np.where(x != y, jump, 0)
            step_max = int(jump.max()) if jump.size else 0
            if step_max > best:
                best = step_max
    return best


def _scan_pairs(m: PathMetric, f: TwoSelector):
    """Deterministic scan of (A, B, jump) over all neighbor pairs of pairs."""
    g = m.graph
    n = g.vertex_count
    for a in range(n):
        for b in range(a + 1, n):
            fa = f.choose(a, b)
            row = m.row(fa)
            for x in g.closed_neighborhood(a):
                for y in g.closed_neighborhood(b):
                    if x == y:
                        continue
                    fb = f.choose(x, y)
                    yield (a, b), vpair(x, y), row[fb]


def _first_attaining(m: PathMetric, f: TwoSelector, threshold: int):
    for pa, pb, jump in _scan_pairs(m, f):
        if jump >= threshold:
            return pa, pb
    return None


def modulus(m: PathMetric, f: TwoSelector) -> Modulus:
    """Exact minimal modulus, with a neighbor pair attaining it.

    Minimality: every d_H <= 1 neighbor pair has choice distance <= r and
    the attaining witness rules out r - 1 (or r = 0 and any neighbor pair
    serves as witness).
    """
    g = m.graph
    if g.vertex_count < 2:
        raise ValueError("modulus needs at least two vertices")
    setup = _dense_setup(m, f)
    if setup is not None:
        r = _max_jump_dense(setup)
    else:
        r = max(jump for _, _, jump in _scan_pairs(m, f))
    witness = _first_attaining(m, f, r)
    return Modulus(r, witness)


def verify_selector(m: PathMetric, f: TwoSelector, r: int):
    """Holds iff every d_H <= 1 neighbor pair has choice distance <= r.

    Otherwise returns the first violating pair in scan order; the witness
    re-verifies (d_H <= 1 and image distance > r) by construction.
    """
    setup = _dense_setup(m, f)
    if setup is not None and _max_jump_dense(setup) <= r:
        return Holds()
    hit = _first_attaining_over(m, f, r)
    if hit is None:
        return Holds()
    return Witness(*hit)


def _first_attaining_over(m: PathMetric, f: TwoSelector, r: int):
    for pa, pb, jump in _scan_pairs(m, f):
        if jump > r:
            return pa, pb
    return None


def witness_is_violation(m: PathMetric, f: TwoSelector, r: int, pair_a, pair_b) -> bool:
    """Re-verify a witness: d_H(A, B) <= 1 and d(f(A), f(B)) > r."""
    pa = vpair(*pair_a)
    pb = vpair(*pair_b)
    if hausdorff_distance(m, pa, pb) > 1:
        return False
    return m.distance(f.choose_pair(pa), f.choose_pair(pb)) > r


def materialize_table(m: PathMetric, f: TwoSelector, cap: int = PAIR_TABLE_CAP) -> dict:
    """Extensional form of a selector, for graphs under the pair cap."""
    n = m.graph.vertex_count
    pairs = n * (n - 1) // 2
    if pairs > cap:
        raise InvalidSelector(f"{pairs} pairs exceed table cap {cap}")
    return {(a, b): f.choose(a, b) for a in range(n) for b in range(a + 1, n)}


__all__ = [
    "BornologousSelector",
    "Holds",
    "InvalidSelector",
    "Modulus",
    "NonInjectiveCoordinate",
    "PrecRelation",
    "TwoSelector",
    "Witness",
    "lift_bornologous",
    "materialize_table",
    "min_selector",
    "modulus",
    "order_to_selector",
    "selector_from_table",
    "verify_selector",
    "witness_is_violation",
]
