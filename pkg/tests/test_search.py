from __future__ import annotations

import itertools

import pytest

from coarsegraph import Holds, PathMetric, verify_selector
from coarsegraph.search import (
    BudgetExceeded,
    Feasible,
    Infeasible,
    TooLarge,
    exhaustive_min_modulus,
    min_modulus_search,
    minimal_modulus,
)
from coarsegraph.selector import modulus, selector_from_table
from coarsegraph.generators import grid_graph, path_graph, tripod_graph
from coarsegraph.graph_core import build_graph


def _naive_exhaustive(g):
    """Reference oracle: literally enumerate all tournaments."""
    m = PathMetric(g)
    n = g.vertex_count
    pairs = list(itertools.combinations(range(n), 2))
    best = None
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        table = {p: p[bit] for p, bit in zip(pairs, bits)}
        r = modulus(m, selector_from_table(table)).r
        best = r if best is None else min(best, r)
    return best


def test_exhaustive_matches_naive_on_tiny_graphs():
    star = build_graph([(0, 1), (0, 2), (0, 3)])
    for g in (path_graph(2), path_graph(3), path_graph(4), star):
        assert exhaustive_min_modulus(g) == _naive_exhaustive(g)


def test_p4_minimal_modulus():
    g = path_graph(4)
    assert exhaustive_min_modulus(g) == 1
    outcomes = min_modulus_search(g, 2)
    assert [type(o) for o in outcomes] == [Infeasible, Feasible]
    assert outcomes[-1].r == 1


def test_p2_minimal_modulus():
    g = path_graph(2)
    assert exhaustive_min_modulus(g) == 0
    assert minimal_modulus(g) == 0


def test_star_agreement():
    g = build_graph([(0, 1), (0, 2), (0, 3)])
    assert minimal_modulus(g) == exhaustive_min_modulus(g)


def test_feasible_selector_reverifies():
    g = grid_graph(2, 3)
    outcomes = min_modulus_search(g, 4)
    last = outcomes[-1]
    assert isinstance(last, Feasible)
    m = PathMetric(g)
    assert isinstance(verify_selector(m, last.selector, last.r), Holds)


def test_tripod_stable_under_reordering():
    # too many pairs for the exhaustive oracle; compare against a rerun on a
    # relabeled copy of the graph
    g = tripod_graph(3, 3, 3)
    r = minimal_modulus(g)
    n = g.vertex_count
    relabel = {v: (v * 7) % n for v in range(n)}
    assert sorted(relabel.values()) == list(range(n))
    g2 = build_graph(
        [(relabel[u], relabel[v]) for u, v in g.edge_list()], vertex_count=n
    )
    assert minimal_modulus(g2) == r


def test_exhaustive_cap():
    with pytest.raises(TooLarge):
        exhaustive_min_modulus(path_graph(10))


def test_budget_exceeded():
    g = grid_graph(3, 3)
    with pytest.raises(BudgetExceeded) as exc:
        min_modulus_search(g, 0, node_budget=0)
    assert exc.value.nodes == 1
