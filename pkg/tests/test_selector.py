from __future__ import annotations

import itertools
import random

import pytest

from coarsegraph import (
    Holds,
    PathMetric,
    PrecRelation,
    Witness,
    extract_line,
    hausdorff_distance,
    lift_bornologous,
    min_selector,
    modulus,
    order_to_selector,
    verify_selector,
    witness_is_violation,
)
from coarsegraph.order_compat import LinearOrder
from coarsegraph.selector import (
    NonInjectiveCoordinate,
    _scan_pairs,
    materialize_table,
    selector_from_table,
)
from coarsegraph.generators import grid_graph, path_graph, tripod_graph

from conftest import random_tournament


def test_min_selector_is_min():
    f = min_selector(list(range(10)))
    assert f.choose(3, 7) == 3
    assert f.choose(7, 3) == 3


def test_min_selector_reversed_coord():
    f = min_selector([0, -1, -2, -3])
    assert f.choose(0, 3) == 3


def test_min_selector_rejects_collisions():
    with pytest.raises(NonInjectiveCoordinate):
        min_selector([0, 1, 1, 2])


def test_modulus_min_on_p10():
    m = PathMetric(path_graph(10))
    res = modulus(m, min_selector(list(range(10))))
    assert res.r == 1
    assert witness_is_violation(m, min_selector(list(range(10))), 0, *res.witness)


def test_modulus_p2_any_selector():
    m = PathMetric(path_graph(2))
    for table in ({(0, 1): 0}, {(0, 1): 1}):
        assert modulus(m, selector_from_table(table)).r == 0


def test_modulus_lexmin_grid4():
    g = grid_graph(4, 4)
    m = PathMetric(g)
    f = min_selector(list(range(16)))
    res = modulus(m, f)
    assert res.r == 4
    # declared witness family: A = {(0,3),(1,0)}, B = {(1,3),(1,0)} as ids
    A, B = (3, 4), (4, 7)
    assert hausdorff_distance(m, A, B) == 1
    assert m.distance(f.choose_pair(A), f.choose_pair(B)) == 4


def test_modulus_minimality():
    for g in (path_graph(10), grid_graph(3, 3), tripod_graph(2, 2, 2)):
        m = PathMetric(g)
        f = min_selector(list(range(g.vertex_count)))
        r = modulus(m, f).r
        assert isinstance(verify_selector(m, f, r), Holds)
        if r > 0:
            assert isinstance(verify_selector(m, f, r - 1), Witness)


def test_dense_and_generic_modulus_agree():
    rng = random.Random(99)
    for g in (path_graph(9), grid_graph(3, 3), tripod_graph(2, 3, 2)):
        m = PathMetric(g)
        coord = list(range(g.vertex_count))
        rng.shuffle(coord)
        f = min_selector(coord)
        generic = max(jump for _, _, jump in _scan_pairs(m, f))
        assert modulus(m, f).r == generic
        # extensional copy of the same selector goes through the generic path
        g_table = selector_from_table(materialize_table(m, f))
        assert modulus(m, g_table).r == generic


def test_verify_examples():
    m = PathMetric(path_graph(10))
    f = min_selector(list(range(10)))
    assert isinstance(verify_selector(m, f, 1), Holds)
    w = verify_selector(m, f, 0)
    assert isinstance(w, Witness)
    assert witness_is_violation(m, f, 0, w.pair_a, w.pair_b)
    grid = PathMetric(grid_graph(4, 4))
    flex = min_selector(list(range(16)))
    w = verify_selector(grid, flex, 3)
    assert isinstance(w, Witness)
    assert witness_is_violation(grid, flex, 3, w.pair_a, w.pair_b)


def test_prec_is_tournament():
    rng = random.Random(5)
    g = tripod_graph(2, 2, 3)
    f = random_tournament(g, rng)
    prec = PrecRelation(f)
    for a, b in itertools.combinations(range(g.vertex_count), 2):
        assert prec(a, b) != prec(b, a)


def test_order_to_selector_matches_min():
    m = PathMetric(path_graph(10))
    natural = order_to_selector(LinearOrder.natural(10))
    plain = min_selector(list(range(10)))
    for a, b in itertools.combinations(range(10), 2):
        assert natural.choose(a, b) == plain.choose(a, b)
    assert modulus(m, natural).r == 1


def test_order_to_selector_p2_and_grid():
    m = PathMetric(path_graph(2))
    assert modulus(m, order_to_selector(LinearOrder.natural(2))).r == 0
    grid = PathMetric(grid_graph(4, 4))
    assert modulus(grid, order_to_selector(LinearOrder.natural(16))).r >= 4


def test_lift_bornologous_basics():
    lifted = lift_bornologous(list(range(10)))
    assert lifted.choose({2, 5, 7}) == 2
    m = PathMetric(path_graph(6))
    plain = min_selector(list(range(6)))
    restricted = lifted.restrict_to_pairs()
    for a, b in itertools.combinations(range(6), 2):
        assert restricted.choose(a, b) == plain.choose(a, b)


def test_lift_bornologous_macro_uniform_at_scale():
    m = PathMetric(path_graph(8))
    lifted = lift_bornologous(list(range(8)))
    subsets = [
        s for size in (1, 2, 3) for s in itertools.combinations(range(8), size)
    ]
    for A in subsets:
        for B in subsets:
            if hausdorff_distance(m, A, B) <= 1:
                assert m.distance(lifted.choose(A), lifted.choose(B)) <= 1


def test_extraction_coordinate_round_trip():
    g = path_graph(200)
    m = PathMetric(g)
    result = extract_line(m, min_selector(list(range(200))))
    coord = result.coord
    # an injective coordinate over the whole graph induces a selector again
    values = [coord[v] for v in range(200)]
    f = min_selector(values)
    assert modulus(m, f).r == 1


def test_random_tournament_witnesses_self_verify():
    rng = random.Random(17)
    g = grid_graph(3, 3)
    m = PathMetric(g)
    for _ in range(25):
        f = random_tournament(g, rng)
        r = modulus(m, f).r
        assert isinstance(verify_selector(m, f, r), Holds)
        if r > 0:
            w = verify_selector(m, f, r - 1)
            assert isinstance(w, Witness)
            assert witness_is_violation(m, f, r - 1, w.pair_a, w.pair_b)
