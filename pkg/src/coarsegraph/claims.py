"""Executable consistency checks for a selector at a claimed modulus.

Each check walks chains of pairs at Hausdorff distance <= 1 and watches the
induced tournament.  Under the stated separation hypotheses a genuine
modulus-r selector cannot flip sides along such a chain, so whenever the
checked implication fails, some step of the replay must jump by more than r
and that step is returned as a self-verifying witness against the selector.
Unmet hypotheses are reported as values, not exceptions, so callers can
enumerate configurations freely.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph_core import PathMetric, geodesic_between
from .selector import Holds, TwoSelector, Witness
from .hyperspace import hausdorff_distance, vpair


@dataclass(frozen=True)
class HypothesisUnmet:
    reason: str


@dataclass(frozen=True)
class LeftEnd:
    j: int


@dataclass(frozen=True)
class RightEnd:
    j: int


@dataclass(frozen=True)
class ClaimConfig:
    """A probe vertex against a chain with step bound p.

    ``z`` is a vertex sequence with consecutive distances <= p.  The
    optional ``geodesic`` runs from v to the chain vertex nearest to v; it
    is recomputed deterministically when omitted.
    """

    v: int
    z: tuple[int, ...]
    p: int
    geodesic: tuple[int, ...] | None = None


def _chain_vertices(m: PathMetric, anchors) -> list[int]:
    """Anchor sequence threaded through deterministic geodesics."""
    walk = [anchors[0]]
    for a, b in zip(anchors, anchors[1:]):
        walk.extend(geodesic_between(m, a, b).vertices[1:])
    return walk


def _first_break(m: PathMetric, f: TwoSelector, r: int, pairs):
    """First consecutive step whose images are more than r apart."""
    prev = None
    prev_choice = None
    for cur in pairs:
        if prev is not None and cur != prev:
            choice = f.choose_pair(cur)
            if m.distance(prev_choice, choice) > r:
                # chains move one element along an edge, so the witness
                # re-verifies by construction
                assert hausdorff_distance(m, prev, cur) <= 1
                return Witness(prev, cur)
            prev, prev_choice = cur, choice
        elif prev is None:
            prev = cur
            prev_choice = f.choose_pair(cur)
    return None


def _nearest_index(m: PathMetric, v: int, zs) -> tuple[int, int]:
    """Lowest index attaining min distance from v to the sequence."""
    row = m.row(v)
    best, k = None, -1
    for i, z in enumerate(zs):
        if best is None or row[z] < best:
            best, k = row[z], i
    return best, k


def claim1_propagate(m, f: TwoSelector, r: int, v: int, a: int, b: int, p: int):
    """Propagate "chosen over v" from a to b along a geodesic.

    Requires d(a, b) <= p, both endpoints outside the (p + r)-ball of v, and
    f({a, v}) = a.  The geodesic then stays outside the r-ball of v, so each
    step either keeps choosing against v or jumps more than r.
    """
    if p <= 0:
        return HypothesisUnmet("p must be positive")
    if m.distance(a, b) > p:
        return HypothesisUnmet(f"d(a, b) = {m.distance(a, b)} > p = {p}")
    if m.distance(v, a) <= p + r:
        return HypothesisUnmet("a inside B(v, p + r)")
    if m.distance(v, b) <= p + r:
        return HypothesisUnmet("b inside B(v, p + r)")
    if f.choose(a, v) != a:
        return HypothesisUnmet("f({a, v}) is not a")
    walk = geodesic_between(m, a, b).vertices
    broken = _first_break(m, f, r, [vpair(u, v) for u in walk])
    return broken if broken is not None else Holds()


def claim2_check(m, f: TwoSelector, r: int, config: ClaimConfig):
    """Bound the distance from v to the nearest vertex of a chain.

    With the four separation hypotheses satisfied, a modulus-r selector
    forces d(v, z_k) <= p + r for the nearest chain vertex z_k.  When the
    bound already holds the outcome is Holds without consulting the
    hypotheses.  When it fails, five propagation legs (the chain against v,
    the connecting geodesic against each chain end, and the chain halves
    against the opposite ends) would otherwise pin f({z_0, z_m}) to both of
    its values, so some leg must break; the first break is the witness.
    """
    zs = config.z
    p = config.p
    v = config.v
    if len(zs) < 1:
        return HypothesisUnmet("empty chain")
    if p <= 0:
        return HypothesisUnmet("p must be positive")
    for i, (z1, z2) in enumerate(zip(zs, zs[1:])):
        if m.distance(z1, z2) > p:
            return HypothesisUnmet(f"chain step {i} exceeds p")
    _, k = _nearest_index(m, v, zs)
    zk = zs[k]
    if config.geodesic is not None:
        geo = tuple(config.geodesic)
        if geo[0] != v or geo[-1] != zk:
            return HypothesisUnmet("geodesic endpoints must be v and the nearest chain vertex")
        for g1, g2 in zip(geo, geo[1:]):
            if g2 not in m.graph.adjacency[g1]:
                return HypothesisUnmet("geodesic has a non-adjacent step")
        if len(geo) - 1 != m.distance(v, zk):
            return HypothesisUnmet("geodesic is not distance-realizing")
    else:
        geo = geodesic_between(m, v, zk).vertices
    t = len(geo) - 1
    if t <= p + r:
        return Holds()
    bound = p + r
    for i in range(k, len(zs)):
        if m.distance(zs[0], zs[i]) <= bound:
            return HypothesisUnmet(f"(1) fails: d(z_0, z_{i}) <= p + r")
    for i in range(0, k + 1):
        if m.distance(zs[-1], zs[i]) <= bound:
            return HypothesisUnmet(f"(2) fails: d(z_m, z_{i}) <= p + r")
    for w in geo:
        if m.distance(zs[0], w) <= bound:
            return HypothesisUnmet("(3) fails: geodesic meets B(z_0, p + r)")
    for w in geo:
        if m.distance(zs[-1], w) <= bound:
            return HypothesisUnmet("(4) fails: geodesic meets B(z_m, p + r)")

    chain_all = _chain_vertices(m, zs)
    chain_right = _chain_vertices(m, zs[k:])
    chain_left = _chain_vertices(m, list(reversed(zs[: k + 1])))
    legs = (
        [vpair(w, v) for w in chain_all],
        [vpair(zs[0], w) for w in geo],
        [vpair(zs[-1], w) for w in geo],
        [vpair(zs[0], w) for w in chain_right],
        [vpair(zs[-1], w) for w in chain_left],
    )
    for leg in legs:
        broken = _first_break(m, f, r, leg)
        if broken is not None:
            return broken
    raise AssertionError(
        "propagation legs all closed yet the conclusion fails; "
        "f cannot be a function"
    )


def claim3_side(m, f: TwoSelector, r: int, zs, v: int, p: int, q: int | None = None):
    """Locate the chain index nearest to v inside an end window.

    ``q`` defaults to 2 (r + p) + 1; the line extraction passes 3 p.  With
    the end-ball hypotheses satisfied, a modulus-r selector forces the
    nearest index into the first or last q + 1 positions; a mid-chain
    nearest index is handed to claim2_check, which must produce a witness.
    """
    zs = tuple(zs)
    if q is None:
        q = 2 * (r + p) + 1
    if p <= 0:
        return HypothesisUnmet("p must be positive")
    for i, (z1, z2) in enumerate(zip(zs, zs[1:])):
        if m.distance(z1, z2) > p:
            return HypothesisUnmet(f"chain step {i} exceeds p")
    last = len(zs) - 1
    dmin, j = _nearest_index(m, v, zs)
    if dmin <= p + r:
        return HypothesisUnmet("d(v, P) <= p + r")
    for i in range(q + 1, last + 1):
        if m.distance(zs[0], zs[i]) <= p + r:
            return HypothesisUnmet(f"end ball hypothesis fails at z_{i} near z_0")
    for i in range(0, last - q + 1):
        if m.distance(zs[-1], zs[i]) <= p + r:
            return HypothesisUnmet(f"end ball hypothesis fails at z_{i} near z_m")
    if j <= q:
        return LeftEnd(j)
    if j >= last - q:
        return RightEnd(j)
    sub = claim2_check(m, f, r, ClaimConfig(v=v, z=zs, p=p))
    if isinstance(sub, Holds):
        raise AssertionError("nearest distance both above and below p + r")
    return sub
