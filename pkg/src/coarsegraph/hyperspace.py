"""Hausdorff metric on finite vertex subsets and neighborhoods in pair space.

Two-element subsets of the vertex set are represented as sorted tuples
``(a, b)`` with ``a < b``; general finite subsets as sorted tuples.
"""
from __future__ import annotations

from .graph_core import PathMetric


class EmptySet(ValueError):
    pass


def vpair(a: int, b: int) -> tuple[int, int]:
    """Normalize an unordered pair to a sorted tuple."""
    if a == b:
        raise ValueError(f"pair elements must differ, got {{{a}, {b}}}")
    return (a, b) if a < b else (b, a)


def subset(vertices) -> tuple[int, ...]:
    out = tuple(sorted(set(vertices)))
    if not out:
        raise EmptySet("nonempty subset required")
    return out


def hausdorff_distance(m: PathMetric, A, B) -> int:
    """max over each set of the distance to the other set."""
    A = subset(A)
    B = subset(B)
    best = 0
    for a in A:
        row = m.row(a)
        best = max(best, min(row[b] for b in B))
    for b in B:
        row = m.row(b)
        best = max(best, min(row[a] for a in A))
    return best


def exp_contains(m: PathMetric, A, B, radius: int) -> bool:
    """True iff A lies in the radius-ball of B and B in the radius-ball of A.

    Implemented as the literal double inclusion, independently of
    hausdorff_distance; the two must agree (d_H(A, B) <= radius).
    """
    A = subset(A)
    B = subset(B)
    for a in A:
        row = m.row(a)
        if all(row[b] > radius for b in B):
            return False
    for b in B:
        row = m.row(b)
        if all(row[a] > radius for a in A):
            return False
    return True


def neighbor_pair_candidates(m: PathMetric, P):
    """Pairs {x, y} with x adjacent-or-equal to P[0] and y to P[1].

    Every pair at Hausdorff distance <= 1 from P is of this form, so the
    candidate set is exactly the d_H <= 1 neighborhood of P; pair_neighbors
    filters anyway as a guard.
    """
    a, b = vpair(*P)
    g = m.graph
    seen = set()
    for x in g.closed_neighborhood(a):
        for y in g.closed_neighborhood(b):
            if x == y:
                continue
            q = (x, y) if x < y else (y, x)
            if q not in seen:
                seen.add(q)
                yield q


def pair_neighbors(m: PathMetric, P) -> set[tuple[int, int]]:
    """All pairs B (including P itself) with d_H(P, B) <= 1."""
    P = vpair(*P)
    return {q for q in neighbor_pair_candidates(m, P) if hausdorff_distance(m, P, q) <= 1}
