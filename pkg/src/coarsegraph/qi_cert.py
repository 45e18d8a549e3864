"""Quasi-isometry certificates for integer coordinates on vertex subsets.

A certificate (coord, lambda, C, D) asserts, for all u, v in the coordinate
domain S,

    (1/lambda) * |coord u - coord v| - C  <=  d(u, v)  <=  lambda * |coord u - coord v| + C

and that every vertex of the graph lies within D of S.  lambda is an exact
rational; all comparisons are integer arithmetic, no floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph_core import PathMetric


@dataclass(frozen=True)
class QuasiIsometryCert:
    coord: dict
    lam: Fraction
    C: int
    D: int

    def domain(self) -> list[int]:
        return sorted(self.coord)


@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class FailurePoint:
    """First violation: a pair (u, v) breaking a bound, or an uncovered w."""

    u: int
    v: int | None = None

    @property
    def is_coverage(self) -> bool:
        return self.v is None


def verify_qi(m: PathMetric, cert: QuasiIsometryCert):
    """Valid iff both distance bounds and largeness hold pointwise.

    Pairs are scanned in ascending order, then coverage; the first failure
    is returned.
    """
    S = cert.domain()
    if not S:
        raise ValueError("certificate domain is empty")
    lam = Fraction(cert.lam)
    if lam < 1 or cert.C < 0 or cert.D < 0:
        raise ValueError("need lambda >= 1, C >= 0, D >= 0")
    coord = cert.coord
    for i, u in enumerate(S):
        row = m.row(u)
        cu = coord[u]
        for v in S[i + 1 :]:
            delta = abs(cu - coord[v])
            d = row[v]
            if d > lam * delta + cert.C:
                return FailurePoint(u, v)
            if delta > lam * (d + cert.C):
                return FailurePoint(u, v)
    cover = m.distances_from_set(S)
    for w, dw in enumerate(cover):
        if dw > cert.D:
            return FailurePoint(w)
    return Valid()


def tighten(m: PathMetric, coord: dict) -> QuasiIsometryCert:
    """Smallest certificate for a given coordinate.

    C is the minimum forced by coordinate collisions (max distance between
    vertices sharing a value); lambda is then the max observed per-unit
    stretch net of C, in both directions; D is the exact covering radius.
    The result always verifies.
    """
    S = sorted(coord)
    if not S:
        raise ValueError("empty coordinate")
    C = 0
    for i, u in enumerate(S):
        row = m.row(u)
        cu = coord[u]
        for v in S[i + 1 :]:
            if coord[v] == cu:
                C = max(C, row[v])
    lam = Fraction(1)
    for i, u in enumerate(S):
        row = m.row(u)
        cu = coord[u]
        for v in S[i + 1 :]:
            delta = abs(cu - coord[v])
            if delta == 0:
                continue
            d = row[v]
            if d - C > 0:
                lam = max(lam, Fraction(d - C, delta))
            lam = max(lam, Fraction(delta, d + C))
    D = max(m.distances_from_set(S))
    return QuasiIsometryCert(dict(coord), lam, C, D)
