"""Exact convex geometry of measure sets inside the probability simplex.

A `MeasurePolytope` is the convex hull of finitely many measures on one
space; its canonical form is the sorted list of extreme points. Vertex
enumeration is redundancy filtering: a candidate is extreme iff it is not a
convex combination of the other candidates, decided by exact feasibility.
Quadratically many tiny LP solves, which is the right trade at this scale
(single-digit point counts, tens of generators).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import core
from .core import DomainError, FiniteSpace, Measure, Rational, TestFunction, as_fraction, indicator
from .exactlp import FeasibilityResult, solve_eq_nonneg


def hull_coefficients(xi: Measure, generators: Sequence[Measure]) -> FeasibilityResult:
    """Feasibility of xi = sum_k lambda_k gen_k with lambda >= 0, sum lambda = 1.

    The system has one row per point of the space plus an explicit
    normalization row; the Farkas certificate therefore has length
    len(space) + 1, and its leading entries are a separating function.
    """
    gens = list(generators)
    if not gens:
        raise DomainError("hull test needs at least one generator")
    space = xi.space
    for g in gens:
        if g.space != space:
            raise DomainError("hull test mixes measures on different spaces")
    columns = [g.weight_vector() for g in gens]
    rows = [[col[i] for col in columns] for i in range(len(space.points))]
    rows.append([Fraction(1)] * len(gens))
    rhs = list(xi.weight_vector()) + [Fraction(1)]
    return solve_eq_nonneg(rows, rhs)


def in_hull(xi: Measure, generators: Sequence[Measure]) -> bool:
    """Whether xi is a convex combination of the generators, decided exactly."""
    return hull_coefficients(xi, generators).feasible


@lru_cache(maxsize=None)
def _extreme_of(space: FiniteSpace, candidates: frozenset[Measure]) -> tuple[Measure, ...]:
    unique = list(candidates)
    if len(unique) == 1:
        verts = unique
    else:
        verts = [m for m in unique if not in_hull(m, [o for o in unique if o != m])]
    return tuple(sorted(verts, key=Measure.weight_vector))


class MeasurePolytope:
    """Convex hull of finitely many measures, canonicalized to its vertex list.

    Vertices are computed once at construction and cached, so instances are
    read-only afterwards. Equality compares canonical vertex lists, i.e. it
    is equality of hulls, not of generator lists.
    """

    __slots__ = ("space", "generators", "vertices")

    def __init__(self, space: FiniteSpace, generators: Iterable[Measure]):
        gens = tuple(generators)
        if not gens:
            raise DomainError("a measure polytope needs at least one generator")
        for g in gens:
            if g.space != space:
                raise DomainError("generator lives on a different space")
        self.space = space
        self.generators = gens
        self.vertices = _extreme_of(space, frozenset(gens))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MeasurePolytope)
            and self.space == other.space
            and self.vertices == other.vertices
        )

    def __hash__(self) -> int:
        return hash((self.space, self.vertices))

    def __repr__(self) -> str:
        return f"MeasurePolytope(vertices={list(self.vertices)!r})"


def extreme_points(polytope: MeasurePolytope) -> list[Measure]:
    """The unique minimal generator subset spanning the same hull, sorted."""
    return list(polytope.vertices)


def support_value(polytope: MeasurePolytope, phi: TestFunction) -> Fraction:
    """max over the hull of integrating phi; attained on the vertex list."""
    if phi.space != polytope.space:
        raise DomainError("function lives on a different space")
    return max(core.eval_measure(v, phi) for v in polytope.vertices)


def minkowski_combination(
    polytope: MeasurePolytope, other: MeasurePolytope, t: Rational
) -> MeasurePolytope:
    """The pointwise convex combination (1-t)*P + t*Q of two hulls.

    Its support values interpolate exactly:
    support_value(result, phi) == (1-t)*support_value(P, phi) + t*support_value(Q, phi).
    """
    if polytope.space != other.space:
        raise DomainError("polytopes live on different spaces")
    weight = as_fraction(t)
    if not 0 <= weight <= 1:
        raise DomainError(f"combination parameter {weight} outside [0, 1]")
    space = polytope.space
    combos = []
    for p in polytope.vertices:
        for q in other.vertices:
            mixed = {
                x: (1 - weight) * p.weight(x) + weight * q.weight(x)
                for x in space.points
            }
            combos.append(Measure(space, mixed))
    return MeasurePolytope(space, combos)


def polytope_eq(polytope: MeasurePolytope, other: MeasurePolytope) -> bool:
    """Hull equality via identical canonical vertex lists."""
    if polytope.space != other.space:
        raise DomainError("polytopes live on different spaces")
    return polytope.vertices == other.vertices


def separating_function(
    polytope: MeasurePolytope, other: MeasurePolytope
) -> Optional[TestFunction]:
    """A witness function on which the two support values differ, or None.

    Search order: point indicators, then the coordinates of a vertex lying in
    exactly one hull, then the Farkas certificate of that vertex's failed
    hull test. The certificate stage is complete, so unequal hulls always
    produce a witness.
    """
    if polytope.space != other.space:
        raise DomainError("polytopes live on different spaces")
    if polytope.vertices == other.vertices:
        return None
    space = polytope.space
    for x in space.points:
        phi = indicator(space, [x])
        if support_value(polytope, phi) != support_value(other, phi):
            return phi
    for own, opposite in ((polytope, other), (other, polytope)):
        for v in own.vertices:
            result = hull_coefficients(v, opposite.vertices)
            if result.feasible:
                continue
            phi = TestFunction(space, {x: v.weight(x) for x in space.points})
            if support_value(polytope, phi) != support_value(other, phi):
                return phi
            assert result.certificate is not None
            # y has one entry per point plus the normalization row; the point
            # block is a function with <y, q> <= -y_last < <y, v> on the
            # opposite hull, hence a strict separation.
            phi = TestFunction(space, dict(zip(space.points, result.certificate[:-1])))
            return phi
    raise AssertionError("unequal hulls always have a vertex outside the other hull")
