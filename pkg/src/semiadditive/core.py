"""Finite spaces, point maps, test functions, and exact discrete probability measures.

Everything here is exact: weights and function values are `fractions.Fraction`,
comparisons are true equalities, and no floating point enters any code path.
The dominance threshold n/(n+1) is compared inclusively, so boundary cases like
a weight of exactly 2/3 on a two-atom measure are decidable.

All values are immutable after construction and may be shared freely between
threads; operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

Rational = Union[int, str, Fraction]


class DomainError(ValueError):
    """An argument lies outside an operation's domain (bad label, space mismatch)."""


class PreconditionError(ValueError):
    """A documented precondition fails for otherwise well-formed values."""


def as_fraction(value: Rational) -> Fraction:
    """Coerce to an exact rational. Floats are rejected, not rounded."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not an exact rational: {value!r}") from exc
    raise DomainError(f"not an exact rational: {value!r}")


class FiniteSpace:
    """An ordered finite set of distinct point labels.

    The stored order is canonical: weight vectors, vertex sorting, and all
    report output follow it.
    """

    __slots__ = ("points", "_index")

    def __init__(self, points: Iterable[str]):
        pts = tuple(points)
        index: dict[str, int] = {}
        for i, p in enumerate(pts):
            if not isinstance(p, str):
                raise DomainError(f"point labels must be strings, got {p!r}")
            if p in index:
                raise DomainError(f"duplicate point label {p!r}")
            index[p] = i
        self.points = pts
        self._index = index

    def index(self, point: str) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise DomainError(f"unknown point {point!r} in space {self.points}") from None

    def __contains__(self, point: object) -> bool:
        return point in self._index

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteSpace) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"FiniteSpace({list(self.points)!r})"


class PointMap:
    """A total map between finite spaces, given by an explicit table."""

    __slots__ = ("source", "target", "table", "_key")

    def __init__(self, source: FiniteSpace, target: FiniteSpace, table: Mapping[str, str]):
        missing = [p for p in source.points if p not in table]
        if missing:
            raise DomainError(f"map table not total, missing {missing}")
        extra = [p for p in table if p not in source]
        if extra:
            raise DomainError(f"map table has points outside the source: {extra}")
        bad = [(p, table[p]) for p in source.points if table[p] not in target]
        if bad:
            raise DomainError(f"map images outside the target: {bad}")
        self.source = source
        self.target = target
        self.table = MappingProxyType({p: table[p] for p in source.points})
        self._key = (source.points, target.points, tuple(table[p] for p in source.points))

    def __call__(self, point: str) -> str:
        try:
            return self.table[point]
        except KeyError:
            raise DomainError(f"unknown point {point!r} for map on {self.source.points}") from None

    @property
    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.source)

    @property
    def is_surjective(self) -> bool:
        return set(self.table.values()) == set(self.target.points)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointMap) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"PointMap({dict(self.table)!r})"


def identity_map(space: FiniteSpace) -> PointMap:
    return PointMap(space, space, {p: p for p in space.points})


def compose(g: PointMap, f: PointMap) -> PointMap:
    """The composite g after f."""
    if f.target != g.source:
        raise DomainError("cannot compose: inner map's target differs from outer map's source")
    return PointMap(f.source, g.target, {p: g(f(p)) for p in f.source.points})


class TestFunction:
    """An exact rational-valued function on a finite space.

    Supports the pointwise algebra needed by the functional axioms: addition
    of functions, addition of constants, nonnegative scaling, the pointwise
    partial order, and precomposition with a point map.
    """

    __slots__ = ("space", "values", "_key")

    def __init__(self, space: FiniteSpace, values: Mapping[str, Rational]):
        extra = [p for p in values if p not in space]
        if extra:
            raise DomainError(f"values given for points outside the space: {extra}")
        vals: dict[str, Fraction] = {}
        for p in space.points:
            if p not in values:
                raise DomainError(f"no value for point {p!r}")
            vals[p] = as_fraction(values[p])
        self.space = space
        self.values = MappingProxyType(vals)
        self._key = (space.points, tuple(vals[p] for p in space.points))

    def __call__(self, point: str) -> Fraction:
        try:
            return self.values[point]
        except KeyError:
            raise DomainError(f"unknown point {point!r}") from None

    def __add__(self, other: "TestFunction | Rational") -> "TestFunction":
        if isinstance(other, TestFunction):
            if other.space != self.space:
                raise DomainError("cannot add functions on different spaces")
            return TestFunction(self.space, {p: self.values[p] + other.values[p] for p in self.space.points})
        c = as_fraction(other)
        return TestFunction(self.space, {p: self.values[p] + c for p in self.space.points})

    __radd__ = __add__

    def __mul__(self, scalar: Rational) -> "TestFunction":
        t = as_fraction(scalar)
        return TestFunction(self.space, {p: t * self.values[p] for p in self.space.points})

    __rmul__ = __mul__

    def __le__(self, other: "TestFunction") -> bool:
        if not isinstance(other, TestFunction) or other.space != self.space:
            raise DomainError("pointwise order needs two functions on one space")
        return all(self.values[p] <= other.values[p] for p in self.space.points)

    def compose(self, f: PointMap) -> "TestFunction":
        """Precompose with a map landing in this function's space."""
        if f.target != self.space:
            raise DomainError("map target differs from the function's space")
        return TestFunction(f.source, {p: self.values[f(p)] for p in f.source.points})

    @property
    def sup_norm(self) -> Fraction:
        return max((abs(v) for v in self.values.values()), default=Fraction(0))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TestFunction) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"TestFunction({dict(self.values)!r})"


def constant(space: FiniteSpace, c: Rational) -> TestFunction:
    value = as_fraction(c)
    return TestFunction(space, {p: value for p in space.points})


def unit(space: FiniteSpace) -> TestFunction:
    return constant(space, 1)


def indicator(space: FiniteSpace, points: Iterable[str]) -> TestFunction:
    chosen = set(points)
    unknown = [p for p in chosen if p not in space]
    if unknown:
        raise DomainError(f"unknown points {unknown}")
    return TestFunction(space, {p: Fraction(1 if p in chosen else 0) for p in space.points})


class Measure:
    """A finitely supported probability measure with exact rational weights.

    Canonical form: zero weights are dropped at construction, so the stored
    mapping is exactly the support and the atom count is well defined. On the
    empty space no measure exists (the weights cannot sum to one).
    """

    __slots__ = ("space", "weights", "_key")

    def __init__(self, space: FiniteSpace, weights: Mapping[str, Rational]):
        unknown = [p for p in weights if p not in space]
        if unknown:
            raise DomainError(f"weights on points outside the space: {unknown}")
        cleaned: dict[str, Fraction] = {}
        total = Fraction(0)
        for p in space.points:
            w = as_fraction(weights.get(p, 0))
            if w < 0:
                raise DomainError(f"negative weight {w} at {p!r}")
            if w > 0:
                cleaned[p] = w
                total += w
        if total != 1:
            raise DomainError(f"weights sum to {total}, expected exactly 1")
        self.space = space
        self.weights = MappingProxyType(cleaned)
        self._key = (space.points, tuple(cleaned.get(p, Fraction(0)) for p in space.points))

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self.weights)

    @property
    def atom_count(self) -> int:
        return len(self.weights)

    def weight(self, point: str) -> Fraction:
        if point not in self.space:
            raise DomainError(f"unknown point {point!r}")
        return self.weights.get(point, Fraction(0))

    def weight_vector(self) -> tuple[Fraction, ...]:
        """Weights aligned with the space's point order (absent atoms are 0).

        Tuples compare lexicographically, which is the canonical sort order
        for vertex lists.
        """
        return self._key[1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Measure) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        inner = ", ".join(f"{p!r}: {w}" for p, w in self.weights.items())
        return f"Measure({{{inner}}})"


def dirac(space: FiniteSpace, point: str) -> Measure:
    """The measure concentrated at a single point."""
    if point not in space:
        raise DomainError(f"unknown point {point!r}")
    return Measure(space, {point: 1})


def eval_measure(xi: Measure, phi: TestFunction) -> Fraction:
    """Integrate phi against xi: the exact dot product over the support."""
    if xi.space != phi.space:
        raise DomainError("measure and function live on different spaces")
    return sum((w * phi.values[p] for p, w in xi.weights.items()), Fraction(0))


def pushforward_measure(f: PointMap, xi: Measure) -> Measure:
    """Image measure: each fiber's mass is summed onto its image point.

    Satisfies eval_measure(pushforward_measure(f, xi), phi)
    == eval_measure(xi, phi.compose(f)) for every phi on the target.
    """
    if xi.space != f.source:
        raise DomainError("measure lives on a different space than the map's source")
    acc: dict[str, Fraction] = {}
    for p, w in xi.weights.items():
        q = f(p)
        acc[q] = acc.get(q, Fraction(0)) + w
    return Measure(f.target, acc)


def dominance_threshold(atom_count: int) -> Fraction:
    """The inclusive dominance bound n/(n+1) for a measure with n atoms."""
    if atom_count < 1:
        raise DomainError("a measure has at least one atom")
    return Fraction(atom_count, atom_count + 1)


def has_dominant_atom(xi: Measure) -> bool:
    """Whether some atom carries weight >= n/(n+1), n the atom count.

    Dirac measures always qualify (n = 1, threshold 1/2). For n >= 2 at most
    one atom can qualify, since two weights >= 2/3 would exceed total mass 1.
    """
    return max(xi.weights.values()) >= dominance_threshold(xi.atom_count)


def dominant_atom(xi: Measure) -> str:
    """The unique atom meeting the dominance bound."""
    if not has_dominant_atom(xi):
        raise PreconditionError(f"{xi!r} has no dominant atom")
    bound = dominance_threshold(xi.atom_count)
    for p in xi.space.points:
        w = xi.weights.get(p)
        if w is not None and w >= bound:
            return p
    raise AssertionError("unreachable: dominance holds but no atom found")
