"""Odd balanced triangulated vector configurations.

A configuration is an ordered vector list (repetitions allowed) with a
set of ghost indices; a triangulation is a subset-closed family of
simplices over the vector indices.  Documents may list only maximal
simplices; the constructor closes under faces.  Validation reports every
axiom exactly and never repairs the input: in particular the vector sum
is computed and reported verbatim, so a configuration printed with
unit-length conventions that fails to balance stays unbalanced here.

Augmentation is the deterministic encoding of a fan triple: ray
generators first, then any quasilattice generators missing from their
Z-span, then a parity-dependent ghost batch restoring balance and odd
defect.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import (
    FanNotComplete,
    FanNotSimplicial,
    InvalidConfiguration,
)
from .fan import (
    Fan,
    cone_contains_index,
    cones_meet_in_common_face,
    fan_is_complete,
    fan_is_simplicial,
)
from .linalg import mat_rank
from .quasilattice import Quasilattice, integral_membership
from .triple import FundamentalTriple


class Triangulation:
    """Subset-closed family of simplices (index tuples)."""

    def __init__(self, simplices):
        closed = set()
        for simplex in simplices:
            s = tuple(sorted(simplex))
            for r in range(len(s) + 1):
                closed.update(combinations(s, r))
        closed.add(())
        self.simplices = frozenset(closed)

    def maximal(self):
        return tuple(sorted(
            s for s in self.simplices
            if not any(set(s) < set(t) for t in self.simplices)))

    def indexed(self):
        """All vector indices appearing in some simplex."""
        return sorted({i for s in self.simplices for i in s})

    def __eq__(self, other):
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)


class VectorConfiguration:
    """Ordered vectors with ghost indices (0-based internally)."""

    def __init__(self, dimension: int, vectors, ghosts=()):
        vectors = tuple(tuple(v) for v in vectors)
        if len(vectors) < dimension:
            raise InvalidConfiguration(
                "fewer vectors than the ambient dimension")
        for v in vectors:
            if len(v) != dimension:
                raise InvalidConfiguration(
                    "vector length disagrees with dimension")
        ghosts = frozenset(int(g) for g in ghosts)
        if ghosts and (min(ghosts) < 0 or max(ghosts) >= len(vectors)):
            raise InvalidConfiguration("ghost index out of range")
        self.dimension = dimension
        self.vectors = vectors
        self.ghosts = ghosts
        self.field = vectors[0][0].field

    @property
    def count(self) -> int:
        return len(self.vectors)

    def vector_sum(self):
        acc = [self.field.zero] * self.dimension
        for v in self.vectors:
            for i in range(self.dimension):
                acc[i] = acc[i] + v[i]
        return tuple(acc)


@dataclass(frozen=True)
class ConfigReport:
    p: int
    n: int
    vector_sum: tuple
    balanced: bool
    odd: bool
    m: Optional[int]
    spanning: bool
    simplex_independence: bool
    face_closure: bool
    cone_compatibility: Optional[bool]
    covering: Optional[bool]
    ghosts_disjoint: bool
    complete: Optional[bool]
    completeness_matches_spanning: Optional[bool]

    def axioms_pass(self) -> bool:
        return (self.simplex_independence
                and self.face_closure
                and self.cone_compatibility is not False
                and self.covering is not False
                and self.ghosts_disjoint)


def config_validate(config: VectorConfiguration,
                    triangulation: Triangulation) -> ConfigReport:
    """Exact report on the triangulation axioms, balance, parity,
    spanning, and the completeness/spanning equivalence."""
    n = config.dimension
    p = config.count
    field = config.field
    vectors = config.vectors
    total = config.vector_sum()
    balanced = all(x.is_zero() for x in total)
    defect = p - n
    odd = defect > 0 and defect % 2 == 1
    m = (defect - 1) // 2 if odd else None
    spanning = mat_rank([list(row) for row in zip(*vectors)]) == n

    independence = all(
        not s or mat_rank([list(vectors[i]) for i in s]) == len(s)
        for s in triangulation.simplices)
    closure = all(
        tuple(sub) in triangulation.simplices
        for s in triangulation.simplices
        for r in range(len(s))
        for sub in combinations(s, r))
    indexed = set(triangulation.indexed())
    ghosts_disjoint = not (config.ghosts & indexed)

    cache = {}
    if n <= 3 and independence:
        compatibility = all(
            cones_meet_in_common_face(vectors, a, b, field, cache)
            for a, b in combinations(sorted(triangulation.simplices), 2))
        maximal = triangulation.maximal()
        covering = all(
            any(cone_contains_index(vectors, s, i, field, cache)
                for s in maximal)
            for i in range(p))
    else:
        compatibility = None
        covering = None

    complete = None
    if n <= 3 and independence:
        try:
            fan = _fan_from(config, triangulation)
            complete = fan_is_complete(fan)
        except Exception:
            complete = None
    equivalence = None
    if balanced and complete is not None:
        equivalence = (complete == spanning)

    return ConfigReport(p, n, total, balanced, odd, m, spanning,
                        independence, closure, compatibility, covering,
                        ghosts_disjoint, complete, equivalence)


def _fan_from(config: VectorConfiguration,
              triangulation: Triangulation) -> Fan:
    indexed = triangulation.indexed()
    position = {i: k for k, i in enumerate(indexed)}
    rays = [config.vectors[i] for i in indexed]
    cones = [tuple(position[i] for i in s) for s in triangulation.simplices]
    return Fan(config.dimension, rays, cones)


def decode(config: VectorConfiguration,
           triangulation: Triangulation) -> FundamentalTriple:
    """The fan of the triangulation with the indexed vectors as ray
    generators, together with the quasilattice spanned by all of V."""
    report = config_validate(config, triangulation)
    failures = [name for name, value in (
        ("simplex_independence", report.simplex_independence),
        ("face_closure", report.face_closure),
        ("cone_compatibility", report.cone_compatibility),
        ("covering", report.covering),
        ("ghosts_disjoint", report.ghosts_disjoint),
    ) if value is False]
    if failures:
        raise InvalidConfiguration("validation failed: "
                                   + ", ".join(failures))
    fan = _fan_from(config, triangulation)
    quasilattice = Quasilattice(config.vectors)
    rays = tuple(config.vectors[i] for i in triangulation.indexed())
    return FundamentalTriple(fan, quasilattice, rays)


@dataclass(frozen=True)
class AugmentedTriple:
    """Configuration plus triangulation; the calibration is the index ->
    vector map (the vector list itself) together with the ghost set."""
    configuration: VectorConfiguration
    triangulation: Triangulation
    quasilattice: Quasilattice

    @property
    def ghost_indices(self):
        return self.configuration.ghosts


def augment(triple: FundamentalTriple) -> AugmentedTriple:
    """Deterministic ghost augmentation of a complete simplicial fan
    triple: (1) ray generators in fan order, (2) quasilattice generators
    not in the running Z-span, in generator order, (3) a parity batch
    making the configuration balanced and odd."""
    body = triple.body
    if not isinstance(body, Fan):
        raise InvalidConfiguration("augment needs a triple over a fan")
    if not fan_is_simplicial(body):
        raise FanNotSimplicial("augmentation requires a simplicial fan")
    if not fan_is_complete(body):
        raise FanNotComplete("augmentation requires a complete fan")
    field = body.field
    n = body.dimension
    ql = triple.quasilattice
    vectors = [tuple(v) for v in triple.normals]
    ghosts = []

    for g in ql.generators:
        if integral_membership(vectors, g) is None:
            ghosts.append(len(vectors))
            vectors.append(tuple(g))

    def total():
        acc = [field.zero] * n
        for v in vectors:
            for i in range(n):
                acc[i] = acc[i] + v[i]
        return tuple(acc)

    def append_ghost(v):
        assert not all(x.is_zero() for x in v), "ghost must be nonzero"
        assert ql.contains(v) is not None, "ghost must lie in Q"
        ghosts.append(len(vectors))
        vectors.append(tuple(v))

    S = total()
    sum_zero = all(x.is_zero() for x in S)
    defect_even = (len(vectors) - n) % 2 == 0
    minus_S = tuple(-x for x in S)
    if not sum_zero and defect_even:
        append_ghost(minus_S)
    elif not sum_zero and not defect_even:
        choice = None
        for g in ql.generators:
            if all(x.is_zero() for x in g):
                continue
            rest = tuple(a - b for a, b in zip(minus_S, g))
            if not all(x.is_zero() for x in rest):
                choice = (g, rest)
                break
        if choice is None:
            g = ql.generators[0]
            doubled = tuple(x + x for x in g)
            choice = (doubled,
                      tuple(a - b for a, b in zip(minus_S, doubled)))
        append_ghost(choice[0])
        append_ghost(choice[1])
    elif sum_zero and defect_even:
        g = ql.generators[0]
        append_ghost(g)
        append_ghost(g)
        append_ghost(tuple(-(x + x) for x in g))

    config = VectorConfiguration(n, vectors, ghosts)
    triangulation = Triangulation(body.cones)
    final = config.vector_sum()
    assert all(x.is_zero() for x in final), "augmented sum must vanish"
    assert (config.count - n) % 2 == 1, "augmented defect must be odd"
    assert all(integral_membership(config.vectors, g) is not None
               for g in ql.generators), "vectors must Z-span Q"
    assert all(ql.contains(v) is not None for v in config.vectors), \
        "every vector must lie in Q"
    return AugmentedTriple(config, triangulation, ql)
