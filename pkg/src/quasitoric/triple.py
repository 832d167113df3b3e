"""Fundamental triples (body, quasilattice, normals) and the per-vertex
chart structure groups.

The chart group at a vertex v with normal frame A_v is the subgroup of
the torus R^n/Z^n generated by the images A_v^{-1} q of the quasilattice
generators q, reduced mod Z^n.  All images integral gives the trivial
group (manifold point); all rational gives a finite group (orbifold
point) whose order is the index [L : Z^n] of the lattice L generated by
Z^n and the images, computed through the Smith normal form after
clearing denominators; any irrational coordinate gives an infinite group
(quasifold point).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .errors import (
    CountMismatch,
    NormalNotInQuasilattice,
    NormalWrongDirection,
    SingularVertexFrame,
)
from .fan import Fan, fan_is_simplicial, positively_proportional
from .field import FieldElement
from .linalg import rank_kernel_solve, snf
from .polytope import HalfspaceRep, is_simple, vertices_from_halfspaces
from .quasilattice import Quasilattice, body_rays


@dataclass(frozen=True)
class FundamentalTriple:
    body: Union[HalfspaceRep, Fan]
    quasilattice: Quasilattice
    normals: tuple

    def __post_init__(self):
        object.__setattr__(self, "normals",
                           tuple(tuple(x) for x in self.normals))


@dataclass(frozen=True)
class TripleReport:
    valid: bool
    simple: bool
    warning: Optional[str]
    normal_coefficients: tuple   # membership witnesses, one per normal
    normals_span_quasilattice: bool


def triple_validate(triple: FundamentalTriple) -> TripleReport:
    """Checks normals against the body and the quasilattice.

    Nonsimple bodies are accepted with a warning (the stratified case is
    out of the chart pipeline); a missing membership or a misdirected
    normal is an error.
    """
    body = triple.body
    rays = body_rays(body)
    if len(triple.normals) != len(rays):
        raise CountMismatch(
            f"{len(triple.normals)} normals for {len(rays)} facets/rays")
    for j, (normal, ray) in enumerate(zip(triple.normals, rays)):
        if not positively_proportional(normal, ray):
            raise NormalWrongDirection(
                f"normal {j} is not a positive multiple of its facet "
                "normal / ray generator")
    witnesses = []
    for j, normal in enumerate(triple.normals):
        coeffs = triple.quasilattice.contains(normal)
        if coeffs is None:
            raise NormalNotInQuasilattice(
                f"normal {j} is not a member of the quasilattice")
        witnesses.append(coeffs)
    if isinstance(body, HalfspaceRep):
        simple = is_simple(body, vertices_from_halfspaces(body))
    else:
        simple = fan_is_simplicial(body)
    warning = None if simple else "stratified case, out of scope"
    spans = all(
        _span_contains(triple.normals, g) for g in
        triple.quasilattice.generators)
    return TripleReport(True, simple, warning, tuple(witnesses), spans)


def _span_contains(vectors, target) -> bool:
    from .quasilattice import integral_membership
    return integral_membership(vectors, target) is not None


@dataclass(frozen=True)
class ChartGroupReport:
    vertex_id: int
    vertex: tuple            # coordinates (polytope) or ray indices (fan)
    frame: tuple             # the n active normals, as matrix rows
    images: tuple            # quasilattice generator images mod Z^n
    classification: str      # "trivial" | "finite" | "infinite"
    order: Optional[int]     # set for trivial (1) and finite groups


def chart_groups(triple: FundamentalTriple) -> list:
    """One report per vertex (or maximal cone, for fan bodies)."""
    body = triple.body
    n = body.dimension
    if isinstance(body, HalfspaceRep):
        V = vertices_from_halfspaces(body)
        charts = [(idx, tuple(v), sorted(act))
                  for idx, (v, act) in enumerate(zip(V.vertices, V.active))]
    else:
        maximal = [c for c in body.maximal_cones() if c]
        charts = [(idx, cone, list(cone)) for idx, cone in
                  enumerate(maximal)]
    reports = []
    for vertex_id, vertex, active in charts:
        if len(active) != n:
            raise SingularVertexFrame(
                f"vertex {vertex_id} meets {len(active)} facets, "
                f"expected {n} (nonsimple bodies are refused)")
        frame = [triple.normals[j] for j in active]
        images = []
        for g in triple.quasilattice.generators:
            res = rank_kernel_solve([list(row) for row in frame], list(g))
            if res.rank != n or res.solution is None:
                raise SingularVertexFrame(
                    f"normals at vertex {vertex_id} are dependent")
            images.append(tuple(_reduce_mod_one(y) for y in res.solution))
        classification, order = _classify(images, n)
        reports.append(ChartGroupReport(vertex_id, vertex, tuple(
            tuple(r) for r in frame), tuple(images), classification, order))
    return reports


def _reduce_mod_one(y: FieldElement) -> FieldElement:
    return y - y.floor()


def _classify(images, n):
    if all(x.is_zero() for img in images for x in img):
        return "trivial", 1
    if any(not x.is_rational() for img in images for x in img):
        return "infinite", None
    return "finite", _finite_order(images, n)


def _finite_order(images, n) -> int:
    """Order of the subgroup of (Q/Z)^n generated by rational images:
    the index [Z^n + sum(Z y_g) : Z^n] via the Smith normal form of the
    denominator-cleared column matrix against D * Z^n."""
    denom = 1
    for img in images:
        for x in img:
            denom = denom * x.as_fraction().denominator // gcd(
                denom, x.as_fraction().denominator)
    cols = []
    for img in images:
        cols.append([int(x.as_fraction() * denom) for x in img])
    for i in range(n):
        unit = [0] * n
        unit[i] = denom
        cols.append(unit)
    matrix = [[col[i] for col in cols] for i in range(n)]
    D, _, _ = snf(matrix)
    index = 1
    for i in range(n):
        index *= D[i][i]
    order, remainder = divmod(denom ** n, index)
    assert remainder == 0, "group order index must divide D^n"
    return order
