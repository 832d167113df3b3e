"""Fans of polyhedral cones: construction from polytopes, the fan axioms,
completeness, and polytopality.

Cones are stored as sorted tuples of indices into the fan's shared ray
list.  All predicates reduce to exact LP feasibility: membership of a
point in a cone, supporting hyperplanes for face enumeration, and the
separation argument for the pairwise-intersection axiom.  Completeness is
implemented for n <= 3 (angular ordering in the plane, wall counting in
space); every cone here is assumed pointed, which holds for all normal
fans of bounded polytopes.
"""

from __future__ import annotations

import itertools
from functools import cmp_to_key
from typing import NamedTuple, Optional

from .errors import DimensionTooHigh, InvalidFan, RedundantFacet
from .linalg import dot, mat_rank, solve_unique
from .lp import strict_lp_feasible
from .polytope import HalfspaceRep, face_lattice, vertices_from_halfspaces


class Fan:
    """Shared ray list plus cones as sorted ray-index tuples.

    Construction rejects zero rays and repeated rays (equal up to positive
    scaling); the origin cone () is always included.  Face closure and the
    pairwise-intersection axiom are checked by fan_is_valid, not here.
    """

    def __init__(self, dimension: int, rays, cones):
        rays = tuple(tuple(r) for r in rays)
        if dimension < 1:
            raise InvalidFan("dimension must be >= 1")
        for r in rays:
            if len(r) != dimension:
                raise InvalidFan("ray length disagrees with dimension")
            if all(x.is_zero() for x in r):
                raise InvalidFan("zero ray")
        for i, j in itertools.combinations(range(len(rays)), 2):
            if positively_proportional(rays[i], rays[j]):
                raise InvalidFan(
                    f"rays {i} and {j} are positive multiples of each other")
        cone_set = set()
        for cone in cones:
            t = tuple(sorted(cone))
            if len(set(t)) != len(t):
                raise InvalidFan(f"cone {cone} repeats a ray index")
            if t and (t[0] < 0 or t[-1] >= len(rays)):
                raise InvalidFan(f"cone {cone} indexes a missing ray")
            cone_set.add(t)
        cone_set.add(())
        self.dimension = dimension
        self.rays = rays
        self.cones = tuple(sorted(cone_set))
        self.field = rays[0][0].field if rays else None
        self._membership_cache = {}
        self._face_cache = {}

    @property
    def ray_count(self) -> int:
        return len(self.rays)

    def maximal_cones(self):
        """Cones not properly contained (as index sets) in another cone."""
        return tuple(c for c in self.cones
                     if not any(set(c) < set(d) for d in self.cones))

    # -- exact cone geometry ------------------------------------------------

    def cone_contains(self, cone, point) -> bool:
        """Membership of a point in the cone spanned by the indexed rays."""
        if isinstance(point, int):
            return cone_contains_index(self.rays, cone, point, self.field,
                                       self._membership_cache)
        return cone_contains_point(self.rays, cone, tuple(point), self.field)

    def cone_faces(self, cone):
        """All faces of a cone, as ray-index tuples.

        Simplicial cones: every index subset.  Otherwise subsets that admit
        a supporting hyperplane (exact LP); requires n <= 3 to stay within
        desk scale, and pointed cones."""
        cone = tuple(sorted(cone))
        if cone in self._face_cache:
            return self._face_cache[cone]
        if not cone:
            faces = {()}
        elif mat_rank([list(self.rays[i]) for i in cone]) == len(cone):
            faces = {tuple(sub) for r in range(len(cone) + 1)
                     for sub in itertools.combinations(cone, r)}
        else:
            if self.dimension > 3:
                raise DimensionTooHigh(
                    "face enumeration of non-simplicial cones needs n <= 3")
            field = self.field
            faces = {cone}
            for r in range(len(cone)):
                for sub in itertools.combinations(cone, r):
                    inside = set(sub)
                    constraints = []
                    for i in cone:
                        ray = self.rays[i]
                        if i in inside:
                            constraints.append((ray, field.zero, "="))
                        else:
                            constraints.append((ray, field.zero, ">"))
                    if strict_lp_feasible(constraints, self.dimension,
                                          field) is not None:
                        faces.add(tuple(sub))
        self._face_cache[cone] = faces
        return faces


def positively_proportional(u, v) -> bool:
    """u = c*v for some c > 0."""
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if not (u[i] * v[j] - u[j] * v[i]).is_zero():
                return False
    return dot(u, v).sign() > 0


def cone_contains_point(vectors, cone, point, field) -> bool:
    """Exact membership of a point in the cone of the indexed vectors."""
    cone = tuple(cone)
    if not cone:
        return all(x.is_zero() for x in point)
    k = len(cone)
    dimension = len(point)
    constraints = []
    for i in range(dimension):
        coeffs = tuple(vectors[j][i] for j in cone)
        constraints.append((coeffs, point[i], "="))
    zero = field.zero
    for j in range(k):
        unit = [zero] * k
        unit[j] = field.one
        constraints.append((tuple(unit), zero, ">="))
    return strict_lp_feasible(constraints, k, field) is not None


def cone_contains_index(vectors, cone, index, field, cache=None) -> bool:
    key = (index, tuple(cone))
    if cache is not None and key in cache:
        return cache[key]
    result = cone_contains_point(vectors, cone, vectors[index], field)
    if cache is not None:
        cache[key] = result
    return result


def cones_meet_in_common_face(vectors, S1, S2, field, cache=None) -> bool:
    """Whether cone(S1) and cone(S2) intersect in a common face.

    Decided by an exact separating-functional LP; when the separated
    faces differ the check recurses into them.  Works for any ambient
    dimension within the LP variable budget."""
    S1, S2 = tuple(S1), tuple(S2)
    F1 = tuple(i for i in S1
               if i in S2 or cone_contains_index(vectors, S2, i, field,
                                                 cache))
    F2 = tuple(j for j in S2
               if j in S1 or cone_contains_index(vectors, S1, j, field,
                                                 cache))
    if F1 == S1 and F2 == S2:
        return True  # mutual containment: the intersection is the cone itself
    dimension = len(vectors[S1[0]]) if S1 else len(vectors[S2[0]])
    constraints = []
    for i in S1:
        ray = vectors[i]
        if i in F1:
            constraints.append((ray, field.zero, "="))
        else:
            constraints.append((ray, field.zero, ">"))
    for j in S2:
        ray = vectors[j]
        if j in F2:
            constraints.append((ray, field.zero, "="))
        else:
            constraints.append((tuple(-x for x in ray), field.zero, ">"))
    if strict_lp_feasible(constraints, dimension, field) is None:
        return False
    return cones_meet_in_common_face(vectors, F1, F2, field, cache)


# ---------------------------------------------------------------------------
# normal fan
# ---------------------------------------------------------------------------

def redundant_facets_lp(H: HalfspaceRep):
    """Facets whose removal does not change the polytope (exact LP test)."""
    redundant = []
    n = H.dimension
    for j in range(H.facet_count):
        constraints = [(H.normals[k], H.offsets[k], ">=")
                       for k in range(H.facet_count) if k != j]
        constraints.append((tuple(-x for x in H.normals[j]),
                            -H.offsets[j], ">"))
        if strict_lp_feasible(constraints, n, H.field) is None:
            redundant.append(j)
    return redundant


def normal_fan(H: HalfspaceRep) -> Fan:
    """Rays are the facet normals with input scaling preserved; cones are
    spanned by the normals of the facets containing each face."""
    bad = redundant_facets_lp(H)
    if bad:
        raise RedundantFacet(f"facets {bad} are redundant; strip them first")
    V = vertices_from_halfspaces(H)
    lattice = face_lattice(H, V)
    cones = {tuple(sorted(face)) for face, _ in lattice.faces}
    return Fan(H.dimension, H.normals, cones)


# ---------------------------------------------------------------------------
# fan predicates
# ---------------------------------------------------------------------------

class FanPredicates(NamedTuple):
    valid: bool
    simplicial: bool
    complete: bool


def fan_is_simplicial(fan: Fan) -> bool:
    for cone in fan.cones:
        if cone and mat_rank([list(fan.rays[i]) for i in cone]) != len(cone):
            return False
    return True


def fan_is_valid(fan: Fan) -> bool:
    """Face closure plus the pairwise-intersection axiom."""
    cone_set = set(fan.cones)
    for cone in fan.cones:
        if not fan.cone_faces(cone) <= cone_set:
            return False
    for a, b in itertools.combinations(fan.cones, 2):
        if not cones_meet_in_common_face(fan.rays, a, b, fan.field,
                                         fan._membership_cache):
            return False
    return True


def fan_is_complete(fan: Fan) -> bool:
    n = fan.dimension
    if n == 1:
        directions = {fan.rays[c[0]][0].sign()
                      for c in fan.cones if len(c) == 1}
        return directions == {1, -1}
    if n == 2:
        return _complete_2d(fan)
    if n == 3:
        return _complete_3d(fan)
    raise DimensionTooHigh(f"completeness check needs n <= 3, got {n}")


def _angle_class(r) -> int:
    """0 for the open upper half plane plus the positive x-axis."""
    s = r[1].sign()
    if s > 0 or (s == 0 and r[0].sign() > 0):
        return 0
    return 1


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _complete_2d(fan: Fan) -> bool:
    """Angular ordering: consecutive rays span sectors below pi that are
    cones of the fan; disjoint interiors then cover the whole circle."""
    k = fan.ray_count
    if k < 3:
        return False

    def cmp(i, j):
        a, b = fan.rays[i], fan.rays[j]
        ca, cb = _angle_class(a), _angle_class(b)
        if ca != cb:
            return -1 if ca < cb else 1
        return -_cross2(a, b).sign()

    order = sorted(range(k), key=cmp_to_key(cmp))
    for i, j in zip(order, order[1:] + order[:1]):
        if _cross2(fan.rays[i], fan.rays[j]).sign() <= 0:
            return False
        if not any(i in c and j in c for c in fan.cones):
            return False
    return True


def _complete_3d(fan: Fan) -> bool:
    """Every wall of a maximal cone shared by exactly two maximal cones,
    and the wall-adjacency graph connected."""
    maximal = fan.maximal_cones()
    maximal = tuple(c for c in maximal if c)
    if not maximal:
        return False
    for c in maximal:
        if mat_rank([list(fan.rays[i]) for i in c]) != 3:
            return False
    wall_owners = {}
    for idx, cone in enumerate(maximal):
        for face in fan.cone_faces(cone):
            if face and mat_rank([list(fan.rays[i]) for i in face]) == 2:
                wall_owners.setdefault(face, []).append(idx)
    if any(len(owners) != 2 for owners in wall_owners.values()):
        return False
    adjacency = {i: set() for i in range(len(maximal))}
    for a, b in wall_owners.values():
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(maximal)


def fan_predicates(fan: Fan) -> FanPredicates:
    """(valid, simplicial, complete); completeness raises DimensionTooHigh
    for n > 3 while the other two are always computed."""
    valid = fan_is_valid(fan)
    simplicial = fan_is_simplicial(fan)
    complete = fan_is_complete(fan)
    return FanPredicates(valid, simplicial, complete)


# ---------------------------------------------------------------------------
# polytopality
# ---------------------------------------------------------------------------

def is_polytopal(fan: Fan) -> Optional[tuple]:
    """Offsets making the fan a normal fan, or None.

    Feasibility of the wall-crossing strict-convexity system: for adjacent
    maximal cones s, s' and the ray k of s' not in s, the vertex of s must
    satisfy the k-th constraint strictly.  A found witness is verified by
    reconstructing the polytope and comparing normal fans."""
    preds = fan_predicates(fan)
    if not (preds.valid and preds.complete and preds.simplicial):
        raise InvalidFan(
            "polytopality requires a valid, complete, simplicial fan; got "
            f"valid={preds.valid} simplicial={preds.simplicial} "
            f"complete={preds.complete}")
    n = fan.dimension
    d = fan.ray_count
    field = fan.field
    maximal = [c for c in fan.maximal_cones() if len(c) == n]
    constraints = []
    zero = field.zero
    for sigma, tau in itertools.permutations(maximal, 2):
        shared = set(sigma) & set(tau)
        if len(shared) != n - 1:
            continue
        (k,) = set(tau) - shared
        A_t = [[fan.rays[j][i] for j in sigma] for i in range(n)]
        c = solve_unique(A_t, list(fan.rays[k]))
        coeffs = [zero] * d
        for pos, j in enumerate(sigma):
            coeffs[j] = c[pos]
        coeffs[k] = coeffs[k] - field.one
        constraints.append((tuple(coeffs), zero, ">"))
    witness = strict_lp_feasible(constraints, d, field)
    if witness is None:
        return None
    H = HalfspaceRep(n, list(zip(fan.rays, witness)))
    rebuilt = normal_fan(H)
    assert set(rebuilt.cones) == set(fan.cones), \
        "witness reconstruction changed the fan combinatorics"
    return witness


def fans_equivalent(f1: Fan, f2: Fan) -> bool:
    """Equality up to positive ray scaling and ray reordering."""
    if f1.dimension != f2.dimension or f1.ray_count != f2.ray_count:
        return False
    perm = []
    for r in f1.rays:
        matches = [j for j, s in enumerate(f2.rays)
                   if positively_proportional(r, s)]
        if len(matches) != 1:
            return False
        perm.append(matches[0])
    if len(set(perm)) != len(perm):
        return False
    mapped = {tuple(sorted(perm[i] for i in cone)) for cone in f1.cones}
    return mapped == set(f2.cones)
