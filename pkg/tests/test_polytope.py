import random
from fractions import Fraction

import pytest

from conftest import Q, as_fractions, qvec
from quasitoric.corpus import (
    pentagon_facets,
    pentagon_field,
    sqrt2_field,
    trapezoid_facets,
    unit_square_facets,
)
from quasitoric.errors import (
    DegenerateDimension,
    DimensionTooHigh,
    FacetBudgetExceeded,
    NotFullDimensional,
    UnboundedPolytope,
)
from quasitoric.fan import positively_proportional
from quasitoric.linalg import dot
from quasitoric.polytope import (
    HalfspaceRep,
    face_lattice,
    halfspaces_from_vertices,
    is_simple,
    vertices_from_halfspaces,
)


def square():
    return HalfspaceRep(2, unit_square_facets(Q))


class TestConstruction:
    def test_unbounded(self):
        with pytest.raises(UnboundedPolytope):
            HalfspaceRep(2, [(qvec(1, 0), Q.zero), (qvec(0, 1), Q.zero)])

    def test_degenerate(self):
        facets = [(qvec(1), Q.zero), (qvec(-1), Q.zero)]
        with pytest.raises(DegenerateDimension):
            HalfspaceRep(1, facets)

    def test_interior_point_certified(self):
        H = square()
        assert all((dot(H.interior_point, n) - o).sign() > 0
                   for n, o in zip(H.normals, H.offsets))


class TestVertexEnumeration:
    def test_unit_square(self):
        V = vertices_from_halfspaces(square())
        coords = {as_fractions(v) for v in V.vertices}
        assert coords == {(0, 0), (1, 0), (0, 1), (1, 1)}
        assert all(len(a) == 2 for a in V.active)
        assert V.redundant_facets == ()

    @pytest.mark.parametrize("a_text", ["1", "2", "3", "1/2", "sqrt2"])
    def test_trapezoid_vertices(self, a_text):
        if a_text == "sqrt2":
            k = sqrt2_field()
            a = k.alpha
        else:
            k = Q
            a = k.element(a_text)
        H = HalfspaceRep(2, trapezoid_facets(k, a))
        V = vertices_from_halfspaces(H)
        expected = {
            (k.zero, k.zero), (k.one, k.zero), (k.zero, k.one),
            (a + 1, k.one),
        }
        assert set(V.vertices) == expected

    def test_pentagon_against_cramer_oracle(self):
        k = pentagon_field()
        H = HalfspaceRep(2, pentagon_facets(k))
        V = vertices_from_halfspaces(H)
        assert len(V.vertices) == 5
        assert all(len(a) == 2 for a in V.active)
        # oracle: solve each adjacent-pair system by Cramer's rule
        oracle = set()
        for i in range(5):
            j = (i + 1) % 5
            (a, b), la = H.normals[i], H.offsets[i]
            (c, d), lb = H.normals[j], H.offsets[j]
            det = a * d - b * c
            x = (la * d - b * lb) / det
            y = (a * lb - la * c) / det
            oracle.add((x, y))
        assert set(V.vertices) == oracle
        # regularity: equal squared edge lengths
        verts = sorted(oracle, key=lambda v: 0)  # set -> list
        lengths = set()
        ordered = list(V.vertices)
        for i, v in enumerate(ordered):
            for w in ordered[i + 1:]:
                diff = (v[0] - w[0], v[1] - w[1])
                lengths.add(dot(diff, diff))
        # 5 edges and 5 diagonals: exactly two distinct squared lengths
        assert len(lengths) == 2

    def test_redundant_facet_reported(self):
        facets = unit_square_facets(Q) + [(qvec(1, 1), Q.element(-1))]
        H = HalfspaceRep(2, facets)
        V = vertices_from_halfspaces(H)
        assert V.redundant_facets == (4,)

    def test_tangent_facet_is_active_but_not_a_facet(self):
        # x + y >= 0 touches the square only at the origin
        facets = unit_square_facets(Q) + [(qvec(1, 1), Q.zero)]
        H = HalfspaceRep(2, facets)
        V = vertices_from_halfspaces(H)
        assert V.redundant_facets == ()
        origin = next(a for v, a in zip(V.vertices, V.active)
                      if as_fractions(v) == (0, 0))
        assert 4 in origin and len(origin) == 3

    def test_facet_budget(self):
        facets = [(qvec(1, 0), Q.element(-1 - j)) for j in range(28)]
        facets += [(qvec(-1, 0), Q.element(-1)), (qvec(0, 1), Q.zero),
                   (qvec(0, -1), Q.element(-1))]
        H = HalfspaceRep(2, facets)
        with pytest.raises(FacetBudgetExceeded):
            vertices_from_halfspaces(H)


class TestHull:
    def test_square_roundtrip(self):
        H = square()
        V = vertices_from_halfspaces(H)
        H2 = halfspaces_from_vertices(V.vertices)
        assert H2.facet_count == 4
        matched = 0
        for n, o in zip(H.normals, H.offsets):
            for n2, o2 in zip(H2.normals, H2.offsets):
                if positively_proportional(n, n2):
                    # same halfspace up to the same positive factor
                    lead = next(i for i, x in enumerate(n) if not x.is_zero())
                    factor = n[lead] / n2[lead]
                    assert o == factor * o2
                    matched += 1
        assert matched == 4

    def test_pentagon_roundtrip(self):
        k = pentagon_field()
        H = HalfspaceRep(2, pentagon_facets(k))
        V = vertices_from_halfspaces(H)
        H2 = halfspaces_from_vertices(V.vertices)
        assert H2.facet_count == 5
        for n in H.normals:
            assert sum(1 for n2 in H2.normals
                       if positively_proportional(n, n2)) == 1

    def test_collinear_points(self):
        with pytest.raises(NotFullDimensional):
            halfspaces_from_vertices([qvec(0, 0), qvec(1, 1), qvec(2, 2)])

    def test_dimension_guard(self):
        pts = [qvec(*([0] * 4))] * 5
        with pytest.raises(DimensionTooHigh):
            halfspaces_from_vertices(pts)

    def test_interval_hull(self):
        H = halfspaces_from_vertices([qvec(3), qvec(-1), qvec(2)])
        V = vertices_from_halfspaces(H)
        assert {as_fractions(v) for v in V.vertices} == {(-1,), (3,)}

    def test_square_pyramid(self):
        pts = [qvec(1, 1, 0), qvec(1, -1, 0), qvec(-1, 1, 0),
               qvec(-1, -1, 0), qvec(0, 0, 1)]
        H = halfspaces_from_vertices(pts)
        assert H.facet_count == 5
        V = vertices_from_halfspaces(H)
        assert len(V.vertices) == 5
        assert not is_simple(H, V)
        apex = next(a for v, a in zip(V.vertices, V.active)
                    if as_fractions(v) == (0, 0, 1))
        assert len(apex) == 4


class TestFaceLattice:
    def test_square_counts(self):
        H = square()
        V = vertices_from_halfspaces(H)
        fl = face_lattice(H, V)
        assert len(fl.of_dimension(2)) == 1
        assert len(fl.of_dimension(1)) == 4
        assert len(fl.of_dimension(0)) == 4

    def test_pentagon_counts(self):
        k = pentagon_field()
        H = HalfspaceRep(2, pentagon_facets(k))
        V = vertices_from_halfspaces(H)
        fl = face_lattice(H, V)
        assert len(fl.of_dimension(1)) == 5
        assert len(fl.of_dimension(0)) == 5

    def test_trapezoid_counts(self):
        H = HalfspaceRep(2, trapezoid_facets(Q, Q.one))
        V = vertices_from_halfspaces(H)
        fl = face_lattice(H, V)
        assert len(fl.of_dimension(1)) == 4
        assert len(fl.of_dimension(0)) == 4

    def test_any_polygon_is_simple(self):
        k = pentagon_field()
        H = HalfspaceRep(2, pentagon_facets(k))
        V = vertices_from_halfspaces(H)
        assert is_simple(H, V)


class TestRoundtripProperty:
    """H <-> V roundtrip on random rational polygons, >= 1000 cases."""

    def test_random_polygons(self):
        rng = random.Random(20240620)
        done = 0
        attempts = 0
        while done < 1000 and attempts < 4000:
            attempts += 1
            count = rng.randint(3, 6)
            pts = [qvec(Fraction(rng.randint(-8, 8), rng.choice([1, 2, 4])),
                        Fraction(rng.randint(-8, 8), rng.choice([1, 2, 4])))
                   for _ in range(count)]
            try:
                H = halfspaces_from_vertices(pts)
            except NotFullDimensional:
                continue
            V = vertices_from_halfspaces(H)
            # every input point is inside; hull vertices are among inputs
            assert all(H.contains(p) for p in pts)
            assert set(V.vertices) <= set(pts)
            H2 = halfspaces_from_vertices(V.vertices)
            assert H2.facet_count == H.facet_count
            for n, o in zip(H.normals, H.offsets):
                hits = [(n2, o2) for n2, o2 in zip(H2.normals, H2.offsets)
                        if positively_proportional(n, n2)]
                assert len(hits) == 1
            done += 1
        assert done == 1000
