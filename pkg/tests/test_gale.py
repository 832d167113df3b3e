import pytest

from conftest import Q, qvec
from quasitoric.configuration import (
    Triangulation,
    VectorConfiguration,
    augment,
    config_validate,
)
from quasitoric.corpus import (
    fifth_roots_of_unity,
    hirzebruch_configuration_data,
    kite_configuration_data,
    pentagon_field,
    sqrt2_field,
    thick_rhombus_configuration_data,
    thin_rhombus_facets,
    unit_square_facets,
)
from quasitoric.errors import NotBalanced, NotOdd, NotSpanning
from quasitoric.fan import normal_fan
from quasitoric.gale import chamber_check, gale_dual
from quasitoric.linalg import dot
from quasitoric.polytope import HalfspaceRep
from quasitoric.quasilattice import ql_span
from quasitoric.triple import FundamentalTriple


def build(field, data):
    vectors, maximal, ghosts = data
    return (VectorConfiguration(2, vectors, ghosts),
            Triangulation(maximal))


def corpus_configurations():
    k = pentagon_field()
    k2 = sqrt2_field()
    out = [
        ("thick-rhombus", *build(k, thick_rhombus_configuration_data(k))),
        ("hirzebruch-sqrt2",
         *build(k2, hirzebruch_configuration_data(k2, k2.alpha))),
        ("hirzebruch-2",
         *build(Q, hirzebruch_configuration_data(Q, Q.element(2)))),
    ]
    # augmented thin rhombus and square
    H = HalfspaceRep(2, thin_rhombus_facets(k))
    fan = normal_fan(H)
    aug = augment(FundamentalTriple(fan, ql_span(
        list(fifth_roots_of_unity(k))), fan.rays))
    out.append(("thin-rhombus-augmented", aug.configuration,
                aug.triangulation))
    Hs = HalfspaceRep(2, unit_square_facets(Q))
    fs = normal_fan(Hs)
    aug2 = augment(FundamentalTriple(fs, ql_span(
        [qvec(1, 0), qvec(0, 1)]), fs.rays))
    out.append(("square-augmented", aug2.configuration,
                aug2.triangulation))
    return out


class TestGaleDual:
    def test_kernel_orthogonality_everywhere(self):
        for name, config, tri in corpus_configurations():
            gale = gale_dual(config, tri)
            matrix = [list(row) for row in zip(*config.vectors)]
            for krow in gale.kernel_rows:
                for vrow in matrix:
                    assert dot(vrow, krow).is_zero(), name
            assert len(gale.kernel_rows) == 2 * gale.m + 1, name
            assert config.count - config.dimension == 2 * gale.m + 1, name

    def test_hirzebruch_m_one(self):
        k = sqrt2_field()
        config, tri = build(k, hirzebruch_configuration_data(k, k.alpha))
        gale = gale_dual(config, tri)
        assert gale.m == 1
        assert len(gale.points) == 5

    def test_thick_rhombus_m_two(self):
        k = pentagon_field()
        config, tri = build(k, thick_rhombus_configuration_data(k))
        gale = gale_dual(config, tri)
        assert gale.m == 2
        assert len(gale.points) == 7

    def test_chamber_cardinalities(self):
        for name, config, tri in corpus_configurations():
            gale = gale_dual(config, tri)
            expected = config.count - config.dimension
            assert gale.virtual_chamber, name
            for sigma in gale.virtual_chamber:
                assert len(sigma) == expected, name

    def test_kite_not_balanced(self):
        k = pentagon_field()
        config, tri = build(k, kite_configuration_data(k))
        with pytest.raises(NotBalanced):
            gale_dual(config, tri)

    def test_even_defect_rejected(self):
        vectors = [qvec(1, 0), qvec(0, 1), qvec(-1, 0), qvec(0, -1)]
        config = VectorConfiguration(2, vectors)
        with pytest.raises(NotOdd):
            gale_dual(config)

    def test_not_spanning_rejected(self):
        vectors = [qvec(1, 0), qvec(-1, 0), qvec(2, 0), qvec(-2, 0),
                   qvec(0, 0)]
        with pytest.raises(NotSpanning):
            gale_dual(VectorConfiguration(2, vectors))

    def test_zero_leaf_dimension(self):
        # balanced with p - n = 1: the dual lives in C^0
        vectors = [qvec(1, 0), qvec(0, 1), qvec(-1, -1)]
        config = VectorConfiguration(2, vectors)
        tri = Triangulation([(0, 1), (1, 2), (0, 2)])
        gale = gale_dual(config, tri)
        assert gale.m == 0
        report = chamber_check(gale)
        assert report.all_interior

    def test_determinism(self):
        k = pentagon_field()
        config, tri = build(k, thick_rhombus_configuration_data(k))
        g1 = gale_dual(config, tri)
        g2 = gale_dual(config, tri)
        assert g1.points == g2.points
        assert g1.virtual_chamber == g2.virtual_chamber
        assert g1.kernel_rows == g2.kernel_rows


class TestChamberCheck:
    def test_report_shape(self):
        k = sqrt2_field()
        config, tri = build(k, hirzebruch_configuration_data(k, k.alpha))
        gale = gale_dual(config, tri)
        report = chamber_check(gale)
        assert len(report.members) == 4
        for member in report.members:
            assert member.cardinality == 3

    def test_vertex_omission_fails_interior(self):
        """A member omitting an index whose dual point is a hull vertex
        reports no interior: a separating functional exists."""
        k = sqrt2_field()
        config, tri = build(k, hirzebruch_configuration_data(k, k.alpha))
        gale = gale_dual(config, tri)
        # the dual points include extreme points; a singleton member
        # around any nonzero point cannot contain 0 in its hull interior
        nonzero = next(
            j for j, (re, im) in enumerate(gale.points)
            if any(not x.is_zero() for x in re + im))
        report = chamber_check(gale, chamber=((nonzero,),))
        assert not report.members[0].zero_in_interior

    def test_never_raises_on_odd_members(self):
        k = sqrt2_field()
        config, tri = build(k, hirzebruch_configuration_data(k, k.alpha))
        gale = gale_dual(config, tri)
        report = chamber_check(gale, chamber=((), (0, 1, 2, 3, 4)))
        assert not report.members[0].zero_in_interior
        assert isinstance(report.members[1].zero_in_interior, bool)
