import pytest

from necgraph.constructions import GroupSpec, bose_sts, cayley_table
from necgraph.geometry import (
    IncidenceStructure,
    LatinSquare,
    PgClass,
    PgParams,
    SteinerTripleSystem,
    classify,
    collinearity_graph,
    dual,
    fano_plane,
    incidence_graph,
    latin_square_to_net,
    line_cliques,
    partial_geometry_violation,
    point_graph,
    star_geometry,
    structures_isomorphic,
    sts_to_dual_geometry,
    triangle_partition_check,
    verify_partial_geometry,
)
from necgraph.graph import is_isomorphic_small
from necgraph.srg import SrgParams, srg_params

from conftest import brute_srg


def cyclic_sts13():
    base = [(0, 1, 4), (0, 2, 7)]
    return SteinerTripleSystem(13, tuple(tuple((x + i) % 13 for x in b) for b in base for i in range(13)))


def net(name):
    return latin_square_to_net(cayley_table(GroupSpec.parse(name)))


def test_pg_params_validation():
    assert PgParams.parse("7,2,2") == PgParams(7, 2, 2)
    assert str(PgParams(7, 2, 2)) == "7,2,2"
    for bad in ((1, 2, 1), (3, 0, 1), (3, 2, 0), (5, 1, 3)):
        with pytest.raises(ValueError):
            PgParams(*bad)
    with pytest.raises(ValueError):
        PgParams.parse("7,2")


def test_verify_examples(z2_3_net):
    assert verify_partial_geometry(star_geometry()) == PgParams(3, 1, 2)
    assert verify_partial_geometry(net("z2^3")) == PgParams(7, 2, 2)
    assert verify_partial_geometry(fano_plane()) == PgParams(2, 2, 3)
    with pytest.raises(ValueError):
        point_graph(fano_plane())
    # The dual of the star geometry has lines of size 2, so s = 1.
    assert verify_partial_geometry(dual(star_geometry())) is None
    assert "nondegeneracy" in partial_geometry_violation(dual(star_geometry()))


def test_violation_reasons():
    two_points = IncidenceStructure(4, [[0, 1, 2], [0, 1, 3]])
    assert partial_geometry_violation(two_points).startswith("partial-linear-space")
    sizes = IncidenceStructure(5, [[0, 1, 2], [3, 4]])
    assert partial_geometry_violation(sizes).startswith("line-size")
    assert partial_geometry_violation(star_geometry()) is None


def test_incidence_structure_validation():
    with pytest.raises(ValueError):
        IncidenceStructure(3, [[0, 0, 1]])
    with pytest.raises(ValueError):
        IncidenceStructure(3, [[0, 3]])
    with pytest.raises(ValueError):
        IncidenceStructure(3, [[0, 1], [1, 0]])


def test_point_graph_matches_collinearity():
    geo = star_geometry()
    assert point_graph(geo) == collinearity_graph(geo)
    assert brute_srg(point_graph(geo)) == (10, 6, 3, 4)


def test_dual_involution():
    for geo in (star_geometry(), fano_plane(), net("z3"), sts_to_dual_geometry(bose_sts(9))):
        assert dual(dual(geo)) == geo


def test_fano_self_dual():
    assert structures_isomorphic(fano_plane(), dual(fano_plane()))
    other = IncidenceStructure(7, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]])
    assert structures_isomorphic(fano_plane(), other)


def test_structure_isomorphism_respects_points_and_lines():
    # Star geometry versus its dual: 10 points/5 lines against 5 points/10 lines.
    assert not structures_isomorphic(star_geometry(), dual(star_geometry()))
    with pytest.raises(ValueError):
        structures_isomorphic(net("z4"), net("z4"))


def test_incidence_graph_shape():
    g = incidence_graph(fano_plane())
    assert g.order == 14 and g.edge_count() == 21
    assert set(g.degrees()) == {3}


@pytest.mark.parametrize(
    "params,labels",
    [
        ((3, 1, 2), {PgClass.DUAL_DESIGN}),
        ((7, 2, 2), {PgClass.NET}),
        ((2, 2, 3), {PgClass.DESIGN, PgClass.DUAL_DESIGN}),
        ((5, 2, 3), {PgClass.DUAL_DESIGN}),
        ((3, 3, 1), {PgClass.GENERALIZED_QUADRANGLE}),
        ((2, 3, 2), {PgClass.TRANSVERSAL_DESIGN}),
        ((5, 6, 3), {PgClass.PROPER}),
    ],
)
def test_classify(params, labels):
    assert classify(PgParams(*params)) == labels


def test_latin_square_validation():
    with pytest.raises(ValueError):
        LatinSquare(3, ((0, 1, 2), (1, 2, 0), (1, 2, 0)))
    with pytest.raises(ValueError):
        LatinSquare(2, ((0, 1), (1, 0), (0, 1)))
    with pytest.raises(ValueError):
        latin_square_to_net(cayley_table(GroupSpec.cyclic(2)))


def test_small_nets():
    z3 = point_graph(net("z3"))
    assert srg_params(z3) == SrgParams(9, 6, 3, 6)
    assert brute_srg(z3) == (9, 6, 3, 6)
    for name in ("z8", "z2^3", "z4xz2", "d4", "q8"):
        g = point_graph(net(name))
        assert srg_params(g) == SrgParams(64, 21, 8, 6)


def test_net_numbering():
    geo = net("z3")
    assert geo.lines[0] == (0, 1, 2)
    assert geo.lines[3] == (0, 3, 6)
    # Symbol 0 of Z3 sits at (0,0), (1,2), (2,1).
    assert geo.lines[6] == (0, 5, 7)


def test_sts_validation():
    with pytest.raises(ValueError):
        SteinerTripleSystem(7, ((0, 1, 2),))
    with pytest.raises(ValueError):
        SteinerTripleSystem(7, tuple((0, 1, 2) for _ in range(7)))


def test_sts13_dual_geometry():
    geo = sts_to_dual_geometry(cyclic_sts13())
    assert verify_partial_geometry(geo) == PgParams(5, 2, 3)
    g = point_graph(geo)
    assert srg_params(g) == SrgParams(26, 15, 8, 9)
    assert brute_srg(g) == (26, 15, 8, 9)


def test_sts7_refused():
    fano_sts = SteinerTripleSystem(7, fano_plane().lines)
    geo = sts_to_dual_geometry(fano_sts)
    assert verify_partial_geometry(geo) == PgParams(2, 2, 3)
    with pytest.raises(ValueError):
        point_graph(geo)


def test_bose_sts_point_graphs():
    g9 = point_graph(sts_to_dual_geometry(bose_sts(9)))
    assert srg_params(g9) == SrgParams(12, 9, 6, 9)
    g15 = point_graph(sts_to_dual_geometry(bose_sts(15)))
    assert srg_params(g15) == SrgParams(35, 18, 9, 9)


def test_triangle_partition_net(z2_3_net):
    for x in range(0, 64, 7):
        assert triangle_partition_check(z2_3_net, x)


def test_triangle_partition_cyclic_fails():
    g = point_graph(net("z8"))
    assert not all(triangle_partition_check(g, x) for x in range(g.order))


def test_triangle_partition_z3_with_explicit_cliques():
    geo = net("z3")
    g = point_graph(geo)
    # K_{3,3,3}: the clique split of N(0) is not unique, so it must be supplied.
    with pytest.raises(ValueError):
        line_cliques(g, 0)
    cliques = [sum(1 << p for p in geo.lines[i] if p != 0) for i in geo.lines_through(0)]
    assert not triangle_partition_check(g, 0, cliques)


def test_triangle_partition_rejects_bad_cliques(z2_3_net):
    with pytest.raises(ValueError):
        triangle_partition_check(z2_3_net, 0, [1, 2, 4])


def test_text_round_trips():
    for geo in (star_geometry(), net("z3")):
        assert IncidenceStructure.from_text(geo.to_text()) == geo
    ls = cayley_table(GroupSpec.parse("d4"))
    assert LatinSquare.from_text(ls.to_text()) == ls
    sts = bose_sts(15)
    assert SteinerTripleSystem.from_text(sts.to_text()) == sts
    assert IncidenceStructure.from_text("# comment\npg 3 1\n0 1 2\n").lines == ((0, 1, 2),)
    with pytest.raises(ValueError):
        IncidenceStructure.from_text("pg 3 2\n0 1 2\n")
    with pytest.raises(ValueError):
        LatinSquare.from_text("ls x\n")


def test_star_point_graph_is_petersen_complement(pet):
    from necgraph.graph import complement

    assert is_isomorphic_small(point_graph(star_geometry()), complement(pet))
