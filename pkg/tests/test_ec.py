from itertools import combinations

import pytest

from necgraph.constructions import FieldSpec, complete_graph, cycle_graph, empty_graph, paley_graph
from necgraph.ec import (
    EcReport,
    find_induced_embedding,
    gamma,
    graph_catalog,
    is_n_ec,
    is_r_full,
    max_ec,
    naive_is_n_ec,
)
from necgraph.graph import Graph, VertexSet, complement, induced_subgraph, is_isomorphic_small

from conftest import random_graph


def vs(g, items):
    return VertexSet.of(g.order, items)


def test_gamma_examples(pet):
    k4 = complete_graph(4)
    assert gamma(k4, vs(k4, [0]), vs(k4, [])) == 3
    # Brute force: every nonadjacent pair of Petersen has exactly one common neighbor.
    for x, y in combinations(range(10), 2):
        if pet.adjacent(x, y):
            continue
        common = [z for z in range(10) if pet.adjacent(x, z) and pet.adjacent(y, z)]
        assert len(common) == 1
        assert gamma(pet, vs(pet, [x, y]), vs(pet, [])) == 1


def test_gamma_rejects_overlap():
    g = complete_graph(4)
    with pytest.raises(ValueError):
        gamma(g, vs(g, [0, 1]), vs(g, [1]))


def test_gamma_sum_identity(rng):
    for _ in range(100):
        v = rng.randint(3, 16)
        g = random_graph(rng, v, rng.random())
        n = rng.randint(1, min(4, v - 1))
        subset = rng.sample(range(v), n)
        total = sum(
            gamma(
                g,
                vs(g, [x for i, x in enumerate(subset) if m >> i & 1]),
                vs(g, [x for i, x in enumerate(subset) if not m >> i & 1]),
            )
            for m in range(1 << n)
        )
        assert total == v - n


def test_is_n_ec_examples(sp4, z2_3_net):
    assert is_n_ec(cycle_graph(5), 1).holds
    report = is_n_ec(sp4, 3)
    assert not report.holds
    a, b = report.witness
    support = sorted((a | b).sorted())
    vectors = [x + 1 for x in support]
    assert vectors[0] ^ vectors[1] == vectors[2]
    assert gamma(sp4, a, b) == 0
    triple = vs(sp4, support)
    assert gamma(sp4, triple, vs(sp4, [])) == 0
    assert is_n_ec(z2_3_net, 3).holds


def test_witness_is_first_in_enumeration_order():
    # Subset {0}: mask 0 puts vertex 0 in B, which any other isolated vertex extends.
    # Mask 1 puts it in A, and nothing is adjacent to it.
    report = is_n_ec(empty_graph(4), 1)
    assert report.witness_lists() == ([0], [])
    report = is_n_ec(complete_graph(4), 1)
    assert report.witness_lists() == ([], [0])


def test_is_n_ec_rejects_out_of_range():
    with pytest.raises(ValueError):
        is_n_ec(cycle_graph(5), 0)
    with pytest.raises(ValueError):
        is_n_ec(cycle_graph(5), 5)
    with pytest.raises(ValueError):
        naive_is_n_ec(cycle_graph(5), 6)


def test_report_requires_witness_on_failure():
    with pytest.raises(ValueError):
        EcReport(2, False)


def test_max_ec_examples(pet, z2_3_net):
    assert max_ec(complete_graph(4), 3) == 0
    assert max_ec(pet, 3) == 1
    assert max_ec(z2_3_net, 4) == 3


def test_naive_examples():
    assert not naive_is_n_ec(cycle_graph(5), 2).holds
    assert naive_is_n_ec(paley_graph(FieldSpec(3, 2)), 2).holds


def test_naive_and_fast_agree_on_random_graphs(rng):
    for _ in range(200):
        v = rng.randint(4, 16)
        g = random_graph(rng, v, rng.choice([0.3, 0.5, 0.7]))
        for n in range(1, min(3, v - 1) + 1):
            assert is_n_ec(g, n) == naive_is_n_ec(g, n)


def test_parallel_matches_serial(z2_3_net, sp6, rng):
    assert is_n_ec(sp6, 3, jobs=3) == is_n_ec(sp6, 3)
    assert is_n_ec(z2_3_net, 4, jobs=2) == is_n_ec(z2_3_net, 4)
    g = random_graph(rng, 14, 0.5)
    assert is_n_ec(g, 3, jobs=4) == is_n_ec(g, 3)


def test_complement_duality_and_monotonicity(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(5, 14), 0.5)
        h = complement(g)
        levels = [is_n_ec(g, n).holds for n in range(1, 4)]
        assert levels == [is_n_ec(h, n).holds for n in range(1, 4)]
        assert levels == sorted(levels, reverse=True)


def test_neighborhood_heredity(z2_3_net):
    for x in range(z2_3_net.order):
        h = induced_subgraph(z2_3_net, z2_3_net.neighborhood(x))
        assert is_n_ec(h, 2).holds


# -- catalog and fullness ---------------------------------------------------


@pytest.mark.parametrize("r,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_catalog_counts_against_bruteforce_dedupe(r, count):
    pairs = list(combinations(range(r), 2))
    reps = []
    for code in range(1 << len(pairs)):
        g = Graph.from_edges(r, [p for i, p in enumerate(pairs) if code >> i & 1])
        if not any(is_isomorphic_small(g, h) for h in reps):
            reps.append(g)
    assert len(reps) == count
    catalog = graph_catalog(r)
    assert len(catalog) == count
    for a, b in combinations(catalog, 2):
        assert not is_isomorphic_small(a, b)


def test_catalog_guard():
    with pytest.raises(ValueError):
        graph_catalog(6)
    with pytest.raises(ValueError):
        is_r_full(complete_graph(7), 6)


def test_r_full_examples(sp4, sp6):
    report = is_r_full(complete_graph(5), 2)
    assert not report.holds
    assert report.missing == empty_graph(2)
    assert is_r_full(sp4, 3).holds
    assert is_r_full(sp6, 5).holds


def test_missing_graph_really_missing():
    g = cycle_graph(6)
    report = is_r_full(g, 3)
    assert not report.holds
    h = report.missing
    for subset in combinations(range(6), 3):
        assert not is_isomorphic_small(induced_subgraph(g, subset), h)


def test_embedding_is_induced(sp6):
    for h in graph_catalog(5):
        phi = find_induced_embedding(sp6, h)
        assert phi is not None and len(set(phi)) == 5
        for a, b in combinations(range(5), 2):
            assert sp6.adjacent(phi[a], phi[b]) == h.adjacent(a, b)


def test_ec_implies_full(z2_3_net):
    assert is_n_ec(z2_3_net, 3).holds
    assert is_r_full(z2_3_net, 4).holds
    p9 = paley_graph(FieldSpec(3, 2))
    assert is_n_ec(p9, 2).holds and is_r_full(p9, 3).holds


def test_anchored_fullness(z2_3_net):
    # Every 4-vertex graph occurs as an induced subgraph through each vertex.
    for x in (0, 17, 42, 63):
        report = is_r_full(z2_3_net, 4, anchor=x)
        assert report.holds


def test_anchored_fullness_can_fail_where_plain_holds():
    # K1 + K3 disjoint union contains an edge and a non-edge, but vertex 0 is isolated.
    g = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3)])
    assert is_r_full(g, 2).holds
    assert not is_r_full(g, 2, anchor=0).holds


def test_sp4_three_full_but_not_three_ec(sp4):
    assert is_r_full(sp4, 3).holds
    assert not is_n_ec(sp4, 3).holds


def test_report_serialization(sp4):
    report = is_n_ec(sp4, 3)
    kv = report.to_kv()
    assert "property=nec\nn=3\nholds=false\n" in kv
    assert "witness_a=0\nwitness_b=1,2\n" in kv
    assert "fails" in report.to_text()
