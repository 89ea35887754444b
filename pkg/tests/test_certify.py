import json
from fractions import Fraction

import pytest

from oddsub.certify import (
    Certificate,
    CertificateError,
    PreconditionError,
    bipartite_subgraph_cert,
    check_factor,
    clawfree_cert,
    counterexample_for_order,
    factor_23,
    is_bipartite_no_isolated,
    linegraph_cert,
    linegraph_cert_extended,
    odd_cert_cycle,
    odd_cert_path,
    order_split,
    petersen_two_factor,
    planar_reduction,
    revalidate,
)
from oddsub.certify.certificate import every_third_pair, path_pick
from oddsub.certify.factors import euler_circuit, hopcroft_karp
from oddsub.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    graph_F,
    path_graph,
    petersen_graph,
    random_regular,
    star_graph,
)
from oddsub.graph import Coloring, build_graph, chromatic_number, disjoint_union, line_graph
from oddsub.oracle import fo_exact


@pytest.mark.parametrize("length", range(3, 22))
def test_cycle_certificate(length):
    cert = odd_cert_cycle(length)
    assert cert.size == 2 * (length // 3)
    assert cert.is_valid()


@pytest.mark.parametrize("t", range(2, 20))
def test_path_certificate(t):
    cert = odd_cert_path(t)
    assert cert.is_valid() and cert.size >= Fraction(t, 2)


def test_pickers():
    assert every_third_pair(list("abcdefg")) == list("abde")
    assert path_pick(list("abcde")) == list("abde")
    with pytest.raises(PreconditionError):
        path_pick([1])


def test_certificate_check_and_json():
    cert = odd_cert_cycle(9)
    data = json.loads(json.dumps(cert.to_json()))
    assert data["theorem_tag"] == "cycle" and data["bound"] == {"num": 9, "den": 2}
    assert revalidate(data, cycle_graph(9))
    data["witness"] = data["witness"][:-1]
    data["size"] -= 1
    assert not revalidate(data, cycle_graph(9))
    bad = Certificate((0, 1, 2), "G", Fraction(1), "x", (), cycle_graph(6))
    assert not bad.is_valid()
    with pytest.raises(CertificateError):
        bad.check()


def test_clawfree_on_cycles_and_line_graphs():
    for length in range(3, 17):
        G = cycle_graph(length)
        cert = clawfree_cert(G)
        assert cert.is_valid() and cert.size * chromatic_number(G)[0] >= G.n
    L = line_graph(petersen_graph()).lg
    cert = clawfree_cert(L)
    assert cert.is_valid() and revalidate(cert.to_json(), L)


def test_clawfree_preconditions():
    with pytest.raises(PreconditionError, match="claw"):
        clawfree_cert(star_graph(3))
    with pytest.raises(PreconditionError, match="isolated"):
        clawfree_cert(disjoint_union(cycle_graph(3), build_graph(1, [])))
    with pytest.raises(PreconditionError):
        clawfree_cert(cycle_graph(4), Coloring((0, 0, 1, 1), 2))


def test_clawfree_with_supplied_coloring():
    G = cycle_graph(6)
    cert = clawfree_cert(G, Coloring((0, 1, 2, 0, 1, 2), 3))
    assert cert.bound == 2 and cert.is_valid()


def test_bipartite_subgraph_cert():
    G = complete_graph(5)
    _, col = chromatic_number(G)
    h = bipartite_subgraph_cert(G, col)
    assert is_bipartite_no_isolated(G, h) and len(h) >= Fraction(2 * 5, 5)
    L = line_graph(complete_graph(5)).lg
    _, col = chromatic_number(L)
    h = bipartite_subgraph_cert(L, col)
    assert is_bipartite_no_isolated(L, h) and len(h) * col.k >= 2 * L.n


def test_bipartite_cert_two_colours_keeps_everything():
    G = cycle_graph(30)
    col = Coloring(tuple(i % 2 for i in range(30)), 2)
    assert len(bipartite_subgraph_cert(G, col)) == 30


def test_bipartite_cert_rejects_bad_input():
    with pytest.raises(PreconditionError):
        bipartite_subgraph_cert(cycle_graph(4), Coloring((0, 0, 1, 1), 2))
    with pytest.raises(PreconditionError):
        bipartite_subgraph_cert(build_graph(2, []), Coloring((0, 1), 2))


def test_euler_and_matching():
    G = complete_graph(5)
    circuit = euler_circuit(G)
    assert circuit[0] == circuit[-1] and len(circuit) == G.m + 1
    assert hopcroft_karp([[0, 1], [0], [2]], 3) == [1, 0, 2]


@pytest.mark.parametrize("G", [complete_graph(5), cycle_graph(7), random_regular(12, 4, seed=1), random_regular(11, 6, seed=2)])
def test_petersen_two_factor(G):
    factor = petersen_two_factor(G)
    assert check_factor(G, factor)
    assert sum(factor.cycle_lengths()) == G.n


def test_two_factor_preconditions():
    with pytest.raises(PreconditionError):
        petersen_two_factor(petersen_graph())
    with pytest.raises(PreconditionError):
        petersen_two_factor(disjoint_union(cycle_graph(3), cycle_graph(3)))


@pytest.mark.parametrize("G", [petersen_graph(), complete_graph(6), random_regular(10, 5, seed=4), complete_bipartite(5, 5)])
def test_factor_23(G):
    factor = factor_23(G)
    assert check_factor(G, factor)


def test_linegraph_cert_regular_examples():
    hypercube = build_graph(8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b])
    for G in [complete_bipartite(3, 3), complete_graph(4), cycle_graph(8), complete_bipartite(4, 4), hypercube]:
        cert = linegraph_cert(G)
        L = line_graph(G).lg
        assert cert.is_valid() and cert.size * 2 >= G.n
        assert revalidate(cert.to_json(), G)
        assert fo_exact(L).value >= cert.size


def test_linegraph_cert_preconditions():
    with pytest.raises(PreconditionError, match="C_5"):
        linegraph_cert(cycle_graph(5))
    with pytest.raises(PreconditionError, match="regular"):
        linegraph_cert(path_graph(4))
    with pytest.raises(PreconditionError, match="connected"):
        linegraph_cert(disjoint_union(cycle_graph(4), cycle_graph(4)))


def test_linegraph_extended():
    for G in [complete_graph(5), random_regular(10, 4, seed=3), disjoint_union(complete_graph(5), complete_graph(5))]:
        cert = linegraph_cert_extended(G)
        assert cert.is_valid() and 5 * cert.size >= 2 * G.n
    with pytest.raises(PreconditionError):
        linegraph_cert_extended(petersen_graph())


def test_planar_reduction():
    for G in [cycle_graph(5), cycle_graph(7), cycle_graph(8), disjoint_union(cycle_graph(5), cycle_graph(6))]:
        h = planar_reduction(G, planar_asserted=True)
        assert is_bipartite_no_isolated(G, h) and 3 * len(h) >= 2 * G.n
    with pytest.raises(PreconditionError, match="planar"):
        planar_reduction(cycle_graph(5), planar_asserted=False)
    with pytest.raises(PreconditionError, match="girth"):
        planar_reduction(cycle_graph(4), planar_asserted=True)


def test_order_split():
    for n in range(33, 81):
        k, ell = order_split(n)
        assert 1 <= k <= 4 and ell >= 0 and 9 * k + 4 * ell == n
    with pytest.raises(PreconditionError):
        order_split(32)


def test_counterexample_record():
    G, rec = counterexample_for_order(41)
    assert G.n == 41 and rec.chi == 2 and rec.k1r_free and rec.violates
    assert rec.fo == 4 * rec.k + 2 * rec.ell and 2 * rec.fo < 41
    assert all(rec.block_checks.values())
    assert fo_exact(G).value == rec.fo
    assert rec.as_dict()["violates"]
    with pytest.raises(PreconditionError):
        counterexample_for_order(40, r=3)


def test_F_itself_not_a_violation_of_order_bound():
    assert fo_exact(graph_F()).value * 2 < graph_F().n
