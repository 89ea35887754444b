"""Constructive lower-bound pipelines: claw-free graphs, line graphs of regular graphs, planar reduction."""

from __future__ import annotations

from fractions import Fraction

from ..graph import (
    Coloring,
    Edge,
    Graph,
    TooLargeError,
    bipartition,
    chromatic_number,
    connected_components,
    find_c5,
    find_claw,
    girth,
    induced_subgraph,
    is_connected,
    line_graph,
    regular_degree,
    spanning_subgraph,
)
from ..oracle import fo_exact
from .bipartite import bipartite_subgraph_cert
from .certificate import Certificate, CertificateError, PreconditionError, every_third_pair, path_pick
from .factors import Factor, cycle_order, factor_23, path_order, petersen_two_factor, search_factor

CUBIC_ORACLE_BUDGET = 5_000_000


def clawfree_cert(G: Graph, coloring: Coloring | None = None) -> Certificate:
    """Odd induced subgraph of order >= n/k in a claw-free graph with no isolated vertex.

    Pipeline: large induced bipartite subgraph H with no isolated vertex,
    which has max degree <= 2 (a degree-3 vertex of a bipartite claw-free
    graph centres an induced claw), so H splits into paths and even cycles,
    each certified in closed form.
    """
    claw = find_claw(G)
    if claw is not None:
        raise PreconditionError(f"graph is not claw-free: induced claw centred at {claw[0]} with leaves {claw[1]}")
    if G.n == 0 or G.min_degree() < 1:
        raise PreconditionError("graph has an isolated vertex")
    if coloring is None:
        _, coloring = chromatic_number(G)
    elif not coloring.is_proper(G):
        raise PreconditionError("supplied colouring is not proper")
    h_set = bipartite_subgraph_cert(G, coloring)
    H, ids = induced_subgraph(G, h_set)
    if H.max_degree() > 2:
        raise AssertionError(f"bipartite part of a claw-free graph has a vertex of degree {H.max_degree()}")
    trace = [f"colouring with k={coloring.k}; bipartite part H has {H.n} of {G.n} vertices"]
    witness: list[int] = []
    for comp in connected_components(H):
        if all(H.degree(v) == 2 for v in comp):
            order = cycle_order(H, comp)
            picked = every_third_pair(order)
            trace.append(f"cycle C_{len(comp)}: {len(picked)} vertices")
        else:
            order = path_order(H, comp)
            picked = path_pick(order)
            trace.append(f"path P_{len(comp)}: {len(picked)} vertices")
        witness.extend(ids[v] for v in picked)
    cert = Certificate(tuple(sorted(witness)), "G", Fraction(G.n, coloring.k), "clawfree", tuple(trace), G)
    return cert.check()


def _component_edges(factor: Factor, comp: tuple[int, ...]) -> list[Edge]:
    members = set(comp)
    return sorted(e for e in factor.edges if e[0] in members)


def _cycle_edges_pick(H: Graph, comp: tuple[int, ...]) -> list[Edge]:
    order = cycle_order(H, comp)
    ring = [(min(a, b), max(a, b)) for a, b in zip(order, order[1:] + order[:1])]
    # L(C) is the cycle on these edges in the same cyclic order
    return every_third_pair(ring)


def _cubic_edges_pick(G: Graph, factor: Factor, comp: tuple[int, ...]) -> tuple[list[Edge], bool]:
    sub = spanning_subgraph(G, _component_edges(factor, comp))
    lg = line_graph(sub)
    result = fo_exact(lg.lg, budget=CUBIC_ORACLE_BUDGET)
    return [lg.edge_of_vertex[i] for i in result.witness], result.optimal


def _factor_witness(G: Graph, factor: Factor, trace: list[str]) -> list[Edge]:
    H = factor.subgraph(G.n)
    picked: list[Edge] = []
    for comp, r in factor.components:
        if r == 2:
            edges = _cycle_edges_pick(H, comp)
            trace.append(f"cycle component C_{len(comp)}: {len(edges)} edges")
        else:
            edges, optimal = _cubic_edges_pick(G, factor, comp)
            note = "" if optimal else " (oracle budget hit; best found)"
            trace.append(f"cubic component on {len(comp)} vertices: {len(edges)} edges via exact oracle{note}")
            if 2 * len(edges) < len(comp):
                raise CertificateError(f"cubic component on {len(comp)} vertices gave only {len(edges)} edges")
        picked.extend(edges)
    return picked


def _regular_preconditions(G: Graph, min_degree: int) -> int:
    k = regular_degree(G)
    if k is None:
        raise PreconditionError("graph is not regular")
    if k < min_degree:
        raise PreconditionError(f"graph is {k}-regular; needs degree >= {min_degree}")
    return k


def _two_factor(G: Graph, k: int, avoid_c5: bool) -> Factor:
    if k % 2 == 0:
        factor = petersen_two_factor(G)
        if avoid_c5 and factor.count_c5() and G.m <= 40:
            try:
                better = search_factor(G, 2, lambda f: f.count_c5() < factor.count_c5())
            except TooLargeError:
                better = None
            if better is not None:
                factor = better
        return factor
    return factor_23(G, avoid_c5=avoid_c5)


def linegraph_cert(G: Graph) -> Certificate:
    """Odd induced subgraph of order >= n/2 in L(G), G connected, regular and C5-free."""
    k = _regular_preconditions(G, 2)
    if not is_connected(G):
        raise PreconditionError("graph is not connected")
    c5 = find_c5(G)
    if c5 is not None:
        raise PreconditionError(f"contains C_5 subgraph at vertices {c5}")
    trace = [f"{k}-regular, n={G.n}, C5-free"]
    factor = _two_factor(G, k, avoid_c5=False)
    trace.append(f"{factor.kind}: component sizes {[len(c) for c, _ in factor.components]}")
    edges = _factor_witness(G, factor, trace)
    lg = line_graph(G)
    cert = Certificate(lg.to_lg_vertices(edges), "L(G)", Fraction(G.n, 2), "linegraph", tuple(trace), lg.lg)
    return cert.check()


def linegraph_cert_extended(G: Graph) -> Certificate:
    """Odd induced subgraph of order >= n/2 - c/2 in L(G) for d-regular G, d >= 4.

    ``c`` counts the 5-cycle components of the factor used; each connected
    component of G gets its own factor.  The result is also checked against
    the 2n/5 floor.
    """
    d = _regular_preconditions(G, 4)
    trace = [f"{d}-regular, n={G.n}"]
    edges: list[Edge] = []
    c5_count = 0
    for comp in connected_components(G):
        sub, ids = induced_subgraph(G, comp)
        factor = _two_factor(sub, d, avoid_c5=True)
        c5_count += factor.count_c5()
        trace.append(f"component {ids[0]}..: {factor.kind}, sizes {[len(c) for c, _ in factor.components]}")
        for a, b in _factor_witness(sub, factor, trace):
            edges.append((ids[a], ids[b]))
    bound = Fraction(G.n - c5_count, 2)
    trace.append(f"C_5 components: {c5_count}")
    lg = line_graph(G)
    cert = Certificate(lg.to_lg_vertices(edges), "L(G)", bound, "linegraph-ext", tuple(trace), lg.lg).check()
    if cert.size < Fraction(2 * G.n, 5):
        raise CertificateError(f"witness size {cert.size} below the 2n/5 floor {Fraction(2 * G.n, 5)}")
    return cert


def planar_reduction(G: Graph, planar_asserted: bool, coloring: Coloring | None = None) -> tuple[int, ...]:
    """Vertex set of an induced bipartite subgraph, no isolated vertex, girth >= 6, order >= 2n/3.

    Planarity is the caller's assertion; it is not tested here.
    """
    if not planar_asserted:
        raise PreconditionError("planarity must be asserted by the caller")
    g = girth(G)
    if g is not None and g < 5:
        raise PreconditionError(f"girth {g} < 5")
    if G.n == 0 or G.min_degree() < 1:
        raise PreconditionError("graph has an isolated vertex")
    if coloring is None:
        _, coloring = chromatic_number(G)
    elif not coloring.is_proper(G):
        raise PreconditionError("supplied colouring is not proper")
    if coloring.k > 3:
        raise PreconditionError(f"colouring uses {coloring.k} > 3 colours")
    if bipartition(G) is not None:
        return tuple(range(G.n))
    h_set = bipartite_subgraph_cert(G, coloring)
    H, _ = induced_subgraph(G, h_set)
    gh = girth(H)
    if bipartition(H) is None or (gh is not None and gh < 6):
        raise AssertionError(f"reduced subgraph has girth {gh}")
    return h_set

