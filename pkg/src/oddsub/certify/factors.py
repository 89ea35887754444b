"""Spanning factors of regular graphs: 2-factors and [2,3]-factors with regular components."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from ..graph import Edge, Graph, TooLargeError, build_graph, connected_components, is_connected, regular_degree
from .certificate import PreconditionError

TWO_FACTOR = "two-factor"
TWO_THREE_FACTOR = "two-three-factor"

MAX_SEARCH_EDGES = 40
SEARCH_NODE_LIMIT = 2_000_000


@dataclass(frozen=True)
class Factor:
    edges: frozenset[Edge]
    components: tuple[tuple[tuple[int, ...], int], ...]
    kind: str

    def subgraph(self, n: int) -> Graph:
        return build_graph(n, sorted(self.edges))

    def cycle_lengths(self) -> list[int]:
        return [len(vs) for vs, r in self.components if r == 2]

    def count_c5(self) -> int:
        return sum(1 for vs, r in self.components if r == 2 and len(vs) == 5)


def make_factor(n: int, edges: Iterable[Edge], kind: str) -> Factor:
    edges = frozenset((min(e), max(e)) for e in edges)
    H = build_graph(n, sorted(edges))
    comps = []
    for comp in connected_components(H):
        degs = {H.degree(v) for v in comp}
        comps.append((comp, degs.pop() if len(degs) == 1 else -1))
    return Factor(edges, tuple(comps), kind)


def check_factor(G: Graph, factor: Factor) -> bool:
    """Spanning, edges from ``G``, components regular as recorded, degrees allowed by ``kind``."""
    if any(not G.has_edge(u, v) for u, v in factor.edges):
        return False
    H = factor.subgraph(G.n)
    if sorted(connected_components(H)) != sorted(comp for comp, _ in factor.components):
        return False
    allowed = {2} if factor.kind == TWO_FACTOR else {2, 3}
    return all(r in allowed and all(H.degree(v) == r for v in comp) for comp, r in factor.components)


def cycle_order(H: Graph, comp: tuple[int, ...]) -> list[int]:
    """Vertices of a cycle component in traversal order, starting at its smallest vertex."""
    start = comp[0]
    order = [start]
    prev, cur = start, min(H.neighbors(start))
    while cur != start:
        order.append(cur)
        nxt = min(u for u in H.neighbors(cur) if u != prev) if H.degree(cur) == 2 else None
        if nxt is None:
            raise ValueError("component is not a cycle")
        prev, cur = cur, nxt
    return order


def path_order(H: Graph, comp: tuple[int, ...]) -> list[int]:
    """Vertices of a path component from its smaller end."""
    ends = [v for v in comp if H.degree(v) <= 1]
    start = min(ends)
    order = [start]
    prev = -1
    cur = start
    while True:
        nxt = [u for u in H.neighbors(cur) if u != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


# ---------------------------------------------------------------------------
# Petersen: Euler orientation + perfect matching


def euler_circuit(G: Graph, start: int = 0) -> list[int]:
    """Hierholzer's algorithm; neighbours are taken in ascending order."""
    remaining = [sorted(G.neighbors(v), reverse=True) for v in range(G.n)]
    used: set[Edge] = set()
    stack = [start]
    circuit = []
    while stack:
        v = stack[-1]
        while remaining[v] and (min(v, remaining[v][-1]), max(v, remaining[v][-1])) in used:
            remaining[v].pop()
        if remaining[v]:
            u = remaining[v].pop()
            used.add((min(u, v), max(u, v)))
            stack.append(u)
        else:
            circuit.append(stack.pop())
    return circuit[::-1]


def hopcroft_karp(adj: list[list[int]], n_right: int) -> list[int]:
    """Maximum bipartite matching; returns the right partner of each left vertex (-1 if none)."""
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    inf = n_left + 1

    while True:
        dist = [inf] * n_left
        queue = deque()
        for u in range(n_left):
            if match_l[u] < 0:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                p = match_r[w]
                if p < 0:
                    found = True
                elif dist[p] == inf:
                    dist[p] = dist[u] + 1
                    queue.append(p)
        if not found:
            return match_l

        def augment(u: int) -> bool:
            for w in adj[u]:
                p = match_r[w]
                if p < 0 or (dist[p] == dist[u] + 1 and augment(p)):
                    match_l[u] = w
                    match_r[w] = u
                    return True
            dist[u] = inf
            return False

        for u in range(n_left):
            if match_l[u] < 0:
                augment(u)


def petersen_two_factor(G: Graph) -> Factor:
    """A 2-factor of a connected 2r-regular graph.

    Orient an Euler circuit so every vertex has r arcs out and r in, then a
    perfect matching of the out-copy/in-copy bipartite graph (which is
    r-regular) picks one arc out of and one arc into every vertex.
    """
    k = regular_degree(G)
    if k is None or k < 2 or k % 2:
        raise PreconditionError(f"needs a regular graph of even degree >= 2 (degree: {k})")
    if not is_connected(G):
        raise PreconditionError("graph is not connected")
    circuit = euler_circuit(G)
    out: list[list[int]] = [[] for _ in range(G.n)]
    for a, b in zip(circuit, circuit[1:]):
        out[a].append(b)
    match = hopcroft_karp(out, G.n)
    if any(w < 0 for w in match):  # pragma: no cover - König: regular bipartite graphs have perfect matchings
        raise AssertionError("no perfect matching in a regular bipartite graph")
    return make_factor(G.n, [(v, match[v]) for v in range(G.n)], TWO_FACTOR)


# ---------------------------------------------------------------------------
# [2,3]-factors by search


def search_factor(
    G: Graph,
    cap: int,
    accept: Callable[[Factor], bool] | None = None,
    node_limit: int = SEARCH_NODE_LIMIT,
) -> Factor | None:
    """Backtrack over edges in canonical order (include first) for a spanning
    subgraph with degrees in ``[2, cap]`` whose components are regular.
    """
    edges = G.edges
    m = len(edges)
    deg = [0] * G.n
    rem = G.degrees()
    chosen: list[Edge] = []
    kind = TWO_FACTOR if cap == 2 else TWO_THREE_FACTOR
    nodes = [0]

    def rec(i: int) -> Factor | None:
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise TooLargeError(f"factor search exceeded {node_limit} nodes")
        if i == m:
            factor = make_factor(G.n, chosen, kind)
            if all(r in (2, cap) for _, r in factor.components) and (accept is None or accept(factor)):
                return factor
            return None
        u, v = edges[i]
        rem[u] -= 1
        rem[v] -= 1
        result = None
        if deg[u] < cap and deg[v] < cap and deg[u] + rem[u] >= 1 and deg[v] + rem[v] >= 1:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            result = rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        # skipping the edge must leave both ends able to reach degree 2
        if result is None and deg[u] + rem[u] >= 2 and deg[v] + rem[v] >= 2:
            result = rec(i + 1)
        rem[u] += 1
        rem[v] += 1
        return result

    return rec(0)


def factor_23(G: Graph, max_edges: int = MAX_SEARCH_EDGES, avoid_c5: bool = False) -> Factor:
    """Spanning [2,3]-factor with every component a cycle or cubic.

    A cubic input is its own factor.  Otherwise all-cycle factors are tried
    first, then mixed ones.  With ``avoid_c5`` the search first insists on no
    5-cycle components and relaxes only if that fails.
    """
    k = regular_degree(G)
    if k is None or k < 3 or k % 2 == 0:
        raise PreconditionError(f"needs a regular graph of odd degree >= 3 (degree: {k})")
    if not is_connected(G):
        raise PreconditionError("graph is not connected")
    if k == 3:
        return make_factor(G.n, G.edges, TWO_THREE_FACTOR)
    if G.m > max_edges:
        raise TooLargeError(f"[2,3]-factor search is limited to {max_edges} edges, graph has {G.m}")
    filters = [lambda f: f.count_c5() == 0, None] if avoid_c5 else [None]
    for cap in (2, 3):
        for accept in filters:
            found = search_factor(G, cap, accept)
            if found is not None:
                return make_factor(G.n, found.edges, TWO_THREE_FACTOR)
    raise AssertionError("no [2,3]-factor with regular components found")  # pragma: no cover
