"""Isomorphism classes of small regular graphs.

Canonical forms come from an individualisation-refinement search: refine
the vertex colouring to a stable partition, branch on each vertex of the
first non-singleton cell, and keep the smallest adjacency code among the
discrete leaves.  Every step depends only on the graph up to isomorphism,
so the minimum is a canonical form.  Cells made of mutual twins are
branched on once, since any choice there gives the same code.

Classes of k-regular graphs are collected by closing a seed graph under
double-edge switches (ab, cd -> ac, bd), which connect all labelled graphs
with a fixed degree sequence.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .graph import Graph, GraphError, build_graph, complement, is_connected

MAX_ENUM_ORDER = 10


def _refine(nbrs: list[list[int]], colors: list[int]) -> tuple[list[int], tuple]:
    """Coarsest equitable refinement, plus its quotient as a node invariant.

    Colours are ranks of sorted signatures, so both outputs are invariant
    under relabelling.
    """
    ncolors = len(set(colors))
    while True:
        sigs = [(c, tuple(sorted([colors[u] for u in nb]))) for c, nb in zip(colors, nbrs)]
        distinct = sorted(set(sigs))
        ranks = {s: i for i, s in enumerate(distinct)}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return colors, tuple(distinct)
        ncolors = len(ranks)


def _individualize(colors: list[int], v: int) -> list[int]:
    # v moves ahead of the rest of its cell; all other ranks keep their order
    c = colors[v]
    return [2 * x + (1 if x == c and u != v else 0) for u, x in enumerate(colors)]


def _code(G: Graph, colors: list[int]) -> int:
    perm = [0] * G.n
    for v, c in enumerate(colors):
        perm[c] = v
    code = 0
    for j in range(G.n):
        for i in range(j):
            code = (code << 1) | G.has_edge(perm[i], perm[j])
    return code


def _twins(G: Graph, cell: list[int]) -> bool:
    masks = G.masks
    for a, b in combinations(cell, 2):
        if masks[a] & ~(1 << b) != masks[b] & ~(1 << a):
            return False
    return True


def canonical_labeling(G: Graph) -> tuple[int, list[int]]:
    """Return ``(code, colors)`` where ``colors[v]`` is v's canonical position.

    Leaves are ranked by (invariants along the path, adjacency code), so a
    node whose path invariants already exceed the best leaf's is skipped.
    """
    best: list = [None, None, None]
    nbrs = [sorted(G.neighbors(v)) for v in range(G.n)]

    def search(colors: list[int], path: tuple) -> None:
        colors, inv = _refine(nbrs, colors)
        path = path + (inv,)
        if best[0] is not None and path > best[0][: len(path)]:
            return
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            code = _code(G, colors)
            if best[0] is None or (path, code) < (best[0], best[1]):
                best[0], best[1], best[2] = path, code, colors
            return
        choices = target[:1] if _twins(G, target) else target
        for v in choices:
            search(_individualize(colors, v), path)

    search([0] * G.n, ())
    return best[1] if best[1] is not None else 0, best[2] or []


def canonical_form(G: Graph) -> tuple[int, int]:
    """Isomorphism invariant that separates non-isomorphic graphs."""
    return G.n, canonical_labeling(G)[0]


def canonical_graph(G: Graph) -> Graph:
    """``G`` relabelled into its canonical vertex order."""
    return _canonical(G)[1]


def _canonical(G: Graph) -> tuple[tuple[int, int], Graph]:
    code, colors = canonical_labeling(G)
    return (G.n, code), build_graph(G.n, [(colors[u], colors[v]) for u, v in G.edges])


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.m == H.m and canonical_form(G) == canonical_form(H)


def _circulant_seed(n: int, k: int) -> Graph:
    edges = set()
    for i in range(n):
        for s in range(1, k // 2 + 1):
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
        if k % 2:
            j = (i + n // 2) % n
            edges.add((min(i, j), max(i, j)))
    return build_graph(n, sorted(edges))


def _switches(G: Graph):
    edges = G.edges
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        for x, y, z, w in ((a, c, b, d), (a, d, b, c)):
            if not G.has_edge(x, y) and not G.has_edge(z, w):
                kept = [e for e in edges if e != (a, b) and e != (c, d)]
                kept.append((min(x, y), max(x, y)))
                kept.append((min(z, w), max(z, w)))
                yield build_graph(G.n, kept)


def all_regular(n: int, k: int) -> list[Graph]:
    """One canonical representative per class of k-regular graphs on n vertices."""
    if k < 0 or k >= max(n, 1) or (n * k) % 2:
        return []
    if 2 * k > n - 1:
        seen = dict(_canonical(complement(G)) for G in all_regular(n, n - 1 - k))
        return [seen[key] for key in sorted(seen)]
    key, seed = _canonical(_circulant_seed(n, k))
    seen = {key: seed}
    queue = deque([seed])
    while queue:
        G = queue.popleft()
        for H in _switches(G):
            key, rep = _canonical(H)
            if key not in seen:
                seen[key] = rep
                queue.append(rep)
    return [seen[key] for key in sorted(seen)]


def enumerate_connected_regular(n: int) -> list[Graph]:
    """All connected regular graphs of order n, one per isomorphism class.

    Ordered by degree, then canonical code.  Guarded to ``n <= 10``.
    """
    if n > MAX_ENUM_ORDER:
        raise GraphError(f"enumeration is guarded to n <= {MAX_ENUM_ORDER}, got {n}")
    if n < 1:
        return []
    out = []
    for k in range(n):
        out.extend(G for G in all_regular(n, k) if is_connected(G))
    return out
