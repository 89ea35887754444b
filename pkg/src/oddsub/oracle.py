"""Exact ground-truth solvers for parity-constrained induced subgraphs.

``fo_exact`` / ``fk_exact`` share one branch-and-bound engine over vertex
bitmasks.  Only provably sound prunes are used; each carries its argument in
a comment and the test suite checks the engine against ``fk_naive`` (plain
``2^n`` enumeration).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import gf2
from .graph import (
    Edge,
    Graph,
    check_vertex_set,
    connected_components,
    from_mask,
    is_even_induced,
    is_odd_induced,
)


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: tuple[int, ...]
    nodes_explored: int
    elapsed: float
    optimal: bool = True

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": list(self.witness),
            "nodes_explored": self.nodes_explored,
            "elapsed": round(self.elapsed, 6),
            "optimal": self.optimal,
        }


class _BudgetExhausted(Exception):
    pass


class _Search:
    """In-first DFS over a fixed vertex order; keeps the first strictly-better set.

    Because the "in" branch is always explored first and ties never replace
    the incumbent, the witness is the lexicographically first maximum set
    under the branching order (``in`` preferred).
    """

    def __init__(self, G: Graph, order: list[int], modulus: int, floor: int, budget: int | None):
        self.masks = G.masks
        self.order = order
        self.mod = modulus
        self.best = floor
        self.best_set = 0
        self.nodes = 0
        self.budget = budget

    def _propagate(self, inside: int, undecided: int) -> tuple[int, int] | None:
        """Apply forced moves until none remain; ``None`` means the node is dead."""
        masks = self.masks
        mod = self.mod
        changed = True
        while changed:
            changed = False
            rest = inside
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                d = (masks[v] & inside).bit_count()
                free = masks[v] & undecided
                nfree = free.bit_count()
                if nfree == 0:
                    # v's final degree is already fixed
                    if d % mod != 1:
                        return None
                    continue
                if nfree < mod - 1:
                    # only degrees d..d+nfree remain reachable
                    if all((d + j) % mod != 1 for j in range(nfree + 1)):
                        return None
                if nfree == 1:
                    # the lone free neighbour decides v's degree: d or d + 1
                    if d % mod == 1:
                        undecided ^= free
                    elif (d + 1) % mod == 1:
                        inside |= free
                        undecided ^= free
                    else:
                        return None
                    changed = True
            rest = undecided
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                if masks[u] & undecided == 0 and (masks[u] & inside).bit_count() % mod != 1:
                    # joining would give u a fixed, invalid degree
                    undecided ^= low
                    changed = True
        return inside, undecided

    def run(self, undecided: int) -> None:
        self._branch(0, undecided, 0)

    def _branch(self, inside: int, undecided: int, pos: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted
        state = self._propagate(inside, undecided)
        if state is None:
            return
        inside, undecided = state
        # even taking every undecided vertex cannot beat the incumbent
        if inside.bit_count() + undecided.bit_count() <= self.best:
            return
        if undecided == 0:
            self.best = inside.bit_count()
            self.best_set = inside
            return
        order = self.order
        while not (undecided >> order[pos]) & 1:
            pos += 1
        bit = 1 << order[pos]
        self._branch(inside | bit, undecided ^ bit, pos + 1)
        self._branch(inside, undecided ^ bit, pos + 1)


def _greedy_induced_matching(G: Graph, comp_mask: int) -> int:
    """Vertex mask of a greedy induced matching inside ``comp_mask``."""
    masks = G.masks
    blocked = 0
    chosen = 0
    for u, v in G.edges:
        if not (comp_mask >> u) & 1:
            continue
        if (blocked >> u) & 1 or (blocked >> v) & 1:
            continue
        blocked |= masks[u] | masks[v] | (1 << u) | (1 << v)
        chosen |= (1 << u) | (1 << v)
    return chosen


def _branch_order(G: Graph) -> list[int]:
    return sorted(range(G.n), key=lambda v: (-G.degree(v), v))


def fk_exact(
    G: Graph,
    k: int,
    budget: int | None = None,
    split_components: bool = True,
) -> OracleResult:
    """Largest ``S`` with every degree of ``G[S]`` congruent to 1 mod ``k``.

    ``budget`` caps search nodes; when it runs out the result carries the
    best set found so far with ``optimal=False``.
    """
    if k < 2:
        raise ValueError(f"modulus must be >= 2, got {k}")
    start = time.perf_counter()
    order = _branch_order(G)
    comps = connected_components(G) if split_components else [tuple(range(G.n))]
    witness = 0
    nodes = 0
    optimal = True
    for comp in comps:
        comp_mask = sum(1 << v for v in comp)
        if len(comp) < 2:
            continue
        # only k=2 has a cheap certified floor (induced matchings are odd sets);
        # floor - 1 keeps ties reachable so the tie-break is unaffected
        greedy = _greedy_induced_matching(G, comp_mask) if k == 2 else 0
        remaining = None if budget is None else max(budget - nodes, 0)
        search = _Search(G, order, k, max(greedy.bit_count() - 1, 0), remaining)
        try:
            search.run(comp_mask)
        except _BudgetExhausted:
            optimal = False
        nodes += search.nodes
        found = search.best_set
        if found.bit_count() < greedy.bit_count():
            found = greedy
        witness |= found
        if not optimal:
            break
    members = from_mask(witness)
    return OracleResult(len(members), members, nodes, time.perf_counter() - start, optimal)


def fo_exact(G: Graph, budget: int | None = None, split_components: bool = True) -> OracleResult:
    """Maximum order of an odd induced subgraph, with a witness.

    Graphs with no odd induced subgraph (e.g. edgeless ones) give value 0
    and an empty witness.
    """
    return fk_exact(G, 2, budget=budget, split_components=split_components)


def fk_naive(G: Graph, k: int) -> tuple[int, tuple[int, ...]]:
    """Plain enumeration of all ``2^n`` subsets; the reference for the engine."""
    masks = G.masks
    best, best_mask = 0, 0
    for mask in range(1, 1 << G.n):
        size = mask.bit_count()
        if size <= best:
            continue
        rest = mask
        good = True
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if (masks[v] & mask).bit_count() % k != 1:
                good = False
                break
        if good:
            best, best_mask = size, mask
    return best, from_mask(best_mask)


def fo_naive(G: Graph) -> tuple[int, tuple[int, ...]]:
    return fk_naive(G, 2)


# ---------------------------------------------------------------------------
# Induced matchings


def max_induced_matching(G: Graph) -> tuple[int, list[Edge]]:
    """Maximum set of edges pairwise sharing no vertex and joined by no edge."""
    edges = G.edges
    masks = G.masks
    m = len(edges)
    closed = [masks[u] | masks[v] | (1 << u) | (1 << v) for u, v in edges]
    conflict = []
    for i, (u, v) in enumerate(edges):
        cm = 0
        for j, (a, b) in enumerate(edges):
            if j != i and ((closed[i] >> a) & 1 or (closed[i] >> b) & 1):
                cm |= 1 << j
        conflict.append(cm)

    best = [0, 0]

    def search(chosen: int, size: int, avail: int) -> None:
        if size + avail.bit_count() <= best[0]:
            return
        if avail == 0:
            best[0], best[1] = size, chosen
            return
        low = avail & -avail
        i = low.bit_length() - 1
        search(chosen | low, size + 1, avail & ~low & ~conflict[i])
        search(chosen, size, avail & ~low)

    search(0, 0, (1 << m) - 1)
    picked = [edges[i] for i in from_mask(best[1])]
    return best[0], picked


# ---------------------------------------------------------------------------
# Gallai partitions


@dataclass(frozen=True)
class GallaiPartition:
    odd_part: tuple[int, ...]
    even_part: tuple[int, ...]


def _parity_system(G: Graph, diag: list[int]) -> list[int]:
    """Solve ``(A + diag) x = deg`` over GF(2)."""
    rows = [mk | (diag[v] << v) for v, mk in enumerate(G.masks)]
    rhs = [d & 1 for d in G.degrees()]
    try:
        return gf2.solve(rows, rhs, G.n)
    except gf2.InconsistentSystem as exc:  # pragma: no cover - excluded by Gallai's theorem
        raise AssertionError(f"parity system unsolvable: {exc}") from exc


def gallai_partition(G: Graph) -> GallaiPartition:
    """Split ``V`` into an odd-inducing part and an even-inducing part.

    With ``x_v = 1`` marking the odd part, a vertex in the odd part needs
    ``sum_{u ~ v} x_u = 1`` and one in the even part needs ``sum_{u ~ v} x_u = deg v``.
    Both read ``sum_{u ~ v} x_u + (deg v + 1) x_v = deg v``.
    """
    x = _parity_system(G, [(d + 1) & 1 for d in G.degrees()])
    odd = tuple(v for v in range(G.n) if x[v])
    even = tuple(v for v in range(G.n) if not x[v])
    return GallaiPartition(odd, even)


def even_even_partition(G: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split ``V`` into two parts that both induce all-even subgraphs.

    With ``x_v = 1`` marking the first part: ``sum_{u ~ v} x_u + deg(v) x_v = deg v``.
    """
    x = _parity_system(G, [d & 1 for d in G.degrees()])
    first = tuple(v for v in range(G.n) if x[v])
    second = tuple(v for v in range(G.n) if not x[v])
    return first, second


def check_gallai(G: Graph, part: GallaiPartition) -> bool:
    odd = check_vertex_set(G, part.odd_part)
    even = check_vertex_set(G, part.even_part)
    if set(odd) & set(even) or len(odd) + len(even) != G.n:
        return False
    return (not odd or is_odd_induced(G, odd)) and is_even_induced(G, even)
