"""Large induced bipartite subgraphs without isolated vertices (the m = 2 case)."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from ..graph import Coloring, Graph, induced_subgraph, is_bipartite
from .certificate import PreconditionError

EXACT_LIMIT = 22


class BoundNotAchieved(RuntimeError):
    """No set of the required size was found; ``best`` holds the largest one seen."""

    def __init__(self, message: str, best: tuple[int, ...]):
        super().__init__(message)
        self.best = best


def _grundy(G: Graph, coloring: Coloring) -> Coloring:
    """Move vertices down to the lowest colour class they have no neighbour in.

    Each move lowers the sum of colours, so this terminates.  Afterwards every
    vertex of class j has a neighbour in each class i < j.
    """
    colors = list(coloring.colors)
    moved = True
    while moved:
        moved = False
        for v in range(G.n):
            used = {colors[u] for u in G.neighbors(v)}
            low = next(c for c in range(colors[v] + 1) if c not in used or c == colors[v])
            if low < colors[v]:
                colors[v] = low
                moved = True
    relabel = {c: i for i, c in enumerate(sorted(set(colors)))}
    return Coloring(tuple(relabel[c] for c in colors), len(relabel))


def _drop_isolated(G: Graph, members: set[int]) -> set[int]:
    members = set(members)
    while True:
        lonely = [v for v in sorted(members) if not (G.neighbors(v) & members)]
        if not lonely:
            return members
        members.discard(lonely[0])


def _grow(G: Graph, members: set[int]) -> set[int]:
    """Re-add outside vertices that touch the set and keep it bipartite."""
    members = set(members)
    grew = True
    while grew:
        grew = False
        for v in range(G.n):
            if v in members or not (G.neighbors(v) & members):
                continue
            trial = members | {v}
            if is_bipartite(induced_subgraph(G, trial)[0]):
                members = trial
                grew = True
    return members


def _exact_search(G: Graph, target: Fraction) -> tuple[int, ...] | None:
    """First set (in vertex order) inducing a bipartite graph with no isolated vertex, of size >= target."""
    n = G.n
    masks = G.masks
    side = [-1] * n
    chosen = [0, 0]
    # settled[v]: vertices whose whole neighbourhood lies in 0..v
    settled: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        settled[max(G.neighbors(u) | {u})].append(u)

    def dfs(v: int, count: int) -> tuple[int, ...] | None:
        if count + (n - v) < target:
            return None
        if v > 0:
            taken = chosen[0] | chosen[1]
            for u in settled[v - 1]:
                if side[u] >= 0 and not masks[u] & taken:
                    return None
        if v == n:
            return tuple(u for u in range(n) if side[u] >= 0)
        for s in (0, 1):
            if masks[v] & chosen[s]:
                continue
            side[v] = s
            chosen[s] |= 1 << v
            found = dfs(v + 1, count + 1)
            chosen[s] ^= 1 << v
            side[v] = -1
            if found is not None:
                return found
        return dfs(v + 1, count)

    return dfs(0, 0)


def bipartite_subgraph_cert(G: Graph, coloring: Coloring, exact_limit: int = EXACT_LIMIT) -> tuple[int, ...]:
    """Vertex set inducing a bipartite subgraph with no isolated vertex, of size >= 2n/k.

    Tries every pair of colour classes (of the given colouring and of its
    greedy normal form), pruning isolated vertices and regrowing; falls back
    to exhaustive search for ``n <= exact_limit``.
    """
    if not coloring.is_proper(G):
        raise PreconditionError("colouring is not a proper colouring of the graph")
    if coloring.k < 2:
        raise PreconditionError("need at least 2 colour classes")
    if G.min_degree() < 1:
        raise PreconditionError("graph has an isolated vertex")
    target = Fraction(2 * G.n, coloring.k)
    best: tuple[int, ...] = ()
    for col in (coloring, _grundy(G, coloring)):
        classes = col.classes()
        for i, j in combinations(range(col.k), 2):
            members = _grow(G, _drop_isolated(G, set(classes[i]) | set(classes[j])))
            if len(members) > len(best):
                best = tuple(sorted(members))
            if len(best) >= target:
                return best
    if G.n > exact_limit:
        raise BoundNotAchieved(
            f"colour-pair search reached {len(best)} < {target}; exact fallback is limited to n <= {exact_limit}",
            best,
        )
    found = _exact_search(G, target)
    if found is None:
        raise BoundNotAchieved(f"no induced bipartite subgraph of size >= {target} without isolated vertices", best)
    return found


def is_bipartite_no_isolated(G: Graph, members: tuple[int, ...]) -> bool:
    H, _ = induced_subgraph(G, members)
    return H.n > 0 and H.min_degree() >= 1 and is_bipartite(H)
