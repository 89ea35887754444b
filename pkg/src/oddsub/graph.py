"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is kept twice: as frozensets for readable iteration and as Python
int bitmasks for the solvers' inner loops.  Python ints are unbounded, so the
bitmask path has no 64-vertex ceiling; it just gets slower past a machine word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input or an unmet structural precondition."""


class Graph:
    __slots__ = ("n", "_nbrs", "_masks", "_edges")

    def __init__(self, n: int, nbrs: Sequence[frozenset[int]]):
        self.n = n
        self._nbrs = tuple(nbrs)
        self._masks = tuple(sum(1 << u for u in s) for s in self._nbrs)
        self._edges = tuple(sorted((u, v) for u in range(n) for v in self._nbrs[u] if u < v))

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]], dedupe: bool = False) -> Graph:
    """Build a simple graph; duplicates raise unless ``dedupe`` is set."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        if v in nbrs[u]:
            if dedupe:
                continue
            raise GraphError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, [frozenset(s) for s in nbrs])


def graph_from_masks(masks: Sequence[int]) -> Graph:
    n = len(masks)
    return Graph(n, [frozenset(u for u in range(n) if (mk >> u) & 1) for mk in masks])


def check_vertex_set(G: Graph, S: Iterable[int]) -> tuple[int, ...]:
    """Return ``S`` as a sorted tuple after validating it against ``G``."""
    members = sorted(S)
    for i, v in enumerate(members):
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} not in graph with n={G.n}")
        if i and members[i - 1] == v:
            raise GraphError(f"vertex {v} repeated in vertex set")
    return tuple(members)


def to_mask(S: Iterable[int]) -> int:
    mask = 0
    for v in S:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` and the map new id -> old id."""
    members = check_vertex_set(G, S)
    index = {v: i for i, v in enumerate(members)}
    nbrs = [frozenset(index[u] for u in G.neighbors(v) if u in index) for v in members]
    return Graph(len(members), nbrs), members


def is_odd_induced(G: Graph, S: Iterable[int]) -> bool:
    """True iff ``S`` is nonempty and every vertex has odd degree in ``G[S]``."""
    members = check_vertex_set(G, S)
    if not members:
        return False
    mask = to_mask(members)
    masks = G.masks
    return all((masks[v] & mask).bit_count() & 1 for v in members)


def is_even_induced(G: Graph, S: Iterable[int]) -> bool:
    """True iff every vertex has even degree in ``G[S]`` (vacuous for empty ``S``)."""
    members = check_vertex_set(G, S)
    mask = to_mask(members)
    masks = G.masks
    return all((masks[v] & mask).bit_count() % 2 == 0 for v in members)


def disjoint_union(*graphs: Graph) -> Graph:
    """Union with blocks offset in argument order."""
    edges: list[Edge] = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.n
    return build_graph(offset, edges)


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return graph_from_masks([full & ~mk & ~(1 << v) for v, mk in enumerate(G.masks)])


def spanning_subgraph(G: Graph, edges: Iterable[Edge]) -> Graph:
    """Spanning subgraph of ``G`` with the given edge subset."""
    chosen = list(edges)
    for u, v in chosen:
        if not G.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of the host graph")
    return build_graph(G.n, chosen)


# ---------------------------------------------------------------------------
# Line graphs


@dataclass(frozen=True)
class LineGraphResult:
    lg: Graph
    edge_of_vertex: tuple[Edge, ...]

    def vertex_of_edge(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_of_vertex)}

    def to_lg_vertices(self, edges: Iterable[Edge]) -> tuple[int, ...]:
        lookup = self.vertex_of_edge()
        return tuple(sorted(lookup[(min(e), max(e))] for e in edges))


def line_graph(G: Graph) -> LineGraphResult:
    """Line graph; vertex ``i`` of the result is ``G.edges[i]``."""
    edges = G.edges
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for inc in incident:
        for i, j in combinations(inc, 2):
            pairs.add((i, j))
    return LineGraphResult(build_graph(len(edges), sorted(pairs)), edges)


# ---------------------------------------------------------------------------
# Structure


def connected_components(G: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) <= 1


def bipartition(G: Graph) -> list[int] | None:
    """A proper 2-coloring as a side list, or ``None`` if ``G`` has an odd cycle."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.neighbors(v):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return side


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    for s in range(G.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] >= best:
                break
            for u in G.neighbors(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def regular_degree(G: Graph) -> int | None:
    degs = set(G.degrees())
    if len(degs) == 1:
        return degs.pop()
    return None


def max_independent_in(G: Graph, mask: int) -> int:
    """Size of a maximum independent set inside the vertex mask."""
    if mask == 0:
        return 0
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask & ~low
    # v either stays out, or goes in and knocks out its neighbours
    without = max_independent_in(G, rest)
    if G.masks[v] & rest == 0:
        return without + 1
    with_v = 1 + max_independent_in(G, rest & ~G.masks[v])
    return max(with_v, without)


def find_c5(G: Graph) -> tuple[int, ...] | None:
    """Vertices of some 5-cycle subgraph (not necessarily induced), if any."""
    masks = G.masks
    for s in range(G.n):
        higher = ~((1 << (s + 1)) - 1)
        # paths s-a-b-c-d with every vertex > s, closed by the edge d-s
        for a in G.neighbors(s):
            if a < s:
                continue
            for b in G.neighbors(a):
                if b <= s:
                    continue
                for c in G.neighbors(b):
                    if c <= s or c == a:
                        continue
                    closing = masks[c] & masks[s] & higher & ~(1 << a) & ~(1 << b)
                    if closing:
                        d = (closing & -closing).bit_length() - 1
                        return (s, a, b, c, d)
    return None


def find_claw(G: Graph, r: int = 3) -> tuple[int, tuple[int, ...]] | None:
    """Centre and leaves of an induced ``K_{1,r}``, if one exists."""
    for v in range(G.n):
        nb = sorted(G.neighbors(v))
        if len(nb) < r:
            continue
        for leaves in combinations(nb, r):
            if all(not G.has_edge(a, b) for a, b in combinations(leaves, 2)):
                return v, leaves
    return None


@dataclass(frozen=True)
class StructureReport:
    n: int
    m: int
    is_connected: bool
    is_bipartite: bool
    regular_degree: int | None
    min_degree: int
    max_degree: int
    girth: int | None
    claw_free: bool
    k1r_free_from: int
    c5_subgraph_free: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def classify(G: Graph) -> StructureReport:
    # largest induced star centred anywhere = largest independent set in a neighbourhood
    star = max((max_independent_in(G, mk) for mk in G.masks), default=0)
    return StructureReport(
        n=G.n,
        m=G.m,
        is_connected=is_connected(G),
        is_bipartite=is_bipartite(G),
        regular_degree=regular_degree(G),
        min_degree=G.min_degree(),
        max_degree=G.max_degree(),
        girth=girth(G),
        claw_free=star < 3,
        k1r_free_from=max(3, star + 1),
        c5_subgraph_free=find_c5(G) is None,
    )


# ---------------------------------------------------------------------------
# Chromatic number


class TooLargeError(GraphError):
    """Raised when an exact search is asked to run past its size guard."""


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def classes(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return [tuple(c) for c in out]

    def is_proper(self, G: Graph) -> bool:
        if len(self.colors) != G.n:
            return False
        if any(not 0 <= c < self.k for c in self.colors):
            return False
        if len(set(self.colors)) != self.k:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in G.edges)


def _try_color(G: Graph, k: int) -> list[int] | None:
    n = G.n
    colors = [-1] * n
    nbrs = [sorted(G.neighbors(v)) for v in range(n)]

    def extend(v: int, used: int) -> bool:
        if v == n:
            return True
        banned = {colors[u] for u in nbrs[v] if u < v}
        # a fresh colour is interchangeable with any other unused one
        for c in range(min(k, used + 1)):
            if c in banned:
                continue
            colors[v] = c
            if extend(v + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return colors if extend(0, 0) else None


def chromatic_number(G: Graph, max_n: int = 24) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness colouring.

    Vertices are coloured in index order with the lowest admissible colour
    first, so the witness is deterministic.
    """
    if G.n > max_n:
        raise TooLargeError(f"n={G.n} is too large for exact chromatic number (limit {max_n})")
    if G.n == 0:
        return 0, Coloring((), 0)
    k = 1 if G.m == 0 else 2
    while True:
        colors = _try_color(G, k)
        if colors is not None:
            return k, Coloring(tuple(colors), k)
        k += 1


# ---------------------------------------------------------------------------
# Edge-list text format


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    header = None
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {line!r}") from None
        if len(nums) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {len(nums)}")
        if header is None:
            header = nums
            continue
        u, v = nums
        if u > v:
            u, v = v, u
        edges.append((u, v))
        n = header[0]
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphError(f"line {lineno}: invalid edge ({nums[0]}, {nums[1]}) for n={n}")
        if (u, v) in seen:
            raise GraphError(f"line {lineno}: duplicate edge ({u}, {v}), first on line {seen[(u, v)]}")
        seen[(u, v)] = lineno
    if header is None:
        raise GraphError("empty input: missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise GraphError(f"header promises {m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise GraphError(f"edge list: {exc}") from None


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"
