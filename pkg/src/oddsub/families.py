"""Named graphs and the ``name[:args]`` family mini-grammar.

Labelling conventions: paths and cycles number vertices consecutively along
the structure; the graph F uses a..d = 0..3 and u..y = 4..8; disjoint unions
offset their blocks in order.

Grammar (``+`` joins blocks into a disjoint union)::

    path:t  cycle:l  complete:n  Kn  empty:n  star:r  kbip:a,b  F  petersen
    gkl:k,l  random-regular:n,k[,seed]  gnm:n,m[,seed]
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, GraphError, build_graph, complement, disjoint_union

F_LABELS = "abcduvwxy"
F_EDGES = ("au", "ax", "ay", "bv", "bw", "bx", "cu", "cv", "cy", "du", "dw", "dx")


def path_graph(t: int) -> Graph:
    if t < 1:
        raise GraphError(f"path needs t >= 1, got {t}")
    return build_graph(t, [(i, i + 1) for i in range(t - 1)])


def cycle_graph(length: int) -> Graph:
    if length < 3:
        raise GraphError(f"cycle needs length >= 3, got {length}")
    return build_graph(length, [(i, (i + 1) % length) for i in range(length)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def star_graph(r: int) -> Graph:
    """``K_{1,r}`` with centre 0."""
    if r < 0:
        raise GraphError(f"star needs r >= 0, got {r}")
    return build_graph(r + 1, [(0, i) for i in range(1, r + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError(f"complete bipartite needs both sides >= 1, got {a},{b}")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def graph_F() -> Graph:
    """The 9-vertex bipartite graph with max degree 3 and f_o = 4."""
    index = {c: i for i, c in enumerate(F_LABELS)}
    return build_graph(9, [(index[e[0]], index[e[1]]) for e in F_EDGES])


def gkl(k: int, ell: int) -> Graph:
    """``k`` copies of F followed by ``ell`` copies of C_4."""
    if k < 1 or ell < 0:
        raise GraphError(f"gkl needs k >= 1 and l >= 0, got {k},{ell}")
    return disjoint_union(*([graph_F()] * k + [cycle_graph(4)] * ell))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def random_regular(n: int, k: int, seed: int = 0, max_tries: int = 100_000) -> Graph:
    """Pairing-model k-regular graph; loops and multi-edges reject the whole pairing.

    Dense requests (k > (n-1)/2) sample the complementary degree and complement,
    which keeps the rejection rate bounded.
    """
    if n < 1 or k < 0 or k >= n or (n * k) % 2:
        raise GraphError(f"no simple {k}-regular graph on {n} vertices")
    if 2 * k > n - 1:
        return complement(random_regular(n, n - 1 - k, seed, max_tries))
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(k)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        edges = set()
        for a, b in zip(stubs[::2], stubs[1::2]):
            e = (min(a, b), max(a, b))
            if a == b or e in edges:
                break
            edges.add(e)
        else:
            return build_graph(n, sorted(edges))
    raise GraphError(f"pairing model failed after {max_tries} tries (n={n}, k={k})")


def random_gnm(n: int, m: int, seed: int = 0) -> Graph:
    pairs = list(combinations(range(n), 2))
    if m > len(pairs):
        raise GraphError(f"{m} edges do not fit in a simple graph on {n} vertices")
    rng = random.Random(seed)
    return build_graph(n, sorted(rng.sample(pairs, m)))


def _ints(args: str, name: str, count: tuple[int, ...]) -> list[int]:
    try:
        vals = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise GraphError(f"family {name!r}: arguments must be integers, got {args!r}") from None
    if len(vals) not in count:
        raise GraphError(f"family {name!r} takes {' or '.join(map(str, count))} argument(s)")
    return vals


def _one(text: str) -> Graph:
    name, _, args = text.strip().partition(":")
    key = name.lower()
    if key.startswith("k") and key[1:].isdigit():
        return complete_graph(int(key[1:]))
    if name == "F":
        _ints(args, name, (0,))
        return graph_F()
    if key == "petersen":
        _ints(args, name, (0,))
        return petersen_graph()
    simple = {
        "path": path_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "empty": empty_graph,
        "star": star_graph,
    }
    if key in simple:
        return simple[key](*_ints(args, name, (1,)))
    if key == "kbip":
        return complete_bipartite(*_ints(args, name, (2,)))
    if key == "gkl":
        return gkl(*_ints(args, name, (2,)))
    if key == "random-regular":
        return random_regular(*_ints(args, name, (2, 3)))
    if key == "gnm":
        return random_gnm(*_ints(args, name, (2, 3)))
    raise GraphError(f"unknown graph family {name!r}")


def generate_family(spec: str) -> Graph:
    """Build the graph named by a family spec string, e.g. ``"F+cycle:4"``."""
    blocks = [b for b in spec.split("+")]
    if any(not b.strip() for b in blocks):
        raise GraphError(f"empty block in family spec {spec!r}")
    graphs = [_one(b) for b in blocks]
    return graphs[0] if len(graphs) == 1 else disjoint_union(*graphs)
