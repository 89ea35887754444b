"""Disconnected K_{1,r}-free graphs of every order n >= 33 that beat the n/chi bound."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..families import cycle_graph, gkl, graph_F
from ..graph import Graph, chromatic_number, classify, connected_components, induced_subgraph, is_odd_induced
from ..oracle import fo_exact
from .certificate import PreconditionError

FO_F = 4
FO_C4 = 2
# witness vertices {a, b, u, v} inside one copy of F, and one edge inside C_4
F_WITNESS = (0, 1, 4, 5)
C4_WITNESS = (0, 1)
ORACLE_ORDER_LIMIT = 26


@dataclass(frozen=True)
class ViolationRecord:
    n: int
    k: int
    ell: int
    r: int
    chi: int
    k1r_free: bool
    fo: int
    witness: tuple[int, ...]
    block_checks: dict = field(default_factory=dict)

    @property
    def violates(self) -> bool:
        return 2 * self.fo < self.chi * self.n and self.chi == 2

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "l": self.ell,
            "r": self.r,
            "chi": self.chi,
            "k1r_free": self.k1r_free,
            "fo": self.fo,
            "violates": self.violates,
            "block_checks": dict(self.block_checks),
        }


def order_split(n: int) -> tuple[int, int]:
    """(k, l) with 9k + 4l = n, k chosen from n mod 4 (1 -> 1, 2 -> 2, 3 -> 3, 0 -> 4)."""
    if n < 33:
        raise PreconditionError(f"order must be >= 33, got {n}")
    k = (n - 1) % 4 + 1
    return k, (n - 9 * k) // 4


def _chi_by_components(G: Graph) -> int:
    best = 0
    for comp in connected_components(G):
        best = max(best, chromatic_number(induced_subgraph(G, comp)[0])[0])
    return best


def counterexample_for_order(n: int, r: int = 4, check_blocks: bool = True) -> tuple[Graph, ViolationRecord]:
    """``k F + l C_4`` of order ``n`` with f_o = 4k + 2l < n/2.

    f_o is summed over components from f_o(F) = 4 and f_o(C_4) = 2.  With
    ``check_blocks`` those two values, and a sub-union of order <= 26, are
    recomputed by the exact oracle without component splitting.
    """
    if r < 4:
        raise PreconditionError(f"star size r must be >= 4, got {r}")
    k, ell = order_split(n)
    G = gkl(k, ell)
    report = classify(G)
    witness = [9 * i + v for i in range(k) for v in F_WITNESS]
    witness += [9 * k + 4 * j + v for j in range(ell) for v in C4_WITNESS]
    if not is_odd_induced(G, witness):  # pragma: no cover - fixed construction
        raise AssertionError("componentwise witness is not odd")
    checks: dict[str, bool] = {}
    if check_blocks:
        checks["F"] = fo_exact(graph_F()).value == FO_F
        checks["C4"] = fo_exact(cycle_graph(4)).value == FO_C4
        kb = min(k, (ORACLE_ORDER_LIMIT) // 9)
        lb = min(ell, (ORACLE_ORDER_LIMIT - 9 * kb) // 4)
        block = gkl(kb, lb)
        checks[f"G_{kb},{lb}"] = fo_exact(block, split_components=False).value == FO_F * kb + FO_C4 * lb
    record = ViolationRecord(
        n=n,
        k=k,
        ell=ell,
        r=r,
        chi=_chi_by_components(G),
        k1r_free=report.k1r_free_from <= r,
        fo=FO_F * k + FO_C4 * ell,
        witness=tuple(witness),
        block_checks=checks,
    )
    return G, record
