"""Batch verification scans and the report structure the CLI prints."""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from .certify import clawfree_cert, counterexample_for_order, odd_cert_cycle
from .enumeration import enumerate_connected_regular
from .families import cycle_graph, random_gnm
from .graph import Graph, GraphError, line_graph, regular_degree
from .oracle import fo_exact


@dataclass
class ReportItem:
    graph_id: str
    achieved: int
    bound: Fraction
    expected_pass: bool = True
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.achieved >= self.bound

    @property
    def as_expected(self) -> bool:
        return self.passed == self.expected_pass and self.detail.get("match", True)

    def as_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "achieved": self.achieved,
            "bound": {"num": self.bound.numerator, "den": self.bound.denominator},
            "pass": self.passed,
            "expected_pass": self.expected_pass,
            "ok": self.as_expected,
            "elapsed": round(self.elapsed, 6),
            **{k: v for k, v in self.detail.items()},
        }


@dataclass
class RunReport:
    command: str
    source: str
    items: list[ReportItem] = field(default_factory=list)
    summary: str = ""

    @property
    def ok(self) -> bool:
        return all(item.as_expected for item in self.items)

    def totals(self) -> dict:
        return {
            "command": self.command,
            "input": self.source,
            "items": len(self.items),
            "passed": sum(item.passed for item in self.items),
            "as_expected": sum(item.as_expected for item in self.items),
            "ok": self.ok,
            "summary": self.summary,
        }


class UnknownScan(GraphError):
    pass


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("ODDSUB_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, args: Iterable) -> list:
    """Ordered map; fans out to processes when ODDSUB_THREADS > 1."""
    args = list(args)
    workers = _workers()
    if workers == 1 or len(args) < 2:
        return [fn(a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, args))


def graph_name(G: Graph) -> str:
    k = regular_degree(G)
    if k == G.n - 1:
        return f"K_{G.n}"
    if k == 2 and G.m == G.n and len(line_graph(G).lg.edges) == G.n:
        return f"C_{G.n}"
    return f"n={G.n},k={k},m={G.m}"


# ---------------------------------------------------------------------------


def _cycle_item(length: int) -> ReportItem:
    start = time.perf_counter()
    value = fo_exact(cycle_graph(length)).value
    formula = 2 * (length // 3)
    cert = odd_cert_cycle(length)
    return ReportItem(
        f"C_{length}",
        value,
        Fraction(formula),
        elapsed=time.perf_counter() - start,
        detail={"formula": formula, "certificate": cert.size, "match": value == formula == cert.size},
    )


def scan_cycle_table() -> RunReport:
    report = RunReport("scan", "cycle-table", _map(_cycle_item, range(3, 22)))
    matched = sum(item.detail["match"] for item in report.items)
    report.summary = f"{matched}/{len(report.items)} matches"
    return report


def _small_regular_item(G: Graph) -> ReportItem:
    start = time.perf_counter()
    value = fo_exact(line_graph(G).lg).value
    name = graph_name(G)
    return ReportItem(name, value, Fraction(G.n, 2), expected_pass=name != "C_5", elapsed=time.perf_counter() - start)


def scan_small_regular(orders: Iterable[int] = (3, 4, 5)) -> RunReport:
    graphs = [G for n in orders for G in enumerate_connected_regular(n)]
    report = RunReport("scan", "wangwu-min-counterexample", _map(_small_regular_item, graphs))
    violators = [item.graph_id for item in report.items if not item.passed]
    report.summary = f"violators = {violators}"
    return report


def _counterexample_item(n: int) -> ReportItem:
    start = time.perf_counter()
    G, rec = counterexample_for_order(n, 4)
    match = G.n == n and rec.chi == 2 and rec.k1r_free and all(rec.block_checks.values())
    return ReportItem(
        f"G_{rec.k},{rec.ell}",
        rec.fo,
        Fraction(n, 2),
        expected_pass=False,
        elapsed=time.perf_counter() - start,
        detail={"n": n, "k": rec.k, "l": rec.ell, "chi": rec.chi, "k1r_free": rec.k1r_free, "match": match},
    )


def scan_counterexample_orders(lo: int, hi: int) -> RunReport:
    report = RunReport("scan", f"counterexample-orders:{lo}..{hi}", _map(_counterexample_item, range(lo, hi + 1)))
    confirmed = sum(item.as_expected for item in report.items)
    report.summary = f"{confirmed}/{len(report.items)} violations confirmed"
    return report


def sample_clawfree(m: int, rng: random.Random) -> Graph:
    """Line graph of a random graph with ``m`` edges, resampled until it has no isolated vertex."""
    lo = next(v for v in range(2, m + 3) if comb(v, 2) >= m)
    while True:
        nv = rng.randint(lo, m + 1)
        source = random_gnm(nv, m, rng.randrange(2**32))
        L = line_graph(source).lg
        if L.min_degree() >= 1:
            return L


def _clawfree_item(args: tuple[int, int, int]) -> ReportItem:
    m, seed, trial = args
    rng = random.Random(seed * 1_000_003 + trial)
    L = sample_clawfree(m, rng)
    start = time.perf_counter()
    cert = clawfree_cert(L)
    return ReportItem(
        f"trial {trial}",
        cert.size,
        cert.bound,
        elapsed=time.perf_counter() - start,
        detail={"n": L.n, "m": L.m, "valid": cert.is_valid(), "match": cert.is_valid()},
    )


def scan_clawfree_random(m: int, trials: int, seed: int) -> RunReport:
    items = _map(_clawfree_item, [(m, seed, t) for t in range(trials)])
    report = RunReport("scan", f"clawfree-random:{m},{trials},{seed}", items)
    report.summary = f"{sum(i.passed for i in items)}/{len(items)} certificates meet n/chi"
    return report


def run_scan(name: str) -> RunReport:
    head, _, args = name.partition(":")
    if head == "wangwu-min-counterexample" and not args:
        return scan_small_regular()
    if head == "cycle-table" and not args:
        return scan_cycle_table()
    if head == "counterexample-orders":
        lo, sep, hi = args.partition("..")
        if sep and lo.isdigit() and hi.isdigit():
            return scan_counterexample_orders(int(lo), int(hi))
        raise UnknownScan(f"expected counterexample-orders:<a>..<b>, got {name!r}")
    if head == "clawfree-random":
        parts = args.split(",")
        if len(parts) == 3 and all(p.isdigit() for p in parts):
            m, trials, seed = (int(p) for p in parts)
            return scan_clawfree_random(m, trials, seed)
        raise UnknownScan(f"expected clawfree-random:<m>,<trials>,<seed>, got {name!r}")
    raise UnknownScan(f"unknown scan {name!r}")
