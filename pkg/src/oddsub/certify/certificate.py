"""Certificates and the closed-form cycle/path constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, TypeVar

from ..families import cycle_graph, path_graph
from ..graph import Graph, GraphError, is_odd_induced, line_graph

T = TypeVar("T")


class PreconditionError(GraphError):
    """A pipeline's hypothesis does not hold for the given input."""


class CertificateError(RuntimeError):
    """A constructed certificate failed its own check; indicates a bug or a bad input colouring."""


@dataclass(frozen=True)
class Certificate:
    witness: tuple[int, ...]
    target: str
    bound: Fraction
    theorem_tag: str
    trace: tuple[str, ...] = ()
    target_graph: Graph | None = field(default=None, repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.witness)

    def is_valid(self) -> bool:
        if self.target_graph is None:
            return False
        return is_odd_induced(self.target_graph, self.witness) and self.size >= self.bound

    def check(self) -> "Certificate":
        if not self.is_valid():
            raise CertificateError(
                f"{self.theorem_tag}: witness of size {self.size} is not a valid odd set meeting {self.bound}"
            )
        return self

    def to_json(self) -> dict:
        return {
            "theorem_tag": self.theorem_tag,
            "target": self.target,
            "witness": list(self.witness),
            "bound": {"num": self.bound.numerator, "den": self.bound.denominator},
            "size": self.size,
            "trace": list(self.trace),
        }


def revalidate(data: dict, G: Graph) -> bool:
    """Re-check a serialised certificate against its host graph ``G``."""
    target = G if data["target"] == "G" else line_graph(G).lg
    bound = Fraction(data["bound"]["num"], data["bound"]["den"])
    witness = data["witness"]
    return len(witness) == data["size"] and len(witness) >= bound and is_odd_induced(target, witness)


def every_third_pair(cyclic: Sequence[T]) -> list[T]:
    """Endpoints of every third edge around a cycle given in cyclic order.

    Keeps positions ``3i`` and ``3i + 1`` for ``i < len // 3``; the chosen
    edges are pairwise at distance >= 2, so they induce a matching.
    """
    out: list[T] = []
    for i in range(len(cyclic) // 3):
        out.append(cyclic[3 * i])
        out.append(cyclic[3 * i + 1])
    return out


def path_pick(seq: Sequence[T]) -> list[T]:
    """Take the first edge, skip one vertex, recurse on the rest of the path."""
    t = len(seq)
    if t < 2:
        raise PreconditionError("a path needs at least 2 vertices")
    out: list[T] = []
    i = 0
    while t - i >= 5:
        out.extend((seq[i], seq[i + 1]))
        i += 3
    # 2, 3 or 4 vertices remain: one edge
    out.extend((seq[i], seq[i + 1]))
    return out


def odd_cert_cycle(length: int) -> Certificate:
    if length < 3:
        raise PreconditionError(f"cycle length must be >= 3, got {length}")
    G = cycle_graph(length)
    witness = tuple(every_third_pair(range(length)))
    bound = Fraction(2) if length == 5 else Fraction(length, 2)
    trace = (f"C_{length}: every third edge, {length // 3} edge(s)",)
    return Certificate(witness, "G", bound, "cycle", trace, G).check()


def odd_cert_path(t: int) -> Certificate:
    if t < 2:
        raise PreconditionError(f"path order must be >= 2, got {t}")
    G = path_graph(t)
    witness = tuple(path_pick(range(t)))
    trace = (f"P_{t}: {len(witness) // 2} edge(s) by take-skip recursion",)
    return Certificate(witness, "G", Fraction(t, 2), "path", trace, G).check()
