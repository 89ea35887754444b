"""Linear systems over GF(2) with rows packed into Python ints."""

from __future__ import annotations

from typing import Sequence


class InconsistentSystem(ArithmeticError):
    pass


def solve(rows: Sequence[int], rhs: Sequence[int], nvars: int) -> list[int]:
    """Solve ``rows @ x = rhs`` over GF(2); bit ``j`` of a row is the coefficient of ``x_j``.

    Rows are taken in order and each pivots on its lowest surviving bit.  The
    stored pivot rows are kept fully reduced, so with every free variable set
    to 0 each pivot variable simply equals its row's right-hand side.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for row, b in zip(rows, rhs):
        b &= 1
        for col, (prow, pb) in pivots.items():
            if (row >> col) & 1:
                row ^= prow
                b ^= pb
        if row == 0:
            if b:
                raise InconsistentSystem("0 = 1 after elimination")
            continue
        col = (row & -row).bit_length() - 1
        for other, (prow, pb) in list(pivots.items()):
            if (prow >> col) & 1:
                pivots[other] = (prow ^ row, pb ^ b)
        pivots[col] = (row, b)
    x = [0] * nvars
    for col, (_, b) in pivots.items():
        x[col] = b
    return x


def rank(rows: Sequence[int]) -> int:
    basis: list[int] = []
    for row in rows:
        for bvec in basis:
            row = min(row, row ^ bvec)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return len(basis)
