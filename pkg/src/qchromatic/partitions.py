"""Integer partitions and their cells, French convention, 0-indexed.

A cell (i, j) sits in column i and row j, rows counted from the bottom;
(i, j) belongs to lam iff 0 <= j < len(lam) and 0 <= i < lam[j].  Cells
double as monomials via q^i * t^j, which is the convention every other
module inherits.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .exact import BiPoly


class Cell(NamedTuple):
    col: int
    row: int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; () is allowed."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def contains(self, c: Cell) -> bool:
        return 0 <= c.row < len(self) and 0 <= c.col < self[c.row]

    def cells(self) -> Iterator[Cell]:
        for j, row_len in enumerate(self):
            for i in range(row_len):
                yield Cell(i, j)

    def add_cell(self, c: Cell) -> "Partition":
        if c.row == len(self):
            return Partition(self + (1,))
        parts = list(self)
        parts[c.row] += 1
        return Partition(parts)

    def __repr__(self):
        return f"Partition{tuple(self)}"


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    out = [0] * lam[0]
    for part in lam:
        for i in range(part):
            out[i] += 1
    return Partition(out)


def arm(lam: Partition, c: Cell) -> int:
    """Number of cells strictly to the right of c in its row."""
    if not lam.contains(c):
        raise ValueError(f"cell {tuple(c)} is not in {tuple(lam)}")
    return lam[c.row] - c.col - 1


def leg(lam: Partition, c: Cell) -> int:
    """Number of cells above c in its column (French convention)."""
    if not lam.contains(c):
        raise ValueError(f"cell {tuple(c)} is not in {tuple(lam)}")
    return sum(1 for j in range(c.row + 1, len(lam)) if lam[j] > c.col)


def addable_cells(lam: Partition) -> list[Cell]:
    """All cells whose addition keeps lam a partition, bottom row upward."""
    out = [Cell(lam[0], 0)] if lam else [Cell(0, 0)]
    for j in range(1, len(lam)):
        if lam[j] < lam[j - 1]:
            out.append(Cell(lam[j], j))
    if lam:
        out.append(Cell(0, len(lam)))
    return out


def n_stat(lam: Partition) -> int:
    """n(lam) = sum_i (i-1) * lam_i, i.e. the row index summed over cells."""
    return sum(j * part for j, part in enumerate(lam))


def cell_monomial(c: Cell) -> BiPoly:
    return BiPoly.monomial(1, c.col, c.row)


def is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    """True iff outer/inner has at most one cell in every column."""
    if len(inner) > len(outer) or any(
            inner[j] > outer[j] for j in range(len(inner))):
        raise ValueError(f"{tuple(inner)} is not contained in {tuple(outer)}")
    for j in range(1, len(outer)):
        prev_inner = inner[j - 1] if j - 1 < len(inner) else 0
        if outer[j] > prev_inner:
            return False
    return True


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in lexicographically decreasing order."""
    out: list[Partition] = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n if n else 1, [])
    return out
