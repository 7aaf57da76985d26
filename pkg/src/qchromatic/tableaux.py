"""Standard tableaux constrained by a unit interval graph.

For a reverse Hessenberg function e, the tableaux enumerated here are the
standard fillings T of a partition shape such that for every label i the
cells holding {j : j prec i} together with i form a horizontal strip.
Labels are placed in increasing order, so the search maintains a chain of
partition shapes and prunes with a single strip test per placement; this
matches how the raising/lowering operator derivation adds one cell at a
time while forgetting all but the most recent ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .interval import Hessenberg
from .partitions import Cell, Partition, addable_cells, is_horizontal_strip


@dataclass(frozen=True)
class StripTableau:
    """A bijective filling; cells[i-1] is the cell holding label i."""

    shape: Partition
    cells: tuple[Cell, ...]

    def __post_init__(self):
        if len(self.cells) != self.shape.size:
            raise ValueError("number of cells differs from the shape size")
        if len(set(self.cells)) != len(self.cells):
            raise ValueError("cells must be distinct")

    @property
    def n(self) -> int:
        return len(self.cells)

    def cell_of(self, label: int) -> Cell:
        return self.cells[label - 1]

    def column_of(self, label: int) -> int:
        return self.cells[label - 1].col

    def row_of(self, label: int) -> int:
        return self.cells[label - 1].row

    def prefix_shape(self, upto: int) -> Partition:
        """Shape of the subtableau holding labels 1..upto."""
        rows = [0] * len(self.shape)
        for c in self.cells[:upto]:
            rows[c.row] += 1
        while rows and rows[-1] == 0:
            rows.pop()
        return Partition(rows)

    def row_lists(self) -> list[list[int]]:
        """Labels row by row from the bottom, left to right."""
        rows: list[list[int]] = [[] for _ in self.shape]
        for label, c in enumerate(self.cells, start=1):
            rows[c.row].append((c.col, label))
        return [[label for _, label in sorted(row)] for row in rows]

    @staticmethod
    def from_rows(rows: list[list[int]]) -> "StripTableau":
        shape = Partition([len(r) for r in rows])
        cells: dict[int, Cell] = {}
        for j, row in enumerate(rows):
            for i, label in enumerate(row):
                cells[label] = Cell(i, j)
        if sorted(cells) != list(range(1, shape.size + 1)):
            raise ValueError("rows must hold the labels 1..n exactly once")
        return StripTableau(shape, tuple(cells[i] for i in range(1, shape.size + 1)))

    def __repr__(self):
        return f"StripTableau{self.row_lists()}"


class StripSequence:
    """Cells of a strict skew tableau, largest entry first, distinct columns."""

    __slots__ = ("cells",)

    def __init__(self, cells=()):
        cells = tuple(Cell(*c) for c in cells)
        cols = [c.col for c in cells]
        if len(set(cols)) != len(cols):
            raise ValueError("strip cells must occupy distinct columns")
        self.cells = cells

    def columns(self) -> list[int]:
        return [c.col for c in self.cells]

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    def __getitem__(self, k):
        return self.cells[k]

    def __eq__(self, other):
        if isinstance(other, StripSequence):
            return self.cells == other.cells
        if isinstance(other, tuple):
            return self.cells == other
        return NotImplemented

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"StripSequence{self.cells}"


def enumerate_strip_tableaux(e: Hessenberg, shape) -> list[StripTableau]:
    """All tableaux for e of the given shape, in a fixed deterministic order.

    Labels go in increasing order; a placement of i at an addable cell of
    the current shape survives iff the skew between the shape after label
    e(i) and the new shape is a horizontal strip.  The addable cells are
    tried bottom row first, which orders the output lexicographically by
    the (row, col) sequence of label cells.
    """
    shape = Partition(shape)
    n = e.n
    if shape.size != n:
        raise ValueError(f"shape {tuple(shape)} has size {shape.size}, expected {n}")
    results: list[StripTableau] = []
    shapes: list[Partition] = [Partition()]
    cells: list[Cell] = []

    def place(i: int):
        if i > n:
            results.append(StripTableau(shape, tuple(cells)))
            return
        current = shapes[-1]
        for x in addable_cells(current):
            if x.row >= len(shape) or x.col >= shape[x.row]:
                continue
            grown = current.add_cell(x)
            if not is_horizontal_strip(shapes[e.at(i)], grown):
                continue
            shapes.append(grown)
            cells.append(x)
            place(i + 1)
            shapes.pop()
            cells.pop()

    place(1)
    return results


def strip_sequence(T: StripTableau, e: Hessenberg, i: int) -> StripSequence:
    """Cells of the labels j with j prec i, largest label first."""
    if not 1 <= i <= T.n:
        raise ValueError(f"label {i} out of range 1..{T.n}")
    return StripSequence(tuple(T.cell_of(j)
                               for j in range(i - 1, e.at(i), -1)))


def has_column_support(T: StripTableau, e: Hessenberg) -> bool:
    """True iff every label outside column 0 has an edge-predecessor in the
    column immediately to its left; exactly the tableaux whose weight
    survives the t=1 specialization."""
    by_column: dict[int, list[int]] = {}
    for label, c in enumerate(T.cells, start=1):
        by_column.setdefault(c.col, []).append(label)
    for label, c in enumerate(T.cells, start=1):
        if c.col == 0:
            continue
        if not any(j < label and e.prec(j, label)
                   for j in by_column.get(c.col - 1, ())):
            return False
    return True


def columns(T: StripTableau) -> dict[int, int]:
    """label -> column index; the t=1 shadow of the cell monomials."""
    return {label: c.col for label, c in enumerate(T.cells, start=1)}


def m_stat(T: StripTableau, e: Hessenberg, i: int) -> int:
    """Entries of the strip before i lying at least two rows below i."""
    row = T.row_of(i)
    return sum(1 for j in range(e.at(i) + 1, i) if T.row_of(j) <= row - 2)


def hl_stats(T: StripTableau, e: Hessenberg, i: int) -> tuple[int, int, int | None]:
    """(m, d, L) for a label i above the bottom row.

    With i in 0-indexed row s: d is the length difference between rows s-1
    and s of the shape before i; L is the column of the leftmost strip
    entry in row s-1, or None when that row of the strip is empty.
    """
    s = T.row_of(i)
    if s == 0:
        raise ValueError(f"label {i} sits in the bottom row; d and L are undefined")
    before = T.prefix_shape(i - 1)
    below = before[s - 1]
    here = before[s] if s < len(before) else 0
    d = below - here
    row_below = [T.column_of(j) for j in range(e.at(i) + 1, i)
                 if T.row_of(j) == s - 1]
    L = min(row_below) if row_below else None
    return m_stat(T, e, i), d, L
