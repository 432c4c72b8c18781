"""Ferrers diagrams and semi-standard Young tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EntryOutOfRange
from .partitions import Partition


@dataclass(frozen=True)
class FerrersShape:
    """The cells ``(row, col)`` of a Ferrers diagram, 1-indexed, rows going down."""

    shape: Partition
    cells: frozenset

    @classmethod
    def of(cls, shape: Partition) -> "FerrersShape":
        return cls(shape, frozenset((r, c) for r, part in enumerate(shape, 1) for c in range(1, part + 1)))

    def transpose(self) -> "FerrersShape":
        cells = frozenset((c, r) for r, c in self.cells)
        rows: dict[int, int] = {}
        for r, _ in cells:
            rows[r] = rows.get(r, 0) + 1
        return FerrersShape(Partition(sorted(rows.values(), reverse=True)), cells)

    def render(self, box: str = "#") -> str:
        return "\n".join(box * part for part in self.shape)


@dataclass(frozen=True)
class Tableau:
    """A filling of a Ferrers shape. ``rows[r][c]`` is the entry in row r+1, column c+1."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise ValueError(f"row lengths {[len(r) for r in rows]} do not match shape {self.shape.parts}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(Partition([len(r) for r in rows]), tuple(tuple(r) for r in rows))

    def entries(self) -> Iterator[int]:
        for row in self.rows:
            yield from row

    def render(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def is_ssyt(t: Tableau) -> bool:
    rows = t.rows
    for r, row in enumerate(rows):
        for c, x in enumerate(row):
            if x < 1:
                return False
            if c and row[c - 1] > x:
                return False
            if r and rows[r - 1][c] >= x:
                return False
    return True


def is_standard(t: Tableau) -> bool:
    return is_ssyt(t) and sorted(t.entries()) == list(range(1, t.shape.size + 1))


def content(t: Tableau, max_entry: int) -> tuple[int, ...]:
    """Exponent tuple of the monomial x^T: slot v-1 counts the cells holding v."""
    e = [0] * max_entry
    for x in t.entries():
        if not 1 <= x <= max_entry:
            raise EntryOutOfRange(f"entry {x} outside [1, {max_entry}]")
        e[x - 1] += 1
    return tuple(e)


def ssyt_fillings(shape: Partition, max_entry: int) -> Iterator[tuple[int, ...]]:
    """Row-major entry tuples of every SSYT of ``shape`` with entries <= ``max_entry``.

    Backtracks cell by cell. A cell's lower bound is its left neighbour and
    one more than the cell above; its upper bound leaves room for the cells
    below it in the same column, which must each be strictly larger.
    """
    parts = shape.parts
    nrows = len(parts)
    if nrows > max_entry:
        return
    if not parts:
        yield ()
        return
    # column heights, for the "room below" upper bound
    heights = [sum(1 for p in parts if p > c) for c in range(parts[0])]
    cells = [(r, c) for r in range(nrows) for c in range(parts[r])]
    # index of the cell above / to the left in row-major order, or -1
    above = [(sum(parts[:r - 1]) + c) if r else -1 for r, c in cells]
    left = [i - 1 if c else -1 for i, (r, c) in enumerate(cells)]
    upper = [max_entry - (heights[c] - 1 - r) for r, c in cells]
    n = len(cells)
    fill = [0] * n

    def rec(i):
        if i == n:
            yield tuple(fill)
            return
        lo = 1
        if left[i] >= 0:
            lo = fill[left[i]]
        if above[i] >= 0 and fill[above[i]] + 1 > lo:
            lo = fill[above[i]] + 1
        for v in range(lo, upper[i] + 1):
            fill[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def enumerate_ssyt(shape: Partition, max_entry: int) -> Iterator[Tableau]:
    """Lazily yield every SSYT of ``shape`` with entries in ``1..max_entry``.

    Order is lexicographic on the row-major entry sequence.
    """
    parts = shape.parts
    for flat in ssyt_fillings(shape, max_entry):
        rows, pos = [], 0
        for p in parts:
            rows.append(flat[pos:pos + p])
            pos += p
        yield Tableau(shape, tuple(rows))
