"""Integer partitions, the zero-terminated fixed-size array layout, and the
predicates that describe a partition and its conjugate in that layout.

Two representations live here:

* :class:`Partition` is the canonical value: a weakly decreasing tuple of
  positive integers.
* :class:`FixedPartitionSequence` is the C-style layout used by the
  conjugate routine: ``max`` integer cells, 1-indexed (cell 0 exists but is
  never used), terminated by zeros.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DoesNotFit, MaxMismatch, NotAPartition, PredicateDomain

DEFAULT_MAX = 100


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    Comparison is lexicographic on the parts, so ``sorted(..., reverse=True)``
    gives the usual decreasing-lex order.
    """

    parts: tuple[int, ...] = ()

    def __init__(self, *parts: int):
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise NotAPartition(f"part {p} at position {i + 1} is not positive")
            if i and p > parts[i - 1]:
                raise NotAPartition(f"parts {parts} are not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}" if len(self.parts) != 1 else f"Partition({self.parts[0]})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        return conjugate_oracle(self)


def partition_from_parts(parts: Iterable[int]) -> Partition:
    """Build a :class:`Partition`, dropping trailing zeros first."""
    parts = [int(p) for p in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    """Parse the comma format ``3,2,1,1,1``; an empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise NotAPartition(f"cannot parse {text!r} as comma-separated integers") from None
    return partition_from_parts(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p.parts)


@dataclass
class FixedPartitionSequence:
    """``max`` integer cells laid out like the C array ``int t[MAX]``.

    Cell 0 is part of the storage but is always 0 and never read. Cells are
    mutable because the conjugate routine writes its result into one of these.
    The partition invariants are *not* enforced on construction; use
    :func:`is_partition_pred` to check them, so deliberately broken inputs can
    be built.
    """

    cells: list[int]
    max: int = field(default=DEFAULT_MAX)

    def __post_init__(self):
        self.cells = [int(c) for c in self.cells]
        if self.max < 2:
            raise ValueError(f"max must be at least 2, got {self.max}")
        if len(self.cells) != self.max:
            raise ValueError(f"expected {self.max} cells, got {len(self.cells)}")
        if self.cells[0] != 0:
            raise ValueError("cell 0 is unused and must hold 0")

    @classmethod
    def zeros(cls, max: int = DEFAULT_MAX) -> "FixedPartitionSequence":
        return cls([0] * max, max)

    @classmethod
    def padded(cls, values: Sequence[int], max: int = DEFAULT_MAX) -> "FixedPartitionSequence":
        """Place ``values`` in cells 1, 2, ... and zero-fill the rest."""
        if len(values) > max - 1:
            raise ValueError(f"{len(values)} values do not fit in cells 1..{max - 1}")
        return cls([0, *values] + [0] * (max - 1 - len(values)), max)

    def __getitem__(self, i: int) -> int:
        return self.cells[i]

    def __setitem__(self, i: int, value: int) -> None:
        if i == 0:
            raise IndexError("cell 0 is unused")
        self.cells[i] = value

    def copy(self) -> "FixedPartitionSequence":
        # Already validated; skip __post_init__.
        dup = object.__new__(FixedPartitionSequence)
        dup.cells, dup.max = list(self.cells), self.max
        return dup

    def nonzero_prefix(self) -> list[int]:
        """Cells 1, 2, ... up to (not including) the first zero."""
        out = []
        for c in self.cells[1:]:
            if c == 0:
                break
            out.append(c)
        return out


@dataclass(frozen=True)
class CountWitness:
    """Arguments ``(j, k, z)`` of the literal counting predicate.

    Deliberately unvalidated: the literal predicate treats out-of-range
    arguments as false rather than as an error.
    """

    j: int
    k: int
    z: int


def to_fixed(p: Partition, max: int = DEFAULT_MAX) -> FixedPartitionSequence:
    if len(p) >= max - 1:
        raise DoesNotFit(f"partition of length {len(p)} needs length < {max - 1}")
    if p and p[0] >= max - 1:
        raise DoesNotFit(f"part {p[0]} must be < {max - 1}")
    return FixedPartitionSequence.padded(p.parts, max)


def from_fixed(s: FixedPartitionSequence) -> Partition:
    if not is_partition_pred(s):
        raise NotAPartition(f"cells {s.cells[1:8]}... do not satisfy is_partition")
    return Partition(s.nonzero_prefix())


def is_partition_pred(s: FixedPartitionSequence) -> bool:
    """Bounds ``0 <= t[i] < max-1``, non-increasing order, and ``t[max-1] == 0``.

    Checking adjacent pairs is equivalent to the pairwise ``i <= j`` clause,
    and once the cells are non-increasing the bounds reduce to the two ends.
    """
    cells, top = s.cells, s.max - 1
    return cells[top] == 0 and 0 <= cells[1] < top and all(map(operator.ge, cells[1:top], cells[2:]))


def _check_count_domain(s: FixedPartitionSequence, j: int, k: int) -> None:
    if not 1 <= j <= s.max:
        raise PredicateDomain(f"j={j} outside [1, {s.max}]")
    if not 1 <= k < s.max:
        raise PredicateDomain(f"k={k} outside [1, {s.max})")


def count_if_sup_exact(s: FixedPartitionSequence, j: int, k: int) -> int:
    """Number of indices ``1 <= i < j`` with ``cells[i] >= k``."""
    _check_count_domain(s, j, k)
    return sum(1 for c in s.cells[1:j] if c >= k)


def column_counts(s: FixedPartitionSequence) -> list[int]:
    """``count_if_sup_exact(s, s.max, k)`` for every ``k`` at once.

    Entry 0 is padding so the list is indexed like the cells. Built from a
    histogram of cell values, O(max).
    """
    hist = [0] * (s.max + 1)
    for c in s.cells[1:]:
        if c >= 1:
            hist[min(c, s.max)] += 1
    out = [0] * s.max
    running = hist[s.max]
    for k in range(s.max - 1, 0, -1):
        running += hist[k]
        out[k] = running
    return out


def count_if_sup_literal(s: FixedPartitionSequence, w: CountWitness) -> bool:
    """The disjunctive form of the counting predicate.

    Note the first disjunct only asks the first ``z`` cells to be ``>= k``;
    it does not ask cell ``z+1`` to be ``< k``, so any ``1 <= z <= count``
    is accepted.
    """
    j, k, z = w.j, w.k, w.z
    if not (1 <= j <= s.max and 1 <= k < s.max):
        return False
    if not is_partition_pred(s):
        return False
    cells = s.cells
    if 1 <= z < j and all(cells[i] >= k for i in range(1, z + 1)):
        return True
    return z == 0 and all(cells[i] < k for i in range(1, j))


def _same_max(t1: FixedPartitionSequence, t2: FixedPartitionSequence) -> None:
    if t1.max != t2.max:
        raise MaxMismatch(f"max {t1.max} != {t2.max}")


def is_conjugate_pred(t1: FixedPartitionSequence, t2: FixedPartitionSequence) -> bool:
    """Exact-count conjugacy: ``t2[k]`` is the number of parts of ``t1`` that are ``>= k``."""
    _same_max(t1, t2)
    if not is_partition_pred(t1):
        return False
    return column_counts(t1)[1:] == t2.cells[1:]


def is_conjugate_pred_literal(t1: FixedPartitionSequence, t2: FixedPartitionSequence) -> bool:
    """Conjugacy through the literal counting predicate (weaker than exact)."""
    _same_max(t1, t2)
    return all(
        count_if_sup_literal(t1, CountWitness(t1.max, k, t2.cells[k]))
        for k in range(1, t1.max)
    )


def conjugate_oracle(p: Partition) -> Partition:
    """Column lengths of the Ferrers diagram: ``|{i : parts[i] >= j}|`` for ``j = 1..parts[0]``."""
    if not p:
        return Partition()
    return Partition([sum(1 for part in p.parts if part >= j) for j in range(1, p[0] + 1)])


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if max_part is None or max_part > n:
        max_part = n

    def rec(remaining, bound, prefix):
        if remaining == 0:
            yield Partition(prefix)
            return
        for first in range(min(bound, remaining), 0, -1):
            prefix.append(first)
            yield from rec(remaining - first, first, prefix)
            prefix.pop()

    if n == 0:
        yield Partition()
    elif max_part >= 1:
        yield from rec(n, max_part, [])
