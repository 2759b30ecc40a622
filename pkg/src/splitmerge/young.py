"""Young diagrams: partitions, skew shapes, contents and skew hooks.

Cells are 1-indexed ``(row, column)`` pairs and the content of cell
``(i, j)`` is ``j - i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Iterable, Iterator

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r < 1 for r in rows):
            raise ValueError(f"partition rows must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"partition rows must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Iterable[int]) -> Partition:
        """Build from any iterable of row lengths, dropping zeros."""
        return cls(tuple(r for r in rows if r))

    @classmethod
    def hook(cls, arm: int, size: int) -> Partition:
        """The hook ``(arm, 1^(size - arm))``."""
        if not 1 <= arm <= size:
            raise ValueError(f"hook needs 1 <= arm <= size, got {arm}, {size}")
        return cls((arm,) + (1,) * (size - arm))

    @property
    def n(self) -> int:
        return sum(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __getitem__(self, i: int) -> int:
        return self.rows[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.rows)) + ")"

    def row(self, i: int) -> int:
        """Length of 1-indexed row ``i`` (0 beyond the last row)."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    @cached_property
    def conjugate(self) -> Partition:
        if not self.rows:
            return self
        return Partition(tuple(sum(1 for r in self.rows if r > j) for j in range(self.rows[0])))

    def cells(self) -> Iterator[Cell]:
        for i, r in enumerate(self.rows, start=1):
            for j in range(1, r + 1):
                yield (i, j)

    def contains(self, other: Partition) -> bool:
        """True if the diagram of ``other`` sits inside this one."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self.rows, other.rows))

    def is_hook(self) -> bool:
        return len(self.rows) <= 1 or self.rows[1] == 1

    def removable_cells(self) -> list[Cell]:
        out = []
        for i, r in enumerate(self.rows, start=1):
            if r > self.row(i + 1):
                out.append((i, r))
        return out

    def addable_cells(self) -> list[Cell]:
        out = []
        for i in range(1, len(self.rows) + 2):
            if i == 1 or self.row(i - 1) > self.row(i):
                out.append((i, self.row(i) + 1))
        return out

    def remove_cell(self, cell: Cell) -> Partition:
        i, _ = cell
        rows = list(self.rows)
        rows[i - 1] -= 1
        return Partition.of(rows)

    def add_cell(self, cell: Cell) -> Partition:
        i, _ = cell
        rows = list(self.rows) + [0]
        rows[i - 1] += 1
        return Partition.of(rows)

    def hook_length(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1] - j + self.conjugate.rows[j - 1] - i + 1

    def dimension(self) -> int:
        """Number of standard Young tableaux, by the hook length formula."""
        from math import factorial, prod

        return factorial(self.n) // prod(self.hook_length(c) for c in self.cells())


def content(cell: Cell) -> int:
    return cell[1] - cell[0]


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(
            (i, j)
            for i, r in enumerate(self.outer.rows, start=1)
            for j in range(self.inner.row(i) + 1, r + 1)
        )

    def rows_touched(self) -> set[int]:
        return {i for i, _ in self.cells}

    def is_connected(self) -> bool:
        """Edge connectivity of the cells (diagonal contact does not count)."""
        cells = self.cells
        if not cells:
            return False
        start = next(iter(cells))
        seen = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(cells)

    def is_skew_hook(self) -> bool:
        contents = [content(c) for c in self.cells]
        return self.is_connected() and len(set(contents)) == len(contents)

    def height(self) -> int:
        return len(self.rows_touched()) - 1

    def is_horizontal_strip(self) -> bool:
        """No two cells in the same column."""
        cols = [j for _, j in self.cells]
        return len(set(cols)) == len(cols)


def content_product(shape: SkewShape) -> Fraction:
    """Product of ``content + 1`` over the cells of ``shape`` (1 when empty)."""
    out = 1
    for cell in shape.cells:
        out *= content(cell) + 1
    return Fraction(out)


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


def sub_partitions(outer: Partition, size: int) -> list[Partition]:
    """Partitions of ``size`` contained in ``outer``."""
    return [p for p in partitions(size) if outer.contains(p)]


# Beta-set (first column hook lengths) encoding: removing a k-rim hook moves
# one bead from position b to the empty position b - k; the height is the
# number of beads jumped over.
def _beta_set(p: Partition, length: int) -> list[int]:
    rows = list(p.rows) + [0] * (length - len(p))
    return [rows[i] + (length - 1 - i) for i in range(length)]


def _from_beta(beta: Iterable[int]) -> Partition:
    beads = sorted(beta, reverse=True)
    length = len(beads)
    return Partition.of(b - (length - 1 - i) for i, b in enumerate(beads))


@cache
def remove_skew_hooks(lam: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """All ``(mu, height)`` with ``lam \\ mu`` a skew ``k``-hook."""
    if k < 1:
        raise ValueError("hook size must be at least 1")
    length = len(lam) + k
    beta = _beta_set(lam, length)
    occupied = set(beta)
    out = []
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        mu = _from_beta([c for c in beta if c != b] + [target])
        out.append((mu, jumped))
    out.sort(key=lambda t: t[0].rows, reverse=True)
    return tuple(out)
