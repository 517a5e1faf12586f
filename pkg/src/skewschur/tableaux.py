"""Semistandard and ballot tableaux on skew shapes.

The ballot enumerator is the engine behind every coefficient in :mod:`lr`.
It fills boxes in reverse reading order (top row first, right to left
within a row) so that the ballot condition can be checked one letter at a
time, and prunes on semistandardness, the ballot prefix, and the content
budget when a target content is given.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .skewshapes import SkewPartition, del_rows

__all__ = [
    "Tableau",
    "Word",
    "content",
    "reverse_reading_word",
    "column_reading_word",
    "is_ballot",
    "is_semistandard",
    "enumerate_ssyt",
    "ssyt_fillings",
    "enumerate_ballot_tableaux",
    "ballot_fillings",
    "delete_rows",
]

Word = tuple[int, ...]


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape; ``rows[r-1]`` holds row ``r`` left to right."""

    shape: SkewPartition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != len(self.shape.outer):
            raise ValueError(f"expected {len(self.shape.outer)} rows, got {len(rows)}")
        for r, row in enumerate(rows, start=1):
            if len(row) != len(self.shape.row_range(r)):
                raise ValueError(f"row {r} of {self.shape} needs {len(self.shape.row_range(r))} entries")
            if any(v < 1 for v in row):
                raise ValueError("entries must be positive")

    @classmethod
    def from_rows(cls, shape: SkewPartition, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(shape, tuple(tuple(r) for r in rows))

    def __getitem__(self, box: tuple[int, int]) -> int:
        r, c = box
        if box not in self.shape:
            raise KeyError(box)
        return self.rows[r - 1][c - self.shape.inner.part(r) - 1]

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for r, row in enumerate(self.rows, start=1):
            start = self.shape.inner.part(r) + 1
            for j, v in enumerate(row):
                yield (r, start + j), v

    def render(self) -> str:
        """One line per row, entries separated by spaces, inner boxes as ``.``."""
        lines = []
        for r, row in enumerate(self.rows, start=1):
            cells = ["."] * self.shape.inner.part(r) + [str(v) for v in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def content(t: Tableau) -> tuple[int, ...]:
    """Letter counts ``(η_1, η_2, ...)`` with trailing zeros trimmed."""
    counts: list[int] = []
    for row in t.rows:
        for v in row:
            if v > len(counts):
                counts.extend([0] * (v - len(counts)))
            counts[v - 1] += 1
    return tuple(counts)


def reverse_reading_word(t: Tableau) -> Word:
    return tuple(v for row in t.rows for v in reversed(row))


def column_reading_word(t: Tableau) -> Word:
    """Columns right to left, each read top to bottom."""
    by_col: dict[int, list[int]] = {}
    for (r, c), v in t.items():
        by_col.setdefault(c, []).append(v)
    return tuple(v for c in sorted(by_col, reverse=True) for v in by_col[c])


def is_ballot(word: Sequence[int]) -> bool:
    counts = [0] * (max(word, default=0) + 1)
    for a in word:
        counts[a - 1] += 1
        if a > 1 and counts[a - 1] > counts[a - 2]:
            return False
    return True


def is_semistandard(t: Tableau) -> bool:
    for (r, c), v in t.items():
        if (r, c + 1) in t.shape and t[r, c + 1] < v:
            return False
        if (r + 1, c) in t.shape and t[r + 1, c] <= v:
            return False
    return True


def delete_rows(t: Tableau, N: int) -> Tableau:
    """Drop the last ``N`` rows of both the shape and the filling."""
    shape = del_rows(t.shape, N)
    return Tableau(shape, t.rows[: len(shape.outer)])


# -- enumeration --------------------------------------------------------------


def _reverse_reading_cells(shape: SkewPartition) -> list[tuple[int, int]]:
    return [
        (r, c)
        for r in range(1, len(shape.outer) + 1)
        for c in reversed(shape.row_range(r))
    ]


def ballot_fillings(
    shape: SkewPartition,
    max_letter: int,
    target: Sequence[int] | None = None,
) -> Iterator[list[int]]:
    """Yield every ballot tableau of ``shape`` as a list of entries in reverse reading order.

    Entries are bounded by ``max_letter``; with ``target`` only fillings of
    exactly that content are produced.  The yielded list is reused between
    iterations, so copy it if you keep it.  Order is lexicographic on the
    reverse reading word.
    """
    cells = _reverse_reading_cells(shape)
    n_cells = len(cells)
    if target is not None:
        if sum(target) != n_cells:
            return
        max_letter = min(max_letter, len(target))
    if n_cells == 0:
        yield []
        return
    if max_letter <= 0:
        return
    pos = {cell: i for i, cell in enumerate(cells)}
    right = [pos.get((r, c + 1), -1) for r, c in cells]
    above = [pos.get((r - 1, c), -1) for r, c in cells]
    budget = [n_cells + 1] + list(target if target is not None else [n_cells] * max_letter) + [0]
    count = [n_cells + 1] + [0] * (max_letter + 1)
    val = [0] * n_cells
    last = n_cells - 1

    i = 0
    v = 1
    while True:
        hi = val[right[i]] if right[i] >= 0 else max_letter
        while v <= hi:
            cv = count[v]
            if cv < count[v - 1] and cv < budget[v]:
                break
            v += 1
        if v <= hi:
            val[i] = v
            count[v] += 1
            if i == last:
                yield val
                count[v] -= 1
                v += 1
                continue
            i += 1
            a = above[i]
            v = val[a] + 1 if a >= 0 else 1
            continue
        i -= 1
        if i < 0:
            return
        v = val[i]
        count[v] -= 1
        v += 1


def _tableau_from_reverse_reading(shape: SkewPartition, vals: Sequence[int]) -> Tableau:
    rows = []
    k = 0
    for r in range(1, len(shape.outer) + 1):
        width = len(shape.row_range(r))
        rows.append(tuple(reversed(vals[k : k + width])))
        k += width
    return Tableau(shape, tuple(rows))


def enumerate_ballot_tableaux(shape: SkewPartition, nu: Sequence[int]) -> Iterator[Tableau]:
    """Ballot tableaux of ``shape`` with content exactly ``nu``."""
    nu = tuple(nu)
    for vals in ballot_fillings(shape, len(nu), target=nu):
        yield _tableau_from_reverse_reading(shape, vals)


def ssyt_fillings(shape: SkewPartition, max_entry: int) -> Iterator[list[int]]:
    """Semistandard fillings as row-major value lists, lexicographically ordered.

    The yielded list is reused between steps; copy it to keep it.
    """
    cells = list(shape.cells())
    n_cells = len(cells)
    if n_cells == 0:
        yield []
        return
    pos = {cell: i for i, cell in enumerate(cells)}
    left = [pos.get((r, c - 1), -1) for r, c in cells]
    above = [pos.get((r - 1, c), -1) for r, c in cells]
    val = [0] * n_cells

    def lower(i: int) -> int:
        lo = val[left[i]] if left[i] >= 0 else 1
        if above[i] >= 0:
            lo = max(lo, val[above[i]] + 1)
        return lo

    last = n_cells - 1
    i = 0
    v = lower(0)
    while True:
        if v <= max_entry:
            val[i] = v
            if i == last:
                yield val
                v += 1
                continue
            i += 1
            v = lower(i)
            continue
        i -= 1
        if i < 0:
            return
        v = val[i] + 1


def enumerate_ssyt(shape: SkewPartition, max_entry: int) -> Iterator[Tableau]:
    """Every semistandard tableau with entries in ``[max_entry]``.

    Order is lexicographic on the row-major entry sequence.
    """
    widths = [len(shape.row_range(r)) for r in range(1, len(shape.outer) + 1)]
    for val in ssyt_fillings(shape, max_entry):
        rows = []
        k = 0
        for w in widths:
            rows.append(tuple(val[k : k + w]))
            k += w
        yield Tableau(shape, tuple(rows))


def enumerate_all_ballot_tableaux(shape: SkewPartition, max_letter: int) -> Iterator[Tableau]:
    """Ballot tableaux of any content with letters at most ``max_letter``."""
    for vals in ballot_fillings(shape, max_letter):
        yield _tableau_from_reverse_reading(shape, vals)


def content_key(vals: Sequence[int]) -> tuple[int, ...]:
    """Content of a ballot filling as a plain tuple (a partition, since the word is ballot)."""
    counts: list[int] = []
    for v in vals:
        if v > len(counts):
            counts.extend([0] * (v - len(counts)))
        counts[v - 1] += 1
    return tuple(counts)
