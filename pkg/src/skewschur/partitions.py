"""Integer partitions and the arithmetic used on them.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers.  Because it subclasses :class:`tuple`, indexing, hashing and the
ordering used for tie-breaking (plain lexicographic, shorter prefix first)
all come for free.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator, NamedTuple

from .errors import NotContained, ParseError

__all__ = [
    "Partition",
    "Rectangle",
    "EMPTY",
    "length",
    "num_parts",
    "contains",
    "union",
    "add_rectangle",
    "complement",
    "shortness",
    "conjugate",
    "is_rectangle",
    "is_fat_hook",
    "partitions_in_box",
    "partitions_of",
    "subpartitions",
]


class Partition(tuple):
    """Weakly decreasing sequence of positive parts; trailing zeros are dropped."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        parts = parts[:end]
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"non-positive part {p} in {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts are not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"5,4,1,1"``; the empty string (or ``∅``) is the empty partition."""
        text = text.strip()
        if text in ("", "∅", "()"):
            return EMPTY
        text = text.strip("()")
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ParseError(f"bad partition {text!r}: {exc}") from None

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts already known to be weakly decreasing and non-negative."""
        parts = tuple(parts)
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return tuple.__new__(cls, parts[:end])

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def label(self) -> str:
        """Parenthesised form used in expansion listings, e.g. ``(2,1)``."""
        return "(" + ",".join(map(str, self)) + ")"

    def part(self, i: int) -> int:
        """1-based part access with ``λ_i = 0`` beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    def exponent_form(self) -> tuple[tuple[int, int], ...]:
        """Run-length view ``((λ_1, l_1), ..., (λ_p, l_p))``."""
        return _runs(tuple(self))


@lru_cache(maxsize=1 << 16)
def _runs(parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((v, sum(1 for _ in g)) for v, g in groupby(parts))


EMPTY = Partition()


class Rectangle(NamedTuple):
    """Ambient ``width x height`` box, written ``(a^b)`` with a = width."""

    width: int
    height: int

    def as_partition(self) -> Partition:
        return Partition((self.width,) * self.height)


def length(p: Partition) -> int:
    return len(p)


def num_parts(p: Partition) -> int:
    """Number of distinct part values."""
    return len(set(p))


def contains(inner: Partition, outer: Partition) -> bool:
    """True iff ``inner ⊆ outer`` as Young diagrams."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def union(p: Partition, q: Partition) -> Partition:
    return Partition(sorted(p + q, reverse=True))


def add_rectangle(p: Partition, c: int, d: int) -> Partition:
    """``p + (c^d)``: add ``c`` to each of the first ``d`` rows (missing rows count as 0).

    Adding a constant to a prefix never breaks weak decrease, so no error
    path exists.
    """
    if c == 0 or d == 0:
        return p
    rows = list(p) + [0] * max(0, d - len(p))
    for i in range(d):
        rows[i] += c
    return Partition(rows)


def _check_box(p: Partition, box: Rectangle) -> None:
    if len(p) > box.height or (p and p[0] > box.width):
        raise NotContained(f"{p.label()} does not fit in {box.width}x{box.height}")


def complement(p: Partition, box: Rectangle) -> Partition:
    """Complement of ``p`` in ``box`` rotated by 180 degrees."""
    _check_box(p, box)
    a, b = box
    return Partition(a - p.part(i) for i in range(b, 0, -1))


def _path_segments(p: Partition, box: Rectangle) -> list[int]:
    # Walk from the south-west corner: east along the bottom row profile,
    # one north step per row, then the final eastward run.
    a, b = box
    steps: list[tuple[str, int]] = []
    prev = 0
    for i in range(b, 0, -1):
        steps.append(("E", p.part(i) - prev))
        steps.append(("N", 1))
        prev = p.part(i)
    steps.append(("E", a - prev))
    segments: list[int] = []
    last = None
    for direction, n in steps:
        if n == 0:
            continue
        if direction == last:
            segments[-1] += n
        else:
            segments.append(n)
            last = direction
    return segments


def shortness(p: Partition, box: Rectangle) -> int:
    """Length of the shortest segment of the boundary path of ``p`` in ``box``."""
    _check_box(p, box)
    return min(_path_segments(p, box), default=0)


def conjugate(p: Partition) -> Partition:
    if not p:
        return EMPTY
    return Partition(sum(1 for part in p if part >= c) for c in range(1, p[0] + 1))


def is_rectangle(p: Partition) -> bool:
    return num_parts(p) == 1


def is_fat_hook(p: Partition) -> bool:
    return num_parts(p) == 2


# -- enumeration helpers -----------------------------------------------------


def _sized(size: int, width: int, height: int) -> list[Partition]:
    found: list[Partition] = []

    def rec(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            found.append(Partition(prefix))
            return
        if len(prefix) == height:
            return
        for v in range(1, min(cap, remaining) + 1):
            prefix.append(v)
            rec(prefix, remaining - v, v)
            prefix.pop()

    rec([], size, width)
    found.sort()
    return found


def partitions_in_box(width: int, height: int) -> Iterator[Partition]:
    """All partitions fitting in ``width x height``, graded then lexicographic."""
    for size in range(width * height + 1):
        yield from _sized(size, width, height)


def partitions_of(n: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of ``n`` (optionally with at most ``max_length`` parts), lexicographic."""
    return _sized(n, n, n if max_length is None else max_length)


def subpartitions(outer: Partition) -> Iterator[Partition]:
    """All ``μ ⊆ outer``, graded then lexicographic."""
    found: list[Partition] = []

    def rec(prefix: list[int], i: int, cap: int) -> None:
        found.append(Partition(prefix))
        if i == len(outer):
            return
        for v in range(1, min(cap, outer[i]) + 1):
            prefix.append(v)
            rec(prefix, i + 1, v)
            prefix.pop()

    rec([], 0, outer[0] if outer else 0)
    found.sort(key=lambda q: (q.size, q))
    return iter(found)
