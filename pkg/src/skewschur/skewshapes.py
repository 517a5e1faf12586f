"""Skew partitions, their column statistics, and the shape reductions.

Rows and columns are 1-based throughout, matching the usual ``(r, c)`` box
notation.  Every reduction returns a new :class:`SkewPartition`; the empty
shape ``∅/∅`` is a fixed point of all of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from . import partitions as P
from .errors import (
    EmptyColumn,
    InvalidColumn,
    NotBasic,
    ParseError,
    PreconditionFailed,
    StripTooDeep,
    TooManyRows,
)
from .partitions import EMPTY, Partition, Rectangle

__all__ = [
    "SkewPartition",
    "EMPTY_SHAPE",
    "column_size",
    "column_sizes",
    "rho",
    "col_top",
    "col_bottom",
    "tau",
    "sigma",
    "is_basic",
    "is_nsharp",
    "is_tight",
    "is_ordinary",
    "basic_demolition",
    "nsharp_demolition",
    "tight_demolition",
    "ordinary_reduction",
    "full_reduction",
    "remove_columns",
    "top_strip",
    "del_rows",
    "column_reversal",
    "contains_rectangle",
    "skew_shapes_in_box",
]


@dataclass(frozen=True, order=True)
class SkewPartition:
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self) -> None:
        if not isinstance(self.outer, Partition):
            object.__setattr__(self, "outer", Partition(self.outer))
        if not isinstance(self.inner, Partition):
            object.__setattr__(self, "inner", Partition(self.inner))
        if not P.contains(self.inner, self.outer):
            raise P.NotContained(f"{self.inner.label()} is not contained in {self.outer.label()}")

    @classmethod
    def parse(cls, text: str) -> "SkewPartition":
        """Parse ``outer/inner``; ``outer/`` or a bare ``outer`` means an empty inner shape."""
        text = text.strip()
        if text in ("∅/∅", "/", ""):
            return EMPTY_SHAPE
        outer, _, inner = text.partition("/")
        try:
            return cls(Partition.parse(outer), Partition.parse(inner))
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(f"bad skew shape {text!r}: {exc}") from None

    def __str__(self) -> str:
        if not self.outer and not self.inner:
            return "∅/∅"
        return f"{self.outer}/{self.inner}"

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_empty_shape(self) -> bool:
        """True only for the distinguished value ``∅/∅``."""
        return not self.outer

    def inner_part(self, r: int) -> int:
        return self.inner.part(r)

    def row_range(self, r: int) -> range:
        """Columns occupied in row ``r``."""
        return range(self.inner.part(r) + 1, self.outer.part(r) + 1)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Boxes in row-major order, left to right."""
        for r in range(1, len(self.outer) + 1):
            for c in self.row_range(r):
                yield r, c

    @cached_property
    def _column_sizes(self) -> tuple[int, ...]:
        outer = self.outer
        inner = tuple(self.inner) + (0,) * (len(outer) - len(self.inner))
        sizes = [0] * (outer[0] if outer else 0)
        for lam, m in zip(outer, inner):
            for c in range(m, lam):
                sizes[c] += 1
        return tuple(sizes)

    def __contains__(self, box: object) -> bool:
        r, c = box  # type: ignore[misc]
        return self.inner.part(r) < c <= self.outer.part(r)


EMPTY_SHAPE = SkewPartition(EMPTY, EMPTY)


def _from_rows(outer: Iterable[int], inner: Iterable[int]) -> SkewPartition:
    # Callers guarantee both sequences are weakly decreasing.
    return SkewPartition(Partition._trusted(outer), Partition._trusted(inner))


# -- column statistics ---------------------------------------------------------


def column_size(s: SkewPartition, k: int) -> int:
    return sum(1 for r in range(1, len(s.outer) + 1) if s.inner.part(r) < k <= s.outer[r - 1])


def column_sizes(s: SkewPartition) -> list[int]:
    """``[CS_1, ..., CS_{λ_1}]``."""
    return list(s._column_sizes)


def rho(s: SkewPartition) -> int:
    """Largest column size."""
    return max(s._column_sizes, default=0)


def col_top(s: SkewPartition, c: int) -> int:
    """Topmost occupied row ``U(c)`` of column ``c``."""
    rows = [r for r in range(1, len(s.outer) + 1) if (r, c) in s]
    if not rows:
        raise EmptyColumn(f"column {c} of {s} is empty")
    return rows[0]


def col_bottom(s: SkewPartition, c: int) -> int:
    """Bottommost occupied row ``L(c)`` of column ``c``."""
    rows = [r for r in range(1, len(s.outer) + 1) if (r, c) in s]
    if not rows:
        raise EmptyColumn(f"column {c} of {s} is empty")
    return rows[-1]


def tau(s: SkewPartition) -> int:
    lam, mu = s.outer, s.inner
    if not mu or P.is_rectangle(lam):
        return 0
    l1 = lam.exponent_form()[0][1]
    return l1 - min(l1, len(mu))


def sigma(s: SkewPartition) -> int:
    lam, mu = s.outer, s.inner
    if not mu or P.is_rectangle(lam):
        return 0
    return lam[-1] - min(mu[0], lam[-1])


# -- predicates ----------------------------------------------------------------


def is_basic(s: SkewPartition) -> bool:
    """No empty rows and no empty columns."""
    inner = s.inner
    if any(lam == (inner[i] if i < len(inner) else 0) for i, lam in enumerate(s.outer)):
        return False
    return all(s._column_sizes)


def is_nsharp(s: SkewPartition, n: int) -> bool:
    return rho(s) < n


def is_tight(s: SkewPartition) -> bool:
    return tau(s) == 0 and sigma(s) == 0


def is_ordinary(s: SkewPartition) -> bool:
    return not s.inner or P.num_parts(s.outer) - 1 <= P.num_parts(s.inner)


# -- demolitions -----------------------------------------------------------------


def remove_columns(s: SkewPartition, cols: Iterable[int]) -> SkewPartition:
    """Delete the given columns and close the diagram up horizontally.

    Each surviving column keeps exactly its original rows, so the result is
    always a skew diagram: the new row ends are counts of kept columns.
    """
    cols = set(cols)
    width = s.outer.part(1)
    for c in cols:
        if not 1 <= c <= width:
            raise InvalidColumn(f"column {c} outside [1, {width}]")
    if not cols:
        return s
    kept_upto = [0] * (width + 1)
    for c in range(1, width + 1):
        kept_upto[c] = kept_upto[c - 1] + (c not in cols)
    return _from_rows(
        (kept_upto[lam] for lam in s.outer),
        (kept_upto[m] for m in s.inner),
    )


def basic_demolition(s: SkewPartition) -> SkewPartition:
    """Delete all empty rows and empty columns."""
    sizes = column_sizes(s)
    s = remove_columns(s, [c for c, cs in enumerate(sizes, start=1) if cs == 0])
    rows = [
        (lam, s.inner.part(r))
        for r, lam in enumerate(s.outer, start=1)
        if lam > s.inner.part(r)
    ]
    if not rows:
        return EMPTY_SHAPE
    return _from_rows((lam for lam, _ in rows), (m for _, m in rows))


def nsharp_demolition(s: SkewPartition, n: int) -> SkewPartition:
    """Drop columns of size exactly ``n``; ``∅/∅`` if some column is longer."""
    sizes = column_sizes(s)
    if any(cs > n for cs in sizes):
        return EMPTY_SHAPE
    return remove_columns(s, [c for c, cs in enumerate(sizes, start=1) if cs == n])


def _require_basic(s: SkewPartition, op: str) -> None:
    if not is_basic(s):
        raise NotBasic(f"{op} needs a basic shape, got {s}")


def tight_demolition(s: SkewPartition) -> SkewPartition:
    """Trim the full-width top rows and full-height left columns, then tidy up."""
    _require_basic(s, "tight_demolition")
    if s.is_empty_shape:
        return s
    t, sg = tau(s), sigma(s)
    if t == 0 and sg == 0:
        return basic_demolition(s)
    runs = list(s.outer.exponent_form())
    runs[0] = (runs[0][0], runs[0][1] - t)
    outer = [v - sg for v, mult in runs for _ in range(mult)]
    return basic_demolition(_from_rows(outer, s.inner))


def ordinary_reduction(s: SkewPartition) -> SkewPartition:
    """Rotate by 180 degrees inside ``(λ_1^{ℓ(λ)})`` when the shape is not ordinary."""
    _require_basic(s, "ordinary_reduction")
    if is_ordinary(s):
        return s
    box = Rectangle(s.outer[0], len(s.outer))
    return SkewPartition(P.complement(s.inner, box), P.complement(s.outer, box))


def full_reduction(s: SkewPartition, n: int) -> tuple[SkewPartition, int]:
    """n-sharp, basic, tight and ordinary demolitions in that order.

    Returns the reduced shape and the reduced variable count
    ``n - tau`` where tau is taken after the basic step.
    """
    shape, t = _after_sharp(nsharp_demolition(s, n))
    return shape, n - t


@lru_cache(maxsize=1 << 16)
def _after_sharp(s: SkewPartition) -> tuple[SkewPartition, int]:
    # For every n above ρ the n-sharp step is the identity, so the rest of
    # the pipeline is shared across those n.
    shape = basic_demolition(s)
    return ordinary_reduction(tight_demolition(shape)), tau(shape)


# -- auxiliary surgery ---------------------------------------------------------------


def top_strip(s: SkewPartition, k: int) -> SkewPartition:
    """Remove the top ``k`` boxes of every column, then apply the basic demolition."""
    sizes = column_sizes(s)
    if k and any(cs < k for cs in sizes):
        raise StripTooDeep(f"k={k} exceeds the smallest column size {min(sizes)}")
    if k == 0 or s.is_empty_shape:
        return basic_demolition(s)
    tops = [col_top(s, c) + k for c in range(1, len(sizes) + 1)]
    inner = [sum(1 for u in tops if u > r) for r in range(1, len(s.outer) + 1)]
    return basic_demolition(_from_rows(s.outer, inner))


def del_rows(s: SkewPartition, N: int) -> SkewPartition:
    """Remove the bottom ``N`` rows of the diagram."""
    if N > len(s.outer):
        raise TooManyRows(f"cannot delete {N} rows from {len(s.outer)}")
    keep = len(s.outer) - N
    return _from_rows(s.outer[:keep], s.inner[:keep])


def column_reversal(s: SkewPartition) -> SkewPartition:
    """Rebuild the shape with the columns right of ``μ_q`` in reverse order.

    Needs a basic shape with at least two distinct part sizes in both
    partitions, ``λ_2 = μ_q`` (second part size of λ equals the smallest
    part of μ) and ``ℓ(μ) = l_1``.
    """
    lam, mu = s.outer, s.inner
    lam_runs, mu_runs = lam.exponent_form(), mu.exponent_form()
    failed = []
    if not is_basic(s):
        failed.append("basic")
    if len(lam_runs) < 2:
        failed.append("np(outer) >= 2")
    if len(mu_runs) < 2:
        failed.append("np(inner) >= 2")
    if len(lam_runs) >= 2 and mu_runs and lam_runs[1][0] != mu_runs[-1][0]:
        failed.append("lambda_2 == mu_q")
    if lam_runs and len(mu) != lam_runs[0][1]:
        failed.append("len(mu) == l_1")
    if failed:
        raise PreconditionFailed(f"column_reversal hypotheses fail for {s}: {', '.join(failed)}", failed)
    lam1, l1 = lam_runs[0]
    mu_q = mu_runs[-1][0]
    runs = [(lam1 + mu_q - m, k) for m, k in reversed(mu_runs)] + list(lam_runs[1:])
    new_outer = Partition(v for v, mult in runs for _ in range(mult))
    return SkewPartition(new_outer, Partition((mu_q,) * l1))


def contains_rectangle(s: SkewPartition, b: int, k: int) -> bool:
    """Whether some ``b``-row by ``k``-column block lies inside the diagram."""
    if b == 0 or k == 0:
        return True
    nrows = len(s.outer)
    for top in range(1, nrows - b + 2):
        rows = range(top, top + b)
        # Block columns must lie in every row's range.
        left = max(s.inner.part(r) for r in rows) + 1
        right = min(s.outer.part(r) for r in rows)
        if right - left + 1 >= k:
            return True
    return False


def skew_shapes_in_box(width: int, height: int, *, include_empty: bool = False) -> Iterator[SkewPartition]:
    """All ``λ/μ`` with ``λ`` inside ``width x height``.

    Outer shapes come in graded lexicographic order and inner shapes likewise
    within each outer shape.  Shapes with no boxes are skipped unless asked for.
    """
    for lam in P.partitions_in_box(width, height):
        for mu in P.subpartitions(lam):
            if include_empty or mu.size < lam.size:
                yield SkewPartition(lam, mu)
