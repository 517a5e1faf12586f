"""Littlewood-Richardson coefficients and skew Schur expansions.

Coefficients are counted with the ballot-tableau rule.  A whole expansion
is computed in one pass over all ballot fillings of the shape, grouped by
content, instead of one count per candidate ``ν``.
"""
from __future__ import annotations

import json
import math
from collections import Counter
from collections.abc import Mapping
from functools import lru_cache
from typing import Iterator, Optional

from . import partitions as P
from .partitions import Partition
from .skewshapes import SkewPartition
from .tableaux import (
    Tableau,
    _tableau_from_reverse_reading,
    ballot_fillings,
    content_key,
    ssyt_fillings,
)

__all__ = [
    "SchurExpansion",
    "MonomialBag",
    "lr_coefficient",
    "skew_schur_expansion",
    "monomial_expansion",
    "schur_monomials",
    "max_multiplicity",
    "is_multiplicity_free_oracle",
    "multiplicity_witness",
    "oracle_threshold",
    "MEMO_SIZE",
]

MEMO_SIZE = 1 << 20


class SchurExpansion(Mapping):
    """Finite map ``ν -> c`` with positive coefficients.

    Iteration order is reverse lexicographic on ``ν`` (largest first), which
    is also the order used for text and JSON output.
    """

    def __init__(self, terms: Mapping[Partition, int] | None = None, shape: SkewPartition | None = None):
        terms = {Partition(k): int(c) for k, c in (terms or {}).items() if c}
        if any(c < 0 for c in terms.values()):
            raise ValueError("negative coefficient")
        if shape is not None:
            degree = shape.size
            for nu in terms:
                if nu.size != degree or not P.contains(nu, shape.outer):
                    raise ValueError(f"{nu.label()} cannot occur in the expansion of {shape}")
        self._terms = dict(sorted(terms.items(), reverse=True))

    def __getitem__(self, nu) -> int:
        return self._terms[Partition(nu)]

    def get(self, nu, default=0):
        return self._terms.get(Partition(nu), default)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._terms == {Partition(k): v for k, v in other.items() if v}
        return NotImplemented

    def __repr__(self) -> str:
        return f"SchurExpansion({self.format()})"

    def restrict(self, n: int) -> "SchurExpansion":
        """Keep only ``ν`` with at most ``n`` parts."""
        return SchurExpansion({nu: c for nu, c in self._terms.items() if len(nu) <= n})

    def format(self) -> str:
        return " ".join(f"{nu.label()}:{c}" for nu, c in self._terms.items())

    def to_json(self) -> list[dict]:
        return [{"partition": list(nu), "coefficient": c} for nu, c in self._terms.items()]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


class MonomialBag(Counter):
    """Exponent vector (length ``n``) -> coefficient."""

    def __init__(self, n: int, terms=None):
        super().__init__()
        self.n = n
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} is not of length {n}")
            self[exps] += c

    def __eq__(self, other) -> bool:
        return dict(+self) == dict(+other)

    __hash__ = None  # type: ignore[assignment]


@lru_cache(maxsize=MEMO_SIZE)
def _lr_cached(lam: tuple, mu: tuple, nu: tuple) -> int:
    shape = SkewPartition(Partition(lam), Partition(mu))
    return sum(1 for _ in ballot_fillings(shape, len(nu), target=nu))


def lr_coefficient(lam, mu, nu) -> int:
    """``c^λ_{μ,ν}``: number of ballot tableaux of shape ``λ/μ`` with content ``ν``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not P.contains(mu, lam) or mu.size + nu.size != lam.size or not P.contains(nu, lam):
        return 0
    return _lr_cached(tuple(lam), tuple(mu), tuple(nu))


def _contents(shape: SkewPartition, max_letter: int) -> Counter:
    counts: Counter = Counter()
    for vals in ballot_fillings(shape, max_letter):
        counts[content_key(vals)] += 1
    return Counter({Partition(k): c for k, c in counts.items()})


def skew_schur_expansion(s: SkewPartition, n: int) -> SchurExpansion:
    """Schur expansion of the skew Schur polynomial in ``n`` variables."""
    return SchurExpansion(_contents(s, n), shape=s)


def monomial_expansion(s: SkewPartition, n: int) -> MonomialBag:
    """Sum of ``x^η(T)`` over all semistandard tableaux with entries in ``[n]``."""
    return MonomialBag(n, _monomials(s, n))


@lru_cache(maxsize=1 << 12)
def _monomials(s: SkewPartition, n: int) -> dict:
    counts: Counter = Counter()
    for val in ssyt_fillings(s, n):
        exps = [0] * n
        for v in val:
            exps[v - 1] += 1
        counts[tuple(exps)] += 1
    return dict(counts)


def schur_monomials(expansion: Mapping[Partition, int], n: int) -> MonomialBag:
    """Monomial form of ``Σ c_ν s_ν(x_1..x_n)``."""
    bag = MonomialBag(n)
    for nu, c in expansion.items():
        for exps, k in _monomials(SkewPartition(Partition(nu)), n).items():
            bag[exps] += c * k
    return bag


def max_multiplicity(s: SkewPartition, n: int) -> tuple[int, Optional[Partition]]:
    """Largest coefficient and the lexicographically least ``ν`` attaining it."""
    exp = skew_schur_expansion(s, n)
    if not exp:
        return 0, None
    best = max(exp.values())
    return best, min(nu for nu, c in exp.items() if c == best)


def is_multiplicity_free_oracle(s: SkewPartition, n: int) -> bool:
    """Brute-force test: every coefficient with ``ℓ(ν) <= n`` is 0 or 1."""
    seen: set = set()
    for vals in ballot_fillings(s, n):
        key = content_key(vals)
        if key in seen:
            return False
        seen.add(key)
    return True


def multiplicity_witness(s: SkewPartition, n: int) -> Optional[tuple[Tableau, Tableau]]:
    """The first two ballot tableaux (in enumeration order) that share a content."""
    first: dict[tuple, list[int]] = {}
    for vals in ballot_fillings(s, n):
        key = content_key(vals)
        if key in first:
            return (
                _tableau_from_reverse_reading(s, first[key]),
                _tableau_from_reverse_reading(s, vals),
            )
        first[key] = list(vals)
    return None


def oracle_threshold(s: SkewPartition) -> float:
    """Least ``ℓ(ν)`` over ``ν`` with ``c^λ_{μ,ν} >= 2``; ``inf`` if none.

    The polynomial in ``n`` variables is multiplicity-free exactly when
    ``n`` is below this value, so one enumeration answers every ``n``.
    """
    counts = _contents(s, max(s.size, 1))
    lengths = [len(nu) for nu, c in counts.items() if c >= 2]
    return min(lengths) if lengths else math.inf
