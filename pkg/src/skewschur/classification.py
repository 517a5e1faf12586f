"""Closed-form multiplicity-freeness classifiers.

The decision procedure reduces a shape with :func:`full_reduction` and then
tests ``ρ < n < ρ + r1 + r2`` on the reduced shape.  :func:`classify_cases`
is the equivalent eleven-case formulation and :func:`classify_skew_function`
the criterion for the skew Schur *function* (infinitely many variables).

``INFINITY`` is ``math.inf``: Python integers add to and compare with it
exactly as the extended naturals need, and nothing here subtracts from it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

from . import partitions as P
from . import skewshapes as S
from .errors import NotReduced, PreconditionFailed
from .lr import multiplicity_witness
from .partitions import Partition, Rectangle
from .skewshapes import SkewPartition
from .tableaux import Tableau

__all__ = [
    "INFINITY",
    "ExtendedNat",
    "ClassificationVerdict",
    "r1",
    "r2",
    "classify_reduced",
    "classify",
    "classify_cases",
    "classify_skew_function",
    "min_nonfree_vars",
    "CASE_LABELS",
]

INFINITY = math.inf
ExtendedNat = Union[int, float]

CASE_LABELS = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI")


def format_extended(x: ExtendedNat) -> Union[int, str]:
    return "inf" if x == INFINITY else int(x)


@dataclass(frozen=True)
class _Profile:
    """Exponent-form data of ``λ/μ`` measured in the box ``(λ_1^{ℓ(λ)})``."""

    lam: Partition
    mu: Partition
    lam_runs: tuple[tuple[int, int], ...]
    mu_runs: tuple[tuple[int, int], ...]
    box: Rectangle

    @classmethod
    def of(cls, s: SkewPartition) -> "_Profile":
        box = Rectangle(s.outer.part(1), len(s.outer))
        return cls(s.outer, s.inner, s.outer.exponent_form(), s.inner.exponent_form(), box)

    @property
    def p(self) -> int:
        return len(self.lam_runs)

    @property
    def q(self) -> int:
        return len(self.mu_runs)

    def lam_val(self, i: int) -> Optional[int]:
        return self.lam_runs[i - 1][0] if i <= self.p else None

    def lam_mult(self, i: int) -> Optional[int]:
        return self.lam_runs[i - 1][1] if i <= self.p else None

    def mu_val(self, i: int) -> Optional[int]:
        return self.mu_runs[i - 1][0] if 1 <= i <= self.q else None

    def mu_mult(self, i: int) -> Optional[int]:
        return self.mu_runs[i - 1][1] if 1 <= i <= self.q else None

    @property
    def lam_complement(self) -> Partition:
        return P.complement(self.lam, self.box)

    def short(self, part: Partition) -> int:
        return P.shortness(part, self.box)


def _require(s: SkewPartition, n: Optional[int] = None, *, exc=PreconditionFailed, what: str) -> None:
    failed = []
    if not S.is_basic(s):
        failed.append("basic")
    if n is not None and not S.is_nsharp(s, n):
        failed.append(f"{n}-sharp")
    if not S.is_tight(s):
        failed.append("tight")
    if not S.is_ordinary(s):
        failed.append("ordinary")
    if failed:
        raise exc(f"{what}: {s} is not {', '.join(failed)}", failed)


def r1(s: SkewPartition) -> ExtendedNat:
    _require(s, what="r1")
    pr = _Profile.of(s)
    p, q = pr.p, pr.q
    if p > 2 and q > 1:
        return 0
    if p == 2 and q > 2 and pr.short(pr.lam) >= 2:
        return 1
    if p == 2 and q == 2 and pr.short(pr.lam) >= 3 and pr.short(pr.mu) >= 2:
        # Second part of λ strictly between the two parts of μ with l_2 > k_1
        # already fails at ρ + 1 (checked against the ballot-tableau oracle).
        if pr.mu_val(1) > pr.lam_val(2) > pr.mu_val(2) and pr.lam_mult(2) > pr.mu_mult(1):
            return 1
        return 2
    return INFINITY


def _r1_table(s: SkewPartition) -> ExtendedNat:
    """The four-row table without the strictly-between exception; kept for comparison."""
    pr = _Profile.of(s)
    p, q = pr.p, pr.q
    if p > 2 and q > 1:
        return 0
    if p == 2 and q > 2 and pr.short(pr.lam) >= 2:
        return 1
    if p == 2 and q == 2 and pr.short(pr.lam) >= 3 and pr.short(pr.mu) >= 2:
        return 2
    return INFINITY


@lru_cache(maxsize=1 << 16)
def _invariants(s: SkewPartition) -> tuple[int, ExtendedNat, int]:
    """``(ρ, r1, r2)`` of a reduced shape; ``∅/∅`` gives ``(0, inf, 0)``."""
    if s.is_empty_shape:
        return 0, INFINITY, 0
    return S.rho(s), r1(s), r2(s)


def r2(s: SkewPartition) -> int:
    _require(s, what="r2")
    pr = _Profile.of(s)
    if pr.p < 2 or pr.q == 0:
        return 0
    lam2, l2 = pr.lam_val(2), pr.lam_mult(2)
    if lam2 == pr.mu_val(pr.q) and l2 >= len(pr.mu):
        return 1
    if lam2 == pr.mu_val(1) and pr.mu_mult(1) >= l2:
        return 1
    return 0


def classify_reduced(s: SkewPartition, n: int) -> bool:
    """Inequality test ``ρ < n < ρ + r1 + r2`` for a fully reduced shape."""
    _require(s, n, exc=NotReduced, what="classify_reduced")
    if s.is_empty_shape:
        return True
    rho = S.rho(s)
    return rho < n < rho + r1(s) + r2(s)


@lru_cache(maxsize=1 << 16)
def classify_cases(s: SkewPartition, n: int) -> Optional[str]:
    """First matching case label ``I``..``XI``, or ``None`` when no case applies.

    An empty inner shape counts under case I alongside an empty complement:
    a straight shape gives a single Schur polynomial.
    """
    _require(s, n, exc=NotReduced, what="classify_cases")
    if s.is_empty_shape:
        return "I"
    pr = _Profile.of(s)
    lv = pr.lam_complement
    mu = pr.mu
    rho = S.rho(s)
    lv_rect = P.is_rectangle(lv)
    short_lv = pr.short(lv) if lv else None
    short_mu = pr.short(mu) if mu else None
    mu_fat = P.is_fat_hook(mu)
    mu_rect = P.is_rectangle(mu)

    if (lv_rect and short_lv == 1) or not lv or not mu:
        return "I"
    if lv_rect and short_lv == 2 and mu_fat:
        return "II"
    if lv_rect and mu_fat and short_mu == 1:
        return "III"
    if lv_rect and mu_rect:
        return "IV"

    lam2, l1, l2 = pr.lam_val(2), pr.lam_mult(1), pr.lam_mult(2)
    mu1, mu2, k1 = pr.mu_val(1), pr.mu_val(2), pr.mu_mult(1)
    base = lv_rect and short_lv >= 3 and mu_fat and short_mu >= 2
    if base:
        if lam2 == mu1 and l2 > k1 and n == rho + 1:
            return "V"
        if lam2 == mu1 and l2 <= k1 and n in (rho + 1, rho + 2):
            return "VI"
        if mu1 > lam2 > mu2 and k1 >= l2 and n == rho + 1:
            return "VII"
        if l2 >= l1 and mu2 == lam2 and n in (rho + 1, rho + 2):
            return "VIII"
        if l1 > l2 and mu2 == lam2 and n == rho + 1:
            return "IX"
    wide = lv_rect and short_lv >= 2 and pr.q > 2
    if wide:
        if lam2 == pr.mu_val(pr.q) and l2 >= l1 and n == rho + 1:
            return "X"
        if mu1 == lam2 and k1 >= l2 and n == rho + 1:
            return "XI"
    return None


def classify_skew_function(s: SkewPartition) -> bool:
    """Multiplicity-freeness of the skew Schur function (no bound on variables)."""
    s = S.ordinary_reduction(S.basic_demolition(s))
    if s.is_empty_shape or not s.inner:
        return True
    pr = _Profile.of(s)
    lv, mu = pr.lam_complement, pr.mu
    if not lv:
        return True
    if not P.is_rectangle(lv):
        return False
    short_lv = pr.short(lv)
    return (
        short_lv == 1
        or (short_lv == 2 and P.is_fat_hook(mu))
        or (P.is_fat_hook(mu) and pr.short(mu) == 1)
        or P.is_rectangle(mu)
    )


def min_nonfree_vars(s: SkewPartition) -> ExtendedNat:
    """Least ``n`` at which the shape is n-sharp but carries a multiplicity.

    Equals ``ρ + max(1, r1 + r2)``; ``INFINITY`` when no such ``n`` exists.
    """
    _require(s, exc=NotReduced, what="min_nonfree_vars")
    if s.is_empty_shape:
        return INFINITY
    return S.rho(s) + max(1, r1(s) + r2(s))


@dataclass(frozen=True)
class ClassificationVerdict:
    shape: SkewPartition
    n: int
    multiplicity_free: bool
    reduced_shape: SkewPartition
    reduced_vars: int
    rho: int
    r1: ExtendedNat
    r2: int
    matched_case: Optional[str] = None
    witness: Optional[tuple[Tableau, Tableau]] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "n": self.n,
            "reduced_shape": str(self.reduced_shape),
            "reduced_n": self.reduced_vars,
            "rho": self.rho,
            "r1": format_extended(self.r1),
            "r2": self.r2,
            "multiplicity_free": self.multiplicity_free,
            "case": self.matched_case,
            "witness": [t.render() for t in self.witness] if self.witness else None,
        }


def classify(s: SkewPartition, n: int, *, witness: bool = False) -> ClassificationVerdict:
    """Reduce ``s`` in ``n`` variables and apply the inequality test.

    With ``witness=True`` and a negative verdict, two ballot tableaux of the
    original shape sharing a content are attached.
    """
    reduced, n_red = S.full_reduction(s, n)
    rho, a, b = _invariants(reduced)
    free = reduced.is_empty_shape or rho < n_red < rho + a + b
    case = classify_cases(reduced, n_red)
    pair = multiplicity_witness(s, n) if witness and not free else None
    return ClassificationVerdict(
        shape=s,
        n=n,
        multiplicity_free=free,
        reduced_shape=reduced,
        reduced_vars=n_red,
        rho=rho,
        r1=a,
        r2=b,
        matched_case=case,
        witness=pair,
    )
