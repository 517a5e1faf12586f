"""Exhaustive comparison of the closed-form classifiers with the brute-force oracle.

Work is split by outer partition; each worker enumerates every inner
partition for its outer shape.  Results are merged in enumeration order, so
the report is byte-identical for any number of workers.
"""
from __future__ import annotations

import json
import logging
import multiprocessing
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from . import partitions as P
from .classification import classify
from .lr import oracle_threshold
from .partitions import Partition
from .skewshapes import SkewPartition

log = logging.getLogger(__name__)


@dataclass
class Mismatch:
    shape: str
    n: int
    formula: bool
    case: bool
    oracle: bool


@dataclass
class VerifyReport:
    max_width: int
    max_length: int
    max_n: int
    shapes_tested: int = 0
    pairs_tested: int = 0
    mismatch_records: list[Mismatch] = field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return len(self.mismatch_records)

    @property
    def ok(self) -> bool:
        return not self.mismatch_records

    def to_json(self) -> dict:
        return {
            "range": {"max_width": self.max_width, "max_length": self.max_length, "max_n": self.max_n},
            "counts": {
                "shapes": self.shapes_tested,
                "pairs": self.pairs_tested,
                "mismatches": self.mismatches,
            },
            "mismatches": [asdict(m) for m in self.mismatch_records],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def check_shape(s: SkewPartition, max_n: int) -> list[Mismatch]:
    """Compare formula, case list and oracle for ``s`` at every ``1 <= n <= max_n``."""
    threshold = oracle_threshold(s)
    out = []
    for n in range(1, max_n + 1):
        verdict = classify(s, n)
        oracle = n < threshold
        case = verdict.matched_case is not None
        if not (verdict.multiplicity_free == case == oracle):
            out.append(Mismatch(str(s), n, verdict.multiplicity_free, case, oracle))
    return out


def _check_outer(args: tuple[Partition, int]) -> tuple[int, list[Mismatch]]:
    lam, max_n = args
    shapes = 0
    found: list[Mismatch] = []
    for mu in P.subpartitions(lam):
        if mu.size == lam.size:
            continue
        shapes += 1
        found.extend(check_shape(SkewPartition(lam, mu), max_n))
    return shapes, found


def run_verify(
    max_width: int,
    max_length: int,
    max_n: int,
    jobs: int = 1,
    progress: Optional[Callable[[int, int], None]] = None,
) -> VerifyReport:
    """Check every nonempty ``λ/μ`` with ``λ`` in the box against every ``n <= max_n``."""
    if min(max_width, max_length, max_n) < 1:
        raise ValueError("bounds must be at least 1")
    outers = [lam for lam in P.partitions_in_box(max_width, max_length) if lam]
    report = VerifyReport(max_width, max_length, max_n)
    work = [(lam, max_n) for lam in outers]
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.imap(_check_outer, work, chunksize=4)
            _collect(report, results, len(work), progress)
    else:
        _collect(report, map(_check_outer, work), len(work), progress)
    report.pairs_tested = report.shapes_tested * max_n
    return report


def _collect(report: VerifyReport, results, total: int, progress) -> None:
    for i, (shapes, found) in enumerate(results, start=1):
        report.shapes_tested += shapes
        report.mismatch_records.extend(found)
        if progress:
            progress(i, total)
