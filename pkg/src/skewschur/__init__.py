"""Littlewood-Richardson expansions of skew Schur polynomials and their
multiplicity-freeness classification."""
from .partitions import EMPTY, Partition, Rectangle
from .skewshapes import EMPTY_SHAPE, SkewPartition, full_reduction
from .tableaux import Tableau
from .lr import (
    SchurExpansion,
    is_multiplicity_free_oracle,
    lr_coefficient,
    max_multiplicity,
    monomial_expansion,
    multiplicity_witness,
    skew_schur_expansion,
)
from .classification import (
    INFINITY,
    ClassificationVerdict,
    classify,
    classify_cases,
    classify_reduced,
    classify_skew_function,
    min_nonfree_vars,
)

__version__ = "0.1.0"
