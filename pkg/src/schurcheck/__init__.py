"""Executable contracts for a fixed-array partition-conjugate routine, plus
the tableau and Schur-function machinery around it."""

__version__ = "0.1.0"

from .errors import (
    ArityMismatch,
    DoesNotFit,
    EntryOutOfRange,
    IndexOutOfRange,
    MaxMismatch,
    NotAPartition,
    NotHomogeneous,
    NotSymmetric,
    PredicateDomain,
    PreconditionViolated,
    SchurCheckError,
)
from .partitions import (
    DEFAULT_MAX,
    CountWitness,
    FixedPartitionSequence,
    Partition,
    column_counts,
    conjugate_oracle,
    count_if_sup_exact,
    count_if_sup_literal,
    from_fixed,
    is_conjugate_pred,
    is_conjugate_pred_literal,
    is_partition_pred,
    parse_partition,
    partition_from_parts,
    partitions_of,
    to_fixed,
)
from .engine import ContractReport, Violation, conjgte_instrumented, conjgte_run, descents
from .tableaux import FerrersShape, Tableau, content, enumerate_ssyt, is_ssyt, is_standard
from .symmetric import (
    MonomialPolynomial,
    SchurExpansion,
    is_symmetric,
    plethysm,
    poly_add,
    poly_mul,
    poly_scale,
    schur_decompose,
    schur_polynomial,
)
