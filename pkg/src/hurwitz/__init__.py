"""Exact computation and cross-verification of simple Hurwitz numbers.

Four independent computation routes (cut-and-join recursion, character sums,
operator powers, closed forms) plus a brute-force permutation oracle, audit
suites for integrality and parity data, and a CLI.  All arithmetic is exact.
"""

from .analysis import (
    AuditRecord,
    AuditReport,
    coefficient_audit,
    coefficient_terms,
    converse_failures,
    identity_suite,
    integrality_audit,
    keys_with_ramification_at_most,
    parity_scan,
)
from .engine import (
    CacheConflictError,
    GenSeries,
    HurwitzCache,
    cache_load,
    cache_save,
    connected_from_log,
    covering_series,
    covering_series_charsum,
    disconnected_count_charsum,
    disconnected_count_operator,
    hurwitz_normalized,
    hurwitz_number,
    one_part_closed,
    one_part_closed_stirling,
    one_part_genus0,
    signed_surjection_count,
    stirling2,
    two_part_genus0,
)
from .oracle import WorkBoundExceeded, count_covers_bruteforce, is_transitive, permutations_of_cycle_type
from .partitions import (
    Partition,
    aut_count,
    centralizer_order,
    conj_class_size,
    conjugate,
    content_sum,
    dim_irrep,
    hook_product,
    leg_sum,
    partitions_of,
    ramification,
    sort_to_partition,
)
from .symfunc import (
    PowerSumPoly,
    central_character,
    character,
    cut_and_join,
    cut_and_join_deformed,
    jack_eigenvalue,
    schur_in_power_sums,
)

__version__ = "0.1.0"
