"""Exact cohomology and Ext dimensions for SL2 Weyl modules and SL2(p^s)."""

from .carlson import SimpleLabel, dim_ext_finite, dim_H_finite, generic_stabilization_probe, verify_finite_bound
from .ext import BlockRelation, classify_block, dim_ext, ext3_closed, rank_reduction_dim, specht_dim, verify_ext_bounds
from .padic import PAdicExpansion, BoundConstant, bound_C, expand, fibonacci, height, r_s_stats
from .partitions import compositions_iter, count_B_Ac, count_pAn, partition_count
from .report import ExitStatus, RunReport
from .systems import (
    SolutionPair,
    SystemQuery,
    closed_form_N,
    count_N,
    count_N_bruteforce,
    count_N_sum_form,
    count_N_weighted,
    enumerate_solutions,
)
from .weyl import dim_B_cohomology, dim_weyl_cohomology, low_degree_classifier, verify_weyl_bounds

__version__ = "0.1.0"
