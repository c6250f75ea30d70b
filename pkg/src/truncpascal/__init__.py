"""Exact invertibility analysis of truncated Pascal matrices.

``T(r, x)`` is the square matrix of binomials ``C(x_j, r_i)`` picked out of
the infinite upper-triangular Pascal matrix by row selection ``r`` and
column selection ``x``.  It is invertible exactly when ``r[i] <= x[i]`` for
every ``i``.  This package computes the matrices and their determinants
exactly, relates them to two-point Birkhoff interpolation via incidence
matrices, and sweeps small cases exhaustively.
"""
from .arithmetic import binom, factorial
from .birkhoff import (
    BirkhoffSystem,
    Functional,
    apply,
    data_map,
    extended_system,
    system_from_incidence,
    system_matrix,
)
from .harness import (
    EquivalenceReport,
    enumerate_selection_pairs,
    verify_decomposition,
    verify_main_theorem,
    verify_polya_theorem,
    verify_sum_dot,
)
from .incidence import (
    BoolMatrix2xN,
    IncidenceMatrix,
    cumulative_sums,
    decompose,
    from_selection,
    is_polya,
    sum_dot,
    sum_dot_is_incidence,
)
from .matrix import DimensionError, ExactMatrix, cofactor_det, det, is_invertible, zero_block_witness
from .pascal import diagonal_all_nonzero, is_invertible_fast, truncated
from .selection import Selection, complement, dominates, validate

__version__ = "0.1.0"
