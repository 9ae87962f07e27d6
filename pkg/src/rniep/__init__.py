"""Exact decision procedures and certificates for sufficient realizability
criteria of the real nonnegative inverse eigenvalue problem."""
from .crealizable import Move, MoveSequence, compile_sp_to_bms, replay, search_bms, verify_bms
from .criteria_linear import (
    check_ci,
    check_fi,
    check_ke,
    check_sa,
    check_so1,
    check_su,
    compute_psi,
)
from .criteria_partition import check_bo, check_pe1, check_sp, verify_bo, verify_pe1, verify_sp
from .diagspec import Verdict, check_pe2plus, decide_diagspec_k2, verify_pe2plus
from .exactnum import Polynomial, RationalMatrix, char_poly, parse_rational
from .realize import Realization, realize_sp, realize_su, verify_realization
from .reductions import IntegerList, reduce_to_pe1, reduce_to_sp, solve_partition, verify_partition
from .spectra import SpectrumList, normalize
from .survey import SampleConfig, audit_inclusions

__version__ = "0.1.0"
