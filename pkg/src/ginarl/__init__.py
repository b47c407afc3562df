"""
ginarl - generic initial ideals in reverse lexicographic order

Computes gin(I) of homogeneous Artinian ideals over the rationals and decides
whether it is almost reverse lexicographic, and whether R/I has the strong
Lefschetz or strong Stanley property, through the f_i / J_i generator profile.
Every result can be cross-checked by an independent per-degree pivot oracle.
"""

from .ring import VariableContext, Polynomial, CoordinateChange, apply_change, monomials_of_degree, revlex_compare, Ordering
from .groebner import GroebnerBasis, DegreeSlice, buchberger_reduced, normal_form, initial_ideal, degree_slice, pivot_initial_slice
from .monomial_ideal import MonomialIdeal, HilbertFunction, minimalize, membership, is_strongly_stable, hilbert_function, restrict_to_first, borel_closure
from .profile import FProfile, f_profile, reconstruct_from_profile, verify_profile
from .gin import GinConfig, GinResult, compute_gin, gin_degree_slice_oracle, oracle_compare, complete_intersection, random_forms
from .lefschetz import AnalysisReport, arl_check_direct, arl_check_profile, slp_check, ssp_check, mainthm_analyze, satisfies_degree_bound
from .series import PowerSeriesTrunc, froberg_series, hilbert_after_generic_form, series_after_generic_form
from .ideal_file import IdealFile, parse_ideal, parse_ideal_file, format_ideal
from .ideal_loader import expected_gin, load_ideal
from .validators import GinArlError, ValidationError, ComputationError, ParseError, NotArtinianError

__all__ = [
    "VariableContext",
    "Polynomial",
    "CoordinateChange",
    "apply_change",
    "monomials_of_degree",
    "revlex_compare",
    "Ordering",
    "GroebnerBasis",
    "DegreeSlice",
    "buchberger_reduced",
    "normal_form",
    "initial_ideal",
    "degree_slice",
    "pivot_initial_slice",
    "MonomialIdeal",
    "HilbertFunction",
    "minimalize",
    "membership",
    "is_strongly_stable",
    "hilbert_function",
    "restrict_to_first",
    "borel_closure",
    "FProfile",
    "f_profile",
    "reconstruct_from_profile",
    "verify_profile",
    "GinConfig",
    "GinResult",
    "compute_gin",
    "gin_degree_slice_oracle",
    "oracle_compare",
    "complete_intersection",
    "random_forms",
    "AnalysisReport",
    "arl_check_direct",
    "arl_check_profile",
    "slp_check",
    "ssp_check",
    "mainthm_analyze",
    "satisfies_degree_bound",
    "PowerSeriesTrunc",
    "froberg_series",
    "hilbert_after_generic_form",
    "series_after_generic_form",
    "IdealFile",
    "parse_ideal",
    "parse_ideal_file",
    "format_ideal",
    "load_ideal",
    "expected_gin",
    "GinArlError",
    "ValidationError",
    "ComputationError",
    "ParseError",
    "NotArtinianError",
]
