"""Exact and modular evaluation of truncated hypergeometric series, with
verifiers for a 3F2 divisibility theorem modulo p^2 and its proof steps."""
from .congruences import (
    abb_recurrence,
    abb_term_identity,
    abn_identity,
    binomial_square_identity,
    double_sum_swap,
    kernel_congruence,
    lemma1_identity,
    verify_alt_form,
    verify_main_theorem,
    verify_mortenson,
    verify_shift_congruence,
    verify_shift_invariance,
    verify_sun,
    wraparound_reduction,
)
from .hypergeom import (
    SeriesSpec,
    saalschutz_closed_form,
    series_term,
    truncated_pFq_exact,
    truncated_pFq_mod,
    verify_saalschutz,
)
from .padic import (
    PrimePower,
    ResidueClass,
    is_p_integral,
    least_nonneg_residue,
    legendre,
    mod_inverse,
    reduce_mod,
)
from .rational import binomial_general, factorial, format_rational, parse_rational, rising_factorial
from .report import CheckReport
from .scan import ScanConfig, ScanSummary, emit_report, enumerate_params, run_scan, sieve_primes

__version__ = "0.1.0"
