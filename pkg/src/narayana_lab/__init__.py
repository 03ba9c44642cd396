"""Exact computations with the Lasalle numbers, their Bessel-zeta generalization
a_n(mu), generalized Narayana polynomials and related arithmetic.

All values are exact ``fractions.Fraction``; only :mod:`narayana_lab.bessel_numeric`
works in floating point.
"""
from .algebra import Poly, Rational, Series, as_rational, binomial, comb, factorial, pochhammer
from .arith import (
    P_INTEGRALITY_TABLE,
    PIntegralityResult,
    ValuationReport,
    logconcavity_report,
    nu2_pattern_report,
    nu3_fact_report,
    nu_p,
    p_integrality_search,
    parity_theorems_check,
)
from .beta_moments import (
    CumulantSeq,
    MomentSeq,
    ZetaTable,
    a_half_closed,
    a_mu_closed,
    a_mu_recur,
    a_mu_table,
    a_neg_half_closed,
    bernoulli,
    bessel_zeta,
    beta_moments,
    cumulant_partition_oracle,
    cumulants_to_moments,
    euler_odd,
    lasalle_A_mu,
    moments_to_cumulants,
    verify_bernoulli_euler_identities,
)
from .errors import (
    NarayanaLabError,
    DivByNonUnit,
    ExpNonzeroConstant,
    LogNonUnitConstant,
    OutOfRange,
    UndefinedForN1,
    BadMu,
    TooLarge,
    EvenIndex,
    NoConvergence,
    NoneFound,
    ZeroInput,
)
from .hessenberg import HessMatrix, a_via_det, b_via_det, build_B, build_M, hessenberg_det
from .narayana_poly import (
    Family,
    NamedPoly,
    gegen_narayana_check,
    gegenbauer,
    gen_narayana,
    lasalle_recurrence_check,
    narayana_poly,
    narayana_representations,
    s_closed_form,
    s_poly,
)
from .reports import Check, Report
from .sequences import (
    Route,
    SeqValue,
    A_table,
    a_table,
    b_table,
    catalan,
    narayana_number,
    seq_A,
    seq_a_def,
    seq_a_quad,
    seq_a_sym,
    seq_b,
    sigma,
)

__version__ = "0.1.0"
