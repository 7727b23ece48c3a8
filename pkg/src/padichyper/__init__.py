"""Exact p-adic hypergeometric sums over finite fields.

The package evaluates the quotient-of-gamma hypergeometric sum attached to
rational parameter lists over F_q = F_{p^r}, and verifies the identities it
satisfies (curve point counts, trinomial root counts, summation and
transformation identities, special values, Gauss-sum lemmas and the
pi-adic Gauss-sum factorisation) against brute-force and complex oracles.

Layers, from the bottom up: ``ff`` (finite fields with dlog tables),
``padic`` (fixed-precision Z_q and the ramified pi-adic ring), ``gammap``
(Morita gamma mod p^N), ``hyper`` (the sum itself plus parameter families),
``counts`` (brute-force oracles and closed-form predictions), ``gauss``
(the two Gauss-sum oracles), ``harness`` (identity suites and JSON reports).
"""

from .counts import (
    CurveFamily,
    count_curve_points,
    count_poly_roots,
    count_power_solutions,
    count_trinomial_roots,
    floor_identity_even,
    floor_identity_odd,
    floor_identity_odd_doubled,
    hyper_argument,
    predicted_curve_points,
    predicted_root_count,
)
from .errors import (
    InvalidFieldError,
    NotPIntegralError,
    PrecisionExhaustedError,
    ResourceBudgetError,
    UnsupportedConfigurationError,
)
from .ff import FiniteField, FqElem, build_field
from .gammap import GammaTable, PadicGamma, build_gamma_table, gamma_p, padic_gamma
from .gauss import (
    check_davenport_hasse,
    check_gauss_lemmas,
    check_gross_koblitz,
    gauss_sum_complex,
    gross_koblitz_sides,
    zeta_p_piadic,
)
from .harness import SUITES, Lcg, Report, SuiteConfig, run_suite
from .hyper import (
    HyperEvaluator,
    HyperParams,
    HyperValue,
    canonical,
    even_main_params,
    even_reduced_params,
    family_params,
    hyper_evaluator,
    hyper_sum,
    odd_main_params,
    odd_primed_reduced_params,
    odd_reduced_params,
)
from .padic import (
    PadicContext,
    PiAdic,
    PiAdicContext,
    QqNum,
    embed_rational,
    get_context,
    teichmuller,
    teichmuller_powers,
)

__version__ = "0.1.0"

__all__ = [
    "build_field", "FiniteField", "FqElem",
    "PadicContext", "QqNum", "PiAdic", "PiAdicContext",
    "get_context", "embed_rational", "teichmuller", "teichmuller_powers",
    "GammaTable", "build_gamma_table", "gamma_p", "PadicGamma", "padic_gamma",
    "HyperParams", "HyperValue", "HyperEvaluator",
    "hyper_sum", "hyper_evaluator", "canonical", "family_params",
    "even_main_params", "even_reduced_params", "odd_main_params",
    "odd_reduced_params", "odd_primed_reduced_params",
    "CurveFamily", "count_curve_points", "predicted_curve_points",
    "count_poly_roots", "count_trinomial_roots", "predicted_root_count",
    "count_power_solutions", "hyper_argument",
    "floor_identity_even", "floor_identity_odd", "floor_identity_odd_doubled",
    "gauss_sum_complex", "check_gauss_lemmas", "check_davenport_hasse",
    "zeta_p_piadic", "check_gross_koblitz", "gross_koblitz_sides",
    "SuiteConfig", "Report", "run_suite", "SUITES", "Lcg",
    "InvalidFieldError", "NotPIntegralError", "PrecisionExhaustedError",
    "ResourceBudgetError", "UnsupportedConfigurationError",
]
