"""Classification of arithmetical functions by their multiplicativity laws.

The package checks, over finite windows, whether a function is consistent
with being multiplicative, quasimultiplicative, semimultiplicative, or a
Selberg product, extracts the witnessing data (constant, shift, per-prime
factor tables), and ships the Ramanujan-sum family plus verification
suites exercising their identities.
"""

from .arith import (
    ArithFn,
    classical,
    compose,
    dirichlet,
    eta,
    format_rational,
    pointwise_product,
    scale,
    sum_of_squares,
    unitary,
)
from .classes import (
    CONSISTENT,
    IDENTICALLY_ZERO,
    MULTIPLICATIVE,
    QUASIMULTIPLICATIVE,
    REARICK,
    REFUTED,
    SELBERG,
    SEMIMULTIPLICATIVE,
    ClassReport,
    SelbergFactorization,
    Witness,
    check_multiplicative,
    check_quasimultiplicative,
    check_rearick,
    check_semimultiplicative,
    classify_all,
    extract_selberg,
    recheck_witness,
)
from .multivar import (
    MultiArithFn,
    MultiClassReport,
    MultiSelbergFactorization,
    MultiWitness,
    SelbergSystem,
    TwoVariableReport,
    check_multiplicative_u,
    check_quasimultiplicative_u,
    check_selberg_u,
    check_semimultiplicative_u,
    check_two_variable_theorem,
    classify_all_u,
    dirichlet_u,
    extract_selberg_u,
    selberg_not_semimultiplicative,
    tensor,
)
from .ramanujan import (
    c,
    c_bar,
    c_bar_fn,
    c_bar_oracle,
    c_bar_two_var,
    c_fn,
    c_oracle,
    c_two_var,
    even_profile,
    g,
    g_fn,
    mu_bar,
    mu_bar_fn,
    mu_bar_indicator,
    mu_bar_oracle,
    semimult_params_c,
    semimult_params_c_bar,
)
from .suites import SUITES, Check, SuiteResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "ArithFn",
    "CONSISTENT",
    "Check",
    "ClassReport",
    "IDENTICALLY_ZERO",
    "MULTIPLICATIVE",
    "MultiArithFn",
    "MultiClassReport",
    "MultiSelbergFactorization",
    "MultiWitness",
    "QUASIMULTIPLICATIVE",
    "REARICK",
    "REFUTED",
    "SELBERG",
    "SEMIMULTIPLICATIVE",
    "SUITES",
    "SelbergFactorization",
    "SelbergSystem",
    "SuiteResult",
    "TwoVariableReport",
    "Witness",
    "c",
    "c_bar",
    "c_bar_fn",
    "c_bar_oracle",
    "c_bar_two_var",
    "c_fn",
    "c_oracle",
    "c_two_var",
    "check_multiplicative",
    "check_multiplicative_u",
    "check_quasimultiplicative",
    "check_quasimultiplicative_u",
    "check_rearick",
    "check_selberg_u",
    "check_semimultiplicative",
    "check_semimultiplicative_u",
    "check_two_variable_theorem",
    "classical",
    "classify_all",
    "classify_all_u",
    "compose",
    "dirichlet",
    "dirichlet_u",
    "eta",
    "even_profile",
    "extract_selberg",
    "extract_selberg_u",
    "format_rational",
    "g",
    "g_fn",
    "mu_bar",
    "mu_bar_fn",
    "mu_bar_indicator",
    "mu_bar_oracle",
    "pointwise_product",
    "recheck_witness",
    "run_suite",
    "scale",
    "selberg_not_semimultiplicative",
    "semimult_params_c",
    "semimult_params_c_bar",
    "sum_of_squares",
    "tensor",
    "unitary",
    "__version__",
]
