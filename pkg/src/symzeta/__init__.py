"""Symmetric multiple-zeta sums: evaluation, a-point location by the
argument principle, and counting/density reports."""

__version__ = "0.1.0"

from .errors import SymZetaError
from .locator import (
    APoint,
    Rectangle,
    WindingResult,
    count_apoints,
    locate_apoints,
    scan_free_right,
    scan_strip_free,
    verify_cluster,
)
from .partitions import (
    HoffmanTerm,
    Weights,
    b_constant,
    enumerate_partitions,
    hoffman_expand,
    m_constant,
)
from .reports import (
    CountReport,
    SumReport,
    TailReport,
    compare_counts,
    main_term_N,
    tail_density,
    weighted_sums,
)
from .special import (
    DEFAULT_PRECISION,
    EvalPrecision,
    chi,
    log_gamma,
    zeta,
    zeta_deriv,
)
from .symmetric import (
    SymZeta,
    TargetValue,
    asymptotic_left_strip,
    asymptotic_right,
    eval_G,
    eval_logderiv_G,
    eval_sym,
    eval_sym_deriv,
    make_sym_zeta,
    multisum_oracle,
)

__all__ = [
    "__version__",
    "SymZetaError",
    "APoint", "Rectangle", "WindingResult",
    "count_apoints", "locate_apoints", "scan_free_right",
    "scan_strip_free", "verify_cluster",
    "HoffmanTerm", "Weights", "b_constant", "enumerate_partitions",
    "hoffman_expand", "m_constant",
    "CountReport", "SumReport", "TailReport",
    "compare_counts", "main_term_N", "tail_density", "weighted_sums",
    "DEFAULT_PRECISION", "EvalPrecision", "chi", "log_gamma",
    "zeta", "zeta_deriv",
    "SymZeta", "TargetValue", "asymptotic_left_strip", "asymptotic_right",
    "eval_G", "eval_logderiv_G", "eval_sym", "eval_sym_deriv",
    "make_sym_zeta", "multisum_oracle",
]
