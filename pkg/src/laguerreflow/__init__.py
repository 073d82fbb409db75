"""Exact Laguerre heat-flow transforms with Sturm-based root certification."""

from .basis import (
    AlphaParam,
    XiParam,
    generalized_binomial,
    heat_semigroup,
    laguerre,
    laguerre_transform,
    lambda_apply,
    monic_laguerre,
    scaled_hermite,
)
from .flow import (
    FlowSample,
    FlowTrace,
    LocalizationReport,
    SearchPoint,
    Theorem1Result,
    counterexample_search,
    flow_trace,
    hermite_radius_bound,
    laguerre_radius_bound,
    lemma1_localize,
    lemma2_localize,
    random_alpha,
    random_poly,
    random_rational,
    random_real_rooted,
    random_root_pairs,
    semigroup_check,
    verify_theorem1,
)
from .orthocheck import (
    MomentBase,
    MomentValue,
    double_factorial,
    hermite_diagonal_reference,
    hermite_inner,
    hermite_moment,
    laguerre_inner,
    laguerre_moment,
)
from .ratpoly import (
    Poly,
    approx_str,
    format_rational,
    parse_poly_literal,
    poly_literal,
    to_rational,
)
from .realroot import (
    DEFAULT_WIDTH,
    IsolatingInterval,
    RootCertificate,
    SturmChain,
    cauchy_root_bound,
    certify,
    count_real_roots,
    count_real_roots_open,
    isolate_roots,
    largest_root_enclosure,
    sturm_chain,
)

__all__ = [
    "AlphaParam",
    "DEFAULT_WIDTH",
    "FlowSample",
    "FlowTrace",
    "IsolatingInterval",
    "LocalizationReport",
    "MomentBase",
    "MomentValue",
    "Poly",
    "RootCertificate",
    "SearchPoint",
    "SturmChain",
    "Theorem1Result",
    "XiParam",
    "approx_str",
    "cauchy_root_bound",
    "certify",
    "count_real_roots",
    "count_real_roots_open",
    "counterexample_search",
    "double_factorial",
    "flow_trace",
    "format_rational",
    "generalized_binomial",
    "heat_semigroup",
    "hermite_diagonal_reference",
    "hermite_inner",
    "hermite_moment",
    "hermite_radius_bound",
    "isolate_roots",
    "laguerre",
    "laguerre_inner",
    "laguerre_moment",
    "laguerre_radius_bound",
    "laguerre_transform",
    "lambda_apply",
    "largest_root_enclosure",
    "lemma1_localize",
    "lemma2_localize",
    "monic_laguerre",
    "parse_poly_literal",
    "poly_literal",
    "random_alpha",
    "random_poly",
    "random_rational",
    "random_real_rooted",
    "random_root_pairs",
    "scaled_hermite",
    "semigroup_check",
    "sturm_chain",
    "to_rational",
    "verify_theorem1",
]
