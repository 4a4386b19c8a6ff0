"""Exact root-count bounds for real polynomials.

Newton's complete rule on the double sequence of simple and quadratic
elements, its refinement through cubic sectors (falsely positive quadratic
elements), and the classical Descartes, Budan-Fourier and Sturm methods for
comparison. All arithmetic is exact over ``fractions.Fraction``.
"""

from .classical import (
    IsolatingInterval,
    PrivilegedTerm,
    SturmChain,
    count_real_roots,
    descartes_negative,
    descartes_positive,
    discriminant,
    discriminant_interpretation,
    fourier_bound,
    fourier_signs,
    isolate_real_roots,
    privileged_free_terms,
    resultant,
    sturm_chain,
    sturm_count,
)
from .cubic import (
    CubicRootClass,
    CubicSector,
    PrescribedInterval,
    classify_cubic,
    classify_elements,
    cubic_sectors,
    interval_contains,
    prescribed_interval,
)
from .errors import (
    DegreeError,
    NotRegularizedError,
    ParseError,
    PolynomialError,
    ZeroPolynomialError,
)
from .oracle import (
    AuditFinding,
    audit_bounds,
    check_disc_of_disc,
    check_spread_chain,
    check_ratio_identities,
    check_rosset,
    run_audit,
)
from .parser import ParametricPolynomial, parse_parametric, parse_polynomial
from .poly import (
    BinomialForm,
    Polynomial,
    derivative,
    evaluate,
    from_coeffs,
    gcd,
    power_sums,
    reciprocal,
    regularize,
    shift,
    square_free_part,
    sum_squared_root_differences,
    to_binomial,
)
from .report import analyze, render_text
from .rules import (
    RootBoundReport,
    combine_with_descartes,
    modified_sequence,
    necessary_condition_all_real,
    newton_complete,
    newton_modified,
)
from .sectors import ElementTable, Sign, Status, SuccessionTally, negative_groups, quadratic_elements, successions
from .sweep import isolate_threshold, sweep

__all__ = [
    "IsolatingInterval",
    "PrivilegedTerm",
    "SturmChain",
    "count_real_roots",
    "descartes_negative",
    "descartes_positive",
    "discriminant",
    "discriminant_interpretation",
    "fourier_bound",
    "fourier_signs",
    "isolate_real_roots",
    "privileged_free_terms",
    "resultant",
    "sturm_chain",
    "sturm_count",
    "CubicRootClass",
    "CubicSector",
    "PrescribedInterval",
    "classify_cubic",
    "classify_elements",
    "cubic_sectors",
    "interval_contains",
    "prescribed_interval",
    "DegreeError",
    "NotRegularizedError",
    "ParseError",
    "PolynomialError",
    "ZeroPolynomialError",
    "AuditFinding",
    "audit_bounds",
    "check_disc_of_disc",
    "check_spread_chain",
    "check_ratio_identities",
    "check_rosset",
    "run_audit",
    "ParametricPolynomial",
    "parse_parametric",
    "parse_polynomial",
    "BinomialForm",
    "Polynomial",
    "derivative",
    "evaluate",
    "from_coeffs",
    "gcd",
    "power_sums",
    "reciprocal",
    "regularize",
    "shift",
    "square_free_part",
    "sum_squared_root_differences",
    "to_binomial",
    "analyze",
    "render_text",
    "RootBoundReport",
    "combine_with_descartes",
    "modified_sequence",
    "necessary_condition_all_real",
    "newton_complete",
    "newton_modified",
    "ElementTable",
    "Sign",
    "Status",
    "SuccessionTally",
    "negative_groups",
    "quadratic_elements",
    "successions",
    "isolate_threshold",
    "sweep",
]

__version__ = "0.1.0"
