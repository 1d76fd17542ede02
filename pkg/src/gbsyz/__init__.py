"""Groebner bases, syzygies, and free resolutions over coherent strict
Bezout rings with a divisibility test: Z, Z/N, F2[y]/(y^r), and Z
localized at a prime."""

from .errors import GuardExceeded, InternalError, ParseError, UsageError
from .rings import (
    Integers,
    IntegersLocalizedAt,
    IntegersMod,
    TruncatedF2y,
    ring_from_descriptor,
)
from .poly import (
    Ambient,
    MDEG_NEG_INF,
    Mono,
    Schreyer,
    Term,
    TopLex,
    Vector,
    mono_divides,
    positive_part,
    term_divides,
    reorder,
    sort_basis,
)
from .groebner import (
    DivisionResult,
    GroebnerBasis,
    SPair,
    buchberger,
    divide,
    divide_valuation,
    expand_combination,
    is_groebner,
    module_member,
    pseudo_reduce,
    s_poly,
    term_module_member,
)
from .syzygy import (
    FreeTail,
    PeriodicTail,
    Resolution,
    SyzygyBasis,
    apply_relation,
    free_resolution,
    schreyer_syzygies,
    term_syzygies,
    verify_resolution,
)
from .dsl import (
    format_lt_module,
    format_poly,
    format_vector,
    parse_problem,
    parse_vector_literal,
)

__version__ = "0.1.0"

__all__ = [
    "Ambient",
    "DivisionResult",
    "FreeTail",
    "GroebnerBasis",
    "GuardExceeded",
    "Integers",
    "IntegersLocalizedAt",
    "IntegersMod",
    "InternalError",
    "MDEG_NEG_INF",
    "Mono",
    "ParseError",
    "PeriodicTail",
    "Resolution",
    "SPair",
    "Schreyer",
    "SyzygyBasis",
    "Term",
    "TopLex",
    "TruncatedF2y",
    "UsageError",
    "Vector",
    "apply_relation",
    "buchberger",
    "divide",
    "divide_valuation",
    "expand_combination",
    "format_lt_module",
    "format_poly",
    "format_vector",
    "free_resolution",
    "is_groebner",
    "module_member",
    "mono_divides",
    "parse_problem",
    "parse_vector_literal",
    "positive_part",
    "pseudo_reduce",
    "reorder",
    "ring_from_descriptor",
    "s_poly",
    "schreyer_syzygies",
    "sort_basis",
    "term_divides",
    "term_module_member",
    "term_syzygies",
    "verify_resolution",
]
