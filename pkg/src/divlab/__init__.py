"""divlab: exact Groebner-based singularity analysis of divisor germs."""

from .config import (
    Budget,
    DivlabError,
    NotDivisibleError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    default_budget,
    high_budget,
)
from .polycore import (
    DEGREVLEX,
    LEX,
    Point,
    Polynomial,
    Rational,
    Ring,
    block,
    evaluate,
    exact_divide,
    format_polynomial,
    is_homogeneous,
    parse_polynomial,
    partial_derivative,
)
from .ideals import (
    Ideal,
    PolyMatrix,
    contains,
    dimension,
    eliminate,
    groebner_basis,
    ideal_quotient,
    intersect,
    minors,
    module_contains,
    module_equal,
    radical_equal,
    radical_membership,
    rank_at_point,
    syzygies,
)

__version__ = "0.1.0"
