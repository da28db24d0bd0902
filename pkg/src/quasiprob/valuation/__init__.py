from .algebra import (
    ALL_ALGEBRAS,
    CUMULATIVE_Q,
    CUMULATIVE_Z,
    IMPOSSIBLE,
    RANKING_Q,
    RANKING_Z,
    REAL,
    Algebra,
    CumulativeValue,
    Group,
    Kind,
    MassValue,
    Order,
    RankValue,
    Value,
)
from .laws import (
    ModularityResult,
    Principle,
    check_axioms,
    check_magnitude_order,
    check_modular,
    classify,
    random_unit_value,
    random_value,
    sample_values,
    trichotomy_at,
)
from .syntax import format_rational, format_value, parse_rational, parse_value

__all__ = [
    "ALL_ALGEBRAS",
    "CUMULATIVE_Q",
    "CUMULATIVE_Z",
    "IMPOSSIBLE",
    "RANKING_Q",
    "RANKING_Z",
    "REAL",
    "Algebra",
    "CumulativeValue",
    "Group",
    "Kind",
    "MassValue",
    "ModularityResult",
    "Order",
    "Principle",
    "RankValue",
    "Value",
    "check_axioms",
    "check_magnitude_order",
    "check_modular",
    "classify",
    "format_rational",
    "format_value",
    "parse_rational",
    "parse_value",
    "random_unit_value",
    "random_value",
    "sample_values",
    "trichotomy_at",
]
