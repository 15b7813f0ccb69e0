"""Combinatorics of Enriques diagrams of plane branches with fixed blow-up complexity."""

from enriques.core import (
    Code,
    DomainError,
    EnriquesDiagram,
    EnriquesError,
    IndexRangeError,
    Kind,
    OperatorError,
    ParseError,
    ResourceError,
    Symbol,
    ValidityError,
    alpha,
    format_diagram,
    omega,
    parse,
    pi,
    symbol_set,
    validate_code,
)
from enriques.enumeration import enumerate_diagrams, fibonacci, stats
from enriques.invariants import milnor, milnor_torus, multiplicity_sequence, proximity
from enriques.lattice import dual, hasse, join, leq, meet, self_duals
from enriques.operators import break_at, straighten, strict_increase_set

__all__ = [
    "Code",
    "DomainError",
    "EnriquesDiagram",
    "EnriquesError",
    "IndexRangeError",
    "Kind",
    "OperatorError",
    "ParseError",
    "ResourceError",
    "Symbol",
    "ValidityError",
    "alpha",
    "break_at",
    "dual",
    "enumerate_diagrams",
    "fibonacci",
    "format_diagram",
    "hasse",
    "join",
    "leq",
    "meet",
    "milnor",
    "milnor_torus",
    "multiplicity_sequence",
    "omega",
    "parse",
    "pi",
    "proximity",
    "self_duals",
    "stats",
    "straighten",
    "strict_increase_set",
    "symbol_set",
    "validate_code",
]
