"""Logical relations between categorical propositions, via bitstring semantics.

The package compiles closed claims about two predicates into truth profiles
over the sixteen region models, classifies the relation between any pair of
such profiles, validates squares of opposition under configurable model
restrictions, and enumerates the 256-proposition extended family with an
independent finite-domain oracle.
"""

from .catalog import (
    Commitment,
    ExtendedProposition,
    Guard,
    NAMED_SQUARES,
    SquareReport,
    apply_commitments,
    aristotelian_set,
    chatti_set,
    enumerate_squares,
    family_256,
    is_valid_square,
    keynesian_set,
    named_square,
)
from .errors import (
    DuplicateCommitment,
    EmptyUniverse,
    LengthMismatch,
    NotCellConstant,
    NotRepresentable,
    OppositionError,
    ParseError,
    Unclassifiable,
    UnknownName,
    UnsupportedForm,
)
from .formula import (
    And,
    CANONICAL,
    CANONICAL_LETTERS,
    ExistsPair,
    ExistsTerm,
    FormClass,
    Formula,
    Not,
    Or,
    SignedTerm,
    classify_type,
    letter_of,
    negate,
    parse_any,
    parse_canonical,
    parse_formula,
    signed_term,
    to_text,
)
from .models import (
    ALL_MODELS,
    Bitstring,
    Constraint,
    FiniteUniverse,
    MODEL_BY_NAME,
    MODEL_NAME,
    ModelUniverse,
    Region,
    all_models,
    bitstring,
    empty,
    enumerate_universes,
    evaluate,
    evaluate_direct,
    full,
    nonempty,
    normal_universe,
    regions_of,
    restrict,
)
from .relations import (
    ARISTOTELIAN_SEQUENTS,
    KEYNESIAN_SEQUENTS,
    Partition,
    Relation,
    Sequent,
    SequentReport,
    converse,
    entails,
    has_import,
    incompatible,
    partition_bitstring,
    relate,
    relation_table,
    sequent,
    signature_partition,
    verify_sequents,
)
from .verify import verify_paper

__version__ = "0.1.0"
