"""Characteristic-p commutative algebra: Groebner bases over prime fields,
Artinian quotient analysis, and Frobenius-singularity checks on quadratic
covers R + I*t with t**2 = f.
"""

from froblab.errors import (
    BadMatrixShape,
    BudgetExceeded,
    ContextMismatch,
    EvenCharacteristic,
    ExponentOverflow,
    FroblabError,
    InjectivityFailure,
    InputAssumptionViolation,
    MissingField,
    NotArtinian,
    NotNZD,
    NotRegularSequence,
    OddCharacteristic,
    ParseError,
    RingMismatch,
    SpecFileError,
    TypeNotOne,
    UnitIdeal,
    UnknownVariable,
    ZeroColonDivisor,
    ZeroElement,
)
from froblab.polyring import GREVLEX, LEX, MonomialOrder, PolyRing, Polynomial, elimination_order
from froblab.groebner import DEFAULT_PAIR_BUDGET, GroebnerBasis, buchberger, groebner_basis_of
from froblab.ideals import Ideal
from froblab.quotients import (
    QuotientPresentation,
    SocleBasis,
    artinian_membership_oracle,
    suggest_parameter_sequence,
)
from froblab.reports import (
    CLOSED_UP_TO,
    DECISIVE_NOT_F_INJECTIVE,
    NO_FAILURE_UP_TO,
    NOT_FROBENIUS_CLOSED,
    P2_DEGENERATE,
    ClosureReport,
    ClosureWitness,
    CriterionReport,
    PipelineReport,
)
from froblab.fsing import (
    CoverContext,
    CoverElement,
    cover_f_injectivity_criterion,
    even_char_degeneracy_check,
    fedder_f_pure,
    run_cover_pipeline,
    socle_lift,
)

__version__ = "0.1.0"

__all__ = [
    "BadMatrixShape",
    "BudgetExceeded",
    "CLOSED_UP_TO",
    "ClosureReport",
    "ClosureWitness",
    "ContextMismatch",
    "CoverContext",
    "CoverElement",
    "CriterionReport",
    "DECISIVE_NOT_F_INJECTIVE",
    "DEFAULT_PAIR_BUDGET",
    "EvenCharacteristic",
    "ExponentOverflow",
    "FroblabError",
    "GREVLEX",
    "GroebnerBasis",
    "Ideal",
    "InjectivityFailure",
    "InputAssumptionViolation",
    "LEX",
    "MissingField",
    "MonomialOrder",
    "NO_FAILURE_UP_TO",
    "NOT_FROBENIUS_CLOSED",
    "NotArtinian",
    "NotNZD",
    "NotRegularSequence",
    "OddCharacteristic",
    "P2_DEGENERATE",
    "ParseError",
    "PipelineReport",
    "PolyRing",
    "Polynomial",
    "QuotientPresentation",
    "RingMismatch",
    "SocleBasis",
    "SpecFileError",
    "TypeNotOne",
    "UnitIdeal",
    "UnknownVariable",
    "ZeroColonDivisor",
    "ZeroElement",
    "artinian_membership_oracle",
    "buchberger",
    "cover_f_injectivity_criterion",
    "elimination_order",
    "even_char_degeneracy_check",
    "fedder_f_pure",
    "groebner_basis_of",
    "run_cover_pipeline",
    "socle_lift",
    "suggest_parameter_sequence",
]
