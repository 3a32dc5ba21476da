"""Finite-model kernel for abstract logics.

Consequence relations on small carriers in three interchangeable
presentations: monotone relations, closure operators, and up-set coalgebras,
with exact conversions, map classifiers, sums, a law suite, and a small spec
language plus CLI.
"""

from .coalgebra import (
    KleisliMorphism,
    MapFlags,
    UCoalgebra,
    classify_map,
    is_logic_induced,
    kleisli_star,
    sum_logics,
    to_coalgebra,
    to_kleisli,
    to_logic,
)
from .closure import ClosureOperator, from_closure, is_closure_operator_table, operator_of
from .core import (
    HARD_CAP,
    CapExceededError,
    Family,
    Subset,
    TotalMap,
    Universe,
    UniverseMismatchError,
    UpSet,
    enumerate_subsets,
    enumerate_upsets,
    powerset_universe,
    up_closure,
)
from .laws import SuiteConfig, count_logics, count_upsets, enumerate_logics, run_suite
from .monotone import (
    AbstractLogic,
    MonotoneRelation,
    delta,
    generate,
    is_consequence,
    is_conservative,
    is_monoid,
    is_monotone,
    kcompose,
    membership_logic,
    preserving_profile,
)
from .relations import Relation, compose, converse, graph

__all__ = [
    "AbstractLogic",
    "CapExceededError",
    "ClosureOperator",
    "Family",
    "HARD_CAP",
    "KleisliMorphism",
    "MapFlags",
    "MonotoneRelation",
    "Relation",
    "Subset",
    "SuiteConfig",
    "TotalMap",
    "UCoalgebra",
    "Universe",
    "UniverseMismatchError",
    "UpSet",
    "classify_map",
    "compose",
    "converse",
    "count_logics",
    "count_upsets",
    "delta",
    "enumerate_logics",
    "enumerate_subsets",
    "enumerate_upsets",
    "from_closure",
    "generate",
    "graph",
    "is_closure_operator_table",
    "is_consequence",
    "is_conservative",
    "is_logic_induced",
    "is_monoid",
    "is_monotone",
    "kcompose",
    "kleisli_star",
    "membership_logic",
    "operator_of",
    "powerset_universe",
    "preserving_profile",
    "run_suite",
    "sum_logics",
    "to_coalgebra",
    "to_kleisli",
    "to_logic",
    "up_closure",
]
