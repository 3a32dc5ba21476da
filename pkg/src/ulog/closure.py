"""Closure operators and the table view of monotone relations.

A monotone relation corresponds to a monotone map between powersets; for a
logic that map is a closure operator, and continuity / initiality / openness
of carrier maps mirror the preserving / conservative / open classifiers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    HARD_CAP,
    CapExceededError,
    TotalMap,
    Universe,
    UniverseMismatchError,
    bits,
    iter_submasks,
    powerset_universe,
)
from .monotone import (
    AbstractLogic,
    MonotoneRelation,
    is_preserving,
    kcompose,
    logic_from_table,
    upper_sharp,
)


class ClosureAxiomError(ValueError):
    """A table fails one of the closure axioms; carries the first witness."""

    def __init__(self, axiom: str, witness: int, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


def closure_axiom_violation(table: Sequence[int], n: int) -> tuple[str, int] | None:
    """First axiom violation in canonical order, or ``None``.

    Checks monotonicity, extensivity and idempotence in that order; the
    witness is the first offending subset pattern.
    """
    size = 1 << n
    full = size - 1
    for amask in range(size):
        ca = table[amask]
        rest = full & ~amask
        for j in bits(rest):
            if ca & ~table[amask | (1 << j)]:
                return ("monotone", amask)
    for amask in range(size):
        if amask & ~table[amask]:
            return ("extensive", amask)
    for amask in range(size):
        if table[table[amask]] != table[amask]:
            return ("idempotent", amask)
    return None


def is_closure_operator_table(table: Sequence[int], n: int) -> bool:
    return closure_axiom_violation(table, n) is None


@dataclass(frozen=True)
class ClosureOperator:
    """A monotone, extensive and idempotent table over the powerset."""

    carrier: Universe
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.carrier.size
        if n > HARD_CAP:
            raise CapExceededError("closure tables need a carrier within the cap")
        if len(self.table) != 1 << n:
            raise ValueError("closure table needs one entry per subset")
        full = self.carrier.full_mask
        for entry in self.table:
            if not 0 <= entry <= full:
                raise ValueError("closure table entry out of range")
        broken = closure_axiom_violation(self.table, n)
        if broken is not None:
            axiom, witness = broken
            raise ClosureAxiomError(
                axiom,
                witness,
                f"{axiom} axiom fails at subset "
                f"{self.carrier.format_subset(witness)}",
            )

    def apply(self, amask: int) -> int:
        return self.table[amask]


def to_closure(r: MonotoneRelation) -> TotalMap:
    """The relation as a monotone map between the powerset universes."""
    px = powerset_universe(r.source)
    py = powerset_universe(r.target)
    return TotalMap(px, py, tuple(r.successors(a) for a in range(px.size)))


def operator_of(logic: AbstractLogic) -> ClosureOperator:
    """The closure operator generated by a logic's entailment."""
    return ClosureOperator(logic.carrier, tuple(to_closure(logic.entails).targets))


def from_closure(operator: ClosureOperator) -> AbstractLogic:
    """The logic whose entailment reads membership in the closed set."""
    return logic_from_table(operator.carrier, operator.table)


def preimage_map(f: TotalMap) -> TotalMap:
    """The inverse-image function between the powerset universes, the right
    adjoint of the direct image."""
    py = powerset_universe(f.codomain)
    px = powerset_universe(f.domain)
    return TotalMap(py, px, tuple(f.preimage_mask(b) for b in range(py.size)))


def _check_spaces(f: TotalMap, c: ClosureOperator, d: ClosureOperator) -> None:
    if f.domain != c.carrier or f.codomain != d.carrier:
        raise UniverseMismatchError("map does not match the two closure spaces")


def is_continuous(f: TotalMap, c: ClosureOperator, d: ClosureOperator) -> bool:
    """Closure points are preserved: the image of a closure lands in the
    closure of the image."""
    _check_spaces(f, c, d)
    return all(
        f.image_mask(c.table[amask]) & ~d.table[f.image_mask(amask)] == 0
        for amask in range(len(c.table))
    )


def continuous_via_adjoints(f: TotalMap, c: ClosureOperator, d: ClosureOperator) -> bool:
    """Continuity in its adjoint form: ``c <= Qf . d . Pf`` pointwise."""
    _check_spaces(f, c, d)
    return all(
        c.table[amask] & ~f.preimage_mask(d.table[f.image_mask(amask)]) == 0
        for amask in range(len(c.table))
    )


def is_initial(f: TotalMap, c: ClosureOperator, d: ClosureOperator) -> bool:
    """The source closure is exactly the pullback of the target closure."""
    _check_spaces(f, c, d)
    return all(
        c.table[amask] == f.preimage_mask(d.table[f.image_mask(amask)])
        for amask in range(len(c.table))
    )


class NotPreservingError(ValueError):
    """Openness is only defined for consequence preserving maps."""


def is_open_pointwise(f: TotalMap, logic: AbstractLogic, other: AbstractLogic) -> bool:
    """Witness form of openness: every target-side entailment of ``f(x)`` is
    matched by a source-side entailment of ``x`` whose image it covers.

    Refuses maps that do not preserve consequence, where the notion is not
    defined.
    """
    if not is_preserving(f, logic, other):
        raise NotPreservingError("map is not consequence preserving")
    n = logic.carrier.size
    for x in range(n):
        fx = f.targets[x]
        for bmask in range(1 << other.carrier.size):
            if not other.entails_mask(bmask, fx):
                continue
            candidates = f.preimage_mask(bmask)
            if not any(
                logic.entails_mask(amask, x) for amask in iter_submasks(candidates)
            ):
                return False
    return True


def open_via_equation(f: TotalMap, logic: AbstractLogic, other: AbstractLogic) -> bool:
    """Equational form of openness; agrees with the witness form."""
    if not is_preserving(f, logic, other):
        raise NotPreservingError("map is not consequence preserving")
    up = upper_sharp(f)
    return kcompose(up, other.entails) == kcompose(logic.entails, up)
