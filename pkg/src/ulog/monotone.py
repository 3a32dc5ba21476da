"""Monotone relations, their Kleisli-style composition, and abstract logics.

A monotone relation from ``X`` to ``Y`` relates subsets of ``X`` to elements
of ``Y`` and is stable under enlarging the subset.  It is stored through its
mates: one up-closed family over ``X`` per element of ``Y``.  A consequence
relation is the square case ``X`` to ``X`` that contains the membership
relation and absorbs its own composite; logics are always handled in that
saturated form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import (
    HARD_CAP,
    CapExceededError,
    Subset,
    TotalMap,
    Universe,
    UniverseMismatchError,
    bits,
    is_up_closed_mask,
    iter_submasks,
    powerset_universe,
    supersets_mask,
    upset_masks,
)
from .powerset import direct_image_map, lift, multiplication_on
from .relations import Relation, compose, converse, graph, leq


@dataclass(frozen=True)
class MonotoneRelation:
    """A monotone relation ``X ~> Y``; ``mates[y]`` is the up-closed family of
    premise sets related to ``y``."""

    source: Universe
    target: Universe
    mates: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.source.size
        if n > HARD_CAP:
            raise CapExceededError("monotone relations need a source within the cap")
        if len(self.mates) != self.target.size:
            raise ValueError("one mate per target element required")
        for y, fam in enumerate(self.mates):
            if not 0 <= fam < (1 << (1 << n)):
                raise ValueError("mate mask out of range")
            if not is_up_closed_mask(fam, n):
                raise ValueError(f"mate of element {y} is not up-closed")

    def related(self, amask: int, y: int) -> bool:
        return bool(self.mates[y] >> amask & 1)

    def successors(self, amask: int) -> int:
        """Mask of target elements related to the subset ``amask``."""
        out = 0
        for y, fam in enumerate(self.mates):
            if fam >> amask & 1:
                out |= 1 << y
        return out


def delta(universe: Universe) -> MonotoneRelation:
    """The membership relation: a subset is related to each of its elements."""
    n = universe.size
    mates = tuple(supersets_mask(1 << x, n) for x in range(n))
    return MonotoneRelation(universe, universe, mates)


def mrel_leq(r: MonotoneRelation, other: MonotoneRelation) -> bool:
    if r.source != other.source or r.target != other.target:
        raise UniverseMismatchError("monotone relations are not comparable")
    return all(a & ~b == 0 for a, b in zip(r.mates, other.mates))


def compose_kernel(per_y_over_x: Sequence[int], per_z_over_y: Sequence[int], nx: int) -> list[int]:
    """Shared composition kernel.

    Given families over ``X`` indexed by ``Y`` and families over ``Y``
    indexed by ``Z``, relate ``A`` to ``z`` iff the set of ``y`` whose family
    contains ``A`` is itself a member of the family at ``z``.
    """
    ny = len(per_y_over_x)
    out = [0] * len(per_z_over_y)
    for amask in range(1 << nx):
        ys = 0
        for y in range(ny):
            if per_y_over_x[y] >> amask & 1:
                ys |= 1 << y
        for z, fam in enumerate(per_z_over_y):
            if fam >> ys & 1:
                out[z] |= 1 << amask
    return out


def kcompose(s: MonotoneRelation, r: MonotoneRelation) -> MonotoneRelation:
    """Cut-style composite of monotone relations (apply ``r`` first).

    ``A`` is related to ``z`` iff some set ``B`` of middle elements, each of
    them related to ``A`` under ``r``, is related to ``z`` under ``s``.  For
    monotone ``s`` the largest candidate ``B`` decides, which is what the
    kernel computes.
    """
    if r.target != s.source:
        raise UniverseMismatchError("monotone relations do not compose")
    mates = compose_kernel(r.mates, s.mates, r.source.size)
    return MonotoneRelation(r.source, s.target, tuple(mates))


def kcompose_definitional(s: Relation, r: Relation) -> Relation:
    """The raw composite ``s . lift(r) . union*`` for relations out of powersets.

    ``r`` must go from a powerset universe (its source size a power of two)
    and the converse of the union map is materialized, so the base carrier
    has to be small.  Kept as the independent route against ``kcompose``.
    """
    m_conv = converse(multiplication_on(r.source))
    return compose(compose(s, lift(r)), m_conv)


def to_raw(r: MonotoneRelation) -> Relation:
    """The same relation, rows indexed by the powerset universe."""
    px = powerset_universe(r.source)
    return Relation(px, r.target, tuple(r.successors(a) for a in range(px.size)))


def from_raw(raw: Relation, source: Universe) -> MonotoneRelation:
    """Reads a raw relation out of a powerset back as a monotone relation."""
    if raw.source.size != 1 << source.size:
        raise UniverseMismatchError("raw source is not the powerset of the carrier")
    mates = _columns(raw)
    return MonotoneRelation(source, raw.target, tuple(mates))


def _columns(raw: Relation) -> list[int]:
    cols = [0] * raw.target.size
    for a, row in enumerate(raw.rows):
        for y in bits(row):
            cols[y] |= 1 << a
    return cols


def is_monotone(raw: Relation) -> bool:
    """True iff every column of the raw relation is up-closed."""
    size = raw.source.size
    if size & (size - 1):
        raise ValueError("relation source is not a powerset universe")
    n = size.bit_length() - 1
    return all(is_up_closed_mask(col, n) for col in _columns(raw))


def is_consequence(raw: Relation) -> bool:
    """Direct check of the consequence axioms on a raw relation.

    Reflexivity (membership entails, including the singleton variant),
    weakening (columns up-closed) and cut (everything entailed by an
    entailed set is entailed) are each evaluated as stated.
    """
    n = raw.target.size
    if raw.source.size != 1 << n:
        raise UniverseMismatchError("expected a relation from the powerset to the carrier")
    rows = raw.rows
    for amask in range(1 << n):
        if amask & ~rows[amask]:
            return False  # reflexivity: some member is not entailed
    for x in range(n):
        if not rows[1 << x] >> x & 1:
            return False  # singleton variant
    if not is_monotone(raw):
        return False  # weakening
    for amask in range(1 << n):
        entailed = rows[amask]
        for bmask in iter_submasks(entailed):
            if rows[bmask] & ~rows[amask]:
                return False  # cut fails through premise set bmask
    return True


def is_monoid(r: MonotoneRelation) -> bool:
    """Unit and multiplication laws for a square monotone relation."""
    if r.source != r.target:
        raise UniverseMismatchError("monoid check needs a square relation")
    return mrel_leq(delta(r.source), r) and mrel_leq(kcompose(r, r), r)


@dataclass(frozen=True)
class AbstractLogic:
    """A carrier with a consequence relation, stored as a monotone monoid."""

    carrier: Universe
    entails: MonotoneRelation

    def __post_init__(self) -> None:
        if self.entails.source != self.carrier or self.entails.target != self.carrier:
            raise UniverseMismatchError("entailment must be square over the carrier")
        if not is_monoid(self.entails):
            raise ValueError("entailment is not reflexive-transitive")

    def closure_mask(self, amask: int) -> int:
        """Everything entailed by the subset ``amask``."""
        return self.entails.successors(amask)

    def entails_mask(self, amask: int, x: int) -> bool:
        return self.entails.related(amask, x)


def generate(universe: Universe, rules: Iterable[tuple[Subset, int]]) -> AbstractLogic:
    """Least consequence relation containing the given rules.

    Saturates a closure table: each subset is repeatedly extended by the
    heads of rules whose premises it already covers.
    """
    if universe.size > HARD_CAP:
        raise CapExceededError("carrier too large to generate a logic")
    n = universe.size
    packed = []
    for premise, head in rules:
        if premise.universe != universe:
            raise UniverseMismatchError("rule premise lives over a different carrier")
        if not 0 <= head < n:
            raise ValueError(f"unknown element index {head}")
        packed.append((premise.mask, head))
    table = []
    for amask in range(1 << n):
        closed = amask
        changed = True
        while changed:
            changed = False
            for premise, head in packed:
                if premise & ~closed == 0 and not closed >> head & 1:
                    closed |= 1 << head
                    changed = True
        table.append(closed)
    return logic_from_table(universe, table)


def logic_from_table(universe: Universe, table: Sequence[int]) -> AbstractLogic:
    """Build a logic from a closure table (pattern index -> closed mask)."""
    n = universe.size
    mates = [0] * n
    for amask, closed in enumerate(table):
        for x in bits(closed):
            mates[x] |= 1 << amask
    rel = MonotoneRelation(universe, universe, tuple(mates))
    return AbstractLogic(universe, rel)


def membership_logic(universe: Universe) -> AbstractLogic:
    """The least logic on the carrier: a set entails exactly its members."""
    return generate(universe, ())


def lower_sharp(f: TotalMap) -> MonotoneRelation:
    """The monotone relation relating ``A`` to every element of its image."""
    ny = f.codomain.size
    mates = [0] * ny
    for amask in range(1 << f.domain.size):
        image = f.image_mask(amask)
        for y in bits(image):
            mates[y] |= 1 << amask
    return MonotoneRelation(f.domain, f.codomain, tuple(mates))


def upper_sharp(f: TotalMap) -> MonotoneRelation:
    """The monotone relation relating ``B`` to every element whose value lies
    in ``B``."""
    d = delta(f.codomain)
    mates = tuple(d.mates[f.targets[x]] for x in range(f.domain.size))
    return MonotoneRelation(f.codomain, f.domain, mates)


def enumerate_monotone_relations(
    source: Universe, target: Universe
) -> Iterator[MonotoneRelation]:
    """All monotone relations, mates running through the canonical up-sets."""
    options = upset_masks(source.size)
    for mates in product(options, repeat=target.size):
        yield MonotoneRelation(source, target, mates)


# --- consequence preserving maps ------------------------------------------

PROFILE_FORMS = (
    "pointwise",
    "post_compose",
    "sandwich_rel",
    "converse_rel",
    "sandwich_mrel",
    "upper_exchange",
    "lower_exchange",
)


def is_preserving(f: TotalMap, logic: AbstractLogic, other: AbstractLogic) -> bool:
    """Pointwise check: whatever is entailed maps to something entailed."""
    _check_map(f, logic, other)
    n = logic.carrier.size
    for amask in range(1 << n):
        entailed = logic.closure_mask(amask)
        target_closure = other.closure_mask(f.image_mask(amask))
        if f.image_mask(entailed) & ~target_closure:
            return False
    return True


def preserving_profile(
    f: TotalMap, logic: AbstractLogic, other: AbstractLogic
) -> dict[str, bool]:
    """All characterisations of consequence preservation, one flag per form.

    The entries are provably equal; the suite asserts that, and callers may
    read any one of them as the classification.
    """
    _check_map(f, logic, other)
    ent, oent = logic.entails, other.entails
    raw, oraw = to_raw(ent), to_raw(oent)
    g = graph(f)
    f_conv = converse(f)
    pf = graph(direct_image_map(f))
    pf_conv = converse(direct_image_map(f))
    lo, up = lower_sharp(f), upper_sharp(f)
    return {
        "pointwise": is_preserving(f, logic, other),
        "post_compose": leq(compose(g, raw), compose(oraw, pf)),
        "sandwich_rel": leq(raw, compose(compose(f_conv, oraw), pf)),
        "converse_rel": leq(compose(raw, pf_conv), compose(f_conv, oraw)),
        "sandwich_mrel": mrel_leq(ent, kcompose(up, kcompose(oent, lo))),
        "upper_exchange": mrel_leq(kcompose(ent, up), kcompose(up, oent)),
        "lower_exchange": mrel_leq(kcompose(lo, ent), kcompose(oent, lo)),
    }


def is_conservative(f: TotalMap, logic: AbstractLogic, other: AbstractLogic) -> bool:
    """Entailment is both preserved and reflected along ``f``.

    Evaluates the pointwise biconditional and both equational forms; they
    always agree, and disagreement would mean a broken build.
    """
    _check_map(f, logic, other)
    n = logic.carrier.size
    pointwise = True
    for amask in range(1 << n):
        image_closure = other.closure_mask(f.image_mask(amask))
        for x in range(n):
            if logic.entails_mask(amask, x) != bool(image_closure >> f.targets[x] & 1):
                pointwise = False
                break
        if not pointwise:
            break
    raw, oraw = to_raw(logic.entails), to_raw(other.entails)
    rel_form = raw == compose(
        compose(converse(f), oraw), graph(direct_image_map(f))
    )
    lo, up = lower_sharp(f), upper_sharp(f)
    mrel_form = logic.entails == kcompose(up, kcompose(other.entails, lo))
    if not (pointwise == rel_form == mrel_form):
        raise AssertionError("conservativity characterisations disagree")
    return pointwise


def _check_map(f: TotalMap, logic: AbstractLogic, other: AbstractLogic) -> None:
    if f.domain != logic.carrier or f.codomain != other.carrier:
        raise UniverseMismatchError("map does not match the two carriers")
