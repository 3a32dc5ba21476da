"""The up-set functor and monad, its coalgebras, map classifiers, and sums.

An up-set coalgebra assigns to each point an up-closed family of subsets;
logics live here as the coalgebras whose structure map contains the
principal filters and absorbs Kleisli self-composition.  The Kleisli
morphisms carry the same payload as monotone relations read backwards, which
keeps every translation in this module a data-identity.
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
    UpSet,
    bits,
    is_up_closed_mask,
    supersets_mask,
    up_close_mask,
    upset_masks,
)
from .monotone import (
    AbstractLogic,
    MonotoneRelation,
    compose_kernel,
    logic_from_table,
    lower_sharp,
)


@dataclass(frozen=True)
class UCoalgebra:
    """A carrier with one up-closed family of subsets per element."""

    carrier: Universe
    structure: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.carrier.size
        if n > HARD_CAP:
            raise CapExceededError("coalgebras need a carrier within the cap")
        if len(self.structure) != n:
            raise ValueError("one structure value per element required")
        for x, fam in enumerate(self.structure):
            if not 0 <= fam < (1 << (1 << n)):
                raise ValueError("structure mask out of range")
            if not is_up_closed_mask(fam, n):
                raise ValueError(f"structure at element {x} is not up-closed")


@dataclass(frozen=True)
class KleisliMorphism:
    """An arrow ``source => target``: one up-closed family over the target
    carrier per source element."""

    source: Universe
    target: Universe
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.target.size
        if n > HARD_CAP:
            raise CapExceededError("Kleisli values need a target within the cap")
        if len(self.values) != self.source.size:
            raise ValueError("one value per source element required")
        for fam in self.values:
            if not 0 <= fam < (1 << (1 << n)):
                raise ValueError("value mask out of range")
            if not is_up_closed_mask(fam, n):
                raise ValueError("value is not up-closed")


def kleisli_leq(rho: KleisliMorphism, other: KleisliMorphism) -> bool:
    if rho.source != other.source or rho.target != other.target:
        raise UniverseMismatchError("Kleisli morphisms are not comparable")
    return all(a & ~b == 0 for a, b in zip(rho.values, other.values))


# --- the functor and its adjoint ------------------------------------------

def u_apply(f: TotalMap, fam: int) -> int:
    """Push an up-closed family forward: keep the subsets whose preimage is a
    member."""
    out = 0
    for bmask in range(1 << f.codomain.size):
        if fam >> f.preimage_mask(bmask) & 1:
            out |= 1 << bmask
    return out


def v_apply(f: TotalMap, fam: int) -> int:
    """Pull an up-closed family back: preimages of members, closed upwards.

    The bare set of preimages need not be up-closed for non-injective maps;
    taking the closure is what makes this the lower adjoint of ``u_apply``.
    """
    literal = 0
    for bmask in bits(fam):
        literal |= 1 << f.preimage_mask(bmask)
    return up_close_mask(literal, f.domain.size)


def v_apply_literal(f: TotalMap, fam: int) -> int:
    """The unclosed set of preimages, kept around for the law report."""
    literal = 0
    for bmask in bits(fam):
        literal |= 1 << f.preimage_mask(bmask)
    return literal


def pullback_by_image(f: TotalMap, fam: int) -> int:
    """Pull a family back by membership of images: the sets whose image is a
    member.

    Distinct from ``v_apply``: this map is not adjoint to ``u_apply``, but it
    is the one that absorbs into Kleisli composition (composing with the
    upper diamond arrow applies it pointwise) and it is up-closed without any
    closure step.
    """
    out = 0
    for amask in range(1 << f.domain.size):
        if fam >> f.image_mask(amask) & 1:
            out |= 1 << amask
    return out


def u_map(f: TotalMap, family: UpSet) -> UpSet:
    if family.universe != f.domain:
        raise UniverseMismatchError("family does not live over the map's domain")
    return UpSet(f.codomain, u_apply(f, family.mask))


def v_map(f: TotalMap, family: UpSet) -> UpSet:
    if family.universe != f.codomain:
        raise UniverseMismatchError("family does not live over the map's codomain")
    return UpSet(f.domain, v_apply(f, family.mask))


# --- monad structure --------------------------------------------------------

def eta(universe: Universe) -> UCoalgebra:
    """The principal-filter coalgebra: each point goes to the family of sets
    containing it."""
    n = universe.size
    return UCoalgebra(
        universe, tuple(supersets_mask(1 << x, n) for x in range(n))
    )


def eta_kleisli(universe: Universe) -> KleisliMorphism:
    """The identity arrow of the Kleisli category on this carrier."""
    return KleisliMorphism(universe, universe, eta(universe).structure)


def sharp(subset: Subset) -> int:
    """Mask, over the canonical up-set enumeration, of the up-sets that
    contain the given subset."""
    masks = upset_masks(subset.universe.size)
    out = 0
    for i, fam in enumerate(masks):
        if fam >> subset.mask & 1:
            out |= 1 << i
    return out


def mu_apply(family: Iterable[int], universe: Universe) -> UpSet:
    """Flatten one layer: from a family of sets of up-sets down to an up-set.

    ``family`` collects subsets of the canonical up-set enumeration, each
    encoded as a bit mask over up-set indices.  It must be up-closed inside
    that enumeration's powerset; a subset of the carrier survives iff the
    mask of up-sets containing it is a member.
    """
    if universe.size > 3:
        raise CapExceededError("flattening is capped at carriers of size 3")
    masks = upset_masks(universe.size)
    count = len(masks)
    members = frozenset(family)
    for cmask in members:
        if not 0 <= cmask < (1 << count):
            raise ValueError("member mask out of range for the up-set carrier")
        for i in range(count):
            if not cmask >> i & 1 and cmask | (1 << i) not in members:
                raise ValueError("family over the up-set carrier is not up-closed")
    out = 0
    for amask in range(1 << universe.size):
        if sharp(Subset(universe, amask)) in members:
            out |= 1 << amask
    return UpSet(universe, out)


def kleisli_star(rho: KleisliMorphism, sigma: KleisliMorphism) -> KleisliMorphism:
    """Kleisli composition ``rho * sigma`` (apply ``sigma`` first).

    Pointwise: a subset of the final target belongs to the composite at ``z``
    iff the set of middle points whose ``rho``-family contains it belongs to
    ``sigma(z)``.
    """
    if rho.source != sigma.target:
        raise UniverseMismatchError("Kleisli morphisms do not compose")
    values = compose_kernel(rho.values, sigma.values, rho.target.size)
    return KleisliMorphism(sigma.source, rho.target, tuple(values))


def kleisli_star_definitional(
    rho: KleisliMorphism, sigma: KleisliMorphism
) -> KleisliMorphism:
    """The composite through the flattened double layer, as an oracle.

    Enumerates all subsets of the up-set carrier of the target, so the
    target stays tiny (at most two elements).
    """
    if rho.source != sigma.target:
        raise UniverseMismatchError("Kleisli morphisms do not compose")
    target = rho.target
    masks = upset_masks(target.size)
    count = len(masks)
    if count > HARD_CAP:
        raise CapExceededError("definitional composite needs a tiny target")
    index_of = {fam: i for i, fam in enumerate(masks)}
    rho_idx = [index_of[fam] for fam in rho.values]
    sharp_masks = [
        sharp(Subset(target, amask)) for amask in range(1 << target.size)
    ]
    values = []
    for z in range(sigma.source.size):
        middle = sigma.values[z]
        # the pushforward of the middle family along rho, as a set of masks
        lifted = set()
        for cmask in range(1 << count):
            rho_inv = 0
            for y, idx in enumerate(rho_idx):
                if cmask >> idx & 1:
                    rho_inv |= 1 << y
            if middle >> rho_inv & 1:
                lifted.add(cmask)
        out = 0
        for amask in range(1 << target.size):
            if sharp_masks[amask] in lifted:
                out |= 1 << amask
        values.append(out)
    return KleisliMorphism(sigma.source, target, tuple(values))


# --- translations -----------------------------------------------------------

def to_coalgebra(logic: AbstractLogic) -> UCoalgebra:
    """The logic's entailment read as a structure map; same payload."""
    return UCoalgebra(logic.carrier, logic.entails.mates)


def to_kleisli(r: MonotoneRelation) -> KleisliMorphism:
    """A monotone relation read contravariantly as a Kleisli arrow."""
    return KleisliMorphism(r.target, r.source, r.mates)


def kleisli_to_mrel(rho: KleisliMorphism) -> MonotoneRelation:
    return MonotoneRelation(rho.target, rho.source, rho.values)


def coalgebra_kleisli(alpha: UCoalgebra) -> KleisliMorphism:
    return KleisliMorphism(alpha.carrier, alpha.carrier, alpha.structure)


def is_logic_induced(alpha: UCoalgebra) -> bool:
    """True iff the structure map contains the principal filters and absorbs
    its own Kleisli square."""
    unit = eta(alpha.carrier)
    if any(e & ~a for e, a in zip(unit.structure, alpha.structure)):
        return False
    k = coalgebra_kleisli(alpha)
    square = kleisli_star(k, k)
    return all(s & ~a == 0 for s, a in zip(square.values, alpha.structure))


def to_logic(alpha: UCoalgebra) -> AbstractLogic:
    """The logic a structure map encodes; rejects maps that encode none."""
    if not is_logic_induced(alpha):
        raise ValueError("coalgebra does not come from a consequence relation")
    rel = MonotoneRelation(alpha.carrier, alpha.carrier, alpha.structure)
    return AbstractLogic(alpha.carrier, rel)


# --- adjoint arrows of a map ------------------------------------------------

def diamond_lower(f: TotalMap) -> KleisliMorphism:
    """The arrow sending a point to the family of sets containing its image."""
    ny = f.codomain.size
    values = tuple(supersets_mask(1 << f.targets[x], ny) for x in range(f.domain.size))
    return KleisliMorphism(f.domain, f.codomain, values)


def diamond_upper(f: TotalMap) -> KleisliMorphism:
    """The arrow sending a target point to the family of sets whose image
    catches it."""
    return to_kleisli(lower_sharp(f))


# --- classifiers ------------------------------------------------------------

@dataclass(frozen=True)
class MapFlags:
    preserving: bool
    conservative: bool
    progressive: bool
    open: bool


def classify_map(f: TotalMap, alpha: UCoalgebra, beta: UCoalgebra) -> MapFlags:
    """Equational classifiers between arbitrary coalgebras.

    preserving   push of the structure stays below the target structure
    conservative the structure is exactly the image-pullback of the target
                 one (the double-diamond sandwich around the target)
    progressive  the target structure is exactly the pushforward sandwich
    open         the structure square commutes, i.e. a coalgebra morphism
    """
    if f.domain != alpha.carrier or f.codomain != beta.carrier:
        raise UniverseMismatchError("map does not match the two coalgebras")
    pre = [f.preimage_mask(b) for b in range(1 << f.codomain.size)]
    pushed = []
    for x in range(f.domain.size):
        fam = alpha.structure[x]
        out = 0
        for bmask, pmask in enumerate(pre):
            if fam >> pmask & 1:
                out |= 1 << bmask
        pushed.append(out)
    beta_of_fx = [beta.structure[f.targets[x]] for x in range(f.domain.size)]
    preserving = all(p & ~b == 0 for p, b in zip(pushed, beta_of_fx))
    open_ = all(p == b for p, b in zip(pushed, beta_of_fx))
    conservative = all(
        alpha.structure[x] == pullback_by_image(f, beta_of_fx[x])
        for x in range(f.domain.size)
    )
    ak = coalgebra_kleisli(alpha)
    lower, upper = diamond_lower(f), diamond_upper(f)
    progressive = (
        kleisli_star(lower, kleisli_star(ak, upper)).values == beta.structure
    )
    return MapFlags(preserving, conservative, progressive, open_)


def enumerate_coalgebras(universe: Universe) -> Iterator[UCoalgebra]:
    """All structure maps over the carrier, canonical value order."""
    options = upset_masks(universe.size)
    for structure in product(options, repeat=universe.size):
        yield UCoalgebra(universe, structure)


# --- sums -------------------------------------------------------------------

def sum_logics(
    logics: Sequence[AbstractLogic], names: Sequence[str] | None = None
) -> tuple[AbstractLogic, list[TotalMap]]:
    """Disjoint sum of logics: a set entails whatever its trace in each
    summand entails there.  Carriers are always relabelled apart; returns the
    sum and the open inclusion of each summand.
    """
    if names is None:
        names = [str(i) for i in range(len(logics))]
    if len(names) != len(logics):
        raise ValueError("one name per summand required")
    labels: list[str] = []
    offsets: list[int] = []
    for name, logic in zip(names, logics):
        offsets.append(len(labels))
        labels.extend(f"{name}.{lab}" for lab in logic.carrier.labels)
    if len(labels) > HARD_CAP:
        raise CapExceededError("sum carrier exceeds the cap")
    total = Universe(tuple(labels))
    table = []
    for amask in range(1 << total.size):
        closed = 0
        for off, logic in zip(offsets, logics):
            part = (amask >> off) & logic.carrier.full_mask
            closed |= logic.closure_mask(part) << off
        table.append(closed)
    summed = logic_from_table(total, table)
    injections = [
        TotalMap(
            logic.carrier,
            total,
            tuple(off + i for i in range(logic.carrier.size)),
        )
        for off, logic in zip(offsets, logics)
    ]
    return summed, injections
