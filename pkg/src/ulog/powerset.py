"""The powerset functor, its monad structure, and the relational lifting."""

from __future__ import annotations

from .core import TotalMap, Universe, bits, powerset_universe, submasks_mask
from .relations import Relation


def lift(r: Relation) -> Relation:
    """Lift ``r`` to a relation between powersets.

    ``A`` is related to ``B`` iff every member of ``B`` is reached from some
    member of ``A``, i.e. iff ``B`` is contained in the union of the rows of
    ``r`` over ``A``.
    """
    px = powerset_universe(r.source)
    py = powerset_universe(r.target)
    ny = r.target.size
    rows = []
    for amask in range(px.size):
        cover = 0
        for x in bits(amask):
            cover |= r.rows[x]
        rows.append(submasks_mask(cover, ny))
    return Relation(px, py, tuple(rows))


def direct_image_map(f: TotalMap) -> TotalMap:
    """The direct-image function between the powerset universes."""
    px = powerset_universe(f.domain)
    py = powerset_universe(f.codomain)
    return TotalMap(px, py, tuple(f.image_mask(a) for a in range(px.size)))


def unit_map(universe: Universe) -> TotalMap:
    """The singleton map into the powerset universe."""
    px = powerset_universe(universe)
    return TotalMap(universe, px, tuple(1 << x for x in range(universe.size)))


def multiplication_map(universe: Universe) -> TotalMap:
    """The big-union map from the double powerset down to the powerset.

    Materializes the double powerset, so the carrier must be small enough
    for ``powerset_universe`` to accept the powerset itself.
    """
    return multiplication_on(powerset_universe(universe))


def multiplication_on(px: Universe) -> TotalMap:
    """The union map built directly on an already-powerset universe ``px``."""
    if px.size & (px.size - 1):
        raise ValueError("not a powerset universe")
    ppx = powerset_universe(px)
    targets = []
    for fam in range(ppx.size):
        union = 0
        for member in bits(fam):
            union |= member
        targets.append(union)
    return TotalMap(ppx, px, tuple(targets))
