"""Plain relations between finite carriers, stored as rows of target masks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import TotalMap, Universe, UniverseMismatchError, bits


@dataclass(frozen=True)
class Relation:
    """A relation ``source -|> target``; ``rows[x]`` masks the related targets."""

    source: Universe
    target: Universe
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.source.size:
            raise ValueError("relation needs one row per source element")
        full = self.target.full_mask
        for row in self.rows:
            if not 0 <= row <= full:
                raise ValueError("relation row out of range")

    def holds(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x, row in enumerate(self.rows):
            for y in bits(row):
                yield x, y


def of_pairs(source: Universe, target: Universe, pairs: Iterable[tuple[int, int]]) -> Relation:
    rows = [0] * source.size
    for x, y in pairs:
        rows[x] |= 1 << y
    return Relation(source, target, tuple(rows))


def identity(universe: Universe) -> Relation:
    return Relation(universe, universe, tuple(1 << i for i in range(universe.size)))


def empty(source: Universe, target: Universe) -> Relation:
    return Relation(source, target, (0,) * source.size)


def full(source: Universe, target: Universe) -> Relation:
    return Relation(source, target, (target.full_mask,) * source.size)


def compose(s: Relation, r: Relation) -> Relation:
    """The composite ``s . r`` (apply ``r`` first): x related to z iff some
    middle y has x r y and y s z."""
    if r.target != s.source:
        raise UniverseMismatchError("relations do not compose")
    rows = []
    for row in r.rows:
        acc = 0
        for y in bits(row):
            acc |= s.rows[y]
        rows.append(acc)
    return Relation(r.source, s.target, tuple(rows))


def graph(f: TotalMap) -> Relation:
    """The map as a relation, relating ``x`` to ``f(x)`` only."""
    return Relation(f.domain, f.codomain, tuple(1 << t for t in f.targets))


def converse(f: TotalMap) -> Relation:
    """The inverse-image relation of ``f``: it relates ``f(x)`` back to ``x``."""
    rows = [0] * f.codomain.size
    for x, t in enumerate(f.targets):
        rows[t] |= 1 << x
    return Relation(f.codomain, f.domain, tuple(rows))


def transpose(r: Relation) -> Relation:
    rows = [0] * r.target.size
    for x, row in enumerate(r.rows):
        for y in bits(row):
            rows[y] |= 1 << x
    return Relation(r.target, r.source, tuple(rows))


def leq(r: Relation, other: Relation) -> bool:
    """Inclusion of relations with the same source and target."""
    if r.source != other.source or r.target != other.target:
        raise UniverseMismatchError("relations are not comparable")
    return all(row & ~orow == 0 for row, orow in zip(r.rows, other.rows))


def check_map_adjunction(f: TotalMap) -> bool:
    """Every map sits below its inverse-image relation: ``1 <= f*.f`` and
    ``f.f* <= 1``.  Always true; exposed so the law suite can say so."""
    g, c = graph(f), converse(f)
    return leq(identity(f.domain), compose(c, g)) and leq(
        compose(g, c), identity(f.codomain)
    )


def to_bits(r: Relation) -> int:
    """Canonical encoding of a relation as a single integer."""
    out = 0
    width = r.target.size
    for x, row in enumerate(r.rows):
        out |= row << (x * width)
    return out


def from_bits(source: Universe, target: Universe, encoded: int) -> Relation:
    width = target.size
    full = target.full_mask
    rows = tuple((encoded >> (x * width)) & full for x in range(source.size))
    return Relation(source, target, rows)


def enumerate_relations(source: Universe, target: Universe) -> Iterator[Relation]:
    """All relations in ascending canonical encoding; keep the carriers tiny."""
    cells = source.size * target.size
    if cells > 24:
        raise ValueError("too many relations to enumerate")
    for encoded in range(1 << cells):
        yield from_bits(source, target, encoded)
