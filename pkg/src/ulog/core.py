"""Finite carriers, subsets and families of subsets as bit vectors.

A carrier of size ``n`` identifies element ``i`` with bit position ``i``.  A
subset is then an ``n``-bit mask, and a family of subsets is a ``2^n``-bit
mask in which the bit for a subset sits at the position given by the subset's
own bit pattern.  This makes membership O(1) and gives every collection a
canonical order: ascending bit pattern.

All values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

HARD_CAP = 12
UPSET_ENUM_CAP = 5


class CapExceededError(ValueError):
    """An operation would materialize a structure past its size cap."""


class UniverseMismatchError(ValueError):
    """Operands do not live over the carrier the operation requires."""


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, descending, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=None)
def _clear_stripe(n: int, j: int) -> int:
    # Positions p in [0, 2^n) whose index has bit j clear.
    block = (1 << (1 << j)) - 1
    out = 0
    for base in range(0, 1 << n, 2 << j):
        out |= block << base
    return out


def up_close_mask(fam: int, n: int) -> int:
    """Least superset-closed family containing ``fam``, over ``n`` elements."""
    for j in range(n):
        fam |= (fam & _clear_stripe(n, j)) << (1 << j)
    return fam


def down_close_mask(fam: int, n: int) -> int:
    """Least subset-closed family containing ``fam``, over ``n`` elements."""
    for j in range(n):
        fam |= (fam >> (1 << j)) & _clear_stripe(n, j)
    return fam


def is_up_closed_mask(fam: int, n: int) -> bool:
    return fam == up_close_mask(fam, n)


def supersets_mask(pattern: int, n: int) -> int:
    """Family mask of all supersets of the subset ``pattern``."""
    return up_close_mask(1 << pattern, n)


def submasks_mask(pattern: int, n: int) -> int:
    """Family mask of all subsets of the subset ``pattern``."""
    return down_close_mask(1 << pattern, n)


@dataclass(frozen=True)
class Universe:
    """An ordered finite carrier; element ``i`` sits at bit position ``i``.

    Directly constructed carriers are meant to stay within ``HARD_CAP``
    elements; larger universes (up to ``2^HARD_CAP``) only arise as powerset
    universes and support element-level operations only.  Every operation
    that would materialize a family over the universe enforces the cap
    itself.
    """

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"labels are not pairwise distinct: {self.labels!r}")
        if len(self.labels) > (1 << HARD_CAP):
            raise CapExceededError(
                f"carrier of size {len(self.labels)} exceeds 2^HARD_CAP"
            )

    @classmethod
    def of_size(cls, n: int, prefix: str = "x") -> "Universe":
        return cls(tuple(f"{prefix}{i}" for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown element {label!r}") from None

    def subset(self, members: Iterable[str] = ()) -> "Subset":
        mask = 0
        for label in members:
            mask |= 1 << self.index(label)
        return Subset(self, mask)

    def subset_of(self, mask: int) -> "Subset":
        return Subset(self, mask)

    def format_subset(self, mask: int) -> str:
        return "{" + ",".join(self.labels[i] for i in bits(mask)) + "}"

    def format_family(self, fam: int) -> str:
        return "{" + ",".join(self.format_subset(m) for m in bits(fam)) + "}"


@dataclass(frozen=True)
class Subset:
    universe: Universe
    mask: int

    def __post_init__(self) -> None:
        if not 0 <= self.mask <= self.universe.full_mask:
            raise ValueError(f"subset mask {self.mask:#x} out of range")

    def _check(self, other: "Subset") -> None:
        if self.universe != other.universe:
            raise UniverseMismatchError("subsets live over different carriers")

    def union(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe, self.mask | other.mask)

    def intersection(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe, self.mask & other.mask)

    def complement(self) -> "Subset":
        return Subset(self.universe, self.universe.full_mask & ~self.mask)

    def is_subset_of(self, other: "Subset") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def contains(self, label: str) -> bool:
        return bool(self.mask >> self.universe.index(label) & 1)

    def members(self) -> tuple[str, ...]:
        return tuple(self.universe.labels[i] for i in bits(self.mask))

    __or__ = union
    __and__ = intersection

    def __str__(self) -> str:
        return self.universe.format_subset(self.mask)


@dataclass(frozen=True)
class Family:
    """A set of subsets, stored as a ``2^n``-bit mask indexed by pattern."""

    universe: Universe
    mask: int

    def __post_init__(self) -> None:
        if self.universe.size > HARD_CAP:
            raise CapExceededError(
                f"families need a carrier of size <= {HARD_CAP}, "
                f"got {self.universe.size}"
            )
        if not 0 <= self.mask < (1 << (1 << self.universe.size)):
            raise ValueError("family mask out of range")

    def contains(self, subset: Subset) -> bool:
        if subset.universe != self.universe:
            raise UniverseMismatchError("subset lives over a different carrier")
        return bool(self.mask >> subset.mask & 1)

    def members(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.universe, m) for m in bits(self.mask))

    def __str__(self) -> str:
        return self.universe.format_family(self.mask)


@dataclass(frozen=True)
class UpSet(Family):
    """A family closed under enlargement of its member subsets."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_up_closed_mask(self.mask, self.universe.size):
            raise ValueError(f"family {self} is not up-closed")


def up_closure(family: Family) -> UpSet:
    """Least up-closed family containing ``family``."""
    return UpSet(family.universe, up_close_mask(family.mask, family.universe.size))


def enumerate_subsets(universe: Universe) -> list[Subset]:
    """All subsets in ascending bit-pattern order."""
    if universe.size > HARD_CAP:
        raise CapExceededError("carrier too large to enumerate subsets")
    return [Subset(universe, m) for m in range(1 << universe.size)]


@lru_cache(maxsize=None)
def upset_masks(n: int) -> tuple[int, ...]:
    """Masks of all up-closed families over ``n`` elements, ascending.

    Recursion on the top element: an up-closed family over ``n`` splits into
    the up-closed halves without/with the top element, and the former must be
    contained in the latter.
    """
    if n > UPSET_ENUM_CAP:
        raise CapExceededError(f"up-set enumeration is capped at {UPSET_ENUM_CAP}")
    if n == 0:
        return (0, 1)
    half = upset_masks(n - 1)
    shift = 1 << (n - 1)
    out = []
    for hi in half:
        for lo in half:
            if lo & ~hi == 0:
                out.append((hi << shift) | lo)
    out.sort()
    return tuple(out)


def enumerate_upsets(universe: Universe) -> list[UpSet]:
    """The carrier of all up-closed families, in canonical ascending order."""
    return [UpSet(universe, m) for m in upset_masks(universe.size)]


@lru_cache(maxsize=None)
def powerset_universe(universe: Universe) -> Universe:
    """The powerset as a carrier; element ``i`` is the subset with pattern ``i``."""
    if universe.size > HARD_CAP:
        raise CapExceededError(
            f"powerset universe needs a carrier of size <= {HARD_CAP}, "
            f"got {universe.size}"
        )
    return Universe(tuple(universe.format_subset(m) for m in range(1 << universe.size)))


@dataclass(frozen=True)
class TotalMap:
    """A total function between carriers, one codomain index per element."""

    domain: Universe
    codomain: Universe
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.targets) != self.domain.size:
            raise ValueError("map must assign exactly one target per element")
        for t in self.targets:
            if not 0 <= t < self.codomain.size:
                raise ValueError(f"target index {t} outside the codomain")

    def __call__(self, i: int) -> int:
        return self.targets[i]

    def image_mask(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= 1 << self.targets[x]
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for x, t in enumerate(self.targets):
            if mask >> t & 1:
                out |= 1 << x
        return out


def identity_map(universe: Universe) -> TotalMap:
    return TotalMap(universe, universe, tuple(range(universe.size)))


def compose_maps(g: TotalMap, f: TotalMap) -> TotalMap:
    """The composite ``g . f`` (apply ``f`` first)."""
    if f.codomain != g.domain:
        raise UniverseMismatchError("maps do not compose")
    return TotalMap(f.domain, g.codomain, tuple(g.targets[t] for t in f.targets))


def enumerate_maps(domain: Universe, codomain: Universe) -> list[TotalMap]:
    """All total maps, in lexicographic target order."""
    return [
        TotalMap(domain, codomain, targets)
        for targets in product(range(codomain.size), repeat=domain.size)
    ]
