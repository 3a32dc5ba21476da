from itertools import product

import pytest

from ulog.core import (
    CapExceededError,
    TotalMap,
    Universe,
    bits,
    compose_maps,
    identity_map,
    powerset_universe,
)
from ulog.powerset import direct_image_map, lift, multiplication_map, unit_map
from ulog.relations import (
    compose,
    converse,
    enumerate_relations,
    full,
    graph,
    identity,
    leq,
)

AB = Universe(("a", "b"))
Y1 = Universe(("y",))


def naive_lift_holds(r, amask, bmask):
    # oracle: direct quantifier scan of the lifting condition
    for y in bits(bmask):
        if not any(r.holds(x, y) for x in bits(amask)):
            return False
    return True


def test_lift_of_identity_is_containment():
    lifted = lift(identity(AB))
    for amask in range(4):
        for bmask in range(4):
            assert lifted.holds(amask, bmask) == (bmask & ~amask == 0)


def test_lift_of_full_relation():
    lifted = lift(full(AB, Y1))
    for amask in range(4):
        for bmask in range(2):
            expected = bmask == 0 or amask != 0
            assert lifted.holds(amask, bmask) == expected


def test_lift_matches_quantifier_oracle():
    for r in enumerate_relations(AB, AB):
        lifted = lift(r)
        for amask in range(4):
            for bmask in range(4):
                assert lifted.holds(amask, bmask) == naive_lift_holds(r, amask, bmask)


def test_lift_functorial_sampled():
    for r in enumerate_relations(AB, Y1):
        for s in enumerate_relations(Y1, AB):
            assert lift(compose(s, r)) == compose(lift(s), lift(r))


def test_direct_image_map():
    assert direct_image_map(identity_map(AB)) == identity_map(powerset_universe(AB))
    const = TotalMap(AB, Y1, (0, 0))
    pf = direct_image_map(const)
    assert pf.targets == (0, 1, 1, 1)  # {} -> {}, everything else -> {y}


def test_direct_image_inside_lift():
    const = TotalMap(AB, Y1, (0, 0))
    assert leq(graph(direct_image_map(const)), lift(graph(const)))


def test_unit_and_multiplication():
    e = unit_map(AB)
    assert e.targets == (0b01, 0b10)
    m = multiplication_map(AB)
    # the family {{a},{a,b}} has pattern 0b1010 over the powerset
    assert m.targets[0b1010] == 0b11
    assert m.targets[0] == 0


def test_multiplication_cap():
    with pytest.raises(CapExceededError):
        multiplication_map(Universe.of_size(4))


def test_monad_unit_laws_small():
    for n in range(3):
        X = Universe.of_size(n)
        px = powerset_universe(X)
        m = multiplication_map(X)
        assert compose_maps(m, unit_map(px)) == identity_map(px)
        assert compose_maps(m, direct_image_map(unit_map(X))) == identity_map(px)


def test_strengthened_union_square():
    for nx, ny in product(range(3), repeat=2):
        X, Y = Universe.of_size(nx), Universe.of_size(ny, "y")
        mx, my = multiplication_map(X), multiplication_map(Y)
        for targets in product(range(ny), repeat=nx):
            f = TotalMap(X, Y, targets)
            pf = direct_image_map(f)
            ppf = direct_image_map(pf)
            lhs = compose(graph(ppf), converse(mx))
            rhs = compose(converse(my), graph(pf))
            assert lhs == rhs
