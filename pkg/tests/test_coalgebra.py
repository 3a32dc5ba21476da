from itertools import product

import pytest

from ulog.coalgebra import (
    KleisliMorphism,
    UCoalgebra,
    classify_map,
    coalgebra_kleisli,
    diamond_lower,
    diamond_upper,
    enumerate_coalgebras,
    eta,
    eta_kleisli,
    is_logic_induced,
    kleisli_leq,
    kleisli_star,
    kleisli_star_definitional,
    mu_apply,
    pullback_by_image,
    sharp,
    sum_logics,
    to_coalgebra,
    to_kleisli,
    to_logic,
    u_apply,
    u_map,
    v_apply,
    v_apply_literal,
    v_map,
)
from ulog.core import (
    TotalMap,
    Universe,
    UpSet,
    enumerate_maps,
    is_up_closed_mask,
    upset_masks,
)
from ulog.laws import enumerate_logics
from ulog.monotone import delta, generate, membership_logic

AB = Universe(("a", "b"))
A1 = Universe(("a",))
Y1 = Universe(("y",))


def test_u_of_identity():
    ident = TotalMap(AB, AB, (0, 1))
    for fam in upset_masks(2):
        assert u_apply(ident, fam) == fam


def test_u_of_constant_map():
    const = TotalMap(AB, Y1, (0, 0))
    assert u_apply(const, 0b1010) == 0b10  # exactly {{y}}
    assert u_map(const, UpSet(AB, 0b1010)) == UpSet(Y1, 0b10)


def test_v_needs_up_closure():
    const = TotalMap(AB, Y1, (0, 0))
    fam = 0b11  # {{}, {y}} is up-closed over one point
    literal = v_apply_literal(const, fam)
    assert literal == 0b1001  # {{}, {a,b}} misses the singletons
    assert not is_up_closed_mask(literal, 2)
    assert v_apply(const, fam) == 0b1111  # the empty set closes to everything
    assert v_map(const, UpSet(Y1, fam)) == UpSet(AB, 0b1111)


def test_uv_adjunction_small():
    for nx, ny in product(range(3), repeat=2):
        X, Y = Universe.of_size(nx), Universe.of_size(ny, "y")
        for f in enumerate_maps(X, Y):
            for a in upset_masks(nx):
                for b in upset_masks(ny):
                    assert (v_apply(f, b) & ~a == 0) == (b & ~u_apply(f, a) == 0)


def test_eta_and_sharp():
    assert eta(AB).structure[0] == 0b1010
    assert sharp(A1.subset(["a"])) == 0b110
    assert sharp(A1.subset()) == 0b100


def test_mu_examples():
    assert mu_apply({0b110, 0b111}, A1) == UpSet(A1, 0b10)
    assert mu_apply(set(range(8)), A1) == UpSet(A1, 0b11)
    assert mu_apply(set(), A1) == UpSet(A1, 0)


def test_mu_rejects_non_up_closed():
    with pytest.raises(ValueError):
        mu_apply({0b010}, A1)  # missing the superset {T1,T2,...}


def test_star_units():
    for values in product(upset_masks(2), repeat=1):
        rho = KleisliMorphism(Y1, AB, values)
        assert kleisli_star(eta_kleisli(AB), rho) == rho
        assert kleisli_star(rho, eta_kleisli(Y1)) == rho


def test_star_matches_definitional():
    for vr in product(upset_masks(2), repeat=1):
        rho = KleisliMorphism(Y1, AB, vr)
        for vs in product(upset_masks(1), repeat=2):
            sigma = KleisliMorphism(AB, Y1, vs)
            assert kleisli_star(rho, sigma) == kleisli_star_definitional(rho, sigma)


def test_star_order_preserving():
    small = KleisliMorphism(Y1, AB, (0b1000,))
    large = KleisliMorphism(Y1, AB, (0b1010,))
    sigma = KleisliMorphism(AB, Y1, (0b10, 0b11))
    assert kleisli_leq(small, large)
    assert kleisli_leq(kleisli_star(small, sigma), kleisli_star(large, sigma))


def test_logic_induced_coalgebra():
    logic = generate(AB, [(AB.subset(["a"]), 1)])
    alpha = to_coalgebra(logic)
    assert alpha.structure[1] == 0b1110  # {a}, {b} and {a,b}
    assert is_logic_induced(alpha)
    square = kleisli_star(coalgebra_kleisli(alpha), coalgebra_kleisli(alpha))
    assert square.values == alpha.structure
    assert to_logic(alpha) == logic


def test_membership_coalgebra_is_eta():
    assert to_coalgebra(membership_logic(AB)) == eta(AB)
    assert to_kleisli(delta(AB)) == eta_kleisli(AB)


def test_top_coalgebra_is_induced():
    top = UCoalgebra(AB, (0b1111, 0b1111))
    assert is_logic_induced(top)


def test_missing_unit_not_induced():
    alpha = UCoalgebra(AB, (0b1010, 0b1010))  # alpha(b) misses {b}
    assert not is_logic_induced(alpha)
    with pytest.raises(ValueError):
        to_logic(alpha)


def test_diamonds_of_identity():
    ident = TotalMap(AB, AB, (0, 1))
    assert diamond_lower(ident) == eta_kleisli(AB)
    assert diamond_upper(ident) == eta_kleisli(AB)


def test_upper_diamond_of_constant():
    const = TotalMap(AB, Y1, (0, 0))
    assert diamond_upper(const).values == (0b1110,)


def test_lower_diamond_absorbs_into_star():
    for nx, ny in product(range(3), repeat=2):
        X, Y = Universe.of_size(nx), Universe.of_size(ny, "y")
        Z = Universe.of_size(2, "z")
        for f in enumerate_maps(X, Y):
            lo = diamond_lower(f)
            for values in product(upset_masks(2), repeat=ny):
                rho = KleisliMorphism(Y, Z, values)
                composed = kleisli_star(rho, lo)
                assert composed.values == tuple(
                    values[f.targets[x]] for x in range(nx))


def test_upper_diamond_absorbs_as_image_pullback():
    const = TotalMap(AB, Y1, (0, 0))
    up = diamond_upper(const)
    for values in product(upset_masks(1), repeat=2):
        sigma = KleisliMorphism(AB, Y1, values)
        composed = kleisli_star(up, sigma)
        assert composed.values == tuple(
            pullback_by_image(const, v) for v in values)


def test_classify_identity():
    logic = generate(AB, [(AB.subset(["a"]), 1)])
    alpha = to_coalgebra(logic)
    flags = classify_map(TotalMap(AB, AB, (0, 1)), alpha, alpha)
    assert (flags.preserving, flags.conservative, flags.progressive, flags.open) \
        == (True, True, True, True)


def test_classify_relabel_is_progressive():
    logic = generate(AB, [(AB.subset(["a"]), 1)])
    swapped = generate(AB, [(AB.subset(["b"]), 0)])
    swap = TotalMap(AB, AB, (1, 0))
    flags = classify_map(swap, to_coalgebra(logic), to_coalgebra(swapped))
    assert flags.open and flags.progressive and flags.conservative


def test_sum_of_membership_logics():
    summed, _ = sum_logics([membership_logic(A1), membership_logic(AB)])
    assert summed == membership_logic(summed.carrier)


def test_sum_example_closure():
    l1 = membership_logic(A1)
    xy = Universe(("x", "y"))
    l2 = generate(xy, [(xy.subset(["x"]), 1)])
    summed, _ = sum_logics([l1, l2])
    assert summed.closure_mask(0b011) == 0b111


def test_nullary_sum():
    summed, injections = sum_logics([])
    assert summed.carrier.size == 0
    assert injections == []


def test_sum_injections_are_coalgebra_morphisms():
    logics2 = enumerate_logics(AB)
    for la, lb in product(logics2[:3], logics2[:3]):
        summed, (k1, k2) = sum_logics([la, lb])
        asum = to_coalgebra(summed)
        assert classify_map(k1, to_coalgebra(la), asum).open
        assert classify_map(k2, to_coalgebra(lb), asum).open


def test_enumerate_coalgebras_count():
    assert len(list(enumerate_coalgebras(AB))) == 36
