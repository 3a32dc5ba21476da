from itertools import product

import pytest

from ulog.core import (
    TotalMap,
    Universe,
    bits,
    enumerate_maps,
    powerset_universe,
)
from ulog.monotone import (
    AbstractLogic,
    MonotoneRelation,
    delta,
    enumerate_monotone_relations,
    from_raw,
    generate,
    is_consequence,
    is_conservative,
    is_monoid,
    is_monotone,
    is_preserving,
    kcompose,
    kcompose_definitional,
    lower_sharp,
    membership_logic,
    mrel_leq,
    preserving_profile,
    to_raw,
    upper_sharp,
)
from ulog.relations import Relation, enumerate_relations

AB = Universe(("a", "b"))
A1 = Universe(("a",))
Y1 = Universe(("y",))


def naive_is_consequence(raw):
    # oracle: the three axioms written as raw quantifier scans over pairs
    n = raw.target.size
    pairs = [(a, x) for a in range(1 << n) for x in range(n)]
    holds = {(a, x) for a, x in pairs if raw.holds(a, x)}
    reflexive = all((a, x) in holds for a, x in pairs if a >> x & 1)
    weakening = all(
        (b, x) in holds
        for a, x in holds
        for b in range(1 << n)
        if a & ~b == 0
    )
    cut = all(
        (a, x) in holds
        for a, _ in pairs
        for b in range(1 << n)
        if all((a, y) in holds for y in bits(b))
        for (bb, x) in holds
        if bb == b
    )
    return reflexive and weakening and cut


def saturate_pairs(n, rules):
    # oracle: worklist saturation of reflexivity + weakening + cut on pairs
    holds = {(a, x) for a in range(1 << n) for x in bits(a)}
    rules = [(premise, head) for premise, head in rules]
    changed = True
    while changed:
        changed = False
        for a in range(1 << n):
            entailed = 0
            for x in range(n):
                if (a, x) in holds:
                    entailed |= 1 << x
            for premise, head in rules:
                if premise & ~entailed == 0 and (a, head) not in holds:
                    holds.add((a, head))
                    changed = True
    return holds


def test_delta_examples():
    d1 = delta(A1)
    assert d1.mates == (0b10,)
    d2 = delta(AB)
    assert d2.mates[0] == 0b1010  # {a} and {a,b}
    assert kcompose(d2, d2) == d2


def test_generated_logic_closure_table():
    logic = generate(AB, [(AB.subset(["a"]), 1)])
    assert [logic.closure_mask(a) for a in range(4)] == [0b00, 0b11, 0b10, 0b11]
    assert kcompose(logic.entails, logic.entails) == logic.entails
    oracle = saturate_pairs(2, [(0b01, 1)])
    assert {(a, x) for a in range(4) for x in bits(logic.closure_mask(a))} == oracle


def test_generate_axiom_rule():
    logic = generate(A1, [(A1.subset(), 0)])
    assert logic.closure_mask(0) == 0b1


def test_generate_rejects_unknown_element():
    with pytest.raises(ValueError):
        generate(AB, [(AB.subset(["a"]), 7)])


def test_kcompose_cut_instance():
    logic = generate(AB, [(AB.subset(["a"]), 1)])
    square = kcompose(logic.entails, logic.entails)
    # {a} entails b and {b} entails b, so the composite keeps {a} |- b
    assert square.related(0b01, 1)


def test_kcompose_identities_for_monotone():
    for r in enumerate_monotone_relations(AB, Y1):
        assert kcompose(r, delta(AB)) == r
        assert kcompose(delta(Y1), r) == r


def test_weak_identity_strictness():
    px = powerset_universe(A1)
    r = Relation(px, Y1, (1, 0))  # only the empty set is related to y
    composed = kcompose_definitional(to_raw(delta(Y1)), r)
    assert not r.holds(1, 0) and composed.holds(1, 0)
    for raw in enumerate_relations(px, Y1):
        assert_leq = kcompose_definitional(to_raw(delta(Y1)), raw)
        assert all(a & ~b == 0 for a, b in zip(raw.rows, assert_leq.rows))


def test_definitional_agreement():
    for r in enumerate_monotone_relations(AB, AB):
        rraw = to_raw(r)
        for s in enumerate_monotone_relations(AB, AB):
            assert to_raw(kcompose(s, r)) == kcompose_definitional(to_raw(s), rraw)


def test_sharp_examples():
    ident = TotalMap(AB, AB, (0, 1))
    assert lower_sharp(ident) == delta(AB)
    assert upper_sharp(ident) == delta(AB)
    const = TotalMap(AB, Y1, (0, 0))
    lo = lower_sharp(const)
    assert lo.mates == (0b1110,)  # every nonempty set hits y
    up = upper_sharp(const)
    assert up.mates == (0b10, 0b10)  # {y} pulls back to both points


def test_sharp_adjunction_on_injection():
    three = Universe(("x", "y", "z"))
    f = TotalMap(AB, three, (0, 2))
    lo, up = lower_sharp(f), upper_sharp(f)
    assert mrel_leq(delta(AB), kcompose(up, lo))
    assert mrel_leq(kcompose(lo, up), delta(three))


def test_is_monotone():
    assert is_monotone(to_raw(delta(AB)))
    px = powerset_universe(A1)
    assert not is_monotone(Relation(px, Y1, (1, 0)))
    assert is_monotone(Relation(px, Y1, (0, 0)))


def test_is_consequence_examples():
    membership = to_raw(membership_logic(AB).entails)
    assert is_consequence(membership)
    px = powerset_universe(AB)
    assert is_consequence(Relation(px, AB, (0b11,) * 4))
    # {a} entails b but {a,b} does not: weakening fails
    rows = list(membership.rows)
    rows[0b01] |= 0b10
    rows[0b11] &= ~0b10
    assert not is_consequence(Relation(px, AB, tuple(rows)))


def test_is_consequence_matches_oracle():
    px = powerset_universe(AB)
    for raw in enumerate_relations(px, AB):
        assert is_consequence(raw) == naive_is_consequence(raw)


def test_is_monoid():
    assert is_monoid(delta(AB))
    logic = generate(AB, [(AB.subset(["a"]), 1)])
    assert is_monoid(logic.entails)
    # a monotone relation missing a singleton entailment is not a monoid
    broken = MonotoneRelation(AB, AB, (0b1010, 0))
    assert not is_monoid(broken)


def test_generate_is_least():
    rules = [(AB.subset(["a"]), 1)]
    generated = generate(AB, rules)
    px = powerset_universe(AB)
    candidates = [
        raw for raw in enumerate_relations(px, AB)
        if naive_is_consequence(raw) and raw.holds(0b01, 1)
    ]
    meet = [0b11] * 4
    for raw in candidates:
        meet = [m & row for m, row in zip(meet, raw.rows)]
    assert to_raw(generated.entails).rows == tuple(meet)


def test_abstract_logic_validates():
    with pytest.raises(ValueError):
        AbstractLogic(AB, MonotoneRelation(AB, AB, (0b1010, 0)))


def test_profile_identity_map():
    logic = generate(AB, [(AB.subset(["a"]), 1)])
    profile = preserving_profile(TotalMap(AB, AB, (0, 1)), logic, logic)
    assert set(profile.values()) == {True}


def test_profile_inclusion_into_generated():
    source = membership_logic(A1)
    target = generate(AB, [(AB.subset(["a"]), 1)])
    inclusion = TotalMap(A1, AB, (0,))
    profile = preserving_profile(inclusion, source, target)
    assert set(profile.values()) == {True}


def test_profile_collapse_to_point():
    source = membership_logic(AB)  # a and b do not entail one another
    target = membership_logic(Y1)
    collapse = TotalMap(AB, Y1, (0, 0))
    profile = preserving_profile(collapse, source, target)
    assert set(profile.values()) == {True}
    assert not is_conservative(collapse, source, target)


def test_profile_entries_agree_everywhere_small():
    logics1 = [membership_logic(A1), generate(A1, [(A1.subset(), 0)])]
    logics2 = [
        membership_logic(AB),
        generate(AB, [(AB.subset(["a"]), 1)]),
        generate(AB, [(AB.subset(), 0)]),
    ]
    for la, lb in product(logics1 + logics2, repeat=2):
        for f in enumerate_maps(la.carrier, lb.carrier):
            profile = preserving_profile(f, la, lb)
            assert len(set(profile.values())) == 1


def test_conservative_identity_and_collapse():
    logic = generate(AB, [(AB.subset(["a"]), 1)])
    assert is_conservative(TotalMap(AB, AB, (0, 1)), logic, logic)
    assert not is_conservative(
        TotalMap(AB, Y1, (0, 0)), membership_logic(AB), membership_logic(Y1))


def test_preserving_pointwise():
    logic = generate(AB, [(AB.subset(["a"]), 1)])
    backwards = TotalMap(AB, AB, (1, 0))
    # swapping a and b sends {a} |- b to {b} |- a, which fails
    assert not is_preserving(backwards, logic, logic)


def test_from_raw_roundtrip():
    for r in enumerate_monotone_relations(AB, Y1):
        assert from_raw(to_raw(r), AB) == r
