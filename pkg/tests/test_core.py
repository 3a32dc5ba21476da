import pytest
from hypothesis import given, strategies as st

from ulog.core import (
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
    up_close_mask,
    up_closure,
    upset_masks,
)


def naive_up_closure(members: set[int], n: int) -> set[int]:
    # independent oracle: add every superset of every member
    out = set()
    for s in members:
        for t in range(1 << n):
            if s & ~t == 0:
                out.add(t)
    return out


ABC = Universe(("a", "b", "c"))
AB = Universe(("a", "b"))


def test_powerset_universe_sizes():
    assert powerset_universe(Universe(())).size == 1
    assert powerset_universe(AB).labels == ("{}", "{a}", "{b}", "{a,b}")
    assert powerset_universe(ABC).size == 8


def test_powerset_universe_cap():
    with pytest.raises(CapExceededError):
        powerset_universe(Universe.of_size(HARD_CAP + 1))


def test_up_closure_examples():
    assert up_closure(Family(AB, 0)).mask == 0
    singleton_a = Family(AB, 1 << 0b01)
    assert up_closure(singleton_a).members() == (AB.subset(["a"]), AB.subset(["a", "b"]))
    fam = Family(ABC, (1 << 0b001) | (1 << 0b110))  # {a} and {b,c}
    expected = naive_up_closure({0b001, 0b110}, 3)
    assert expected == {0b001, 0b011, 0b101, 0b111, 0b110}
    assert up_closure(fam).mask == sum(1 << s for s in expected)


@given(st.integers(min_value=0, max_value=2**16 - 1))
def test_up_closure_matches_oracle_n4(fam):
    members = {s for s in range(16) if fam >> s & 1}
    closed = up_close_mask(fam, 4)
    assert {s for s in range(16) if closed >> s & 1} == naive_up_closure(members, 4)


def test_upset_counts():
    assert [len(upset_masks(n)) for n in range(6)] == [2, 3, 6, 20, 168, 7581]
    with pytest.raises(CapExceededError):
        upset_masks(6)


def test_upsets_are_exactly_fixpoints():
    for n in range(4):
        fixed = [fam for fam in range(1 << (1 << n)) if up_close_mask(fam, n) == fam]
        assert list(upset_masks(n)) == fixed


def test_enumerate_upsets_canonical_order():
    families = enumerate_upsets(AB)
    assert [f.mask for f in families] == sorted(f.mask for f in families)
    assert all(isinstance(f, UpSet) for f in families)


def test_upset_rejects_non_up_closed():
    with pytest.raises(ValueError):
        UpSet(AB, 1)  # the family {{}} misses its supersets


def test_subset_algebra():
    a = AB.subset(["a"])
    ab = AB.subset(["a", "b"])
    empty = AB.subset()
    assert a.union(empty) == a
    assert a.is_subset_of(ab)
    assert a.complement() == AB.subset(["b"])
    assert (a | AB.subset(["b"])) == ab
    assert str(a) == "{a}"


def test_subset_universe_mismatch():
    with pytest.raises(UniverseMismatchError):
        AB.subset(["a"]).union(ABC.subset(["a"]))


@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7))
def test_subset_lattice_laws(x, y, z):
    a, b, c = (Subset(ABC, m) for m in (x, y, z))
    assert a.union(b) == b.union(a)
    assert a.intersection(b.union(c)) == a.intersection(b).union(a.intersection(c))
    assert a.is_subset_of(a.union(b))


def test_enumerate_subsets_bijection():
    for n in range(5):
        subsets = enumerate_subsets(Universe.of_size(n))
        assert [s.mask for s in subsets] == list(range(1 << n))


def test_family_membership():
    fam = Family(AB, 0b1010)
    assert fam.contains(AB.subset(["a"]))
    assert not fam.contains(AB.subset())
    assert str(fam) == "{{a},{a,b}}"


def test_family_cap():
    big = Universe.of_size(HARD_CAP + 1)
    with pytest.raises(CapExceededError):
        Family(big, 0)


def test_universe_label_validation():
    with pytest.raises(ValueError):
        Universe(("a", "a"))
    with pytest.raises(ValueError):
        AB.index("missing")


def test_total_map_validation():
    with pytest.raises(ValueError):
        TotalMap(AB, AB, (0,))
    with pytest.raises(ValueError):
        TotalMap(AB, AB, (0, 5))
    f = TotalMap(AB, ABC, (2, 0))
    assert f.image_mask(0b11) == 0b101
    assert f.preimage_mask(0b100) == 0b01


def test_empty_universe_is_legal():
    empty = Universe(())
    assert powerset_universe(empty).labels == ("{}",)
    assert [f.mask for f in enumerate_upsets(empty)] == [0, 1]
    assert enumerate_subsets(empty)[0].mask == 0
