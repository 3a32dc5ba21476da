import pytest

from ulog import monotone
from ulog.core import Universe
from ulog.laws import (
    LAWS,
    SuiteConfig,
    count_antichains,
    count_logics,
    count_upsets,
    enumerate_logics,
    law_ids,
    moore_families,
    moore_table,
    run_law,
    run_suite,
    sample_logic,
)

QUICK = SuiteConfig(samples=25)


def test_registry_size_and_ids():
    ids = law_ids()
    assert len(ids) == len(set(ids)) >= 25
    modules = {law_id.split(".")[0] for law_id in ids}
    assert {"rel", "plift", "mrel", "closure", "coalg"} <= modules


def test_suite_determinism():
    config = SuiteConfig(samples=10, seed=12345)
    assert run_suite(config).render() == run_suite(config).render()


def test_seed_changes_sampled_cases_not_verdict():
    a = run_suite(SuiteConfig(samples=5, seed=1))
    b = run_suite(SuiteConfig(samples=5, seed=2))
    assert a.ok and b.ok


def test_full_suite_passes_quick():
    report = run_suite(QUICK)
    failures = [r.line() for r in report.results if not r.ok]
    assert not failures, failures
    assert report.total_cases >= 10_000


def test_line_format():
    result = run_law("closure.operator_count", QUICK)
    assert result.line() == f"LAW closure.operator_count {result.cases} pass"


def test_unknown_law():
    with pytest.raises(KeyError):
        run_law("nope.nothing", QUICK)


def test_counts_and_oracles():
    assert [count_upsets(n) for n in range(5)] == [2, 3, 6, 20, 168]
    assert [count_antichains(n) for n in range(5)] == [2, 3, 6, 20, 168]
    assert [count_logics(n) for n in range(4)] == [1, 2, 7, 61]
    assert [len(moore_families(n)) for n in range(4)] == [1, 2, 7, 61]


def test_moore_tables_match_enumeration():
    from ulog.closure import operator_of

    for n in range(3):
        carrier = Universe.of_size(n)
        tables = {operator_of(logic).table for logic in enumerate_logics(carrier)}
        assert tables == {moore_table(fam, n) for fam in moore_families(n)}


def test_sample_logic_is_always_a_logic():
    import random

    rng = random.Random(7)
    carrier = Universe.of_size(3)
    for _ in range(50):
        logic = sample_logic(rng, carrier)
        assert monotone.is_consequence(monotone.to_raw(logic.entails))


def test_mutated_composition_is_caught(monkeypatch):
    # drop the empty premise set from every composite: a removal-only
    # corruption that cannot crash validation but must break agreement
    real = monotone.kcompose

    def corrupted(s, r):
        out = real(s, r)
        if out.source.size == 0:
            return out
        mates = tuple(m & ~1 for m in out.mates)
        return monotone.MonotoneRelation(out.source, out.target, mates)

    monkeypatch.setattr(monotone, "kcompose", corrupted)
    result = run_law("mrel.kleisli_agreement", QUICK)
    assert not result.ok
    assert result.failure is not None and result.failure.witness


def test_crashing_law_reports_failure(monkeypatch):
    def explode(s, r):
        raise RuntimeError("boom")

    monkeypatch.setattr(monotone, "kcompose", explode)
    result = run_law("mrel.kleisli_agreement", QUICK)
    assert not result.ok
    assert "boom" in result.line()


def test_every_law_counts_cases():
    report = run_suite(SuiteConfig(samples=2))
    assert all(r.cases > 0 for r in report.results)
    assert len(report.results) == len(LAWS)
