from __future__ import annotations

import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiprob.errors import AllImpossible, ImpossibleEvidence, InvalidPartition, NotNormalized, SpaceMismatch
from quasiprob.measure import PartitionMeasure, QuasiMeasure, WorldSpace, extend, normalize, validate
from quasiprob.proplang import enumerate_worlds, eval_event
from quasiprob.valuation import CUMULATIVE_Z, RANKING_Z, REAL, MassValue, RankValue

import oracles

C = CUMULATIVE_Z.value


@pytest.fixture
def running():
    space = enumerate_worlds(["p", "q"])
    table = {"pq": C(0, "0.6"), "p!q": C(0, "0.4"), "!pq": C(1, 1), "!p!q": C(2, "0.5")}
    return QuasiMeasure(CUMULATIVE_Z, space, [table[w] for w in space.worlds], normalized=True)


def ev(m, text):
    return eval_event(text, m.space)


# -- spaces and events ---------------------------------------------------------


def test_world_space_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        WorldSpace(("a", "a"))
    with pytest.raises(ValueError):
        WorldSpace(())


def test_event_algebra():
    s = WorldSpace(("a", "b", "c"))
    A, B = s.event(["a", "b"]), s.event(["b", "c"])
    assert (A & B).worlds() == ["b"]
    assert (A | B) == s.full
    assert (~A).worlds() == ["c"]
    assert (A - B).worlds() == ["a"]
    assert s.event(["a"]) <= A and not A <= B
    assert len(A) == 2 and not s.empty


def test_events_from_other_space_are_rejected(running):
    other = WorldSpace(("x", "y"))
    with pytest.raises(SpaceMismatch):
        running.measure_of(other.full)
    with pytest.raises(SpaceMismatch):
        other.event(["nope"])


# -- measure_of ------------------------------------------------------------


def test_measure_of_examples(running):
    assert running.measure_of(ev(running, "p")) == CUMULATIVE_Z.e
    assert running.measure_of(running.space.empty) == CUMULATIVE_Z.n
    assert running.measure_of(ev(running, "q")) == C(0, "0.6")
    assert running.measure_of(running.space.full) == CUMULATIVE_Z.e


def test_measure_of_agrees_with_one_pass_oracle(running):
    table = [oracles.to_pair(v) for v in running.values]
    for A in running.space.events():
        assert oracles.to_pair(running.measure_of(A)) == oracles.cum_value(table, A.mask)


# -- conditional -----------------------------------------------------------------


def test_conditional_examples(running):
    assert running.conditional(ev(running, "q"), ev(running, "!p")) == CUMULATIVE_Z.e
    for A in running.space.events():
        assert running.conditional(A, running.space.full) == running.measure_of(A)
        assert running.conditional(A, running.space.empty) == CUMULATIVE_Z.n


def test_conditional_on_impossible_event_is_n():
    s = WorldSpace(("a", "b"))
    m = QuasiMeasure(CUMULATIVE_Z, s, [CUMULATIVE_Z.e, CUMULATIVE_Z.n])
    assert m.conditional(s.full, s.event(["b"])) == CUMULATIVE_Z.n


def test_chain_rule_and_monotony(running):
    alg = running.algebra
    for A, B in itertools.product(running.space.events(), repeat=2):
        ra, rb = running.measure_of(A), running.measure_of(B)
        if rb != alg.n:
            assert running.measure_of(A & B) == alg.mul(rb, running.conditional(A, B))
        if A <= B:
            assert alg.le(ra, rb)
        assert alg.le(alg.n, ra) and alg.le(ra, alg.e)


# -- conditionalize ----------------------------------------------------------------


def test_conditionalize_example(running):
    c = running.conditionalize(ev(running, "!p"))
    assert c.table == {"!p!q": C(1, "0.5"), "!pq": C(0, 1), "p!q": CUMULATIVE_Z.n, "pq": CUMULATIVE_Z.n}


def test_conditionalize_on_full_space_is_identity(running):
    assert running.conditionalize(running.space.full) == running


def test_conditionalize_uniform_real():
    s = WorldSpace(("a", "b", "c", "d"))
    m = QuasiMeasure(REAL, s, [MassValue(F(1, 4))] * 4)
    c = m.conditionalize(s.event(["a", "c"]))
    assert [v.m for v in c.values] == [F(1, 2), 0, F(1, 2), 0]


def test_conditionalize_impossible_raises(running):
    with pytest.raises(ImpossibleEvidence):
        running.conditionalize(running.space.empty)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), k=st.integers(1, 5))
def test_conditionalize_matches_conditional(seed, k):
    rng = random.Random(seed)
    table = oracles.random_cumulative_table(k, rng)
    m = QuasiMeasure(CUMULATIVE_Z, WorldSpace(tuple(f"w{i}" for i in range(k))), oracles.to_values(table))
    for B in m.space.events():
        if m.measure_of(B) == CUMULATIVE_Z.n:
            continue
        c = m.conditionalize(B)
        assert validate(c).ok
        for X in m.space.events():
            got = c.measure_of(X)
            assert got == m.conditional(X, B)
            assert oracles.to_pair(got) == oracles.cum_conditional(table, X.mask, B.mask)


# -- independence ------------------------------------------------------------------


def test_independence_product_measure():
    space = enumerate_worlds(["p", "q"])
    masses = {"pq": "0.42", "p!q": "0.18", "!pq": "0.28", "!p!q": "0.12"}
    m = QuasiMeasure(CUMULATIVE_Z, space, [C(0, masses[w]) for w in space.worlds], normalized=True)
    assert m.independent([ev(m, "p"), ev(m, "q")])
    assert not m.independent([ev(m, "p"), ev(m, "p & q")])


def test_single_event_is_always_independent(running):
    for A, B in itertools.product(running.space.events(), repeat=2):
        if running.measure_of(B) != CUMULATIVE_Z.n:
            assert running.independent([A], B)


def test_independence_on_running_table(running):
    # R(p & q) = (0, 3/5) and R(p) o R(q) = (0, 1) o (0, 3/5) = (0, 3/5): independent
    table = [oracles.to_pair(v) for v in running.values]
    p, q = ev(running, "p"), ev(running, "q")
    lhs = oracles.cum_value(table, p.mask & q.mask)
    rhs = oracles.cum_product([oracles.cum_value(table, p.mask), oracles.cum_value(table, q.mask)])
    assert lhs == rhs == (0, F(3, 5))
    assert running.independent([p, q])
    # given !p, q and !q are exclusive yet both possible, so they are dependent
    assert running.dependence_witness([q, ~q], ev(running, "!p")) == (0, 1)


def test_independence_errors(running):
    with pytest.raises(ImpossibleEvidence):
        running.independent([running.space.full], running.space.empty)
    with pytest.raises(ValueError):
        running.independent([running.space.full] * 11)


# -- normalize ---------------------------------------------------------------------------


def test_normalize_examples():
    m = normalize(CUMULATIVE_Z, {"a": C(0, 2), "b": C(0, 2)})
    assert m.table == {"a": C(0, "0.5"), "b": C(0, "0.5")}
    m = normalize(CUMULATIVE_Z, {"a": C(1, 3), "b": C(2, 6)})
    assert m.table == {"a": C(0, 1), "b": C(1, 2)}
    assert CUMULATIVE_Z.solve_mul(C(1, 3), C(2, 6)) == C(1, 2)


def test_normalize_fixed_point(running):
    assert normalize(CUMULATIVE_Z, running) == running


def test_normalize_all_impossible():
    with pytest.raises(AllImpossible):
        normalize(CUMULATIVE_Z, {"a": CUMULATIVE_Z.n})


# -- validate ----------------------------------------------------------------------------


def test_validate_running(running):
    assert validate(running).ok


def test_validate_flags_bad_total():
    m = QuasiMeasure.from_table(CUMULATIVE_Z, {"a": C(0, "0.5"), "b": C(0, "0.4")})
    report = validate(m)
    assert not report.ok
    assert not report["normalization"].passed
    with pytest.raises(NotNormalized):
        QuasiMeasure.from_table(CUMULATIVE_Z, {"a": C(0, "0.5")}, normalized=True)


def test_validate_with_impossible_world():
    m = QuasiMeasure.from_table(CUMULATIVE_Z, {"a": C(0, 1), "b": CUMULATIVE_Z.n, "c": C(3, 2)})
    assert validate(m).ok
    assert m.measure_of(m.space.event(["b"])) == CUMULATIVE_Z.n


def test_validate_samples_large_spaces():
    space = enumerate_worlds([f"a{i}" for i in range(8)])
    values = [C(0, 1)] + [C(2, 1)] * (len(space) - 1)
    report = validate(QuasiMeasure(CUMULATIVE_Z, space, values), pairs=50)
    assert report.ok
    assert report["finite additivity"].checked == 50


# -- extension -----------------------------------------------------------------------------


@pytest.fixture
def four():
    s = WorldSpace(("1", "2", "3", "4"))
    return PartitionMeasure.from_blocks(RANKING_Z, s, [(["1", "2"], RankValue(0)), (["3", "4"], RankValue(1))])


def test_extend_example(four):
    m = extend(four)
    assert m.measure_of(m.space.event(["1", "3"])) == RankValue(0)
    assert m.measure_of(m.space.event(["3"])) == RankValue(1)


def test_extend_single_block():
    s = WorldSpace(("a", "b", "c"))
    pm = PartitionMeasure.from_blocks(RANKING_Z, s, [(["a", "b", "c"], RankValue(0))])
    m = extend(pm)
    for A in s.events():
        if A:
            assert m.measure_of(A) == RANKING_Z.e


def test_extend_agrees_on_block_unions(four):
    m = extend(four)
    for r in range(len(four.blocks) + 1):
        for which in itertools.combinations(range(len(four.blocks)), r):
            union = m.space.empty
            for j in which:
                union = union | four.blocks[j]
            assert m.measure_of(union) == four.value_of_union(which)


@pytest.mark.parametrize(
    "blocks",
    [
        [(["1", "2"], RankValue(0)), (["2", "3", "4"], RankValue(1))],  # overlap
        [(["1", "2"], RankValue(0))],  # no cover
        [(["1", "2"], RankValue(1)), (["3", "4"], RankValue(2))],  # not normalized
    ],
)
def test_partition_validation(blocks):
    s = WorldSpace(("1", "2", "3", "4"))
    with pytest.raises(InvalidPartition):
        PartitionMeasure.from_blocks(RANKING_Z, s, blocks)


def test_partition_needs_ranking_algebra():
    s = WorldSpace(("a",))
    with pytest.raises(InvalidPartition):
        PartitionMeasure(CUMULATIVE_Z, s, (s.full,), (CUMULATIVE_Z.e,))


def test_extension_is_inf_over_covers(four):
    # independent oracle: minimum plausibility over block unions covering A
    m = extend(four)
    blocks = four.blocks
    for A in m.space.events():
        best = None
        for r in range(len(blocks) + 1):
            for which in itertools.combinations(range(len(blocks)), r):
                cover = 0
                for j in which:
                    cover |= blocks[j].mask
                if A.mask & ~cover == 0:
                    val = four.value_of_union(which)
                    best = val if best is None else RANKING_Z.min(best, val)
        assert m.measure_of(A) == best
