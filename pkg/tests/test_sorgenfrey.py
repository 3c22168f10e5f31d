import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topogames import games
from topogames.sorgenfrey import (
    P_UNIT,
    InversionWitness,
    NotAWitnessCase,
    SInterval,
    SorgenfreyBackend,
    Strip,
    WHOLE_LINE,
    box_meets_strip,
    delta_baire_failure_witness,
    i_strip,
    in_strip_closure_by_boxes,
    interval,
    interval_closure,
    inversion_discontinuity_witness,
    rat,
    strip_closure,
    theorem2_beta_strategy_sorgenfrey,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=64)


def test_interval_invariant():
    with pytest.raises(ValueError):
        interval(1, 1)
    with pytest.raises(ValueError):
        interval("3/2", "1/2")


def test_interval_closure_examples():
    for lo, hi in ((0, 1), (-1, 0)):
        closed, trace = interval_closure(interval(lo, hi))
        assert closed == interval(lo, hi)
        assert any("closure" in line for line in trace)


def test_strip_closure_examples():
    closed = strip_closure(i_strip(interval(0, 1)))
    assert closed == Strip(rat(0), rat(1), closed_right=True)
    assert closed.contains(0, 1)  # the y-x = 1 boundary joins
    assert not closed.contains("1/2", "1/4")
    with pytest.raises(ValueError):
        strip_closure(closed)


def test_strip_membership_vs_box_oracle_near_boundary():
    rng = random.Random(99)
    s = i_strip(interval(0, 1))
    closed = strip_closure(s)
    for _ in range(1000):
        x = Fraction(rng.randrange(-400, 400), rng.randrange(1, 64))
        # concentrate near the boundary lines y-x = 0 and y-x = 1
        offset = Fraction(rng.randrange(-8, 10), rng.randrange(32, 4096))
        y = x + rng.choice((rat(0), rat(1))) + offset
        assert closed.contains(x, y) == in_strip_closure_by_boxes(x, y, s)


def test_box_meets_strip_rejects_degenerate_boxes():
    with pytest.raises(ValueError):
        box_meets_strip(rat(0), rat(0), rat(0), rat(1), P_UNIT)


def test_inversion_witness_examples():
    wit = inversion_discontinuity_witness(interval(0, 1))
    assert isinstance(wit, InversionWitness)
    assert wit.counterexample("1/2") == rat("1/4")
    assert wit.counterexample(2) == rat(1)
    sym = inversion_discontinuity_witness(interval(-1, 1))
    assert isinstance(sym, NotAWitnessCase)
    with pytest.raises(ValueError):
        inversion_discontinuity_witness(interval(1, 2))


def test_delta_baire_failure_examples():
    assert delta_baire_failure_witness(interval(0, 1)) == (rat("3/4"), rat("1/4"))
    assert delta_baire_failure_witness(interval(-2, -1)) == (rat("-5/4"), rat("-7/4"))


@given(rationals, st.fractions(min_value="1/64", max_value=20, max_denominator=64))
def test_delta_baire_failure_property(a, width):
    w = SInterval(a, a + width)
    x, y = delta_baire_failure_witness(w)
    assert w.contains(x) and w.contains(y)
    assert y - x == -width / 2
    assert not strip_closure(P_UNIT).contains(x, y)


@given(st.fractions(min_value="1/100", max_value=30, max_denominator=128))
def test_inversion_witness_property(r):
    wit = inversion_discontinuity_witness(SInterval(rat(0), r))
    for eps in (r / 3, r, 2 * r):
        c = wit.counterexample(eps)
        assert rat(0) <= c < eps
        assert not wit.u.contains(-c)


def test_theorem2_first_split():
    strat = theorem2_beta_strategy_sorgenfrey(interval(0, 1))
    be = SorgenfreyBackend()
    play = games.Play(backend=be, kind=games.OD)
    mv = strat.move(play)
    assert mv.v == interval("1/2", 1)
    assert mv.w == interval(0, "1/2")


def test_theorem2_fifty_rounds_against_copy():
    be = SorgenfreyBackend()
    strat = theorem2_beta_strategy_sorgenfrey(interval(0, 1))
    play = games.referee_run(be, games.OD, strat, games.CopyAlpha(), horizon=50)
    assert len(play.rounds) == 50
    for k, rnd in enumerate(play.rounds):
        assert P_UNIT.box_disjoint(rnd.v, rnd.w)
        c = play.constraint_before(k)
        if c is not WHOLE_LINE:
            assert rnd.v.is_subset_of(c)
    verdict = games.evaluate(play, "b")
    assert verdict.winner == games.BETA
    assert games.check_certificate(play, "b", verdict.certificate)


def test_theorem2_against_random_alphas():
    be = SorgenfreyBackend()
    for seed in range(20):
        strat = theorem2_beta_strategy_sorgenfrey()
        alpha = games.random_strategy(be, seed, games.ALPHA, games.OD)
        play = games.referee_run(be, games.OD, strat, alpha, horizon=50)
        assert games.evaluate(play, "b").winner == games.BETA


def test_differences_of_split_are_negative():
    # w - v for w ∈ W₀ = [0,1/2), v ∈ V₀ = [1/2,1) lie in (-1, 0)
    v, w = interval("1/2", 1), interval(0, "1/2")
    assert P_UNIT.box_disjoint(v, w)
    lo, hi = w.a - v.b, w.b - v.a
    assert lo == rat(-1) and hi == rat(0)


def test_backend_serialization_and_subset():
    be = SorgenfreyBackend()
    s = interval("1/3", "2/3")
    assert SInterval.from_json(s.to_json()) == s
    assert be.is_subset(s, interval(0, 1))
    assert not be.is_subset(interval(0, 1), s)
    assert be.is_subset(s, WHOLE_LINE)
    assert be.illegal_reason(WHOLE_LINE)
    assert be.illegal_reason(0b11)
    assert be.illegal_reason(s) is None


def test_strip_json_round_trip():
    s = Strip(rat("-1/2"), rat("3/2"), closed_right=True)
    assert Strip.from_json(s.to_json()) == s
