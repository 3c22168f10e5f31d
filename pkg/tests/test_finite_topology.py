import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topogames.finite_topology import (
    BudgetExceededError,
    FiniteSpace,
    chain,
    count_topologies_bruteforce,
    discrete,
    enumerate_spaces,
    indiscrete,
    mask_of,
    partition_space,
    points_of,
    product,
    random_space,
    set_partitions,
    sierpinski,
)

from helpers import spaces_up_to

SIER = sierpinski()
CHAIN3 = chain(3)


def test_axiom_validation():
    with pytest.raises(ValueError):
        FiniteSpace(2, (0b10, 0b11))  # 0 not in its own neighborhood
    with pytest.raises(ValueError):
        FiniteSpace(2, (0b01,))  # row count mismatch
    FiniteSpace(2, (0b01, 0b10))  # discrete, valid


def test_nesting_axiom_rejected():
    # 1 ∈ min_nbhd(0) but min_nbhd(1) ⊄ min_nbhd(0)
    with pytest.raises(ValueError):
        FiniteSpace(3, (0b011, 0b110, 0b100))


def test_is_open_examples():
    assert SIER.is_open(0b01) is True
    assert SIER.is_open(0b10) is False
    assert CHAIN3.is_open(0b011) is True  # union of min_nbhds of 0 and 1


def test_out_of_range_rejected():
    with pytest.raises(ValueError):
        SIER.is_open(0b100)


def test_closure_examples():
    assert SIER.closure(0b01) == 0b11  # min_nbhd(1) = {0,1} meets {0}
    assert SIER.closure(0b10) == 0b10  # min_nbhd(0) = {0} misses {1}
    for sp in (SIER, CHAIN3, discrete(3)):
        assert sp.closure(sp.carrier) == sp.carrier


def test_interior_dense_examples():
    assert SIER.interior(0b10) == 0
    assert SIER.is_dense(0b01) is True
    assert discrete(3).is_dense(0b011) is False


def test_product_examples():
    sq = product(SIER, SIER)
    assert sq.n == 4
    assert sq.min_nbhd[0b11] == 0b1111  # (1,1) -> everything
    assert product(discrete(2), discrete(2)) == discrete(4)
    mixed = product(indiscrete(2), SIER)
    # (x, y) has minimal neighborhood carrier_a × min_nbhd(y)
    assert mixed.min_nbhd[0] == mask_of([0, 2])  # {0,1} × {0}
    assert mixed.min_nbhd[1] == mixed.carrier


def test_regular_partition_examples():
    part = partition_space([[0, 1], [2]])
    assert part.is_regular() is True
    assert part.is_partition() is True
    assert SIER.is_regular() is False
    d = discrete(4)
    assert d.is_regular() and d.is_partition()


def test_regular_iff_partition_small():
    for sp in spaces_up_to(3):
        assert sp.is_regular() == sp.is_partition()


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_spaces(1)) == 1
    assert sum(1 for _ in enumerate_spaces(2)) == 4
    assert sum(1 for _ in enumerate_spaces(3)) == 29


def test_enumerate_matches_bruteforce_census():
    for n in (1, 2, 3):
        assert sum(1 for _ in enumerate_spaces(n)) == count_topologies_bruteforce(n)


def test_enumerate_no_duplicates():
    seen = set(enumerate_spaces(3))
    assert len(seen) == 29


def test_enumerate_budget():
    with pytest.raises(BudgetExceededError):
        list(enumerate_spaces(6))


def test_subspace_examples():
    one, pts = SIER.subspace(0b10)
    assert one.n == 1 and pts == (1,)
    sub, pts = CHAIN3.subspace(0b101)
    assert pts == (0, 2)
    assert sub.min_nbhd == (0b01, 0b11)
    same, pts = CHAIN3.subspace(CHAIN3.carrier)
    assert same == CHAIN3
    with pytest.raises(ValueError):
        SIER.subspace(0)


def test_set_partitions_bell_numbers():
    bell = [1, 1, 2, 5, 15, 52]
    for n in range(6):
        assert sum(1 for _ in set_partitions(n)) == bell[n]


def test_json_round_trip():
    for sp in (SIER, CHAIN3, partition_space([[0, 2], [1]])):
        assert FiniteSpace.from_json(sp.to_json()) == sp


def test_random_space_is_valid_and_seeded():
    a = random_space(4, random.Random(11))
    b = random_space(4, random.Random(11))
    assert a == b  # determinism
    assert isinstance(a, FiniteSpace)


# -- structural properties over enumerated spaces -------------------------


@pytest.mark.parametrize("space", spaces_up_to(3), ids=lambda s: f"n{s.n}-{s.min_nbhd}")
def test_closure_is_kuratowski(space):
    for s in range(1 << space.n):
        c = space.closure(s)
        assert c | s == c  # extensive
        assert space.closure(c) == c  # idempotent
        assert space.interior(s) == space.carrier & ~space.closure(space.carrier & ~s)
        assert space.is_open(s) == (space.interior(s) == s)


def test_interior_closure_duality_exhaustive_n4():
    for space in enumerate_spaces(4):
        for s in range(1 << 4):
            assert space.interior(s) == space.carrier & ~space.closure(space.carrier & ~s)


def test_closure_monotone_sampled_n4():
    rng = random.Random(3)
    for _ in range(30):
        sp = random_space(4, rng)
        s = rng.randrange(1 << 4)
        t = s | rng.randrange(1 << 4)
        assert sp.closure(s) | sp.closure(t) == sp.closure(t)


@pytest.mark.parametrize("space", spaces_up_to(3), ids=lambda s: f"n{s.n}-{s.min_nbhd}")
def test_opens_closed_under_union_intersection(space):
    ops = space.opens()
    for u in ops:
        for v in ops:
            assert space.is_open(u | v)
            assert space.is_open(u & v)


def test_product_closure_factorizes():
    smalls = spaces_up_to(2) + list(enumerate_spaces(3))[:6]
    for a in smalls:
        for b in smalls:
            prod = product(a, b)
            for s in a.opens():
                for t in b.opens():
                    box = 0
                    for p in points_of(s):
                        box |= t << (p * b.n)
                    cs, ct = a.closure(s), b.closure(t)
                    expect = 0
                    for p in points_of(cs):
                        expect |= ct << (p * b.n)
                    assert prod.closure(box) == expect


@given(st.integers(min_value=1, max_value=4), st.randoms(use_true_random=False))
def test_random_space_axioms_hold(n, rnd):
    sp = random_space(n, rnd)
    # FiniteSpace.__post_init__ validates; also closure of a point set behaves
    s = rnd.randrange(1 << n)
    assert sp.closure(s) | s == sp.closure(s)
