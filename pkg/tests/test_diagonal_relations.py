import random

import pytest

from topogames.diagonal_relations import (
    Relation,
    delta_baire_witness,
    identity_relation,
    is_baire,
    is_delta_baire,
    is_delta_baire_bruteforce,
    minimal_semi_nbhd,
    semi_nbhd_instances,
)
from topogames.finite_topology import (
    FiniteSpace,
    chain,
    discrete,
    indiscrete,
    mask_of,
    partition_space,
    random_space,
    sierpinski,
)

from helpers import assert_delta_witness, spaces_up_to

SIER = sierpinski()
PART = partition_space([[0, 1], [2]])


def test_semi_open_examples():
    p = Relation(SIER, (0b01, 0b11))
    assert p.is_semi_open() and p.is_semi_nbhd()
    q = Relation(SIER, (0b10, 0b11))
    assert not q.is_semi_open()
    assert identity_relation(discrete(3)).is_semi_nbhd()


def test_semi_nbhd_needs_diagonal():
    # rows open but (1,1) missing
    r = Relation(SIER, (0b01, 0b01))
    assert r.is_semi_open()
    assert not r.is_semi_nbhd()


def test_product_closure_examples():
    # Sierpiński, P = {(0,0)}: every minimal box contains (0,0)
    p = Relation(SIER, (0b01, 0b00))
    full = p.product_closure()
    assert full.rows == (0b11, 0b11)
    # discrete space: closure is P itself
    d = discrete(3)
    q = Relation(d, (0b010, 0b101, 0b001))
    assert q.product_closure() == q
    # partition space, minimal semi-nbhd closes to itself
    m = minimal_semi_nbhd(PART)
    assert m.product_closure() == m


def test_minimal_semi_nbhd_examples():
    assert minimal_semi_nbhd(discrete(2)) == identity_relation(discrete(2))
    assert minimal_semi_nbhd(SIER).rows == (0b01, 0b11)
    ind = indiscrete(2)
    assert minimal_semi_nbhd(ind).rows == (0b11, 0b11)


def test_minimal_semi_nbhd_is_least():
    for sp in spaces_up_to(3):
        least = minimal_semi_nbhd(sp)
        for p in semi_nbhd_instances(sp):
            assert least.rowwise_subset_of(p)


def test_delta_baire_witness_examples():
    w = delta_baire_witness(SIER, minimal_semi_nbhd(SIER))
    assert w == 0b01
    assert_delta_witness(SIER, minimal_semi_nbhd(SIER), w)
    w = delta_baire_witness(PART, minimal_semi_nbhd(PART))
    assert w == 0b011
    assert_delta_witness(PART, minimal_semi_nbhd(PART), w)
    d2 = discrete(2)
    assert delta_baire_witness(d2, minimal_semi_nbhd(d2)) == 0b01


def test_witness_rejects_non_semi_nbhd():
    with pytest.raises(ValueError):
        delta_baire_witness(SIER, Relation(SIER, (0b01, 0b01)))


def test_is_delta_baire_examples():
    assert is_delta_baire(SIER)
    for n in range(1, 6):
        from topogames.finite_topology import partition_spaces

        for sp in partition_spaces(n):
            assert is_delta_baire(sp)
    assert is_delta_baire(chain(3))
    assert is_delta_baire_bruteforce(chain(3))


def test_reduction_matches_bruteforce_exhaustive_n3():
    for sp in spaces_up_to(3):
        assert is_delta_baire(sp) == is_delta_baire_bruteforce(sp)


def test_reduction_matches_bruteforce_sampled_n4():
    rng = random.Random(7)
    for _ in range(40):
        sp = random_space(4, rng)
        assert is_delta_baire(sp) == is_delta_baire_bruteforce(sp)


def test_monotone_product_closure_exhaustive_n3():
    for sp in spaces_up_to(2) + [SIER, chain(3), PART]:
        insts = list(semi_nbhd_instances(sp))
        for p in insts:
            cp = p.product_closure()
            for q in insts:
                if p.rowwise_subset_of(q):
                    assert cp.rowwise_subset_of(q.product_closure())


def test_is_baire_examples():
    for sp in spaces_up_to(3):
        assert is_baire(sp)
    assert is_baire(SIER)
    assert not is_baire(FiniteSpace(0, ()))
    assert not is_delta_baire(FiniteSpace(0, ()))


def test_relation_json_round_trip():
    p = Relation(SIER, (0b01, 0b11))
    assert Relation.from_json(p.to_json()) == p


def test_box_disjoint():
    p = minimal_semi_nbhd(SIER)
    assert not p.box_disjoint(0b01, 0b01)
    d = discrete(2)
    assert identity_relation(d).box_disjoint(0b01, 0b10)
