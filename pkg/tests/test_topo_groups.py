import pytest

from topogames.diagonal_relations import identity_relation
from topogames.finite_topology import (
    FiniteSpace,
    discrete,
    enumerate_spaces,
    indiscrete,
    mask_of,
    partition_space,
)
from topogames.topo_groups import (
    Classification,
    FiniteTopoGroup,
    classify,
    cyclic_table,
    groups_of_order,
    i_relation,
    inverse_continuity_witness,
    klein_table,
    s3_table,
    theorem1_harness,
)


def z(n, space=None):
    return FiniteTopoGroup.build(cyclic_table(n), space or indiscrete(n))


def test_table_validation():
    with pytest.raises(ValueError):
        FiniteTopoGroup.build([[0, 1], [1, 1]], discrete(2))
    # Z3 with wrong-size space
    with pytest.raises(ValueError):
        FiniteTopoGroup.build(cyclic_table(3), discrete(2))


def test_classify_examples():
    assert classify(z(3)) == Classification(True, True, True)
    # Z4 with the partition topology by the subgroup {0,2}
    part = partition_space([[0, 2], [1, 3]])
    assert classify(z(4, part)) == Classification(True, True, True)
    # Z4 with opens {∅, {0}, carrier}: translation by 1 breaks continuity
    space = FiniteSpace(4, (0b0001, 0b1111, 0b1111, 0b1111))
    cls = classify(z(4, space))
    assert not cls.semitopological and not cls.paratopological


def test_classify_monotone_and_matches_preimage_definition():
    spaces = list(enumerate_spaces(3))
    for table in groups_of_order(3):
        for sp in spaces:
            g = FiniteTopoGroup.build(table, sp)
            cls = classify(g)
            assert (not cls.topological or cls.paratopological)
            assert (not cls.paratopological or cls.semitopological)
            # oracle: translations continuous iff preimages of opens are open
            semi_def = True
            for a in range(g.order):
                for u in sp.opens():
                    pre_l = mask_of(x for x in range(g.order) if (u >> g.mul(a, x)) & 1)
                    pre_r = mask_of(x for x in range(g.order) if (u >> g.mul(x, a)) & 1)
                    if not sp.is_open(pre_l) or not sp.is_open(pre_r):
                        semi_def = False
            assert cls.semitopological == semi_def


def test_translation_invariance_of_semitopological_instances():
    for table in groups_of_order(4):
        for sp in enumerate_spaces(4):
            g = FiniteTopoGroup.build(table, sp)
            if classify(g).semitopological:
                base = sp.min_nbhd[g.identity]
                for a in range(g.order):
                    assert sp.min_nbhd[a] == g.left_translate(a, base)


def test_i_relation_examples():
    g3 = z(3)
    rel = i_relation(g3, mask_of([0, 1]))
    assert rel.rows[2] == mask_of([2, 0])
    assert i_relation(g3, 1 << g3.identity) == identity_relation(g3.space)
    # open V ∋ e on a semitopological instance gives a semi-neighborhood
    part = partition_space([[0, 2], [1, 3]])
    g4 = z(4, part)
    for v in part.nonempty_opens():
        if (v >> g4.identity) & 1:
            assert i_relation(g4, v).is_semi_nbhd()


def test_i_relation_semi_nbhd_on_semitopological_order3():
    for table in groups_of_order(3):
        for sp in enumerate_spaces(3):
            g = FiniteTopoGroup.build(table, sp)
            if not classify(g).semitopological:
                continue
            e = g.identity
            for v in sp.nonempty_opens():
                if (v >> e) & 1:
                    assert i_relation(g, v).is_semi_nbhd()


def test_inverse_continuity_witness_examples():
    part = partition_space([[0, 2], [1, 3]])
    wit = inverse_continuity_witness(z(4, part), mask_of([0, 2]))
    assert wit.p == mask_of([0, 2])
    g = z(5, discrete(5))
    wit = inverse_continuity_witness(g, 1 << g.identity)
    assert wit.p == 1 << g.identity
    klein = FiniteTopoGroup.build(klein_table(), indiscrete(4))
    wit = inverse_continuity_witness(klein, klein.space.carrier)
    assert wit.p == klein.space.carrier


def test_witness_contract_on_all_paratopological_order3():
    for table in groups_of_order(3):
        for sp in enumerate_spaces(3):
            g = FiniteTopoGroup.build(table, sp)
            if not classify(g).paratopological:
                continue
            e = g.identity
            for u in sp.nonempty_opens():
                if not (u >> e) & 1:
                    continue
                wit = inverse_continuity_witness(g, u)
                p, u_inv = wit.p, g.set_inverse(u)
                assert g.set_inverse(p) == p
                assert p | (u & u_inv) == (u & u_inv)


def test_witness_rejects_bad_u():
    g = z(4, partition_space([[0, 2], [1, 3]]))
    with pytest.raises(ValueError):
        inverse_continuity_witness(g, mask_of([1, 3]))  # e not inside


def test_harness_small():
    report = theorem1_harness(3)
    assert report.violations == []
    assert report.paratopological_all_topological
    # order 1: exactly one instance, and it is topological
    assert report.per_order[1] == {
        "instances": 1,
        "paratopological": 1,
        "topological": 1,
    }
    assert report.per_order[2]["instances"] == 4
    assert report.per_order[3]["instances"] == 29


def test_labeled_group_census_counts():
    # labeled tables with identity 0: Z2 ->1, Z3 -> 1, order 4 -> 4 (3 relabelings
    # of Z4 plus the Klein table)
    assert len(groups_of_order(2, all_labeled=True)) == 1
    assert len(groups_of_order(3, all_labeled=True)) == 1
    assert len(groups_of_order(4, all_labeled=True)) == 4


def test_s3_is_a_group():
    g = FiniteTopoGroup.build(s3_table(), indiscrete(6))
    assert classify(g).topological


def test_json_round_trip():
    g = z(4, partition_space([[0, 2], [1, 3]]))
    assert FiniteTopoGroup.from_json(g.to_json()) == g
