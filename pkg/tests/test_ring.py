"""Cup product ring: classes, relations, presentation, characteristic 2."""

import pytest

from hhext.exactla import GF, QQ
from hhext.ring import (
    CochainVector,
    CohomologyError,
    apply_differential,
    char2_ring_check,
    class_representative,
    classes_equal,
    cohomology_basis,
    cup,
    deg0_generator,
    deg1_generator,
    deg2_generator,
    evaluate_word,
    is_cocycle,
    presentation_audit,
    presentation_count,
    presentation_normal_forms,
    ring_relations_hold,
    unit_class,
    verify_associativity,
    verify_cohomology_basis,
    verify_graded_commutativity,
    verify_ring_relations,
    verify_unital,
)


def test_cup_single_terms():
    a = deg1_generator(2, QQ, 1, 1)
    b = deg1_generator(2, QQ, 2, 1)
    prod = cup(a, b)
    assert prod.terms == {((1, 2), (2, 0)): QQ.one}
    # swapping the monomials flips the sign
    assert cup(b, a).terms == {((1, 2), (2, 0)): QQ.of(-1)}
    # a repeated generator dies
    assert cup(a, a).is_zero()


def test_unit_class():
    one = unit_class(3, QQ)
    g = deg2_generator(3, QQ, 1, 3)
    assert cup(one, g) == g and cup(g, one) == g
    assert verify_unital(2, QQ, 3)


def test_cocycle_detection():
    """Parity-pure terms are cocycles; a lone impure term is not."""
    assert is_cocycle(deg1_generator(2, QQ, 1, 2))
    impure = CochainVector(2, 1, QQ, {((), (1, 0)): QQ.one})
    assert not is_cocycle(impure)


def test_class_representative_strips_coboundary():
    """Adding a coboundary must not change the canonical representative."""
    v = deg1_generator(2, QQ, 1, 1)
    source = CochainVector(2, 0, QQ, {((1,), (0, 0)): QQ.one})
    cob = apply_differential(source)
    assert not cob.is_zero()
    shifted = v.add(cob)
    rep = class_representative(shifted)
    assert rep == v
    assert classes_equal(shifted, v)


def test_class_representative_rejects_non_cocycle():
    impure = CochainVector(2, 1, QQ, {((), (1, 0)): QQ.one})
    with pytest.raises(CohomologyError):
        class_representative(impure)


def test_cohomology_basis_counts():
    assert [len(cohomology_basis(2, m, QQ)) for m in range(4)] == [2, 4, 6, 8]
    assert [len(cohomology_basis(3, m, QQ)) for m in range(4)] == [5, 12, 24, 40]
    with pytest.raises(ValueError):
        cohomology_basis(2, 1, GF(2))


def test_cohomology_basis_independent():
    for n in (2, 3):
        for m in range(4):
            assert verify_cohomology_basis(n, m, QQ)


def test_degree_zero_basis_is_center():
    keys = [next(iter(v.terms))[0] for v in cohomology_basis(3, 0, QQ)]
    assert keys == [(), (1, 2), (1, 3), (2, 3), (1, 2, 3)]


def test_generator_validation():
    with pytest.raises(ValueError):
        deg0_generator(3, QQ, 2, 2)
    with pytest.raises(ValueError):
        deg2_generator(3, QQ, 3, 1)
    with pytest.raises(ValueError):
        deg1_generator(3, QQ, 0, 1)


def test_relation_families_all_hold():
    for n in (2, 3):
        assert ring_relations_hold(n, QQ)
    assert ring_relations_hold(2, GF(5))


def test_relation_instance_counts_n2():
    recs = verify_ring_relations(2, QQ)
    assert sum(r["instances"] for r in recs) == 78
    assert all(not r["failures"] for r in recs)
    by_id = {r["family"]: r["instances"] for r in recs}
    # one generator pair exists at n=2, so the overlap family is maximal
    assert by_id["deg00.1"] == 1
    assert by_id["deg00.2"] == 1
    assert by_id["deg11.1"] == 8


def test_graded_commutativity_and_associativity():
    assert verify_graded_commutativity(2, QQ, 4)
    assert verify_associativity(2, QQ, 4)
    assert verify_graded_commutativity(3, QQ, 3)
    assert verify_associativity(3, QQ, 3)


def test_specific_anticommutation():
    """Odd classes anticommute: both orders of two degree-1 classes."""
    a = deg1_generator(3, QQ, 1, 2)
    b = deg1_generator(3, QQ, 3, 1)
    assert cup(a, b) == cup(b, a).scale(-1)


def test_presentation_normal_forms_small():
    # degree 0: even chains only; n=2 has the empty chain and (1, 2)
    words = presentation_normal_forms(2, 0)
    assert words == [(), ((0, (1, 2)),)]
    # degree 1: one degree-1 letter, chain of size 1
    words = presentation_normal_forms(2, 1)
    assert ((1, (1, 1)),) in words and ((1, (2, 2)),) in words
    assert len(words) == presentation_count(2, 1) == 4


def test_presentation_counts_match_dims():
    for n in (2, 4):
        for d in range(5):
            assert presentation_count(n, d) == len(cohomology_basis(n, d, QQ))


def test_presentation_strict_reading_undercounts():
    assert presentation_count(3, 1, min_index=2) == 6
    assert presentation_count(2, 0, min_index=2) == 1


def test_presentation_audit_flags_odd_n_degree_zero():
    records = presentation_audit(3, 2, QQ)
    deg0 = records[0]
    assert deg0["count"] == 4 and deg0["expected"] == 5
    assert not deg0["matches"]
    assert deg0["evaluations_independent"]
    assert records[1]["matches"] and records[2]["matches"]


def test_evaluate_word():
    word = ((0, (1, 2)), (2, (1, 1)))
    val = evaluate_word(2, QQ, word)
    assert val.terms == {((1, 2), (2, 0)): QQ.one}
    assert val.m == 2


def test_char2_ring_structure():
    for n in (2, 3):
        rep = char2_ring_check(n, 3, GF(2))
        assert rep["ok"]
    with pytest.raises(ValueError):
        char2_ring_check(2, 2, QQ)
