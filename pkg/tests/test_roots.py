import json

import pytest

from affineflags.roots import (
    all_supported_data,
    build_cartan,
    coroot_of,
    datum_to_json,
    finite_reflection,
    pairing,
    two_rho_coroot,
)


def test_a1_trivial():
    d = build_cartan("A", 1)
    assert d.cartan == ((2,),)
    assert d.positive_roots == ((1,),)
    assert d.coxeter_number == 2
    assert d.marks == (1,)


def test_a2_closure():
    # brute-force expectation: closure from the Cartan matrix yields
    # alpha1, alpha2, alpha1+alpha2 and nothing else
    d = build_cartan("A", 2)
    assert set(d.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert d.highest_root == (1, 1)
    assert d.marks == (1, 1)
    assert d.coxeter_number == 3


def test_c2_counts_and_identity():
    d = build_cartan("C", 2)
    assert len(d.positive_roots) == 4
    assert d.coxeter_number == 4
    assert sum(d.marks) == 3
    assert pairing(d, d.highest_root, two_rho_coroot(d)) == 6 == 2 * d.coxeter_number - 2


def test_pairing_examples():
    d1 = build_cartan("A", 1)
    assert pairing(d1, (1,), (1,)) == 2
    d2 = build_cartan("A", 2)
    assert pairing(d2, (1, 0), (0, 1)) == -1
    assert pairing(d2, d2.highest_root, two_rho_coroot(d2)) == 4


def test_pairing_vs_cartan_entries():
    for d in all_supported_data(max_rank=4):
        for i in range(d.rank):
            for j in range(d.rank):
                ei = d.simple_root(i)
                ej = [0] * d.rank
                ej[j] = 1
                assert pairing(d, ei, tuple(ej)) == d.cartan[i][j]


def test_pairing_dimension_mismatch():
    d = build_cartan("A", 2)
    with pytest.raises(ValueError, match="dimension"):
        pairing(d, (1,), (1, 0))


def test_two_rho_examples():
    assert two_rho_coroot(build_cartan("A", 1)) == (1,)
    assert two_rho_coroot(build_cartan("A", 2)) == (2, 2)
    # C2: the positive-coroot sum and the coweight route are compared
    # inside two_rho_coroot; freeze the value as well
    assert two_rho_coroot(build_cartan("C", 2)) == (3, 4)


@pytest.mark.parametrize("letter,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 6), ("A", 9)])
def test_invalid_types_rejected(letter, rank):
    with pytest.raises(ValueError):
        build_cartan(letter, rank)


def test_closure_stability_via_simple_reflections():
    # r_{alpha_i} permutes the positive roots other than alpha_i
    for d in all_supported_data(max_rank=4):
        positives = set(d.positive_roots)
        for i in range(d.rank):
            alpha_i = d.simple_root(i)
            others = positives - {alpha_i}
            image = {finite_reflection(d, alpha_i, beta) for beta in others}
            assert image == others
            assert finite_reflection(d, alpha_i, alpha_i) == tuple(-c for c in alpha_i)


def test_coxeter_identities_all_supported():
    for d in all_supported_data():
        assert d.coxeter_number == 1 + sum(d.marks)
        assert d.highest_root in d.positive_roots
        top = max(sum(r) for r in d.positive_roots)
        assert sum(d.highest_root) == top
        assert pairing(d, d.highest_root, two_rho_coroot(d)) == 2 * d.coxeter_number - 2


def test_coroot_of_simple_roots():
    for d in all_supported_data(max_rank=4):
        for i in range(d.rank):
            expected = [0] * d.rank
            expected[i] = 1
            assert coroot_of(d, d.simple_root(i)) == tuple(expected)


def test_json_document():
    d = build_cartan("B", 3)
    doc = datum_to_json(d)
    assert set(doc) == {
        "type", "rank", "cartan", "positive_roots", "highest_root", "marks",
        "coxeter_number",
    }
    text = json.dumps(doc)
    again = json.loads(text)
    assert again["cartan"] == [list(r) for r in d.cartan]
    assert all(isinstance(x, int) for row in again["positive_roots"] for x in row)
