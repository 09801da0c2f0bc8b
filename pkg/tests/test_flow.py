import pytest

from affineflags import build_cartan
from affineflags.flow import (
    OneParamSubgroup,
    affine_pairing,
    canonical_flow,
    cell_weights,
    inversion_set,
    validate_flow,
)
from affineflags.roots import all_supported_data
from affineflags.weyl import AffineRoot, is_positive


def test_validate_examples():
    d = build_cartan("A", 1)
    report = validate_flow(d, OneParamSubgroup(3, (-1,)))
    assert report.condition_a and report.condition_b
    assert report.max_abs_pairing == 2

    report = validate_flow(d, OneParamSubgroup(1, (-1,)))
    assert report.condition_a and not report.condition_b
    assert report.witness_b == (1,)

    report = validate_flow(d, OneParamSubgroup(3, (1,)))
    assert not report.condition_a
    assert report.witness_a == (1,)


def test_gamma_dimension_check():
    d = build_cartan("A", 2)
    with pytest.raises(ValueError):
        validate_flow(d, OneParamSubgroup(3, (-1,)))


def test_canonical_flow_values():
    assert canonical_flow(build_cartan("A", 1)) == (3, (-1,))
    d2 = build_cartan("A", 2)
    phi = canonical_flow(d2)
    assert phi == (5, (-2, -2))
    assert validate_flow(d2, phi).max_abs_pairing == 4


def test_canonical_flow_all_supported():
    for d in all_supported_data():
        phi = canonical_flow(d)
        report = validate_flow(d, phi)
        assert report.condition_a and report.condition_b
        assert report.max_abs_pairing == 2 * d.coxeter_number - 2
        assert phi.k == 2 * d.coxeter_number - 1


def test_affine_pairing_examples():
    d = build_cartan("A", 1)
    phi = canonical_flow(d)
    assert affine_pairing(d, phi, AffineRoot(1, (1,))) == 1
    assert affine_pairing(d, phi, AffineRoot(0, (-1,))) == 2
    assert affine_pairing(d, phi, AffineRoot(1, (0,))) == phi.k
    with pytest.raises(ValueError):
        affine_pairing(d, phi, AffineRoot(0, (0,)))


def test_inversion_set_examples(a1):
    assert inversion_set(a1, a1.identity) == ()
    assert inversion_set(a1, a1.gens[0]) == (AffineRoot(1, (1,)),)


def test_inversion_set_is_positive_sent_negative(a2):
    for lam in a2.enumerate_min_reps((), 6):
        inv = inversion_set(a2, lam)
        assert len(inv) == a2.length(lam)
        lam_inv = a2.invert(lam)
        for theta in inv:
            assert is_positive(theta)
            assert not is_positive(a2.apply(lam_inv, theta))


def test_inversion_set_matches_bruteforce(a1, a2):
    for group, cut in ((a1, 6), (a2, 5)):
        for lam in group.enumerate_min_reps((), cut):
            lam_inv = group.invert(lam)
            brute = {
                theta
                for theta in group.positive_real_roots(group.length(lam) + 2)
                if not is_positive(group.apply(lam_inv, theta))
            }
            assert set(inversion_set(group, lam)) == brute


def test_cell_weights_examples(a1):
    phi = canonical_flow(a1.datum)
    assert cell_weights(a1, a1.identity, phi) == ()
    assert cell_weights(a1, a1.gens[0], phi) == (1,)


@pytest.mark.parametrize("letter,rank", [("A", 1), ("A", 2), ("C", 2)])
def test_cell_weights_positive(letter, rank):
    from affineflags.weyl import AffineWeylGroup

    group = AffineWeylGroup(build_cartan(letter, rank))
    phi = canonical_flow(group.datum)
    for parabolic in ((), (1,)):
        for lam in group.enumerate_min_reps(parabolic, 6):
            weights = cell_weights(group, lam, phi, parabolic)
            assert len(weights) == group.length(lam)
            assert all(x >= 1 for x in weights)
            # dual stratum convention: negated inversion roots, all negative
            negated = [
                affine_pairing(group.datum, phi, theta.negated())
                for theta in inversion_set(group, lam, parabolic)
            ]
            assert all(x <= -1 for x in negated)


def test_min_cell_weight_at_least_one(a2):
    phi = canonical_flow(a2.datum)
    weights = [
        w
        for lam in a2.enumerate_min_reps((), 8)
        for w in cell_weights(a2, lam, phi)
    ]
    assert min(weights) == 1
