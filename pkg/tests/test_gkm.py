import random
from fractions import Fraction

import pytest

from affineflags.bruhat import upper_ideal
from affineflags.gkm import (
    Character,
    Polynomial,
    build_gkm_graph,
    character_class,
    check_membership,
    constant_function,
    divide_linear,
    divides_linear,
    function_from_json,
    function_to_json,
    graph_from_json,
    graph_to_json,
    injectivity_witnesses,
    restrict,
)
from affineflags.weyl import AffineRoot


# -- polynomial arithmetic ------------------------------------------------


def test_polynomial_basics():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.degree() == 2
    assert Polynomial.zero(2).degree() == -1
    assert (p - p).is_zero()
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((1, 1)) == 0
    assert x.scale(Fraction(1, 2)) + x.scale(Fraction(1, 2)) == x


def test_polynomial_no_zero_terms_stored():
    x = Polynomial.variable(1, 0)
    assert not (x - x)._terms
    assert Polynomial(1, {(1,): Fraction(0)}).is_zero()


def test_polynomial_json_roundtrip():
    p = Polynomial(3, {(1, 0, 2): Fraction(3, 4), (0, 0, 0): Fraction(-2)})
    assert Polynomial.from_json(3, p.to_json()) == p


def test_divides_linear_examples():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    assert divides_linear(x, x * (x + y))
    assert divides_linear(x + y, x * x - y * y)
    assert not divides_linear(x + y, x * x + y * y)


def test_divides_linear_random_multiples_plus_one():
    rng = random.Random(41)
    for _ in range(20):
        nvars = 3
        form = Polynomial.linear([rng.randint(-3, 3) for _ in range(nvars)])
        if form.is_zero():
            continue
        q = Polynomial(
            nvars,
            {
                tuple(rng.randint(0, 2) for _ in range(nvars)): Fraction(
                    rng.randint(-5, 5)
                )
                for _ in range(3)
            },
        )
        multiple = form * q
        assert divides_linear(form, multiple)
        assert not divides_linear(form, multiple + Polynomial.constant(nvars, 1))


def test_divide_linear_quotient_is_exact():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    form = x.scale(2) + y
    p = form * (x * y + y.scale(-3))
    q, r = divide_linear(form, p)
    assert r.is_zero()
    assert q == x * y + y.scale(-3)


def test_divides_linear_rejections():
    x = Polynomial.variable(2, 0)
    with pytest.raises(ValueError):
        divides_linear(Polynomial.constant(2, 5), x)
    with pytest.raises(ValueError):
        divides_linear(Polynomial.zero(2), x)
    with pytest.raises(ValueError):
        divides_linear(x * x, x)


def test_divides_linear_integral_mode():
    x = Polynomial.variable(1, 0)
    two_x = x.scale(2)
    assert divides_linear(two_x, x * x)
    assert not divides_linear(two_x, x * x, integral=True)
    assert divides_linear(two_x, x * x.scale(2), integral=True)


# -- graphs -----------------------------------------------------------


def test_graph_single_vertex(a1):
    graph = build_gkm_graph(a1, [a1.identity], (), 3)
    assert graph.edges == ()


def test_graph_a1_full_parity(a1):
    verts = a1.enumerate_min_reps((), 2)
    graph = build_gkm_graph(a1, verts, (), 3)
    assert len(graph.edges) > 0
    for e in graph.edges:
        # all reflections in the infinite dihedral group have odd length,
        # so every edge joins opposite parities
        assert (a1.length(e.src) + a1.length(e.dst)) % 2 == 1


def test_graph_a1_grassmannian_chain(a1):
    verts = a1.enumerate_min_reps((1,), 2)
    graph = build_gkm_graph(a1, verts, (1,), 3)
    named = {
        (a1.reduced_word(e.src), a1.reduced_word(e.dst)): e.root
        for e in graph.edges
    }
    assert set(named) == {((), (0,)), ((), (1, 0)), ((0,), (1, 0))}
    assert named[((), (0,))] == AffineRoot(1, (1,))
    assert named[((), (1, 0))] == AffineRoot(1, (-1,))
    assert named[((0,), (1, 0))] == AffineRoot(0, (-1,))


def test_graph_symmetry_invariant(a2):
    verts = a2.enumerate_min_reps((1, 2), 3)
    graph = build_gkm_graph(a2, verts, (1, 2), 4)
    for e in graph.edges:
        r = a2.reflection(e.root)
        assert a2.min_coset_rep(a2.multiply(r, e.dst), (1, 2)) == e.src
        assert a2.length(e.src) < a2.length(e.dst)


def test_graph_no_proportional_duplicates(a2):
    verts = a2.enumerate_min_reps((), 3)
    graph = build_gkm_graph(a2, verts, (), 4)
    seen = set()
    for e in graph.edges:
        vec = e.root.vector()
        g = 0
        for c in vec:
            g = g or abs(c)
        key = (e.src.mat, e.dst.mat, vec)
        assert key not in seen
        seen.add(key)


# -- membership -------------------------------------------------------


def test_constants_are_members(a1):
    verts = a1.enumerate_min_reps((), 3)
    graph = build_gkm_graph(a1, verts, (), 4)
    f = constant_function(graph.vertices, a1.dim, Fraction(7, 3))
    assert check_membership(f, graph).member


def test_character_classes_member_on_full_flag(a1, a2):
    for group in (a1, a2):
        verts = group.enumerate_min_reps((), 4)
        graph = build_gkm_graph(group, verts, (), 5)
        basis = [Character(1, (0,) * group.rank)] + [
            Character(0, group.datum.simple_root(i)) for i in range(group.rank)
        ]
        for chi in basis:
            f = character_class(group, graph.vertices, chi)
            report = check_membership(f, graph)
            assert report.member, (chi, report.violations)


def test_character_class_edge_identity(a2):
    # across an edge lam = r_theta sigma of the full flag graph, the
    # difference of values is a multiple of the label: freeze the factor
    # <sigma(chi), theta^vee> on one concrete edge
    verts = a2.enumerate_min_reps((), 3)
    graph = build_gkm_graph(a2, verts, (), 4)
    chi = Character(0, (1, 0))
    f = character_class(a2, graph.vertices, chi)
    for e in graph.edges:
        diff = f[e.src] - f[e.dst]
        label = e.label.linear_form()
        q, r = divide_linear(label, diff)
        assert r.is_zero()
        assert q.degree() <= 0  # the multiplier is a constant


def test_delta_class_member_on_quotients(a1, a2):
    for group, parabolic in ((a1, (1,)), (a2, (1, 2))):
        verts = group.enumerate_min_reps(parabolic, 4)
        graph = build_gkm_graph(group, verts, parabolic, 5)
        chi = Character(1, (0,) * group.rank)
        f = character_class(group, graph.vertices, chi)
        assert check_membership(f, graph).member


def test_noninvariant_character_fails_on_quotient(a1):
    # the projection to minimal representatives breaks the edge identity
    # for characters moved by the parabolic subgroup: on the I={1} chain
    # the edge e -- s1s0 has label delta - alpha1 while the endpoint
    # difference is a multiple of delta
    verts = a1.enumerate_min_reps((1,), 2)
    graph = build_gkm_graph(a1, verts, (1,), 3)
    f = character_class(a1, graph.vertices, Character(0, (1,)))
    report = check_membership(f, graph)
    assert not report.member
    bad = report.violations[0]
    assert a1.reduced_word(bad.src) == ()
    assert a1.reduced_word(bad.dst) == (1, 0)
    assert bad.root == AffineRoot(1, (-1,))
    diff = f[bad.src] - f[bad.dst]
    assert diff == Polynomial.linear((-2,) + (0,) * a1.rank)


def test_perturbation_detected(a1):
    verts = a1.enumerate_min_reps((), 3)
    graph = build_gkm_graph(a1, verts, (), 4)
    f = dict(constant_function(graph.vertices, a1.dim, 1))
    victim = graph.vertices[2]
    assert any(victim in (e.src, e.dst) for e in graph.edges)
    f[victim] = f[victim] + Polynomial.constant(a1.dim, 1)
    report = check_membership(f, graph)
    assert not report.member
    assert all(victim in (e.src, e.dst) for e in report.violations)
    assert len(report.violations) >= 1


def test_membership_requires_full_support(a1):
    verts = a1.enumerate_min_reps((), 2)
    graph = build_gkm_graph(a1, verts, (), 3)
    f = dict(constant_function(graph.vertices, a1.dim, 1))
    del f[graph.vertices[0]]
    with pytest.raises(ValueError, match="undefined"):
        check_membership(f, graph)


# -- restriction ---------------------------------------------------------


def test_restrict(a1):
    verts = a1.enumerate_min_reps((), 3)
    graph = build_gkm_graph(a1, verts, (), 4)
    up = upper_ideal(a1, [a1.gens[0]], (), 3)
    f = constant_function(graph.vertices, a1.dim, 5)
    g = restrict(f, up)
    assert set(g) == set(up.elements)

    # members restrict to members of the induced subgraph
    chi = Character(0, (1,))
    f2 = character_class(a1, graph.vertices, chi)
    sub = build_gkm_graph(a1, up.elements, (), 4)
    assert check_membership(restrict(f2, up), sub).member

    lower_like = upper_ideal(a1, [a1.identity], (), 2)
    partial = {w: f[w] for w in list(f)[:2]}
    with pytest.raises(ValueError, match="undefined"):
        restrict(partial, lower_like)

    from affineflags.bruhat import lower_ideal

    with pytest.raises(ValueError, match="upper ideal"):
        restrict(f, lower_ideal(a1, [a1.identity], ()))


# -- witnesses ------------------------------------------------------------


def test_witnesses_example(a1):
    up = upper_ideal(a1, [a1.gens[0]], (), 5)
    report = injectivity_witnesses(a1, a1.identity, up, 3, 3)
    assert report.found == 3
    targets = {a1.reduced_word(t) for _, t in report.witnesses}
    assert targets <= {(0,), (0, 1, 0), (1, 0, 1)}
    labels = [theta.vector() for theta, _ in report.witnesses]
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            a, b = labels[i], labels[j]
            assert any(
                a[k] * b[m] != a[m] * b[k] for k in range(len(a)) for m in range(len(a))
            )


def test_witness_adjacent_single(a1):
    up = upper_ideal(a1, [a1.gens[0]], (), 5)
    report = injectivity_witnesses(a1, a1.identity, up, 1, 2)
    assert report.found == 1
    theta, target = report.witnesses[0]
    assert a1.reduced_word(target) == (0,)


def test_witness_rejects_inside_sigma(a1):
    up = upper_ideal(a1, [a1.gens[0]], (), 5)
    with pytest.raises(ValueError, match="already lies"):
        injectivity_witnesses(a1, a1.gens[0], up, 1, 2)


def test_witness_count_monotone(a2):
    parabolic = (1, 2)
    gen = [w for w in a2.enumerate_min_reps(parabolic, 2) if a2.length(w) == 2][0]
    up = upper_ideal(a2, [gen], parabolic, 10)
    counts = []
    for bound in (2, 4, 6, 8):
        counts.append(
            injectivity_witnesses(a2, a2.identity, up, 99, bound).found
        )
    assert counts == sorted(counts)
    assert counts[-1] >= 3


# -- serialization ---------------------------------------------------------


def test_graph_and_function_json_roundtrip(a1):
    verts = a1.enumerate_min_reps((1,), 3)
    graph = build_gkm_graph(a1, verts, (1,), 4, truncation_length=3)
    doc = graph_to_json(a1, graph)
    again = graph_from_json(a1, doc)
    assert again == graph

    f = character_class(a1, graph.vertices, Character(1, (0,)))
    fdoc = function_to_json(graph, f)
    f2 = function_from_json(a1, graph, fdoc)
    assert f2 == f
