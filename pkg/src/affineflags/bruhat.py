"""Bruhat order on the affine Weyl group and its parabolic quotients.

Cosets are always handled through their minimal length representatives:
the order on a quotient is the order induced on those representatives,
and both quotients and the full group are graded by (I-)length, so a
covering relation is exactly a comparable pair whose lengths differ by 1.

Comparison uses the lifting-property recursion on a left descent of the
larger element.  Covers are found by left-multiplying with reflections of
bounded level: a reflection realizing a covering of an element of length
l has length at most 2l+1, and its root's level is below that, so the
bound level <= l+1 is conservative (it is validated against the subword
oracle in the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .weyl import AffineWeylGroup, WeylElement


@dataclass(frozen=True)
class BruhatIdeal:
    """Finite order ideal of minimal coset representatives.

    Lower ideals are complete (every proper lower order ideal is finite);
    upper ideals carry the truncation length they were cut off at.
    """

    direction: str  # "lower" | "upper"
    parabolic: frozenset
    elements: tuple
    generators: tuple
    truncation_length: Optional[int]  # None marks a complete lower ideal

    def __contains__(self, w: WeylElement) -> bool:
        return w in self._element_set

    @property
    def _element_set(self):
        return frozenset(self.elements)

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class HasseDiagram:
    """Covering-relation digraph; an edge (lam, mu) means lam covers mu."""

    vertices: tuple
    edges: tuple
    parabolic: frozenset


@dataclass(frozen=True)
class LeqReport:
    result: bool
    normalized_mu: bool
    normalized_lam: bool


@dataclass(frozen=True)
class IntervalReport:
    """Connectivity of an upper-lower ideal intersection in the Hasse graph.

    The graph criterion is sufficient only: a connected intersection
    certifies a path-connected stratum intersection, a disconnected one is
    inconclusive.
    """

    status: str  # "empty" | "connected" | "inconclusive"
    intersection_size: int

    @property
    def connected(self) -> bool:
        return self.status == "connected"


def _leq_elements(group: AffineWeylGroup, mu: WeylElement, lam: WeylElement) -> bool:
    """mu <= lam in the full group, by lifting on a left descent of lam.

    Implemented on inverses so the recursion strips right descents: s is a
    left descent of lam exactly when it is a right descent of lam^{-1},
    and mu <= lam iff mu^{-1} <= lam^{-1}.
    """
    cache = group.__dict__.setdefault("_leq_cache", {})
    x = group.invert(mu)
    y = group.invert(lam)
    k = group._k
    n = group.dim
    simples = group._simples_flat
    full = group._full_mask

    def rec(xm: tuple, ym: tuple, ylen: int) -> bool:
        if xm == group.identity.mat:
            return True
        key = (xm, ym)
        hit = cache.get(key)
        if hit is not None:
            return hit
        xlen = len(group.reduced_word(WeylElement(xm, n)))
        if xlen > ylen:
            res = False
        else:
            s = k.lowest_descent(ym, simples, n, full)
            gen = group.gens[s].mat
            ys = k.mat_mul(ym, gen, n)
            xs = k.mat_mul(xm, gen, n)
            if len(group.reduced_word(WeylElement(xs, n))) < xlen:
                res = rec(xs, ys, ylen - 1)
            else:
                res = rec(xm, ys, ylen - 1)
        cache[key] = res
        return res

    return rec(x.mat, y.mat, group.length(y))


def bruhat_leq_report(
    group: AffineWeylGroup,
    mu: WeylElement,
    lam: WeylElement,
    parabolic: Iterable[int] = (),
) -> LeqReport:
    """Decide mu <= lam on W/W_I, normalizing non-minimal inputs."""
    I = group.parabolic(parabolic)
    mu_min = group.min_coset_rep(mu, I)
    lam_min = group.min_coset_rep(lam, I)
    return LeqReport(
        result=_leq_elements(group, mu_min, lam_min),
        normalized_mu=mu_min != mu,
        normalized_lam=lam_min != lam,
    )


def bruhat_leq(
    group: AffineWeylGroup,
    mu: WeylElement,
    lam: WeylElement,
    parabolic: Iterable[int] = (),
) -> bool:
    return bruhat_leq_report(group, mu, lam, parabolic).result


def covers(
    group: AffineWeylGroup, lam: WeylElement, parabolic: Iterable[int] = ()
) -> tuple:
    """All mu covered by lam in the quotient order.

    Left-multiplies by every positive real reflection of level at most
    l(lam)+1 and keeps the projections whose I-length drops by exactly 1;
    comparability of a coset with its reflection image makes the length
    test equivalent to the covering condition.
    """
    I = group.parabolic(parabolic)
    mask = group._mask(I)
    lam = group._min_rep(lam, mask)
    cache = group.__dict__.setdefault("_covers_cache", {})
    key = (lam.mat, mask)
    hit = cache.get(key)
    if hit is not None:
        return hit
    target = group.length(lam) - 1
    if target < 0:
        cache[key] = ()
        return ()
    found = {}
    for theta in group.positive_real_roots(group.length(lam) + 1):
        r = group.reflection(theta)
        mu = group._min_rep(group.multiply(r, lam), mask)
        if group.length(mu) == target:
            found[mu.mat] = mu
    result = tuple(
        sorted(found.values(), key=lambda w: group.reduced_word(w))
    )
    cache[key] = result
    return result


def lower_ideal(
    group: AffineWeylGroup,
    generators: Iterable[WeylElement],
    parabolic: Iterable[int] = (),
) -> BruhatIdeal:
    """Complete downward closure of the generators (always finite)."""
    I = group.parabolic(parabolic)
    gens = tuple(
        sorted(
            {group.min_coset_rep(g, I) for g in generators},
            key=lambda w: (group.length(w), group.reduced_word(w)),
        )
    )
    closed = {g.mat: g for g in gens}
    frontier = list(gens)
    while frontier:
        new = []
        for lam in frontier:
            for mu in covers(group, lam, I):
                if mu.mat not in closed:
                    closed[mu.mat] = mu
                    new.append(mu)
        frontier = new
    elements = tuple(
        sorted(closed.values(), key=lambda w: (group.length(w), group.reduced_word(w)))
    )
    return BruhatIdeal("lower", I, elements, gens, None)


def upper_ideal(
    group: AffineWeylGroup,
    generators: Iterable[WeylElement],
    parabolic: Iterable[int],
    truncation_length: int,
) -> BruhatIdeal:
    """All representatives of I-length <= truncation above some generator."""
    I = group.parabolic(parabolic)
    gens = tuple(
        sorted(
            {group.min_coset_rep(g, I) for g in generators},
            key=lambda w: (group.length(w), group.reduced_word(w)),
        )
    )
    if not gens:
        raise ValueError("upper ideal needs at least one generator")
    top = max(group.length(g) for g in gens)
    if truncation_length < top:
        raise ValueError(
            f"truncation {truncation_length} is below a generator length {top}"
        )
    elements = tuple(
        lam
        for lam in group.enumerate_min_reps(I, truncation_length)
        if any(bruhat_leq(group, g, lam, I) for g in gens)
    )
    return BruhatIdeal("upper", I, elements, gens, truncation_length)


def hasse(
    group: AffineWeylGroup,
    elements: Iterable[WeylElement],
    parabolic: Iterable[int] = (),
) -> HasseDiagram:
    """Covering pairs inside the given set of minimal representatives."""
    I = group.parabolic(parabolic)
    vertices = tuple(
        sorted(
            {group.min_coset_rep(w, I) for w in elements},
            key=lambda w: (group.length(w), group.reduced_word(w)),
        )
    )
    vertex_set = {w.mat for w in vertices}
    edges = []
    for lam in vertices:
        for mu in covers(group, lam, I):
            if mu.mat in vertex_set:
                assert group.length(lam) == group.length(mu) + 1
                edges.append((lam, mu))
    return HasseDiagram(vertices, tuple(edges), I)


def interval_connected(
    group: AffineWeylGroup, upper: BruhatIdeal, lower: BruhatIdeal
) -> IntervalReport:
    """Hasse-graph connectivity of the intersection of two ideals."""
    if upper.direction != "upper" or lower.direction != "lower":
        raise ValueError("expected an upper ideal and a lower ideal")
    if upper.parabolic != lower.parabolic:
        raise ValueError("ideals are over different parabolic subsets")
    common = [w for w in upper.elements if w in lower]
    if not common:
        return IntervalReport("empty", 0)
    diagram = hasse(group, common, upper.parabolic)
    index = {w.mat: i for i, w in enumerate(diagram.vertices)}
    parent = list(range(len(index)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for lam, mu in diagram.edges:
        a, b = find(index[lam.mat]), find(index[mu.mat])
        if a != b:
            parent[a] = b
    roots = {find(i) for i in range(len(index))}
    status = "connected" if len(roots) == 1 else "inconclusive"
    return IntervalReport(status, len(common))


# -- serialization ----------------------------------------------------


def ideal_to_json(group: AffineWeylGroup, ideal: BruhatIdeal) -> dict:
    return {
        "direction": ideal.direction,
        "parabolic": sorted(ideal.parabolic),
        "truncation_length": ideal.truncation_length,
        "generators": [list(group.reduced_word(g)) for g in ideal.generators],
        "elements": [list(group.reduced_word(w)) for w in ideal.elements],
    }


def _vertex_label(group: AffineWeylGroup, w: WeylElement) -> str:
    word = group.reduced_word(w)
    return "".join(str(i) for i in word) if word else "e"


def hasse_to_json(group: AffineWeylGroup, diagram: HasseDiagram) -> dict:
    index = {w.mat: i for i, w in enumerate(diagram.vertices)}
    return {
        "parabolic": sorted(diagram.parabolic),
        "vertices": [
            {
                "id": i,
                "word": list(group.reduced_word(w)),
                "length": group.length(w),
            }
            for i, w in enumerate(diagram.vertices)
        ],
        "edges": [
            {"upper": index[lam.mat], "lower": index[mu.mat]}
            for lam, mu in diagram.edges
        ],
    }


def hasse_to_dot(group: AffineWeylGroup, diagram: HasseDiagram) -> str:
    lines = ["digraph hasse {"]
    index = {w.mat: i for i, w in enumerate(diagram.vertices)}
    for i, w in enumerate(diagram.vertices):
        label = _vertex_label(group, w)
        lines.append(f'  v{i} [label="{label}", rank={group.length(w)}];')
    for lam, mu in diagram.edges:
        lines.append(f"  v{index[lam.mat]} -> v{index[mu.mat]};")
    lines.append("}")
    return "\n".join(lines)
