"""Fixed-point graphs with linear edge labels and the divisibility test.

Vertices are minimal coset representatives; an edge joins two vertices
whose cosets are exchanged by left multiplication with a reflection, and
is labelled by the degree-2 class of the reflection's root: for the root
(n, alpha) the label is the linear form n*delta + alpha over the extended
character lattice.  A vertex function belongs to the restriction ring
when, across every edge, the difference of its endpoint values is exactly
divisible by the edge label.

All coefficients are exact rationals; an integral strict mode additionally
requires integer quotients.  Nothing in this module touches floating
point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, NamedTuple, Optional

from .bruhat import BruhatIdeal
from .weyl import AffineRoot, AffineWeylGroup, WeylElement


class Polynomial:
    """Multivariate polynomial with Fraction coefficients.

    Exponent vectors have one slot per variable: slot 0 is delta, the
    rest are the simple-root coordinates of the finite weight lattice.
    Zero coefficients are never stored, and the term order is canonical,
    so equality and hashing are structural.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Dict[tuple, Fraction]] = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    if len(exps) != nvars:
                        raise ValueError("exponent vector has wrong arity")
                    clean[tuple(exps)] = coeff
        self._terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Iterable) -> "Polynomial":
        """Homogeneous degree-1 form with the given coefficient vector."""
        coeffs = list(coeffs)
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = Fraction(c)
        return cls(n, terms)

    # -- inspection ------------------------------------------------------

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def coefficient(self, exps: tuple) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials over different variable sets")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return Polynomial(self.nvars, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms: Dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return Polynomial(self.nvars, terms)

    def scale(self, value) -> "Polynomial":
        value = Fraction(value)
        return Polynomial(self.nvars, {e: c * value for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.nvars, tuple(self.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        names = ["d"] + [f"a{i}" for i in range(1, self.nvars)]
        parts = []
        for exps, c in self.items():
            mono = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(exps)
                if e
            )
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def to_json(self) -> list:
        return [
            {"exps": list(e), "num": c.numerator, "den": c.denominator}
            for e, c in self.items()
        ]

    @classmethod
    def from_json(cls, nvars: int, doc: list) -> "Polynomial":
        terms = {}
        for item in doc:
            exps = tuple(item["exps"])
            terms[exps] = terms.get(exps, Fraction(0)) + Fraction(
                item["num"], item["den"]
            )
        return cls(nvars, terms)


def divide_linear(form: Polynomial, p: Polynomial):
    """Divide by a degree-1 form: returns (quotient, remainder).

    The remainder is free of the pivot variable (the lowest-index variable
    appearing in the form), so ``p`` is a multiple of ``form`` exactly when
    the remainder is zero.
    """
    if form.degree() != 1:
        raise ValueError("divisor must have degree exactly 1")
    pivot = None
    for exps, _ in form.items():
        if sum(exps) == 1:
            idx = exps.index(1)
            if pivot is None or idx < pivot:
                pivot = idx
    if pivot is None:
        raise ValueError("divisor has no linear part")
    unit = [0] * form.nvars
    unit[pivot] = 1
    a = form.coefficient(tuple(unit))

    quotient = Polynomial.zero(p.nvars)
    remainder = p
    while True:
        lead = None
        for exps, c in remainder.items():
            if exps[pivot] > 0:
                lead = (exps, c)
                break
        if lead is None:
            return quotient, remainder
        exps, c = lead
        lowered = list(exps)
        lowered[pivot] -= 1
        step = Polynomial(p.nvars, {tuple(lowered): c / a})
        quotient = quotient + step
        remainder = remainder - step * form


def divides_linear(form: Polynomial, p: Polynomial, integral: bool = False) -> bool:
    """Exact divisibility of ``p`` by a degree-1 form.

    With ``integral=True`` the quotient must also have integer
    coefficients (strict mode; the rational test is the default).
    """
    quotient, remainder = divide_linear(form, p)
    if not remainder.is_zero():
        return False
    if integral:
        return all(c.denominator == 1 for _, c in quotient.items())
    return True


class Character(NamedTuple):
    """Degree-2 lattice class: a level multiple of delta plus a weight."""

    delta_coeff: int
    weight: tuple

    def linear_form(self) -> Polynomial:
        return Polynomial.linear((self.delta_coeff,) + tuple(self.weight))

    @classmethod
    def of_root(cls, theta: AffineRoot) -> "Character":
        return cls(theta.level, tuple(theta.finite))


class GkmEdge(NamedTuple):
    src: WeylElement  # lower I-length endpoint
    dst: WeylElement  # higher I-length endpoint
    root: AffineRoot  # a reflection root exchanging the two cosets

    @property
    def label(self) -> Character:
        return Character.of_root(self.root)


@dataclass(frozen=True)
class GkmGraph:
    parabolic: frozenset
    truncation_length: Optional[int]
    level_bound: int
    vertices: tuple
    edges: tuple

    def vertex_index(self) -> dict:
        return {w.mat: i for i, w in enumerate(self.vertices)}


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    violations: tuple  # offending GkmEdges


@dataclass(frozen=True)
class WitnessReport:
    witnesses: tuple  # pairs (reflection root, target representative)
    level_bound: int

    @property
    def found(self) -> int:
        return len(self.witnesses)


def _direction_key(vec: tuple) -> tuple:
    """Proportionality class of an integer vector (gcd- and sign-reduced)."""
    g = 0
    for c in vec:
        g = _gcd(g, c)
    if g == 0:
        raise ValueError("zero vector has no direction")
    reduced = tuple(c // g for c in vec)
    for c in reduced:
        if c != 0:
            return reduced if c > 0 else tuple(-x for x in reduced)
    raise AssertionError


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def build_gkm_graph(
    group: AffineWeylGroup,
    vertices: Iterable[WeylElement],
    parabolic: Iterable[int],
    level_bound: int,
    truncation_length: Optional[int] = None,
) -> GkmGraph:
    """Record an edge whenever a bounded-level reflection maps one vertex
    coset onto another.

    Completeness is relative to ``level_bound``, which is carried in the
    output.  A vertex pair can be joined by several reflections; edges
    with proportional labels are recorded once, non-proportional labels
    stay as parallel edges.
    """
    if level_bound < 1:
        raise ValueError("level_bound must be at least 1")
    I = group.parabolic(parabolic)
    verts = tuple(
        sorted(
            {group.min_coset_rep(w, I) for w in vertices},
            key=lambda w: (group.length(w), group.reduced_word(w)),
        )
    )
    vert_set = {w.mat for w in verts}
    seen = set()
    edges = []
    reflection_roots = group.positive_real_roots(level_bound)
    for sigma in verts:
        for theta in reflection_roots:
            tau = group.min_coset_rep(
                group.multiply(group.reflection(theta), sigma), I
            )
            if tau.mat == sigma.mat or tau.mat not in vert_set:
                continue
            if group.length(sigma) < group.length(tau):
                src, dst = sigma, tau
            else:
                src, dst = tau, sigma
            key = (src.mat, dst.mat, _direction_key(theta.vector()))
            if key in seen:
                continue
            seen.add(key)
            edges.append(GkmEdge(src, dst, theta))
    edges.sort(
        key=lambda e: (
            group.length(e.src),
            group.reduced_word(e.src),
            group.length(e.dst),
            group.reduced_word(e.dst),
            e.root.vector(),
        )
    )
    return GkmGraph(I, truncation_length, level_bound, verts, tuple(edges))


def check_membership(
    f: Dict[WeylElement, Polynomial],
    graph: GkmGraph,
    integral: bool = False,
) -> MembershipReport:
    """Per-edge divisibility of endpoint differences by the edge label."""
    missing = [w for w in graph.vertices if w not in f]
    if missing:
        raise ValueError(f"function undefined on {len(missing)} vertices")
    vset = {v.mat for v in graph.vertices}
    extra = [w for w in f if w.mat not in vset]
    if extra:
        raise ValueError(f"function supported outside the graph ({len(extra)} vertices)")
    violations = []
    for edge in graph.edges:
        diff = f[edge.src] - f[edge.dst]
        if diff.is_zero():
            continue
        if not divides_linear(edge.label.linear_form(), diff, integral=integral):
            violations.append(edge)
    return MembershipReport(member=not violations, violations=tuple(violations))


def restrict(
    f: Dict[WeylElement, Polynomial], upper: BruhatIdeal
) -> Dict[WeylElement, Polynomial]:
    """Restrict a vertex function to an upper order ideal."""
    if upper.direction != "upper":
        raise ValueError("restriction target must be an upper ideal")
    missing = [w for w in upper.elements if w not in f]
    if missing:
        raise ValueError(f"function undefined on {len(missing)} ideal elements")
    return {w: f[w] for w in upper.elements}


def constant_function(
    vertices: Iterable[WeylElement], nvars: int, value
) -> Dict[WeylElement, Polynomial]:
    const = Polynomial.constant(nvars, value)
    return {w: const for w in vertices}


def character_class(
    group: AffineWeylGroup,
    vertices: Iterable[WeylElement],
    chi: Character,
) -> Dict[WeylElement, Polynomial]:
    """The vertex function lam |-> chi - lam(chi) of a degree-2 class.

    Across an edge joining sigma to lam = r_theta * sigma the difference
    of values is <sigma(chi), theta^vee> times the label form, so this
    family is always divisible edge-by-edge on full-group graphs.  On a
    proper parabolic quotient the identity survives exactly for the
    characters fixed by the parabolic subgroup (delta always is).
    """
    n = group.dim
    chi_form = chi.linear_form()
    vec = AffineRoot(chi.delta_coeff, tuple(chi.weight))
    out = {}
    for w in vertices:
        image = group.apply(w, vec)
        out[w] = chi_form - Polynomial.linear(image.vector())
    return out


def injectivity_witnesses(
    group: AffineWeylGroup,
    sigma: WeylElement,
    upper: BruhatIdeal,
    want: int,
    level_bound: int,
) -> WitnessReport:
    """Reflections carrying a vertex outside an upper ideal into it.

    Scans positive real roots in level order and keeps the first ``want``
    whose reflection lands the coset of ``sigma`` inside the ideal, with
    labels in pairwise distinct proportionality classes (hence pairwise
    coprime as linear forms over the rationals).  The greedy scan order
    makes the found count nondecreasing as the level bound grows.
    """
    if want < 1:
        raise ValueError("want must be at least 1")
    if upper.direction != "upper":
        raise ValueError("witness search needs an upper ideal")
    I = upper.parabolic
    sigma = group.min_coset_rep(sigma, I)
    if sigma in upper:
        raise ValueError("sigma already lies in the ideal")
    chosen = []
    directions = set()
    for theta in group.positive_real_roots(level_bound):
        key = _direction_key(theta.vector())
        if key in directions:
            continue
        target = group.min_coset_rep(
            group.multiply(group.reflection(theta), sigma), I
        )
        if target in upper:
            chosen.append((theta, target))
            directions.add(key)
            if len(chosen) == want:
                break
    return WitnessReport(tuple(chosen), level_bound)


# -- serialization ----------------------------------------------------


def graph_to_json(group: AffineWeylGroup, graph: GkmGraph) -> dict:
    index = graph.vertex_index()
    return {
        "parabolic": sorted(graph.parabolic),
        "truncation_length": graph.truncation_length,
        "level_bound": graph.level_bound,
        "vertices": [
            {
                "id": i,
                "word": list(group.reduced_word(w)),
                "length": group.length(w),
            }
            for i, w in enumerate(graph.vertices)
        ],
        "edges": [
            {
                "src": index[e.src.mat],
                "dst": index[e.dst.mat],
                "label": {
                    "delta": e.label.delta_coeff,
                    "weight": list(e.label.weight),
                },
            }
            for e in graph.edges
        ],
    }


def graph_from_json(group: AffineWeylGroup, doc: dict) -> GkmGraph:
    verts = [group.element_from_word(v["word"]) for v in doc["vertices"]]
    by_id = {v["id"]: w for v, w in zip(doc["vertices"], verts)}
    edges = tuple(
        GkmEdge(
            by_id[e["src"]],
            by_id[e["dst"]],
            AffineRoot(e["label"]["delta"], tuple(e["label"]["weight"])),
        )
        for e in doc["edges"]
    )
    return GkmGraph(
        frozenset(doc["parabolic"]),
        doc.get("truncation_length"),
        doc["level_bound"],
        tuple(verts),
        edges,
    )


def function_to_json(graph: GkmGraph, f: Dict[WeylElement, Polynomial]) -> dict:
    index = graph.vertex_index()
    return {str(index[w.mat]): poly.to_json() for w, poly in f.items()}


def function_from_json(
    group: AffineWeylGroup, graph: GkmGraph, doc: dict
) -> Dict[WeylElement, Polynomial]:
    out = {}
    for key, terms in doc.items():
        w = graph.vertices[int(key)]
        out[w] = Polynomial.from_json(group.dim, terms)
    return out
