"""Poincare series of Schubert unions, Birkhoff complements and pairs.

Everything here is a graded cell count: cells sit in even degrees, twice
the I-length of their indexing representative.  Series over the full flag
index set and over upper ideals are truncated at an explicit cap; series
over lower ideals are complete polynomials (every proper lower order
ideal is finite).

The Betti numbers reported for a Birkhoff union are the ambient flag
numbers: a finite union of opposite-orbit closures is a deformation
retract of the whole space, so its cohomology agrees with the ambient one
degree by degree.  That series is not a cell count of the union itself,
and the output says so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .bruhat import BruhatIdeal, bruhat_leq
from .weyl import AffineWeylGroup, WeylElement


@dataclass(frozen=True)
class GradedSeries:
    """Even-degree counting series, possibly truncated at ``cap``.

    ``cap`` is None for a complete polynomial; otherwise terms are exact
    up to and including degree ``cap``.
    """

    terms: tuple  # ((degree, count), ...) strictly increasing even degrees
    cap: Optional[int] = None
    note: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        last = -1
        for degree, count in self.terms:
            if degree % 2 or degree <= last:
                raise ValueError("degrees must be even and strictly increasing")
            if count <= 0:
                raise ValueError("counts must be positive")
            last = degree

    def coefficient(self, degree: int) -> int:
        for d, c in self.terms:
            if d == degree:
                return c
        return 0

    @property
    def is_empty_marker(self) -> bool:
        return not self.terms and self.note == "empty"

    def truncated(self, cap: int) -> "GradedSeries":
        return GradedSeries(
            tuple((d, c) for d, c in self.terms if d <= cap), cap, self.note
        )

    def render(self) -> str:
        if self.is_empty_marker:
            return "0 (empty)"
        if not self.terms:
            return "0"
        parts = []
        for d, c in self.terms:
            if d == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}t^{d}")
        text = " + ".join(parts)
        if self.cap is not None:
            text += f"  (through degree {self.cap})"
        return text

    def to_json(self) -> dict:
        doc = {"cap": self.cap, "terms": [[d, c] for d, c in self.terms]}
        if self.note:
            doc["note"] = self.note
        return doc


def _series_from_lengths(lengths: Iterable[int], cap: Optional[int], note=None) -> GradedSeries:
    counts: dict = {}
    for l in lengths:
        counts[2 * l] = counts.get(2 * l, 0) + 1
    terms = tuple(sorted(counts.items()))
    if cap is not None:
        terms = tuple((d, c) for d, c in terms if d <= cap)
    return GradedSeries(terms, cap, note)


def poincare_lower(group: AffineWeylGroup, ideal: BruhatIdeal) -> GradedSeries:
    """Cell-count polynomial of a finite Schubert union, graded by 2*length."""
    if ideal.direction != "lower":
        raise ValueError("expected a lower ideal")
    return _series_from_lengths((group.length(w) for w in ideal.elements), None)


def poincare_flag(
    group: AffineWeylGroup, parabolic: Iterable[int], degree_cap: int
) -> GradedSeries:
    """Cell counts of the full quotient index set up to an even degree cap."""
    if degree_cap < 0 or degree_cap % 2:
        raise ValueError("degree cap must be even and nonnegative")
    reps = group.enumerate_min_reps(parabolic, degree_cap // 2)
    return _series_from_lengths((group.length(w) for w in reps), degree_cap)


def poincare_pair(group: AffineWeylGroup, upper: BruhatIdeal) -> GradedSeries:
    """Relative cell counts for (flag space, complementary Schubert union).

    The relative homology is free on the upper ideal, graded by twice the
    length, so this counts the ideal's representatives up to the ideal's
    truncation.
    """
    if upper.direction != "upper":
        raise ValueError("expected an upper ideal")
    if upper.truncation_length is None:
        raise ValueError("upper ideal must carry a truncation length")
    return _series_from_lengths(
        (group.length(w) for w in upper.elements), 2 * upper.truncation_length
    )


def betti_birkhoff(
    group: AffineWeylGroup, upper: BruhatIdeal, degree_cap: int
) -> GradedSeries:
    """Betti numbers of a Birkhoff union: equal to the ambient flag numbers.

    The union is a deformation retract of the flag space, so this reports
    the ambient cell counts, tagged to make the provenance explicit.
    """
    if upper.direction != "upper":
        raise ValueError("expected an upper ideal")
    flag = poincare_flag(group, upper.parabolic, degree_cap)
    return GradedSeries(flag.terms, flag.cap, note="ambient-cells-deformation-retract")


@dataclass(frozen=True)
class PairVanishing:
    """H of (Birkhoff neighbourhood, complement of a Schubert union)."""

    relative: GradedSeries  # identically zero
    complement: GradedSeries  # equals the Schubert union's own series


def vanishing_pair_S(group: AffineWeylGroup, lower: BruhatIdeal) -> PairVanishing:
    """The pair over a lower ideal has vanishing homology; the punctured
    neighbourhood carries the homology of the Schubert union itself."""
    return PairVanishing(
        relative=GradedSeries((), None, note="vanishing-pair"),
        complement=poincare_lower(group, lower),
    )


@dataclass(frozen=True)
class RichardsonReport:
    codim: int
    dim: int


def richardson_codim(
    group: AffineWeylGroup,
    lam: WeylElement,
    mu: WeylElement,
    parabolic: Iterable[int] = (),
) -> RichardsonReport:
    """Codimension data of a stratum-closure intersection for lam <= mu.

    The intersection indexed by (lam, mu) is irreducible of codimension
    equal to the I-length of lam inside the Schubert variety of mu.
    """
    I = group.parabolic(parabolic)
    lam = group.min_coset_rep(lam, I)
    mu = group.min_coset_rep(mu, I)
    if not bruhat_leq(group, lam, mu, I):
        raise ValueError("richardson_codim requires lam <= mu in Bruhat order")
    codim = group.length(lam)
    dim = group.length(mu) - codim
    assert dim >= 0
    return RichardsonReport(codim=codim, dim=dim)


def pinf_toy(n: int, m: int) -> GradedSeries:
    """Series of the model intersection inside infinite projective space.

    The n-th Birkhoff subspace meets the m-th projective subspace in a
    projective space of dimension m-n, so the series is 1 + t^2 + ... +
    t^(2(m-n)).  For n > m the intersection is empty, which is reported
    as a distinguished empty series rather than an error.
    """
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if n > m:
        return GradedSeries((), None, note="empty")
    return GradedSeries(tuple((2 * d, 1) for d in range(m - n + 1)), None)
