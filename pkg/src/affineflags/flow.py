"""Attracting one-parameter subgroups of the extended torus.

A subgroup is written (k, gamma) with k the loop-rotation component and
gamma a coroot.  It is attracting when (a) every positive finite root is
negative on gamma and (b) k dominates the largest finite pairing in
absolute value; the canonical choice is k = 2h-1 with gamma the negated
sum of the positive coroots, for which the dominated maximum is exactly
2h-2.

The weight of (k, gamma) on the root space of an affine root (n, alpha)
is n*k + alpha(gamma).  The cell indexed by a minimal representative has
weights given by its inversion set (the positive real roots sent negative
by the inverse), so a valid flow has strictly positive weights on every
cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .roots import CartanDatum, CorootVector, pairing, two_rho_coroot
from .weyl import AffineRoot, AffineWeylGroup, WeylElement


class OneParamSubgroup(NamedTuple):
    k: int
    gamma: CorootVector


@dataclass(frozen=True)
class FlowReport:
    condition_a: bool  # alpha(gamma) < 0 for every positive root
    condition_b: bool  # k > max |alpha(gamma)| over all roots
    max_abs_pairing: int
    witness_a: Optional[tuple]  # positive root with alpha(gamma) >= 0
    witness_b: Optional[tuple]  # root realizing |alpha(gamma)| >= k

    @property
    def valid(self) -> bool:
        return self.condition_a and self.condition_b


def validate_flow(datum: CartanDatum, phi: OneParamSubgroup) -> FlowReport:
    """Check the two attraction conditions; failures are data, not errors."""
    if len(phi.gamma) != datum.rank:
        raise ValueError(
            f"gamma has {len(phi.gamma)} coordinates, expected {datum.rank}"
        )
    witness_a = None
    top = None
    max_abs = 0
    for alpha in datum.positive_roots:
        value = pairing(datum, alpha, phi.gamma)
        if value >= 0 and witness_a is None:
            witness_a = alpha
        if top is None or abs(value) > max_abs:
            max_abs = abs(value)
            top = alpha
    witness_b = top if max_abs >= phi.k else None
    return FlowReport(
        condition_a=witness_a is None,
        condition_b=phi.k > max_abs,
        max_abs_pairing=max_abs,
        witness_a=witness_a,
        witness_b=witness_b,
    )


def canonical_flow(datum: CartanDatum) -> OneParamSubgroup:
    """(2h-1, -2rho^vee); always passes both attraction conditions."""
    gamma = tuple(-c for c in two_rho_coroot(datum))
    return OneParamSubgroup(2 * datum.coxeter_number - 1, gamma)


def affine_pairing(datum: CartanDatum, phi: OneParamSubgroup, theta: AffineRoot) -> int:
    """Weight of the flow on the root space of a real or imaginary root."""
    if theta.level == 0 and not any(theta.finite):
        raise ValueError("(0, 0) is not an affine root")
    return theta.level * phi.k + pairing(datum, theta.finite, phi.gamma)


def inversion_set(
    group: AffineWeylGroup, lam: WeylElement, parabolic: Iterable[int] = ()
) -> tuple:
    """Positive real roots sent negative by the inverse of a minimal rep.

    Read off the canonical reduced word i1..in: the inversions are
    s_{i1}...s_{i(k-1)} applied to the i_k-th simple affine root, one per
    letter, so the count equals the length.
    """
    lam = group.min_coset_rep(lam, parabolic)
    word = group.reduced_word(lam)
    out = []
    prefix = group.identity
    for i in word:
        out.append(group.apply(prefix, group.simple_roots[i]))
        prefix = group.multiply(prefix, group.gens[i])
    return tuple(out)


def cell_weights(
    group: AffineWeylGroup,
    lam: WeylElement,
    phi: OneParamSubgroup,
    parabolic: Iterable[int] = (),
) -> tuple:
    """Flow weights on the cell of a minimal representative, sorted."""
    weights = [
        affine_pairing(group.datum, phi, theta)
        for theta in inversion_set(group, lam, parabolic)
    ]
    return tuple(sorted(weights))
