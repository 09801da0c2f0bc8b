"""The affine Weyl group acting on the level-extended root lattice.

Elements are integer matrices on Z*delta + Q with basis (delta, alpha_1,
..., alpha_r) and delta fixed, so the affine reflection formula

    r_(n,alpha): (m, beta) |-> (m, beta) - <beta, alpha^vee> * (n, alpha)

is exact and equality of group elements is decidable.  The simple affine
roots are (1, alpha_0) at index 0 (alpha_0 the highest root) followed by
(0, -alpha_s) for the finite generators; an affine root is positive when
its level is positive, or its level is zero and its finite part is a
negative root.

Lengths and reduced words come from descent stripping (each strip drops
the length by exactly 1, so termination is unconditional), minimal coset
representatives from stripping only the descents in the parabolic subset,
and the enumeration of W/W_I walks the coset graph breadth-first by left
multiplication.  Ties always break toward the lowest generator index, so
canonical words and enumeration orders are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import kernels
from .roots import CartanDatum, coroot_of, pairing


class AffineRoot(NamedTuple):
    """Pair (level, finite root part); real when the finite part is nonzero."""

    level: int
    finite: tuple

    @property
    def is_real(self) -> bool:
        return any(self.finite)

    @property
    def is_imaginary(self) -> bool:
        return not any(self.finite) and self.level != 0

    def vector(self) -> tuple:
        return (self.level,) + tuple(self.finite)

    def negated(self) -> "AffineRoot":
        return AffineRoot(-self.level, tuple(-c for c in self.finite))


@dataclass(frozen=True)
class WeylElement:
    """Affine Weyl group element as a flat row-major integer matrix."""

    mat: tuple
    dim: int

    def rows(self) -> list:
        n = self.dim
        return [list(self.mat[i * n : (i + 1) * n]) for i in range(n)]

    def __repr__(self):
        return f"WeylElement(dim={self.dim})"


def is_positive(theta: AffineRoot) -> bool:
    """Positivity under the level convention; rejects the zero vector."""
    if theta.level == 0 and not any(theta.finite):
        raise ValueError("(0, 0) is not an affine root")
    return not kernels.is_negative_root(theta.vector())


class AffineWeylGroup:
    """Affine Weyl group of a finite Cartan datum, with parabolic quotients."""

    def __init__(self, datum: CartanDatum, kernel=None):
        self.datum = datum
        self.rank = datum.rank
        self.dim = datum.rank + 1
        self._k = kernel if kernel is not None else kernels.active
        n = self.dim

        simples = [AffineRoot(1, datum.highest_root)]
        for i in range(self.rank):
            simples.append(AffineRoot(0, tuple(-c for c in datum.simple_root(i))))
        self.simple_roots = tuple(simples)
        self._simples_flat = tuple(
            c for theta in simples for c in theta.vector()
        )
        self._full_mask = (1 << n) - 1

        ident = [0] * (n * n)
        for i in range(n):
            ident[i * n + i] = 1
        self.identity = WeylElement(tuple(ident), n)

        self._reflection_cache: dict = {}
        self.gens = tuple(self.reflection(theta) for theta in simples)
        self._word_cache: dict = {self.identity.mat: ()}
        self._minrep_cache: dict = {}

    # -- construction ------------------------------------------------

    def reflection(self, theta: AffineRoot) -> WeylElement:
        """The affine reflection fixing the hyperplane of a real root."""
        cached = self._reflection_cache.get(theta)
        if cached is not None:
            return cached
        if not theta.is_real:
            raise ValueError(f"no reflection for imaginary root {theta}")
        if not self.datum.is_root(theta.finite):
            raise ValueError(f"finite part of {theta} is not a root")
        n = self.dim
        cov = coroot_of(self.datum, theta.finite)
        tvec = theta.vector()
        mat = [0] * (n * n)
        mat[0] = 1  # delta is fixed
        for j in range(1, n):
            alpha_j = self.datum.simple_root(j - 1)
            k = pairing(self.datum, alpha_j, cov)
            mat[j * n + j] = 1
            if k:
                for i in range(n):
                    mat[i * n + j] -= k * tvec[i]
        element = WeylElement(tuple(mat), n)
        self._reflection_cache[theta] = element
        return element

    def element_from_word(self, word: Iterable[int]) -> WeylElement:
        """Product of generators; the word need not be reduced."""
        mat = self.identity.mat
        for i in word:
            if not 0 <= i <= self.rank:
                raise ValueError(f"generator index {i} out of range 0..{self.rank}")
            mat = self._k.mat_mul(mat, self.gens[i].mat, self.dim)
        return WeylElement(mat, self.dim)

    # -- group operations --------------------------------------------

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return WeylElement(self._k.mat_mul(a.mat, b.mat, self.dim), self.dim)

    def invert(self, a: WeylElement) -> WeylElement:
        word = self.reduced_word(a)
        return self.element_from_word(reversed(word))

    def apply(self, w: WeylElement, theta: AffineRoot) -> AffineRoot:
        vec = self._k.mat_vec(w.mat, theta.vector(), self.dim)
        return AffineRoot(vec[0], tuple(vec[1:]))

    # -- lengths, words, descents ------------------------------------

    def descents(self, w: WeylElement, side: str = "right") -> frozenset:
        """Generator indices i with l(w s_i) < l(w) (or s_i w for 'left')."""
        if side == "left":
            w = self.invert(w)
        elif side != "right":
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        n = self.dim
        out = []
        for i in range(n):
            image = self._k.mat_vec(
                w.mat, self._simples_flat[i * n : (i + 1) * n], n
            )
            if self._k.is_negative_root(image):
                out.append(i)
        return frozenset(out)

    def _strip_word(self, w: WeylElement, mask: int) -> tuple:
        """Strip lowest masked right descents; return (stripped, indices)."""
        mat = w.mat
        n = self.dim
        seq = []
        while True:
            i = self._k.lowest_descent(mat, self._simples_flat, n, mask)
            if i < 0:
                return WeylElement(mat, n), tuple(seq)
            mat = self._k.mat_mul(mat, self.gens[i].mat, n)
            seq.append(i)

    def reduced_word(self, w: WeylElement) -> tuple:
        """Canonical reduced word (lowest right descent stripped first)."""
        cached = self._word_cache.get(w.mat)
        if cached is not None:
            return cached
        stripped, seq = self._strip_word(w, self._full_mask)
        assert stripped == self.identity, "descent stripping must reach identity"
        word = tuple(reversed(seq))
        self._word_cache[w.mat] = word
        return word

    def length(self, w: WeylElement) -> int:
        return len(self.reduced_word(w))

    # -- parabolic quotients -----------------------------------------

    def parabolic(self, members: Iterable[int]) -> frozenset:
        """Validated parabolic subset of generator indices.

        Any proper subset of the affine generator set spans a finite
        reflection group (removing a node from an affine diagram leaves a
        finite-type diagram), so properness is the only requirement.
        """
        subset = frozenset(members)
        for i in subset:
            if not 0 <= i <= self.rank:
                raise ValueError(f"generator index {i} out of range 0..{self.rank}")
        if len(subset) == self.dim:
            raise ValueError(
                "parabolic subset equals the full generator set; the quotient "
                "would be a point and the subgroup the whole infinite group"
            )
        return subset

    def _mask(self, parabolic: frozenset) -> int:
        m = 0
        for i in parabolic:
            m |= 1 << i
        return m

    def min_coset_rep(self, w: WeylElement, parabolic: Iterable[int]) -> WeylElement:
        """Minimal length representative of the coset w * W_I."""
        mask = self._mask(self.parabolic(parabolic))
        return self._min_rep(w, mask)

    def _min_rep(self, w: WeylElement, mask: int) -> WeylElement:
        key = (w.mat, mask)
        hit = self._minrep_cache.get(key)
        if hit is not None:
            return hit
        stripped, _ = self._strip_word(w, mask)
        self._minrep_cache[key] = stripped
        return stripped

    def i_length(self, w: WeylElement, parabolic: Iterable[int]) -> int:
        return self.length(self.min_coset_rep(w, parabolic))

    def enumerate_min_reps(
        self, parabolic: Iterable[int], max_length: int
    ) -> tuple:
        """All minimal coset representatives with I-length <= max_length.

        Breadth-first from the identity by left multiplication: stripping a
        left descent of a minimal representative yields a shorter minimal
        representative, so every representative of length d+1 appears as
        s_i * (representative of length d).  Output is sorted by (length,
        canonical word).
        """
        if max_length < 0:
            raise ValueError("max_length must be nonnegative")
        I = self.parabolic(parabolic)
        mask = self._mask(I)
        seen = {self.identity.mat}
        frontier = [self.identity]
        out = [self.identity]
        for depth in range(1, max_length + 1):
            new = []
            for v in frontier:
                for g in self.gens:
                    u = self._k.mat_mul(g.mat, v.mat, self.dim)
                    rep = self._min_rep(WeylElement(u, self.dim), mask)
                    if rep.mat in seen:
                        continue
                    if self.length(rep) == depth:
                        seen.add(rep.mat)
                        new.append(rep)
            frontier = new
            out.extend(new)
        out.sort(key=lambda w: (self.length(w), self.reduced_word(w)))
        return tuple(out)

    def parabolic_elements(self, parabolic: Iterable[int]) -> tuple:
        """All elements of the (finite) standard parabolic subgroup W_I."""
        I = self.parabolic(parabolic)
        seen = {self.identity.mat: self.identity}
        frontier = [self.identity]
        while frontier:
            new = []
            for v in frontier:
                for i in I:
                    u = self.multiply(v, self.gens[i])
                    if u.mat not in seen:
                        seen[u.mat] = u
                        new.append(u)
            frontier = new
            if len(seen) > 10**6:
                raise RuntimeError("parabolic subgroup unexpectedly large")
        return tuple(sorted(seen.values(), key=lambda w: (self.length(w), self.reduced_word(w))))

    # -- affine roots -------------------------------------------------

    def finite_roots_ordered(self) -> tuple:
        """All finite roots: positives in height-lex order, then negatives."""
        pos = self.datum.positive_roots
        return tuple(list(pos) + [tuple(-c for c in r) for r in pos])

    def positive_real_roots(self, level_bound: int) -> tuple:
        """Positive real affine roots with level <= level_bound, by level."""
        if level_bound < 0:
            raise ValueError("level_bound must be nonnegative")
        out = [AffineRoot(0, tuple(-c for c in r)) for r in self.datum.positive_roots]
        finite = self.finite_roots_ordered()
        for n in range(1, level_bound + 1):
            out.extend(AffineRoot(n, r) for r in finite)
        return tuple(out)

    # -- serialization -------------------------------------------------

    def element_to_json(self, w: WeylElement) -> dict:
        return {"word": list(self.reduced_word(w)), "matrix": w.rows()}

    def element_from_json(self, doc: dict) -> WeylElement:
        w = self.element_from_word(doc["word"])
        flat = tuple(x for row in doc["matrix"] for x in row)
        if flat != w.mat:
            raise ValueError("word and matrix fields disagree")
        return w


def simple_affine_roots(datum: CartanDatum) -> tuple:
    """The simple affine roots: (1, highest root), then (0, -alpha_s)."""
    return AffineWeylGroup(datum).simple_roots
