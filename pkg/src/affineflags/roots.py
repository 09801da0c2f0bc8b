"""Finite root-system arithmetic for the classical types A, B, C, D.

Roots are integer coordinate tuples in the simple-root basis, coroots are
integer tuples in the simple-coroot basis, and every pairing is routed
through the Cartan matrix, so all arithmetic stays in exact integers.
The convention is ``cartan[i][j] = <alpha_i, alpha_j^vee>``: row index is
the root, column index is the coroot.

Positive roots are generated by root-string closure from the Cartan matrix
rather than read from tables, and are ordered by height then
lexicographically, which fixes the serialization order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

RootVector = tuple  # coordinates in the simple-root basis
CorootVector = tuple  # coordinates in the simple-coroot basis

#: (type letter, minimal rank, maximal rank) for the supported simple types
SUPPORTED_TYPES = {"A": (1, 8), "B": (2, 8), "C": (2, 8), "D": (4, 8)}


@dataclass(frozen=True)
class CartanDatum:
    """Cartan matrix plus the derived data of a finite simple root system."""

    type_letter: str
    rank: int
    cartan: tuple  # rank x rank, rows of ints
    positive_roots: tuple  # RootVectors, height-then-lex order
    highest_root: RootVector
    marks: tuple  # coordinates of the highest root
    coxeter_number: int
    symmetrizer: tuple  # d_i with d_j*cartan[i][j] == d_i*cartan[j][i]

    def __repr__(self):
        return f"CartanDatum({self.type_letter}{self.rank})"

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    def simple_root(self, i: int) -> RootVector:
        coords = [0] * self.rank
        coords[i] = 1
        return tuple(coords)

    def is_root(self, beta: RootVector) -> bool:
        """Whether ``beta`` is a root (positive or negative)."""
        if beta in self._positive_set:
            return True
        return tuple(-c for c in beta) in self._positive_set

    @cached_property
    def _positive_set(self):
        return frozenset(self.positive_roots)


def _cartan_matrix(type_letter: str, rank: int) -> tuple:
    """Cartan matrix in the row-root / column-coroot convention."""
    c = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        c[i][i] = 2
    for i in range(rank - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    if type_letter == "B" and rank >= 2:
        # last simple root short: the long neighbour evaluates to -2 on it
        c[rank - 2][rank - 1] = -2
        c[rank - 1][rank - 2] = -1
    elif type_letter == "C" and rank >= 2:
        c[rank - 2][rank - 1] = -1
        c[rank - 1][rank - 2] = -2
    elif type_letter == "D":
        c[rank - 2][rank - 1] = c[rank - 1][rank - 2] = 0
        c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1
    return tuple(tuple(row) for row in c)


def _pairing_with_simple_coroot(cartan, beta, i: int) -> int:
    """<beta, alpha_i^vee> for a root-lattice vector beta."""
    return sum(b * cartan[j][i] for j, b in enumerate(beta))


def _positive_roots_by_closure(cartan, rank: int) -> tuple:
    """Generate the positive roots by root-string closure, height by height.

    For a known positive root beta and simple root alpha_i, beta+alpha_i is
    a root exactly when the string length q - <beta, alpha_i^vee> is at
    least 1, where q counts how far the string extends below beta.  Roots
    below beta in the string have smaller height, so generating by
    increasing height keeps every lookup inside the known set.
    """
    simples = []
    for i in range(rank):
        coords = [0] * rank
        coords[i] = 1
        simples.append(tuple(coords))
    known = set(simples)
    layer = list(simples)
    while layer:
        next_layer = []
        for beta in layer:
            for i in range(rank):
                if beta == simples[i]:
                    continue
                q = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in known:
                        q += 1
                    else:
                        break
                p = q - _pairing_with_simple_coroot(cartan, beta, i)
                if p >= 1:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        next_layer.append(up)
        layer = next_layer
    return tuple(sorted(known, key=lambda r: (sum(r), r)))


def _symmetrizer(cartan, rank: int) -> tuple:
    """Positive integers d_i with d_j*cartan[i][j] == d_i*cartan[j][i]."""
    d = [None] * rank
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(rank):
            if cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                todo.append(j)
    assert all(x is not None for x in d), "Dynkin diagram must be connected"
    scale = 1
    for x in d:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    out = tuple(int(x * scale) for x in d)
    g = 0
    for x in out:
        g = _gcd(g, x)
    return tuple(x // g for x in out)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def build_cartan(type_letter: str, rank: int) -> CartanDatum:
    """Construct the full root-system datum for a supported (type, rank).

    Raises ValueError for invalid combinations (A needs rank >= 1, B and C
    rank >= 2, D rank >= 4; all capped at rank 8).
    """
    if type_letter not in SUPPORTED_TYPES:
        raise ValueError(
            f"unsupported type {type_letter!r}; expected one of A, B, C, D"
        )
    lo, hi = SUPPORTED_TYPES[type_letter]
    if not lo <= rank <= hi:
        raise ValueError(
            f"type {type_letter} needs rank between {lo} and {hi}, got {rank}"
        )
    cartan = _cartan_matrix(type_letter, rank)
    positive = _positive_roots_by_closure(cartan, rank)
    heights = [sum(r) for r in positive]
    top = max(heights)
    highest = [r for r in positive if sum(r) == top]
    assert len(highest) == 1, "highest root must be unique"
    marks = highest[0]
    datum = CartanDatum(
        type_letter=type_letter,
        rank=rank,
        cartan=cartan,
        positive_roots=positive,
        highest_root=marks,
        marks=marks,
        coxeter_number=1 + sum(marks),
        symmetrizer=_symmetrizer(cartan, rank),
    )
    return datum


def pairing(datum: CartanDatum, beta: RootVector, mu: CorootVector) -> int:
    """Evaluate the root-lattice vector ``beta`` on the coroot ``mu``.

    Bilinear, integer valued; pairing(alpha_i, alpha_j^vee) is the Cartan
    entry ``cartan[i][j]``.
    """
    if len(beta) != datum.rank or len(mu) != datum.rank:
        raise ValueError(
            f"dimension mismatch: rank {datum.rank}, got {len(beta)} and {len(mu)}"
        )
    return sum(
        beta[i] * datum.cartan[i][j] * mu[j]
        for i in range(datum.rank)
        for j in range(datum.rank)
    )


def coroot_of(datum: CartanDatum, alpha: RootVector) -> CorootVector:
    """Coroot of a root, in simple-coroot coordinates.

    alpha^vee = sum_i c_i (d_i / d_alpha) alpha_i^vee for alpha = sum c_i
    alpha_i, where d measures half the squared length in the symmetrizer
    normalization.  The result is integral for any root.
    """
    d = datum.symmetrizer
    norm = Fraction(0)
    for i, ci in enumerate(alpha):
        if ci == 0:
            continue
        for j, cj in enumerate(alpha):
            if cj:
                norm += ci * cj * datum.cartan[i][j] * d[j]
    d_alpha = norm / 2
    coords = [Fraction(c * d[i], 1) / d_alpha for i, c in enumerate(alpha)]
    assert all(x.denominator == 1 for x in coords), f"non-integral coroot of {alpha}"
    return tuple(int(x) for x in coords)


def _solve_fraction_system(matrix, rhs):
    """Solve matrix*x = rhs exactly by Gaussian elimination over Fraction."""
    n = len(rhs)
    a = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def two_rho_coroot(datum: CartanDatum) -> CorootVector:
    """Sum of all positive coroots, checked against twice the fundamental
    coweight sum computed independently from the Cartan matrix."""
    total = [0] * datum.rank
    for alpha in datum.positive_roots:
        for i, c in enumerate(coroot_of(datum, alpha)):
            total[i] += c
    via_sum = tuple(total)

    # 2 rho^vee = 2 * sum_i omega_i^vee, with omega_i^vee the i-th column
    # of the inverse Cartan matrix in simple-coroot coordinates.
    ones = [2] * datum.rank
    via_coweights = _solve_fraction_system(datum.cartan, ones)
    assert all(x.denominator == 1 for x in via_coweights)
    via_coweights = tuple(int(x) for x in via_coweights)
    assert via_sum == via_coweights, (
        f"positive-coroot sum {via_sum} != twice coweight sum {via_coweights}"
    )
    return via_sum


def finite_reflection(datum: CartanDatum, alpha: RootVector, beta: RootVector) -> RootVector:
    """Reflect ``beta`` in the root ``alpha`` inside the finite root lattice."""
    k = pairing(datum, beta, coroot_of(datum, alpha))
    return tuple(b - k * a for b, a in zip(beta, alpha))


def datum_to_json(datum: CartanDatum) -> dict:
    """Canonical JSON document for a CartanDatum."""
    return {
        "type": datum.type_letter,
        "rank": datum.rank,
        "cartan": [list(row) for row in datum.cartan],
        "positive_roots": [list(r) for r in datum.positive_roots],
        "highest_root": list(datum.highest_root),
        "marks": list(datum.marks),
        "coxeter_number": datum.coxeter_number,
    }


def all_supported_data(max_rank: int = 8):
    """Yield every supported CartanDatum with rank at most ``max_rank``."""
    for letter, (lo, hi) in SUPPORTED_TYPES.items():
        for rank in range(lo, min(hi, max_rank) + 1):
            yield build_cartan(letter, rank)
