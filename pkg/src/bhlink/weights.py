"""Weight systems (w; d): solving A.w = d.1, reduction, index, well-formedness.

A weight system pairs a vector of positive integer weights with the common
degree of the defining monomials.  Everything downstream consumes only the
reduced invariants u_i = d / gcd(d, w_i), v_i = w_i / gcd(d, w_i), which are
invariant under joint rescaling of (w, d); primitive normalization divides
weights *and* degree by their joint gcd.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import NonPositiveWeights, NoSplit, SingularSystem
from .polynomial import InvertiblePolynomial

__all__ = [
    "WeightSystem",
    "ReducedWeights",
    "SplitDecomposition",
    "solve_weights",
    "wellformed_space",
]


@dataclass(frozen=True)
class ReducedWeights:
    """Componentwise u_i = d/gcd(d, w_i), v_i = w_i/gcd(d, w_i); gcd(u_i, v_i) = 1."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.u, self.v))


@dataclass(frozen=True)
class SplitDecomposition:
    """A coprime factorization d = m2 * m3 with weights w_i = m3 v_i on the
    2-element group and w_i = m2 v_i on the 3-element group.

    ``v`` is indexed by the original variable positions; ``group3`` carries
    the m3 factor and ``group2`` the m2 factor.
    """

    m2: int
    m3: int
    v: tuple[int, ...]
    group3: tuple[int, int]
    group2: tuple[int, int, int]

    @property
    def degree(self) -> int:
        return self.m2 * self.m3


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "degree", int(self.degree))
        if len(self.weights) < 2:
            raise ValueError("a weight system needs at least two weights")
        if any(w < 1 for w in self.weights):
            raise NonPositiveWeights(f"weights must be positive: {self.weights}")
        if any(w >= self.degree for w in self.weights):
            raise NonPositiveWeights(
                f"every weight must be smaller than the degree: {self.weights}, d={self.degree}"
            )

    @property
    def n_vars(self) -> int:
        return len(self.weights)

    def normalized(self) -> WeightSystem:
        """Divide weights and degree by their joint gcd."""
        g = gcd(self.degree, *self.weights)
        if g == 1:
            return self
        return WeightSystem(tuple(w // g for w in self.weights), self.degree // g)

    def fano_index(self) -> int:
        """|w| - d.  Positive exactly when the quotient orbifold is Fano."""
        return sum(self.weights) - self.degree

    def reduced(self) -> ReducedWeights:
        us, vs = [], []
        for w in self.weights:
            g = gcd(self.degree, w)
            us.append(self.degree // g)
            vs.append(w // g)
        return ReducedWeights(tuple(us), tuple(vs))

    def is_wellformed_space(self) -> bool:
        return wellformed_space(self.weights)

    def is_wellformed_hypersurface(self) -> bool:
        """Well-formed ambient space and every codimension-2 gcd divides d."""
        if not self.is_wellformed_space():
            return False
        idx = range(len(self.weights))
        for drop in combinations(idx, 2):
            rest = [self.weights[i] for i in idx if i not in drop]
            if self.degree % gcd(*rest) != 0:
                return False
        return True

    def split(
        self,
        grouping: tuple[tuple[int, int], tuple[int, int, int]] = ((0, 1), (2, 3, 4)),
    ) -> SplitDecomposition:
        """The (m2, m3) factorization of Theorem-style five-variable data.

        ``grouping`` names the two indices carrying the m3 factor and the
        three carrying m2.  m2 is read off as u_i on the m3 group (the two
        values must agree); raises :class:`NoSplit` when any divisibility or
        coprimality requirement fails.
        """
        if len(self.weights) != 5:
            raise NoSplit("splits are defined for five-variable systems")
        g3, g2 = tuple(grouping[0]), tuple(grouping[1])
        if sorted(g3 + g2) != list(range(5)) or len(g3) != 2:
            raise NoSplit(f"grouping {grouping} does not partition the five indices")
        d = self.degree
        m2_values = {d // gcd(d, self.weights[i]) for i in g3}
        if len(m2_values) != 1:
            raise NoSplit(f"u_i disagree on the m3 group: {sorted(m2_values)}")
        m2 = m2_values.pop()
        if d % m2 != 0:
            raise NoSplit(f"{m2} does not divide the degree {d}")
        m3 = d // m2
        if gcd(m2, m3) != 1:
            raise NoSplit(f"gcd(m2, m3) = gcd({m2}, {m3}) != 1")
        v = [0] * 5
        for i in g3:
            if self.weights[i] % m3 != 0:
                raise NoSplit(f"m3 = {m3} does not divide w_{i} = {self.weights[i]}")
            v[i] = self.weights[i] // m3
        for i in g2:
            if self.weights[i] % m2 != 0:
                raise NoSplit(f"m2 = {m2} does not divide w_{i} = {self.weights[i]}")
            v[i] = self.weights[i] // m2
        return SplitDecomposition(m2, m3, tuple(v), g3, g2)

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.weights))}; d={self.degree})"


def wellformed_space(weights: tuple[int, ...] | list[int]) -> bool:
    """True iff every n-element subset of the n+1 weights has gcd 1."""
    idx = range(len(weights))
    for drop in idx:
        rest = [weights[i] for i in idx if i != drop]
        if gcd(*rest) != 1:
            return False
    return True


def solve_weights(poly: InvertiblePolynomial) -> WeightSystem:
    """The unique primitive positive solution of A.w = d.(1, ..., 1).

    Solves the rational system with d = 1, clears denominators and divides
    weights and degree by their joint gcd.  Raises :class:`SingularSystem`
    when det A = 0 and :class:`NonPositiveWeights` when the ray has a
    non-positive or degenerate entry.
    """
    matrix = poly.exponent_matrix()
    n = poly.n_vars
    rows = [[Fraction(x) for x in row] + [Fraction(1)] for row in matrix]

    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise SingularSystem("exponent matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]

    solution = [rows[r][n] for r in range(n)]
    denominators = [x.denominator for x in solution] + [1]
    scale = 1
    for den in denominators:
        scale = scale * den // gcd(scale, den)
    ints = [int(x * scale) for x in solution] + [scale]
    if any(x <= 0 for x in ints[:-1]):
        raise NonPositiveWeights(f"weight ray {ints[:-1]} has a non-positive entry")
    g = gcd(*ints)
    ints = [x // g for x in ints]
    return WeightSystem(tuple(ints[:-1]), ints[-1])
