"""Topological invariants of the link of a weighted-homogeneous singularity.

For a weight system (w_0..w_n; d) with reduced invariants (u_i, v_i) the link
is a (2n-1)-manifold whose middle homology is computed here three ways and
cross-checked:

* the Milnor number  mu = prod (d - w_i) / w_i  equals the root count of the
  expanded divisor;
* the middle Betti number equals both the coefficient sum of the expanded
  divisor and the direct inclusion-exclusion sum over all 2^(n+1) index
  subsets;
* the torsion of the middle homology group comes from the subset recursion
  on gcds of the u_i (the c-numbers) weighted by the parity-filtered
  inclusion-exclusion sums (the k-numbers): d_j is the product of every c
  whose k is at least j, and the torsion group is the direct sum of Z/d_j.

The torsion recursion is a theorem for chain type, cycle type and iterated
Thom-Sebastiani sums of these (hence for every invertible polynomial) and a
conjecture otherwise; callers that care can check whether the weight system
admits an invertible representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import floor, gcd, lcm
from enum import Enum

from .divisor import CyclotomicDivisor, expand_link_divisor
from .errors import (
    CrossCheckFailed,
    NonIntegralC,
    NonIntegralMilnor,
    PoleAtT,
    PreconditionFailed,
)
from .weights import SplitDecomposition, WeightSystem

__all__ = [
    "HomologyProfile",
    "TorsionWorksheet",
    "DiffeoType",
    "link_divisor",
    "milnor_number",
    "betti",
    "betti_subset_sum",
    "orlik_torsion",
    "homology_profile",
    "is_rational_homology_sphere",
    "alpha",
    "beta",
    "coprime_profile",
    "branched_cover",
]


@dataclass(frozen=True)
class HomologyProfile:
    """(Betti number, torsion coefficient chain, Milnor number, degree).

    ``torsion`` lists d_1 >= d_2 >= ... with d_{j+1} | d_j and unit factors
    dropped; this tuple plus b3, mu and the degree is the whole comparison
    key for twin detection.
    """

    b3: int
    torsion: tuple[int, ...]
    mu: int
    degree: int

    def torsion_order(self) -> int:
        order = 1
        for t in self.torsion:
            order *= t
        return order

    def torsion_str(self) -> str:
        """Group notation, e.g. ``Z_90+Z_18^3``; ``1`` for the trivial group."""
        if not self.torsion:
            return "1"
        parts = []
        for value in dict.fromkeys(self.torsion):
            count = self.torsion.count(value)
            parts.append(f"Z_{value}" + (f"^{count}" if count > 1 else ""))
        return "+".join(parts)


@dataclass(frozen=True)
class TorsionWorksheet:
    """The c / k numbers of the torsion recursion, keyed by index subsets.

    ``c`` values are positive integers (the recursion divisions are asserted
    exact), ``k`` values are exact rationals, ``r`` = floor(max k).  The full
    index set has no complement gcd; its parity weight is 0 so it never
    enters any d_j, and its c is recorded as 1.
    """

    c: dict[tuple[int, ...], int]
    k: dict[tuple[int, ...], Fraction]
    r: int


class DiffeoType(str, Enum):
    STANDARD = "Standard"
    KERVAIRE = "Kervaire"
    NOT_HOMOTOPY_SPHERE = "NotHomotopySphere"
    INDETERMINATE = "Indeterminate"


def link_divisor(ws: WeightSystem) -> CyclotomicDivisor:
    """The fully expanded divisor of the link's characteristic polynomial."""
    return expand_link_divisor(ws.reduced().pairs())


def milnor_number(ws: WeightSystem) -> int:
    """prod (d - w_i) / w_i, exact.

    Individual factors may be fractional; only the full product must be an
    integer, otherwise the data is not a valid link.
    """
    value = Fraction(1)
    for w in ws.weights:
        value *= Fraction(ws.degree - w, w)
    if value.denominator != 1:
        raise NonIntegralMilnor(f"Milnor product {value} is not an integer for {ws}")
    return int(value)


def betti_subset_sum(ws: WeightSystem) -> int:
    """Middle Betti number by direct inclusion-exclusion over index subsets.

    Independent of the divisor ring: sums (-1)^(n+1-s) * prod(u)/ (prod(v) *
    lcm(u)) over all 2^(n+1) subsets, the empty subset contributing
    (-1)^(n+1).
    """
    u, v = ws.reduced().u, ws.reduced().v
    n1 = len(u)
    total = Fraction(0)
    for size in range(n1 + 1):
        sign = (-1) ** (n1 - size)
        for subset in combinations(range(n1), size):
            num = 1
            den = 1
            for i in subset:
                num *= u[i]
                den *= v[i]
            if subset:
                den *= lcm(*(u[i] for i in subset))
            total += sign * Fraction(num, den)
    if total.denominator != 1:
        raise NonIntegralMilnor(f"Betti subset sum {total} is not an integer")
    return int(total)


def betti(ws: WeightSystem) -> int:
    """Middle Betti number, computed along both routes and asserted equal."""
    from_divisor = link_divisor(ws).coefficient_sum()
    from_subsets = betti_subset_sum(ws)
    if from_divisor != from_subsets:
        raise CrossCheckFailed(
            f"betti mismatch for {ws}: divisor route {from_divisor}, subset route {from_subsets}"
        )
    return from_divisor


def is_rational_homology_sphere(ws: WeightSystem) -> bool:
    return betti(ws) == 0


def orlik_torsion(ws: WeightSystem) -> tuple[TorsionWorksheet, tuple[int, ...]]:
    """Torsion coefficients of the middle homology via the subset recursion.

    c over the ordered subsets S of {0..n}: the gcd of the u_i *outside* S
    divided by the product of c over all proper subsets of S; the division
    must be exact (:class:`NonIntegralC` otherwise).  k weights each subset
    by the parity epsilon of n - |S| + 1 times the inclusion-exclusion sum
    over its own subsets.  Unit coefficients are dropped from the returned
    chain.
    """
    red = ws.reduced()
    u, v = red.u, red.v
    n1 = len(u)
    indices = range(n1)
    subsets: list[tuple[int, ...]] = []
    for size in range(n1 + 1):
        subsets.extend(combinations(indices, size))

    c: dict[tuple[int, ...], int] = {}
    for subset in subsets:
        outside = [u[i] for i in indices if i not in subset]
        if not outside:
            # full set: epsilon weight is 0, value never used
            c[subset] = 1
            continue
        numerator = gcd(*outside)
        denominator = 1
        for size in range(len(subset)):
            for proper in combinations(subset, size):
                denominator *= c[proper]
        if numerator % denominator != 0:
            raise NonIntegralC(
                f"c-recursion inexact at subset {subset} for {ws}: "
                f"{numerator} / {denominator}"
            )
        c[subset] = numerator // denominator

    k: dict[tuple[int, ...], Fraction] = {}
    for subset in subsets:
        s = len(subset)
        # epsilon_{n-s+1} with n = n1 - 1: zero for even n1 - s
        if (n1 - s) % 2 == 0:
            k[subset] = Fraction(0)
            continue
        total = Fraction(0)
        for size in range(s + 1):
            for sub in combinations(subset, size):
                num = 1
                den = 1
                for i in sub:
                    num *= u[i]
                    den *= v[i]
                den *= lcm(*(u[i] for i in sub)) if sub else 1
                total += (-1) ** (s - size) * Fraction(num, den)
        k[subset] = total

    r = floor(max(k.values()))
    torsion = []
    for j in range(1, r + 1):
        dj = 1
        for subset in subsets:
            if k[subset] >= j:
                dj *= c[subset]
        if dj > 1:
            torsion.append(dj)
    return TorsionWorksheet(c, k, r), tuple(torsion)


def homology_profile(ws: WeightSystem) -> HomologyProfile:
    """Bundle Betti number, torsion chain, Milnor number and degree.

    Cross-checks on every call: the product-formula Milnor number equals the
    divisor root count, and for rational homology spheres the product of the
    torsion coefficients equals |Delta(1)|.
    """
    divisor = link_divisor(ws)
    b = divisor.coefficient_sum()
    b_direct = betti_subset_sum(ws)
    if b != b_direct:
        raise CrossCheckFailed(
            f"betti mismatch for {ws}: divisor route {b}, subset route {b_direct}"
        )
    mu = milnor_number(ws)
    if mu != divisor.root_count():
        raise CrossCheckFailed(
            f"Milnor mismatch for {ws}: product {mu}, divisor root count {divisor.root_count()}"
        )
    _, torsion = orlik_torsion(ws)
    if b == 0:
        order = divisor.delta_order_at_one()
        chain_order = 1
        for t in torsion:
            chain_order *= t
        if chain_order != order:
            raise CrossCheckFailed(
                f"torsion order mismatch for {ws}: subset recursion {chain_order}, "
                f"|Delta(1)| = {order}"
            )
    return HomologyProfile(b3=b, torsion=torsion, mu=mu, degree=ws.degree)


def alpha(split: SplitDecomposition) -> Fraction:
    """m2/(v0 v1) - 1/v0 - 1/v1 on the m3 group; the torsion exponent is
    alpha + 1 for the rational-homology-sphere split cases."""
    i, j = split.group3
    v0, v1 = split.v[i], split.v[j]
    return Fraction(split.m2, v0 * v1) - Fraction(1, v0) - Fraction(1, v1)


def beta(split: SplitDecomposition) -> Fraction:
    """The quadratic expression in m3 and the m2-group v's; equals 1 exactly
    when the link of the split data is a rational homology sphere."""
    a, b_, c_ = (split.v[i] for i in split.group2)
    m3 = split.m3
    numerator = m3 * m3 - (a + b_ + c_) * m3 + (a * b_ + a * c_ + b_ * c_)
    return Fraction(numerator, a * b_ * c_)


def coprime_profile(ws: WeightSystem) -> HomologyProfile:
    """Closed form for systems with gcd(d, w_i) = 1 for every i.

    Such links satisfy mu + 1 = d (b + 1); when the link is a rational
    homology sphere the torsion is a single Z_d and mu = d - 1.  The closed
    form is asserted against the general computation and the general profile
    is returned.
    """
    if any(gcd(ws.degree, w) != 1 for w in ws.weights):
        raise PreconditionFailed(f"gcd(d, w_i) != 1 for some weight of {ws}")
    profile = homology_profile(ws)
    if profile.mu + 1 != ws.degree * (profile.b3 + 1):
        raise CrossCheckFailed(
            f"coprime identity mu + 1 = d(b+1) fails for {ws}: "
            f"{profile.mu + 1} != {ws.degree} * {profile.b3 + 1}"
        )
    if profile.b3 == 0:
        expected = (ws.degree,) if ws.degree > 1 else ()
        if profile.torsion != expected or profile.mu != ws.degree - 1:
            raise CrossCheckFailed(
                f"coprime closed form disagrees with the general profile for {ws}"
            )
    return profile


def branched_cover(ws: WeightSystem, p: int) -> tuple[WeightSystem, DiffeoType]:
    """The p-fold cover system z0^p + f and its 9-sphere diffeomorphism label.

    The cover of a five-variable system is weighted homogeneous for degree
    lcm(p, d) with a new weight d'/p prepended and the old weights scaled by
    d'/d; the result is primitively normalized (this is the unique
    homogeneity-preserving choice up to scaling).  When the 9-dimensional
    link is a homotopy sphere, i.e. |Delta(1)| = 1, the value Delta(-1) mod 8
    distinguishes the standard sphere (+-1) from the Kervaire sphere (+-3).
    """
    if ws.n_vars != 5:
        raise PreconditionFailed("branched covers are built over five-variable systems")
    if p < 2:
        raise PreconditionFailed("cover order must be at least 2")
    d2 = lcm(p, ws.degree)
    scale = d2 // ws.degree
    cover = WeightSystem((d2 // p,) + tuple(w * scale for w in ws.weights), d2).normalized()
    divisor = link_divisor(cover)
    if divisor.coefficient_sum() != 0 or divisor.delta_order_at_one() != 1:
        return cover, DiffeoType.NOT_HOMOTOPY_SPHERE
    try:
        value = divisor.delta_eval(-1)
    except PoleAtT:
        return cover, DiffeoType.INDETERMINATE
    if value.denominator != 1:
        return cover, DiffeoType.INDETERMINATE
    residue = int(value) % 8
    if residue in (1, 7):
        return cover, DiffeoType.STANDARD
    if residue in (3, 5):
        return cover, DiffeoType.KERVAIRE
    return cover, DiffeoType.INDETERMINATE
