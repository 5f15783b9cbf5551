"""Exact arithmetic in the divisor ring of the monodromy characteristic polynomial.

The characteristic polynomial of the monodromy of a weighted-homogeneous link
is a quotient of products of polynomials t^j - 1.  Its divisor is recorded as
an integer combination of the symbols

    L_n = div(t^n - 1),

which multiply by the rule  L_a * L_b = gcd(a, b) * L_{lcm(a, b)},  extended
bilinearly.  For a weight system (w_0..w_n; d) with reduced invariants
u_i = d / gcd(d, w_i) and v_i = w_i / gcd(d, w_i), the link divisor is the
fully expanded product

    prod_i ( (1/v_i) L_{u_i}  -  L_1 ),

whose coefficients are guaranteed integral for valid data even though the
intermediate 1/v_i factors are genuinely fractional.  From the expanded
divisor sum(a_j L_j) one reads off:

* ``coefficient_sum``  sum(a_j)       = middle Betti number of the link,
* ``root_count``       sum(a_j * j)   = Milnor number,
* ``delta_order_at_one``  |prod(j^a_j)| = order of the torsion group when the
  Betti number vanishes,
* ``delta_eval``       exact rational value of prod((t^j - 1)^a_j).

All coefficients are exact rationals; integers are arbitrary precision.
Divisors are immutable values, so every operation is safe under concurrency.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .errors import NonIntegralExpansion, NonIntegralOrder, PoleAtT

__all__ = [
    "CyclotomicDivisor",
    "lambda_product",
    "expand_link_divisor",
]


class CyclotomicDivisor:
    """A finite combination sum(a_j L_j) with rational coefficients.

    Only nonzero coefficients are stored; the zero divisor has an empty term
    map.  Addition is componentwise and multiplication is the bilinear
    extension of L_a * L_b = gcd(a, b) L_{lcm(a, b)}.  L_1 is the
    multiplicative unit.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction | int] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for j, a in terms.items():
                if j < 1:
                    raise ValueError(f"divisor index must be >= 1, got {j}")
                a = Fraction(a)
                if a != 0:
                    clean[int(j)] = a
        self._terms = clean

    @classmethod
    def zero(cls) -> CyclotomicDivisor:
        return cls()

    @classmethod
    def lam(cls, n: int, coeff: Fraction | int = 1) -> CyclotomicDivisor:
        """The divisor coeff * L_n."""
        return cls({n: coeff})

    @classmethod
    def one(cls) -> CyclotomicDivisor:
        """The multiplicative unit L_1."""
        return cls({1: 1})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, j: int) -> Fraction:
        return self._terms.get(j, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self._terms.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicDivisor):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: CyclotomicDivisor) -> CyclotomicDivisor:
        out = dict(self._terms)
        for j, a in other._terms.items():
            out[j] = out.get(j, Fraction(0)) + a
        return CyclotomicDivisor(out)

    def __sub__(self, other: CyclotomicDivisor) -> CyclotomicDivisor:
        return self + (-other)

    def __neg__(self) -> CyclotomicDivisor:
        return CyclotomicDivisor({j: -a for j, a in self._terms.items()})

    def __mul__(self, other: CyclotomicDivisor | int | Fraction) -> CyclotomicDivisor:
        if isinstance(other, (int, Fraction)):
            return CyclotomicDivisor({j: a * other for j, a in self._terms.items()})
        out: dict[int, Fraction] = {}
        for j1, a1 in self._terms.items():
            for j2, a2 in other._terms.items():
                j = lcm(j1, j2)
                out[j] = out.get(j, Fraction(0)) + a1 * a2 * gcd(j1, j2)
        return CyclotomicDivisor(out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "CyclotomicDivisor(0)"
        parts = []
        for j in sorted(self._terms):
            a = self._terms[j]
            parts.append(f"{a}*L{j}" if a.denominator != 1 else f"{int(a):+d}*L{j}")
        return f"CyclotomicDivisor({' '.join(parts)})"

    # ----- link invariants -------------------------------------------------

    def coefficient_sum(self) -> int:
        """sum(a_j): the multiplicity of the root t = 1, i.e. the middle Betti
        number when this is an expanded link divisor."""
        total = sum(self._terms.values(), Fraction(0))
        if total.denominator != 1:
            raise NonIntegralExpansion(f"coefficient sum {total} is not an integer")
        return int(total)

    def root_count(self) -> int:
        """sum(a_j * j): the total root multiplicity, i.e. the degree of the
        characteristic polynomial (the Milnor number for a link divisor)."""
        total = sum((a * j for j, a in self._terms.items()), Fraction(0))
        if total.denominator != 1:
            raise NonIntegralExpansion(f"root count {total} is not an integer")
        return int(total)

    def delta_order_at_one(self) -> int:
        """|Delta(1)| as an exact integer, or 0 when t = 1 is a root.

        When the coefficient sum vanishes each factor (t^j - 1)^a_j sheds one
        (t - 1)^a_j and contributes j^a_j at t = 1, so the value is
        |prod_{j >= 2} j^a_j|.
        """
        if self.coefficient_sum() != 0:
            return 0
        value = Fraction(1)
        for j, a in self._terms.items():
            if j >= 2:
                value *= Fraction(j) ** int(a)
        if value.denominator != 1:
            raise NonIntegralOrder(f"torsion order {value} is not an integer")
        return abs(int(value))

    def delta_eval(self, t: Fraction | int) -> Fraction:
        """Exact value of prod((t^j - 1)^a_j) at a rational point.

        The only rational roots of unity are t = 1 and t = -1, so vanishing
        factors can cancel only there.  Each vanishing factor is divided once
        by (t - t0), replacing it with the derivative value j * t0^(j-1); if
        the net multiplicity of vanishing factors is positive the product is
        0, and if it is negative the point is a pole.
        """
        t = Fraction(t)
        if not self.is_integral:
            raise NonIntegralExpansion("divisor must be integral before evaluation")

        def vanishes(j: int) -> bool:
            return t == 1 or (t == -1 and j % 2 == 0)

        net = sum(int(a) for j, a in self._terms.items() if vanishes(j))
        if net > 0:
            return Fraction(0)
        if net < 0:
            raise PoleAtT(f"net exponent {net} of vanishing factors at t={t}")
        value = Fraction(1)
        for j, a in self._terms.items():
            factor = j * t ** (j - 1) if vanishes(j) else t**j - 1
            value *= factor ** int(a)
        return value

    def integralized(self) -> CyclotomicDivisor:
        """Assert every coefficient is an integer and return self."""
        for j, a in self._terms.items():
            if a.denominator != 1:
                raise NonIntegralExpansion(f"coefficient of L{j} is {a}, not an integer")
        return self


def lambda_product(a: int, b: int) -> CyclotomicDivisor:
    """gcd(a, b) * L_{lcm(a, b)}, the product of the generators L_a and L_b."""
    if a < 1 or b < 1:
        raise ValueError("generator indices must be positive")
    return CyclotomicDivisor.lam(lcm(a, b), gcd(a, b))


def expand_link_divisor(pairs: Iterable[tuple[int, int]]) -> CyclotomicDivisor:
    """Fully expand prod_i ((1/v_i) L_{u_i} - L_1) and assert integrality.

    ``pairs`` lists the reduced invariants (u_i, v_i) of a weight system, one
    per variable.  Factors are multiplied left to right with term-map merging,
    which keeps the term count small (indices are lcm's of the u_i).  A
    fractional final coefficient signals an invalid weight system and raises
    :class:`NonIntegralExpansion`; intermediate coefficients are allowed to be
    fractional.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("expected at least one (u, v) pair")
    acc = CyclotomicDivisor.one()
    for u, v in pairs:
        if u < 1 or v < 1:
            raise ValueError(f"invalid reduced pair ({u}, {v})")
        factor = CyclotomicDivisor.lam(u, Fraction(1, v)) - CyclotomicDivisor.one()
        acc = acc * factor
    return acc.integralized()
