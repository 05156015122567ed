"""
Ehrhart
Ehrhart quasi-polynomials and point-count tuples of rational polygons
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from polygrow.core.geometry import RationalPolygon, count_points, dilate, normalized_volume
from polygrow.utils.errors import ContractError
from polygrow.utils.helpers import format_rational

Component = Tuple[Fraction, Fraction, Fraction]


class EhrhartTuple(NamedTuple):
    b1: int
    i1: int
    b2: int
    i2: int


@dataclass(frozen=True)
class QuasiPolynomial:
    """
    n -> a2(n) n^2 + a1(n) n + a0(n), with coefficients depending on n mod r.

    components[i] = (a2, a1, a0) governs every n congruent to i modulo r,
    including negative n.
    """
    r: int
    components: Tuple[Component, ...]

    def component(self, n: int) -> Component:
        return self.components[n % self.r]

    def evaluate(self, n: int) -> Fraction:
        a2, a1, a0 = self.component(n)
        return a2 * n * n + a1 * n + a0

    def is_polynomial(self) -> bool:
        """True when every residue class shares one polynomial"""
        return all(component == self.components[0] for component in self.components)

    def rows(self) -> List[Tuple[int, str, str, str]]:
        return [(i, *(format_rational(c) for c in component)) for i, component in enumerate(self.components)]


def ehrhart_count(polygon: RationalPolygon, n: int) -> int:
    """|nP cap Z^2|"""
    if n < 0:
        raise ContractError(f"dilation must be nonnegative, got {n}")
    if n == 0:
        return 1
    boundary, interior = count_points(dilate(polygon.vertices, n), polygon.denominator)
    return boundary + interior


def interior_count(polygon: RationalPolygon, n: int) -> int:
    """|(nP)° cap Z^2| for n >= 1"""
    if n < 1:
        raise ContractError(f"dilation must be positive, got {n}")
    _, interior = count_points(dilate(polygon.vertices, n), polygon.denominator)
    return interior


def quasi_polynomial(polygon: RationalPolygon) -> QuasiPolynomial:
    r = polygon.denominator
    volume = normalized_volume(polygon)
    a2 = volume / 2
    components = []
    for i in range(r):
        count = ehrhart_count(polygon, i)
        opposite = interior_count(polygon, r - i)
        a1 = (count - opposite - Fraction(r * (2 * i - r), 2) * volume) / r
        a0 = count - a2 * i * i - a1 * i
        components.append((a2, a1, a0))
    return QuasiPolynomial(r, tuple(components))


def reciprocity_check(polygon: RationalPolygon, n: int) -> bool:
    """Evaluating at -n counts the interior lattice points of nP"""
    if n < 1:
        raise ContractError(f"reciprocity is checked for n >= 1, got {n}")
    return quasi_polynomial(polygon).evaluate(-n) == interior_count(polygon, n)


def ehrhart_tuple(polygon: RationalPolygon) -> EhrhartTuple:
    """(b(P), i(P), b(2P), i(2P)) of a denominator-2 polygon"""
    if polygon.denominator != 2:
        raise ContractError(f"Ehrhart tuples are defined for denominator 2, got {polygon.denominator}")
    b1, i1 = count_points(polygon.vertices, 2)
    b2, i2 = count_points(dilate(polygon.vertices, 2), 2)
    return EhrhartTuple(b1, i1, b2, i2)
