"""
Bounds
Arithmetic conditions on Ehrhart tuples, the explicit realizing families and
the lattice point identities used by the verifier
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from polygrow.core.ehrhart import EhrhartTuple
from polygrow.core.geometry import (
    RationalPolygon,
    column_bounds,
    make_polygon,
    reposition_to_width_box,
    width,
)
from polygrow.utils.errors import ContractError, DomainError

CONDITIONS = ('a', 'b', 'c', 'd')


@dataclass(frozen=True)
class TupleVerdict:
    condition: str
    violated_inequalities: List[str] = field(default_factory=list)

    @property
    def is_exception(self) -> bool:
        return self.condition == 'exception'


def _condition_clauses(t: EhrhartTuple) -> Dict[str, List[Tuple[str, bool]]]:
    b1, i1, b2, i2 = t
    floor_b2 = max(3, 2 * b1)
    return {
        'a': [
            ('a:i1=0', i1 == 0),
            ('a:i2=0', i2 == 0),
            ('a:b2>=max(3,2b1)', b2 >= floor_b2),
        ],
        'b': [
            ('b:b1=0', b1 == 0),
            ('b:i1=0', i1 == 0),
            ('b:b2=4', b2 == 4),
            ('b:i2>0', i2 > 0),
        ],
        'c': [
            ('c:i1=0', i1 == 0),
            ('c:i2>0', i2 > 0),
            ('c:b1>0', b1 > 0),
            ('c:b2>=max(3,2b1)', b2 >= floor_b2),
            ('c:b2<=2b1+4', b2 <= 2 * b1 + 4),
            ('c:b2<=2i2+6', b2 <= 2 * i2 + 6),
        ],
        'd': [
            ('d:i1>0', i1 > 0),
            ('d:b2>=max(3,2b1)', b2 >= floor_b2),
            ('d:i2>=b1+2i1-1', i2 >= b1 + 2 * i1 - 1),
            ('d:b2+i2<=2b1+6i1+7', b2 + i2 <= 2 * b1 + 6 * i1 + 7),
        ],
    }


def classify_tuple(t: EhrhartTuple) -> TupleVerdict:
    """First of the conditions (a)-(d) satisfied by the tuple, else an exception"""
    t = EhrhartTuple(*t)
    clauses = _condition_clauses(t)
    for label in CONDITIONS:
        if all(holds for _, holds in clauses[label]):
            return TupleVerdict(label)
    violated = [name for label in CONDITIONS for name, holds in clauses[label] if not holds]
    return TupleVerdict('exception', violated)


def scott_check(b: int, i: int) -> bool:
    """Boundary/interior counts admissible for a lattice polygon"""
    if b < 3 or i < 0:
        return False
    return i == 0 or (i == 1 and b == 9) or b <= 2 * i + 6


def inf_growable_tuple_check(b1: int, b2: int, i2: int) -> bool:
    """Tuples (b(P), b(2P), i(2P)) reachable by infinitely growable denominator-2 polygons"""
    floor_b2 = max(3, 2 * b1)
    if i2 == 0:
        return b2 >= floor_b2
    if i2 < 0:
        return False
    if b1 == 0:
        return b2 == 4
    return b1 > 0 and floor_b2 <= b2 <= 2 * b1 + 4 and b2 <= 2 * i2 + 6


def _half(value: Fraction) -> int:
    """Scale a coordinate of P to the r = 2 frame"""
    doubled = 2 * Fraction(value)
    if doubled.denominator != 1:
        raise ContractError(f"{value} is not a half-integer")
    return doubled.numerator


def _polygon(points: List[Tuple[Fraction, Fraction]]) -> RationalPolygon:
    return make_polygon(2, [(_half(x), _half(y)) for x, y in points])


def zero_interior_family(b1: int, b2: int, i2: int) -> RationalPolygon:
    """An infinitely growable polygon with i(P) = 0 realizing (b1, b2, i2)"""
    if not inf_growable_tuple_check(b1, b2, i2):
        raise DomainError(f"({b1}, {b2}, {i2}) is not realized by an infinitely growable polygon")

    F = Fraction
    half = F(1, 2)
    if i2 == 0:
        if b1 == 0:
            return _polygon([(0, half), (half, 0), (half, F(b2 - 2, 2))])
        return _polygon([(0, 0), (0, b1 - 1), (half, 0), (half, F(b2 - 2 * b1, 2))])

    apex = (half, F(i2 + 1, 2))
    if b1 == 0:
        return _polygon([(0, half), (1, half), (half, F(i2 + 2, 2))])
    if b1 == 1:
        by_b2 = {
            3: [(0, 0), (1, half)],
            4: [(0, 0), (0, half), (1, half)],
            5: [(0, 0), (0, half), (half, 0), (1, half)],
            6: [(0, -half), (0, half), (1, half)],
        }
        return _polygon(by_b2[b2] + [apex])

    top = b1 - 2
    by_excess = {
        0: [(0, 0), (0, top), (1, 0)],
        1: [(0, -half), (0, top), (1, 0), (half, -half)],
        2: [(0, -half), (0, top), (1, 0), (1, -half)],
        3: [(0, -half), (0, top), (1, half), (1, -half)],
        4: [(0, -half), (0, F(2 * b1 - 3, 2)), (1, half), (1, -half)],
    }
    excess = b2 - 2 * b1
    if excess > 0:
        # the (0, -1/2) vertex already adds one interior point of 2P
        apex = (half, F(i2, 2))
    return _polygon(by_excess[excess] + [apex])


FAMILIES: Dict[str, Callable[[int], Tuple[int, int, int, int]]] = {
    'F1': lambda i: (0, i, 3, 2 * i - 1),
    'F2': lambda i: (2, i, 4, 2 * i + 1),
    'F3': lambda i: (2, i, 4 * i + 8, 2 * i + 1),
    'F4': lambda i: (1, i, 3, 3 * i),
    'F5': lambda i: (4, i, 8, 4 * i + 1),
    'F6': lambda i: (2 * i - 2, i, 4 * i + 2, 6 * i + 1),
    'F7': lambda i: (4, i, 12, 6 * i + 3),
}

# equations each family meets with equality
FAMILY_BOUNDARIES: Dict[str, Tuple[str, ...]] = {
    'F1': ('b2=3', 'i2=b1+2i1-1'),
    'F2': ('b2=2b1', 'i2=b1+2i1-1'),
    'F3': ('i2=b1+2i1-1',),
    'F4': ('b2=3',),
    'F5': ('b2=2b1',),
    'F6': ('b2+i2=2b1+6i1+7',),
    'F7': ('b2+i2=2b1+6i1+7',),
}


def boundary_equation_holds(name: str, t: EhrhartTuple) -> bool:
    b1, i1, b2, i2 = t
    equations = {
        'b2=3': b2 == 3,
        'b2=2b1': b2 == 2 * b1,
        'i2=b1+2i1-1': i2 == b1 + 2 * i1 - 1,
        'b2+i2=2b1+6i1+7': b2 + i2 == 2 * b1 + 6 * i1 + 7,
    }
    return equations[name]


def boundary_family_tuple(family: str, i: int) -> EhrhartTuple:
    """Member i of one of the seven families on the boundary of condition (d)"""
    if family not in FAMILIES:
        raise DomainError(f"unknown family: {family}")
    if i < 1:
        raise DomainError(f"family index must be >= 1, got {i}")
    t = EhrhartTuple(*FAMILIES[family](i))
    for equation in FAMILY_BOUNDARIES[family]:
        if not boundary_equation_holds(equation, t):
            raise ContractError(f"{family}({i}) = {tuple(t)} misses {equation}")
    return t


def _column_counts(polygon: RationalPolygon, column: int) -> Tuple[int, int]:
    """(all, strictly interior) lattice points of a lattice polygon on x = column"""
    bounds = column_bounds(polygon.vertices, column)
    if bounds is None:
        return 0, 0
    lo, hi = bounds
    total = max(0, math.floor(hi) - math.ceil(lo) + 1)
    xs = [x for x, _ in polygon.vertices]
    if column in (min(xs), max(xs)):
        return total, 0
    inner = max(0, math.ceil(hi) - math.floor(lo) - 1)
    return total, inner


def trapezium_identity_check(y1: int, y2: int, y3: int, y4: int) -> bool:
    """p0 + p2 = p1 + i1 + 2 on conv((0,y1), (0,y2), (2,y3), (2,y4))"""
    if y1 > y2 or y3 > y4:
        raise ContractError("expected y1 <= y2 and y3 <= y4")
    polygon = make_polygon(1, [(0, y1), (0, y2), (2, y3), (2, y4)])
    p0, _ = _column_counts(polygon, 0)
    p1, i1 = _column_counts(polygon, 1)
    p2, _ = _column_counts(polygon, 2)
    return p0 + p2 == p1 + i1 + 2


def hourglass_check(polygon: RationalPolygon, h: int) -> bool:
    """A lattice polygon in its width box has at least min(h, w1-h)-1 interior points on x = h"""
    if polygon.denominator != 1:
        raise ContractError("hourglass check applies to lattice polygons")
    w1 = int(width(polygon)[0])
    if not 2 <= h <= w1 - 2:
        raise DomainError(f"h={h} outside [2, {w1 - 2}]")
    placed = reposition_to_width_box(polygon)
    _, interior = _column_counts(placed, h)
    return interior >= min(h, w1 - h) - 1
