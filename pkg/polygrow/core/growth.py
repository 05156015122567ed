"""
Growth Primitives
One growing step of a rational polygon: candidate points beyond each edge,
the collinear-point bound and the infinite growability test
"""

import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from polygrow.core.geometry import (
    RationalPolygon,
    ScaledPoint,
    count_points,
    dual_vectors_within,
    edges,
    extended_gcd,
    in_penumbra,
    make_polygon,
    normalize_dual,
    primitive,
    r_size,
    scaled_points,
)
from polygrow.core.normal_form import CanonicalKey, canonical_form, polygon_from_key
from polygrow.utils.errors import ContractError


def _edge_candidates(polygon: RationalPolygon, a: ScaledPoint, b: ScaledPoint) -> List[ScaledPoint]:
    """Points on the line adjacent to edge (a, b) outside both penumbra cones"""
    g, p, q = extended_gcd(b[0] - a[0], b[1] - a[1])
    ex, ey = (b[0] - a[0]) // g, (b[1] - a[1]) // g

    hi: Optional[Fraction] = None
    lo: Optional[Fraction] = None
    for vx, vy in polygon.vertices:
        dx, dy = vx - a[0], vy - a[1]
        local_y = -ey * dx + ex * dy
        if local_y <= 0:
            continue
        local_x = p * dx + q * dy
        upper = (g + 1) + Fraction(g + 1 - local_x, local_y)
        lower = -1 - Fraction(local_x + 1, local_y)
        hi = upper if hi is None or upper < hi else hi
        lo = lower if lo is None or lower > lo else lo

    # local (t, -1) back in the scaled frame
    return [
        (a[0] + t * ex + q, a[1] + t * ey - p)
        for t in range(math.floor(lo) + 1, math.ceil(hi))
    ]


def grow_candidates(polygon: RationalPolygon, exclude_lattice: bool = True) -> List[ScaledPoint]:
    """
    Points of (1/r)Z^2 on the lines adjacent to the edges of P whose addition
    does not swallow the nearest outside point on the edge line at either end.

    Lattice points are skipped unless exclude_lattice is False, which the
    lattice polygon enumeration relies on.
    """
    r = polygon.denominator
    found = set()
    for a, b in edges(polygon.vertices):
        g = math.gcd(b[0] - a[0], b[1] - a[1])
        e = ((b[0] - a[0]) // g, (b[1] - a[1]) // g)
        beyond_b = (b[0] + e[0], b[1] + e[1])
        beyond_a = (a[0] - e[0], a[1] - e[1])
        for v in _edge_candidates(polygon, a, b):
            if exclude_lattice and v[0] % r == 0 and v[1] % r == 0:
                continue
            if in_penumbra(polygon, beyond_b, v) or in_penumbra(polygon, beyond_a, v):
                continue
            found.add(v)
    return sorted(found)


def _line_threshold(r: int, offset: int, k: int, cap: Optional[int]) -> int:
    h = min(offset % r, (-offset) % r)
    threshold = r * (r - h + 1) * (k + 1)
    if cap is not None:
        threshold = min(threshold, cap + 1)
    return threshold


def collinear_ok_through(points: Sequence[ScaledPoint], anchor: ScaledPoint, r: int, k: int,
                         cap: Optional[int] = None) -> bool:
    """Check every non-integral line through anchor against the collinear bound"""
    if r == 1:
        return True
    groups: Dict[Tuple[int, int], int] = {}
    for point in points:
        if point == anchor:
            continue
        direction = normalize_dual(primitive((point[0] - anchor[0], point[1] - anchor[1])))
        groups[direction] = groups.get(direction, 0) + 1

    for (dx, dy), count in groups.items():
        offset = -dy * anchor[0] + dx * anchor[1]
        if offset % r == 0:
            continue
        if count + 1 >= _line_threshold(r, offset, k, cap):
            return False
    return True


def collinear_bound_ok(polygon: RationalPolygon, k: int, cap: Optional[int] = None) -> bool:
    """
    False iff a line u.x = h with non-integral h holds at least r(r-h+1)(k+1)
    points of P cap (1/r)Z^2, or more than cap points when a cap is given.
    """
    points = scaled_points(polygon)
    return all(collinear_ok_through(points, anchor, polygon.denominator, k, cap) for anchor in points)


def is_infinitely_growable(polygon: RationalPolygon) -> bool:
    """P fits between two consecutive integral lines u.x = c and u.x = c + 1"""
    r = polygon.denominator
    if r == 1:
        raise ContractError("infinite growability is only defined for denominator r >= 2")
    for _, u in dual_vectors_within(polygon.vertices, r):
        values = [u[0] * x + u[1] * y for x, y in polygon.vertices]
        low, high = min(values), max(values)
        if (low // r) * r + r >= high:
            return True
    return False


def grow_keyed(polygon: RationalPolygon, k: int, parent_infinite: bool = True,
               exclude_lattice: bool = True, zero_interior: bool = False,
               collinear_cap: Optional[int] = None) -> Tuple[List[Tuple[CanonicalKey, RationalPolygon]],
                                                            List[Tuple[CanonicalKey, RationalPolygon]]]:
    """
    Grow P by one point of (1/r)Z^2 in every admissible way.

    Children are returned as (key, canonical representative) pairs, split into
    infinitely and finitely growable lists, each sorted by key.
    """
    r = polygon.denominator
    parent_r_size = r_size(polygon)
    infinite: Dict[CanonicalKey, RationalPolygon] = {}
    finite: Dict[CanonicalKey, RationalPolygon] = {}

    for v in grow_candidates(polygon, exclude_lattice=exclude_lattice):
        child = make_polygon(r, list(polygon.vertices) + [v])
        if r_size(child) != parent_r_size + 1:
            continue
        boundary, interior = count_points(child.vertices, r)
        if boundary + interior != k:
            continue
        if zero_interior and interior > 0:
            continue
        if not collinear_ok_through(scaled_points(child), v, r, k, collinear_cap):
            continue
        key = canonical_form(child)
        if key in infinite or key in finite:
            continue
        if r > 1 and parent_infinite and is_infinitely_growable(child):
            infinite[key] = polygon_from_key(key)
        else:
            finite[key] = polygon_from_key(key)

    return sorted(infinite.items()), sorted(finite.items())


def grow_step(polygon: RationalPolygon, k: int, parent_infinite: bool = True,
              **options) -> Tuple[List[RationalPolygon], List[RationalPolygon]]:
    """Children of P of size k, partitioned into (infinitely growable, finitely growable)"""
    infinite, finite = grow_keyed(polygon, k, parent_infinite=parent_infinite, **options)
    return [child for _, child in infinite], [child for _, child in finite]
