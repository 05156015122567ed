"""
Minimal Polygons
Seeds of the growing algorithm, the lattice polygon enumeration they rely on,
and the minimality tests used to certify them
"""

from functools import lru_cache
from typing import Dict, List, Tuple

from polygrow.core.geometry import (
    RationalPolygon,
    count_points,
    make_polygon,
    scaled_points,
)
from polygrow.core.growth import grow_keyed
from polygrow.core.normal_form import CanonicalKey, canonical_form, polygon_from_key
from polygrow.utils.errors import ContractError, DegenerateError, DomainError
from polygrow.utils.logger import Logger

# scaled at r = 2
ZERO_INTERIOR_SEEDS: Tuple[Tuple[Tuple[int, int], ...], ...] = (
    ((0, 0), (1, 0), (0, 1)),
    ((1, 1), (2, 1), (1, 2)),
    ((0, 0), (2, 0), (0, 1)),
    ((0, 0), (2, 0), (0, 2)),
    ((0, 0), (2, 0), (2, 2), (0, 2)),
    ((0, 0), (2, 0), (0, 4)),
    ((0, 0), (2, 0), (2, 2), (0, 4)),
    ((0, 0), (2, 0), (0, 6)),
    ((0, 0), (2, 0), (2, 2), (0, 6)),
    ((0, 0), (4, 0), (0, 4)),
)

# the last seed is already maximal among zero-interior polygons
ZERO_INTERIOR_TERMINAL = ((0, 0), (4, 0), (0, 4))


def size_zero_triples(r: int) -> List[Tuple[int, int, int]]:
    """Triples a1 <= a2 <= a3 <= r-1 indexing the minimal polygons of size zero"""
    triples = []
    for a1 in range(r):
        for a2 in range(a1, r):
            for a3 in range(a2, r):
                total = a1 + a2 + a3
                if total == r - 1 and a1 + a2 > 0:
                    triples.append((a1, a2, a3))
                elif total == 2 * r - 1 and a1 + a2 >= r:
                    triples.append((a1, a2, a3))
    return triples


def _unit_triangle_at(r: int, a1: int, a2: int) -> RationalPolygon:
    return make_polygon(r, [(a1, a2), (a1 + 1, a2), (a1, a2 + 1)])


def minimal_size_zero(r: int) -> List[RationalPolygon]:
    """One triangle (1/r)(unit triangle + (a1, a2)) per admissible triple"""
    if r < 1:
        raise ContractError(f"denominator must be positive, got {r}")
    return [_unit_triangle_at(r, a1, a2) for a1, a2, _ in size_zero_triples(r)]


def minimal_size_zero_direct(r: int) -> List[RationalPolygon]:
    """Size-zero translates of the unit triangle over [0, r-1]^2, deduplicated"""
    found: Dict[CanonicalKey, RationalPolygon] = {}
    for x in range(r):
        for y in range(r):
            triangle = _unit_triangle_at(r, x, y)
            if any(vx % r == 0 and vy % r == 0 for vx, vy in triangle.vertices):
                continue
            found.setdefault(canonical_form(triangle), triangle)
    return [found[key] for key in sorted(found)]


def one_row_triangle(r: int, k: int) -> RationalPolygon:
    """T_{r,k} = conv((0,0), (k-1,0), (0,1/r)); for k = 1 the half-unit triangle"""
    if k < 1:
        raise DomainError(f"T_(r,k) needs k >= 1, got {k}")
    if k == 1:
        return make_polygon(r, [(0, 0), (1, 0), (0, 1)])
    return make_polygon(r, [(0, 0), (r * (k - 1), 0), (0, 1)])


@lru_cache(maxsize=None)
def _lattice_strata(k: int) -> Tuple[Tuple[CanonicalKey, ...], ...]:
    logger = Logger()
    stratum: Dict[CanonicalKey, RationalPolygon] = {}
    unit = make_polygon(1, [(0, 0), (1, 0), (0, 1)])
    stratum[canonical_form(unit)] = unit
    strata = [tuple(sorted(stratum))]

    for size in range(3, k):
        following: Dict[CanonicalKey, RationalPolygon] = {}
        for key in sorted(stratum):
            _, grown = grow_keyed(stratum[key], size + 1, exclude_lattice=False)
            for child_key, child in grown:
                following.setdefault(child_key, child)
        row = make_polygon(1, [(0, 0), (size - 1, 0), (0, 1)])
        following.setdefault(canonical_form(row), row)
        stratum = following
        strata.append(tuple(sorted(stratum)))
        logger.debug(f"lattice polygons of size {size + 1}: {len(stratum)}")
    return tuple(strata)


def lattice_polygons_of_size(k: int) -> List[RationalPolygon]:
    """All lattice polygons with exactly k lattice points, up to equivalence"""
    if k < 3:
        return []
    return [polygon_from_key(key) for key in _lattice_strata(k)[k - 3]]


def minimal_polygons(r: int, k: int) -> List[RationalPolygon]:
    """Minimal polygons of denominator r and size k"""
    if r < 2:
        raise ContractError(f"minimal polygons are enumerated for r >= 2, got {r}")
    if k < 0:
        raise ContractError(f"size must be nonnegative, got {k}")
    if k == 0:
        return minimal_size_zero(r)
    if k == 1:
        return [one_row_triangle(r, 1)]
    seeds = [make_polygon(r, [(r * x, r * y) for x, y in lattice.vertices])
             for lattice in lattice_polygons_of_size(k)]
    seeds.append(one_row_triangle(r, k))
    return seeds


def zero_interior_seeds() -> List[RationalPolygon]:
    return [make_polygon(2, list(vertices)) for vertices in ZERO_INTERIOR_SEEDS]


def strip_family(r: int, k: int, a: int) -> RationalPolygon:
    """conv((0,0), (k-1,0), (0,1/r), (a/r,1/r)): size k and infinitely growable"""
    if r < 2 or k < 1 or a < 0 or (k == 1 and a == 0):
        raise DomainError(f"strip family needs r >= 2, k >= 1, a >= 0 and a 2-dimensional hull; got r={r}, k={k}, a={a}")
    return make_polygon(r, [(0, 0), (r * (k - 1), 0), (0, 1), (a, 1)])


def shrink_by_vertex(polygon: RationalPolygon) -> List[RationalPolygon]:
    """Hulls of the (1/r)-points of P minus one vertex that keep size and dimension"""
    r = polygon.denominator
    points = scaled_points(polygon)
    size = sum(count_points(polygon.vertices, r))
    shrunk = []
    for vertex in polygon.vertices:
        rest = [p for p in points if p != vertex]
        try:
            smaller = make_polygon(r, rest)
        except DegenerateError:
            continue
        if sum(count_points(smaller.vertices, r)) == size:
            shrunk.append(smaller)
    return shrunk


def is_minimal(polygon: RationalPolygon) -> bool:
    """No vertex can be dropped without losing a lattice point or the dimension"""
    return not shrink_by_vertex(polygon)
