"""
Geometry Core
Exact integer primitives on scaled rational polygons: hulls, point counts,
widths, penumbra membership and width-box placement
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from polygrow.utils.errors import ContractError, DegenerateError, RepositionError

ScaledPoint = Tuple[int, int]
DualVector = Tuple[int, int]

AXIS_SEEDS: Tuple[DualVector, ...] = ((1, 0), (0, 1), (1, 1), (1, -1))


@dataclass(frozen=True)
class RationalPolygon:
    """
    A rational polygon P of denominator r stored through the lattice polygon rP.

    Vertices are strictly convex, counterclockwise and start at the
    lexicographically smallest vertex when built through make_polygon.
    """
    denominator: int
    vertices: Tuple[ScaledPoint, ...]

    @property
    def r(self) -> int:
        return self.denominator

    @cached_property
    def r_size(self) -> int:
        return r_size(self)

    @cached_property
    def size(self) -> int:
        boundary, interior = lattice_profile(self, 1)
        return boundary + interior

    def __repr__(self) -> str:
        return f"RationalPolygon(r={self.denominator}, vertices={list(self.vertices)})"


@dataclass(frozen=True)
class PointProfile:
    size: int
    r_size: int
    boundary: int
    interior: int


def cross(o: ScaledPoint, a: ScaledPoint, b: ScaledPoint) -> int:
    """z-component of (a - o) x (b - o)"""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[ScaledPoint]) -> List[ScaledPoint]:
    """Monotone chain hull, counterclockwise, collinear points dropped"""
    pts = sorted(set((int(x), int(y)) for x, y in points))
    if len(pts) <= 2:
        return pts

    lower: List[ScaledPoint] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper: List[ScaledPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return lower[:-1] + upper[:-1]


def make_polygon(r: int, points: Sequence[ScaledPoint]) -> RationalPolygon:
    """Build (1/r)*conv(points) from scaled points"""
    if r < 1:
        raise ContractError(f"denominator must be positive, got {r}")
    if not points:
        raise DegenerateError("no points given")
    hull = convex_hull(points)
    if len(hull) < 3:
        raise DegenerateError(f"points span a {'point' if len(hull) == 1 else 'segment'}, not a polygon")
    return RationalPolygon(r, tuple(hull))


def edges(vertices: Sequence[ScaledPoint]) -> List[Tuple[ScaledPoint, ScaledPoint]]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def primitive(vector: Tuple[int, int]) -> Tuple[int, int]:
    g = math.gcd(vector[0], vector[1])
    if g == 0:
        raise ContractError("zero vector has no primitive direction")
    return vector[0] // g, vector[1] // g


def normalize_dual(u: DualVector) -> DualVector:
    """Pick the representative of +-u whose first nonzero entry is positive"""
    a, b = u
    if a < 0 or (a == 0 and b < 0):
        return -a, -b
    return a, b


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, p, q) with p*a + q*b = g = gcd(a, b) >= 0"""
    old_r, rem = a, b
    old_p, p = 1, 0
    old_q, q = 0, 1
    while rem != 0:
        quotient = old_r // rem
        old_r, rem = rem, old_r - quotient * rem
        old_p, p = p, old_p - quotient * p
        old_q, q = q, old_q - quotient * q
    if old_r < 0:
        old_r, old_p, old_q = -old_r, -old_p, -old_q
    return old_r, old_p, old_q


def twice_area(vertices: Sequence[ScaledPoint]) -> int:
    """Shoelace sum, positive for counterclockwise order"""
    total = 0
    for (x0, y0), (x1, y1) in edges(vertices):
        total += x0 * y1 - x1 * y0
    return total


def boundary_lattice_count(vertices: Sequence[ScaledPoint]) -> int:
    return sum(math.gcd(b[0] - a[0], b[1] - a[1]) for a, b in edges(vertices))


def r_size(polygon: RationalPolygon) -> int:
    """Number of points of (1/r)Z^2 in P, by Pick's theorem on rP"""
    doubled = twice_area(polygon.vertices)
    boundary = boundary_lattice_count(polygon.vertices)
    return (doubled + boundary + 2) // 2


def normalized_volume(polygon: RationalPolygon) -> Fraction:
    return Fraction(twice_area(polygon.vertices), polygon.denominator ** 2)


def column_bounds(vertices: Sequence[ScaledPoint], column: int) -> Optional[Tuple[Fraction, Fraction]]:
    """Lowest and highest y of the polygon on the vertical line x = column"""
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for (ax, ay), (bx, by) in edges(vertices):
        if ax == bx:
            if ax != column:
                continue
            values = (Fraction(ay), Fraction(by))
        else:
            if not min(ax, bx) <= column <= max(ax, bx):
                continue
            values = (Fraction(ay * (bx - ax) + (column - ax) * (by - ay), bx - ax),)
        for value in values:
            lo = value if lo is None or value < lo else lo
            hi = value if hi is None or value > hi else hi
    if lo is None:
        return None
    return lo, hi


def count_points(vertices: Sequence[ScaledPoint], modulus: int = 1) -> Tuple[int, int]:
    """
    Count integer points congruent to 0 mod modulus in conv(vertices).

    Returns (boundary, interior). The vertices must be a strictly convex
    counterclockwise polygon.
    """
    xs = [x for x, _ in vertices]
    x_min, x_max = min(xs), max(xs)
    boundary = 0
    interior = 0
    start = -((-x_min) // modulus) * modulus
    for column in range(start, x_max + 1, modulus):
        bounds = column_bounds(vertices, column)
        if bounds is None:
            continue
        lo, hi = bounds
        first = math.ceil(lo / modulus)
        last = math.floor(hi / modulus)
        if last < first:
            continue
        total = last - first + 1
        if column == x_min or column == x_max:
            boundary += total
            continue
        on_edge = 0
        if first * modulus == lo:
            on_edge += 1
        if last * modulus == hi:
            on_edge += 1
        boundary += on_edge
        interior += total - on_edge
    return boundary, interior


def dilate(vertices: Sequence[ScaledPoint], n: int) -> List[ScaledPoint]:
    return [(n * x, n * y) for x, y in vertices]


def lattice_profile(polygon: RationalPolygon, dilation: int = 1) -> Tuple[int, int]:
    """(boundary, interior) lattice point counts of the dilate nP"""
    if dilation < 1:
        raise ContractError(f"dilation must be positive, got {dilation}")
    return count_points(dilate(polygon.vertices, dilation), polygon.denominator)


def point_profile(polygon: RationalPolygon) -> PointProfile:
    boundary, interior = lattice_profile(polygon, 1)
    return PointProfile(
        size=boundary + interior,
        r_size=r_size(polygon),
        boundary=boundary,
        interior=interior,
    )


def _points_in(vertices: Sequence[ScaledPoint], modulus: int) -> List[ScaledPoint]:
    xs = [x for x, _ in vertices]
    points: List[ScaledPoint] = []
    start = -((-min(xs)) // modulus) * modulus
    for column in range(start, max(xs) + 1, modulus):
        bounds = column_bounds(vertices, column)
        if bounds is None:
            continue
        lo, hi = bounds
        for k in range(math.ceil(lo / modulus), math.floor(hi / modulus) + 1):
            points.append((column, k * modulus))
    return points


def scaled_points(polygon: RationalPolygon) -> List[ScaledPoint]:
    """All points of rP with integer coordinates, i.e. P cap (1/r)Z^2 scaled"""
    return _points_in(polygon.vertices, 1)


def lattice_points(polygon: RationalPolygon) -> List[ScaledPoint]:
    """All points of P cap Z^2, in unscaled coordinates"""
    r = polygon.denominator
    return [(x // r, y // r) for x, y in _points_in(polygon.vertices, r)]


def contains(vertices: Sequence[ScaledPoint], point: ScaledPoint, strict: bool = False) -> bool:
    for a, b in edges(vertices):
        side = cross(a, b, point)
        if side < 0 or (strict and side == 0):
            return False
    return True


def in_penumbra(polygon: RationalPolygon, v: ScaledPoint, x: ScaledPoint) -> bool:
    """x lies in pen(P, v), tested as v in conv(P, x)"""
    hull = convex_hull(list(polygon.vertices) + [x])
    return contains(hull, v)


def integer_width_along(vertices: Sequence[ScaledPoint], u: DualVector) -> int:
    values = [u[0] * x + u[1] * y for x, y in vertices]
    return max(values) - min(values)


def width_along(polygon: RationalPolygon, u: DualVector) -> Fraction:
    if u == (0, 0):
        raise ContractError("dual vector must be nonzero")
    return Fraction(integer_width_along(polygon.vertices, u), polygon.denominator)


def _spanning_edges(vertices: Sequence[ScaledPoint]) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    vectors = [(b[0] - a[0], b[1] - a[1]) for a, b in edges(vertices)]
    z1 = vectors[0]
    for z2 in vectors[1:]:
        if z1[0] * z2[1] - z1[1] * z2[0] != 0:
            return z1, z2
    raise DegenerateError("polygon has no two independent edges")


def dual_vectors_within(vertices: Sequence[ScaledPoint], bound: int) -> List[Tuple[int, DualVector]]:
    """
    All primitive dual vectors u (one per +-pair) with integer width <= bound on
    conv(vertices), as (width, u) pairs sorted by width then tie-break order.

    Any such u satisfies |u.z| <= bound for every edge vector z, so it is
    found by solving for u over the bounded parallelogram of two edges.
    """
    z1, z2 = _spanning_edges(vertices)
    det = z1[0] * z2[1] - z1[1] * z2[0]
    found = {}
    for s in range(-bound, bound + 1):
        for t in range(-bound, bound + 1):
            num_x = s * z2[1] - t * z1[1]
            num_y = t * z1[0] - s * z2[0]
            if num_x % det or num_y % det:
                continue
            u = (num_x // det, num_y // det)
            if u == (0, 0) or math.gcd(u[0], u[1]) != 1:
                continue
            u = normalize_dual(u)
            if u in found:
                continue
            w = integer_width_along(vertices, u)
            if w <= bound:
                found[u] = w
    return sorted(((w, u) for u, w in found.items()), key=lambda item: _width_order(*item))


def _width_order(w: int, u: DualVector) -> Tuple[int, int, int, int, int]:
    return w, abs(u[0]), abs(u[1]), u[0], u[1]


def _first_width(vertices: Sequence[ScaledPoint]) -> Tuple[int, DualVector]:
    seed_bound = min(integer_width_along(vertices, u) for u in AXIS_SEEDS)
    return dual_vectors_within(vertices, seed_bound)[0]


def _second_width(vertices: Sequence[ScaledPoint], u1: DualVector) -> Tuple[int, DualVector]:
    seed_bound = min(integer_width_along(vertices, u) for u in AXIS_SEEDS if u != u1)
    candidates = [(w, u) for w, u in dual_vectors_within(vertices, seed_bound) if u != u1]
    return candidates[0]


def width(polygon: RationalPolygon) -> Tuple[Fraction, DualVector]:
    """First width w1 and a realizing primitive dual vector u1"""
    w, u = _first_width(polygon.vertices)
    return Fraction(w, polygon.denominator), u


def second_width(polygon: RationalPolygon) -> Tuple[Fraction, DualVector]:
    """Minimal width over dual vectors independent of the first-width direction"""
    _, u1 = _first_width(polygon.vertices)
    w, u = _second_width(polygon.vertices, u1)
    return Fraction(w, polygon.denominator), u


def apply_affine(vertices: Iterable[ScaledPoint], matrix: Tuple[Tuple[int, int], Tuple[int, int]],
                 shift: Tuple[int, int] = (0, 0)) -> List[ScaledPoint]:
    (a, b), (c, d) = matrix
    return [(a * x + b * y + shift[0], c * x + d * y + shift[1]) for x, y in vertices]


def _translate_to_origin(vertices: Sequence[ScaledPoint]) -> List[ScaledPoint]:
    x0 = min(x for x, _ in vertices)
    y0 = min(y for _, y in vertices)
    return [(x - x0, y - y0) for x, y in vertices]


def _box(vertices: Sequence[ScaledPoint]) -> Tuple[int, int]:
    xs = [x for x, _ in vertices]
    ys = [y for _, y in vertices]
    return max(xs) - min(xs), max(ys) - min(ys)


def reposition_to_width_box(polygon: RationalPolygon) -> RationalPolygon:
    """Place a lattice polygon inside [0, w1] x [0, w2] touching all four sides"""
    if polygon.denominator != 1:
        raise ContractError("width-box placement is defined for lattice polygons only")
    vertices = polygon.vertices
    w1, u1 = _first_width(vertices)
    w2, _ = _second_width(vertices, u1)

    a, b = u1
    _, p, q = extended_gcd(a, b)
    base_row = (-q, p)

    def extent(k: int) -> int:
        return integer_width_along(vertices, (base_row[0] + k * a, base_row[1] + k * b))

    shear = 0
    if extent(1) < extent(0):
        while extent(shear + 1) < extent(shear):
            shear += 1
    elif extent(-1) < extent(0):
        while extent(shear - 1) < extent(shear):
            shear -= 1

    matrix = ((a, b), (base_row[0] + shear * a, base_row[1] + shear * b))
    placed = _translate_to_origin(apply_affine(vertices, matrix))
    if _box(placed) == (w1, w2):
        return make_polygon(1, placed)

    # fall back to every unimodular pair of short dual vectors
    short = dual_vectors_within(vertices, w2)
    for wx, ux in short:
        if wx != w1:
            continue
        for wy, uy in short:
            if wy != w2 or abs(ux[0] * uy[1] - ux[1] * uy[0]) != 1:
                continue
            placed = _translate_to_origin(apply_affine(vertices, (ux, uy)))
            return make_polygon(1, placed)
    raise RepositionError(f"no unimodular placement of {list(vertices)} into a {w1}x{w2} box")
