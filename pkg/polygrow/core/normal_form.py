"""
Normal Form
Canonical keys for rational polygons under affine unimodular equivalence
"""

import re
from typing import List, Sequence, Tuple

from polygrow.core.geometry import (
    RationalPolygon,
    ScaledPoint,
    extended_gcd,
    make_polygon,
)
from polygrow.utils.errors import RecordFormatError

CanonicalKey = Tuple[int, Tuple[ScaledPoint, ...]]

_KEY_PATTERN = re.compile(r"^\s*(\d+)\s*:\s*(-?\d+,-?\d+(?:;-?\d+,-?\d+)*)\s*$")


def _edge_signature(vertices: Sequence[ScaledPoint], start: int, r: int) -> Tuple[ScaledPoint, ...]:
    """Image of the cyclic vertex list under the pinned frame of edge (start, start+1)"""
    n = len(vertices)
    ax, ay = vertices[start]
    bx, by = vertices[(start + 1) % n]
    g, p, q = extended_gcd(bx - ax, by - ay)
    ex, ey = (bx - ax) // g, (by - ay) // g

    # A = [[p, q], [-ey, ex]] sends the edge direction to (1, 0)
    local = []
    for i in range(n):
        vx, vy = vertices[(start + i) % n]
        dx, dy = vx - ax, vy - ay
        local.append((p * dx + q * dy, -ey * dx + ex * dy))

    height = max(y for _, y in local)
    top_x = min(x for x, y in local if y == height)
    shear = -(top_x // height)

    # linear part M = S * A, applied to a itself for the residue mod r
    m00, m01 = p + shear * -ey, q + shear * ex
    m10, m11 = -ey, ex
    offset_x = (m00 * ax + m01 * ay) % r
    offset_y = (m10 * ax + m11 * ay) % r
    return tuple((x + shear * y + offset_x, y + offset_y) for x, y in local)


def _mirrored(vertices: Sequence[ScaledPoint]) -> List[ScaledPoint]:
    """Image under (x, y) -> (x, -y), reversed to stay counterclockwise"""
    return [(x, -y) for x, y in reversed(vertices)]


def canonical_form(polygon: RationalPolygon) -> CanonicalKey:
    """Lexicographically least edge-frame signature over both orientations"""
    r = polygon.denominator
    best = None
    for vertices in (list(polygon.vertices), _mirrored(polygon.vertices)):
        for start in range(len(vertices)):
            signature = _edge_signature(vertices, start, r)
            if best is None or signature < best:
                best = signature
    return r, best


def polygon_from_key(key: CanonicalKey) -> RationalPolygon:
    r, vertices = key
    return make_polygon(r, list(vertices))


def key_to_string(key: CanonicalKey) -> str:
    r, vertices = key
    return f"{r}:" + ";".join(f"{x},{y}" for x, y in vertices)


def key_from_string(text: str) -> CanonicalKey:
    match = _KEY_PATTERN.match(text)
    if not match:
        raise RecordFormatError(f"malformed canonical key: {text!r}")
    pairs = []
    for chunk in match.group(2).split(";"):
        x, y = chunk.split(",")
        pairs.append((int(x), int(y)))
    return int(match.group(1)), tuple(pairs)
