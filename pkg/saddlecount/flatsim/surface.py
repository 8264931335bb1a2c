"""
Translation surfaces as triangles glued along edges.

A triangle is stored as its three edge vectors e_0, e_1, e_2 in
counter-clockwise order, summing to zero. Putting vertex V_0 at the origin,
edge i runs from V_i to V_{i+1}. The corner (t, i) is the angle of triangle
t at V_i, between e_i and -e_{i-1}.

Gluings map (t, i) to (t', j) and back, with e'_j = -e_i.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass

import numpy as np

from ..errors import BadGluing
from ..strata import Partition, Stratum

EPSILON = 1e-9

Corner = typing.Tuple[int, int]
Edge = typing.Tuple[int, int]


def cross(u, v) -> float:
    return float(u[0] * v[1] - u[1] * v[0])


def corner_angle(outgoing, incoming) -> float:
    """
    The counter-clockwise angle from outgoing to -incoming, in (0, 2pi).
    """
    back = -np.asarray(incoming)
    angle = math.atan2(cross(outgoing, back), float(np.dot(outgoing, back)))
    return angle % (2 * math.pi)


@dataclass(frozen=True)
class ConePoint:
    order: int
    corners: typing.Tuple[Corner, ...]

    @property
    def angle(self) -> float:
        return 2 * math.pi * (self.order + 1)


class TranslationSurface:
    def __init__(
        self,
        triangles: typing.Sequence[typing.Sequence[typing.Sequence[float]]],
        gluings: typing.Mapping[Edge, Edge],
        epsilon: float = EPSILON,
    ):
        self.triangles = [np.asarray(t, dtype=float).reshape(3, 2) for t in triangles]
        self.gluings = dict(gluings)
        self.epsilon = epsilon
        self._check()
        self.cone_points = self._find_cone_points()
        self.cone_of = {
            corner: index
            for index, cone in enumerate(self.cone_points)
            for corner in cone.corners
        }

    def __repr__(self) -> str:
        return f"TranslationSurface with {len(self.triangles)} triangles in {self.stratum}"

    def _check(self) -> None:
        scale = max(float(np.abs(t).max()) for t in self.triangles) if self.triangles else 1.0
        for t, edges in enumerate(self.triangles):
            if np.abs(edges.sum(axis=0)).max() > self.epsilon * scale:
                raise BadGluing(f"Invalid triangle {t}, edges do not close up")
            if cross(edges[0], edges[1]) <= 0:
                raise BadGluing(f"Invalid triangle {t}, not counter-clockwise")
        for t in range(len(self.triangles)):
            for i in range(3):
                if (t, i) not in self.gluings:
                    raise BadGluing(f"Invalid gluing, edge {(t, i)} is not glued")
                other = self.gluings[(t, i)]
                if self.gluings.get(other) != (t, i):
                    raise BadGluing(f"Invalid gluing, {(t, i)} -> {other} is not symmetric")
                if np.abs(self.edge(t, i) + self.edge(*other)).max() > self.epsilon * scale:
                    raise BadGluing(f"Invalid gluing, edges {(t, i)} and {other} do not match")

    def edge(self, t: int, i: int) -> np.ndarray:
        return self.triangles[t][i % 3]

    def vertex(self, t: int, i: int) -> np.ndarray:
        """
        Position of V_i in the triangle's own frame, V_0 at the origin.
        """
        edges = self.triangles[t]
        i %= 3
        return edges[:i].sum(axis=0) if i else np.zeros(2)

    def corner_angle(self, t: int, i: int) -> float:
        return corner_angle(self.edge(t, i), self.edge(t, i - 1))

    @property
    def corners(self) -> typing.List[Corner]:
        return [(t, i) for t in range(len(self.triangles)) for i in range(3)]

    def next_corner(self, corner: Corner) -> Corner:
        """
        The corner counter-clockwise after this one around the same vertex.
        """
        t, i = corner
        return self.gluings[(t, (i - 1) % 3)]

    def _find_cone_points(self) -> typing.List[ConePoint]:
        cones = []
        seen = set()
        for corner in self.corners:
            if corner in seen:
                continue
            cycle = []
            current = corner
            while current not in seen:
                seen.add(current)
                cycle.append(current)
                current = self.next_corner(current)
            if current != corner:
                raise BadGluing(f"Invalid gluing, corners around {corner} do not close up")
            total = sum(self.corner_angle(*c) for c in cycle)
            turns = total / (2 * math.pi)
            if abs(turns - round(turns)) > 1e-6 or round(turns) < 1:
                raise BadGluing(
                    f"Invalid gluing, cone angle {total:.6f} is not a multiple of 2pi"
                )
            cones.append(ConePoint(round(turns) - 1, tuple(cycle)))
        return cones

    @property
    def area(self) -> float:
        return sum(cross(t[0], t[1]) / 2 for t in self.triangles)

    @property
    def stratum(self) -> Stratum:
        return Stratum(Partition(tuple(cone.order for cone in self.cone_points)))

    def scaled(self, factor: float) -> TranslationSurface:
        return TranslationSurface(
            [t * factor for t in self.triangles], self.gluings, self.epsilon
        )

    def normalized(self) -> TranslationSurface:
        """
        The same surface rescaled to area one.
        """
        return self.scaled(1 / math.sqrt(self.area))

    def contains(self, t: int, point: np.ndarray, tolerance: float = 0.0) -> bool:
        for i in range(3):
            if cross(self.edge(t, i), point - self.vertex(t, i)) < -tolerance:
                return False
        return True


def polygon_area(points: np.ndarray) -> float:
    x, y = points[:, 0], points[:, 1]
    return float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y)) / 2


def triangulate_polygon(points: np.ndarray) -> typing.List[typing.Tuple[int, int, int]]:
    """
    Ear clipping. The polygon must be simple and counter-clockwise; each
    triangle is returned as three vertex indices in counter-clockwise order.
    """
    remaining = list(range(len(points)))
    triangles = []
    scale = float(np.abs(points).max()) or 1.0
    tolerance = EPSILON * scale * scale

    def is_ear(k: int) -> bool:
        a, b, c = remaining[k - 1], remaining[k], remaining[(k + 1) % len(remaining)]
        pa, pb, pc = points[a], points[b], points[c]
        if cross(pb - pa, pc - pb) <= tolerance:
            return False
        for other in remaining:
            if other in (a, b, c):
                continue
            q = points[other]
            if (
                cross(pb - pa, q - pa) >= -tolerance
                and cross(pc - pb, q - pb) >= -tolerance
                and cross(pa - pc, q - pc) >= -tolerance
            ):
                return False
        return True

    while len(remaining) > 3:
        for k in range(len(remaining)):
            if is_ear(k):
                a, b, c = remaining[k - 1], remaining[k], remaining[(k + 1) % len(remaining)]
                triangles.append((a, b, c))
                del remaining[k]
                break
        else:
            raise BadGluing("Invalid polygon, no ear to clip")
    triangles.append(tuple(remaining))
    return triangles


PolygonSide = typing.Tuple[int, int]


def build_from_polygons(
    polygons: typing.Sequence[typing.Sequence[typing.Sequence[float]]],
    pairs: typing.Iterable[typing.Tuple[PolygonSide, PolygonSide]],
    epsilon: float = EPSILON,
) -> TranslationSurface:
    """
    Glue counter-clockwise polygons along pairs of sides. Side k of a
    polygon runs from its vertex k to vertex k + 1.
    """
    triangles = []
    owner: typing.Dict[typing.Tuple[int, int, int], Edge] = {}
    vertices = []

    for n, polygon in enumerate(polygons):
        points = np.asarray(polygon, dtype=float)
        if polygon_area(points) <= 0:
            raise BadGluing(f"Invalid polygon {n}, not counter-clockwise")
        vertices.append(points)
        for a, b, c in triangulate_polygon(points):
            t = len(triangles)
            triangles.append([points[b] - points[a], points[c] - points[b], points[a] - points[c]])
            for i, (u, v) in enumerate(((a, b), (b, c), (c, a))):
                owner[(n, u, v)] = (t, i)

    gluings = {}
    # Diagonals introduced by the triangulation
    for (n, u, v), edge in owner.items():
        if (n, v, u) in owner:
            gluings[edge] = owner[(n, v, u)]

    for (n, k), (m, l) in pairs:
        first = owner.get((n, k, (k + 1) % len(vertices[n])))
        second = owner.get((m, l, (l + 1) % len(vertices[m])))
        if first is None or second is None:
            raise BadGluing(f"Invalid side pair {(n, k)} <-> {(m, l)}")
        if first in gluings or second in gluings:
            raise BadGluing(f"Invalid side pair {(n, k)} <-> {(m, l)}, side glued twice")
        gluings[first] = second
        gluings[second] = first

    return TranslationSurface(triangles, gluings, epsilon)


def _square(x: float, y: float) -> typing.List[typing.Tuple[float, float]]:
    return [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]


# Square sides
BOTTOM, RIGHT, TOP, LEFT = range(4)


def square_torus() -> TranslationSurface:
    """
    The unit square with opposite sides glued, one marked point.
    """
    return build_from_polygons([_square(0, 0)], [((0, BOTTOM), (0, TOP)), ((0, LEFT), (0, RIGHT))])


def two_marked_torus() -> TranslationSurface:
    """
    A 2 x 1 torus made of two unit squares, with two marked points.
    """
    return build_from_polygons(
        [_square(0, 0), _square(1, 0)],
        [
            ((0, RIGHT), (1, LEFT)),
            ((1, RIGHT), (0, LEFT)),
            ((0, BOTTOM), (0, TOP)),
            ((1, BOTTOM), (1, TOP)),
        ],
    )


def regular_octagon() -> TranslationSurface:
    """
    The regular octagon with unit sides and opposite sides glued, a surface
    in H(2).
    """
    points = [np.zeros(2)]
    for k in range(7):
        angle = k * math.pi / 4
        points.append(points[-1] + np.array([math.cos(angle), math.sin(angle)]))
    return build_from_polygons([points], [((0, k), (0, k + 4)) for k in range(4)])


def four_square_surface() -> TranslationSurface:
    """
    Four unit squares A, B, C, D glued into a surface in H(1, 1):

        D
      A B
      C
    """
    A, B, C, D = range(4)
    return build_from_polygons(
        [_square(0, 1), _square(1, 1), _square(0, 0), _square(1, 2)],
        [
            ((A, LEFT), (B, RIGHT)),
            ((A, RIGHT), (B, LEFT)),
            ((C, LEFT), (C, RIGHT)),
            ((D, LEFT), (D, RIGHT)),
            ((A, TOP), (C, BOTTOM)),
            ((A, BOTTOM), (C, TOP)),
            ((B, TOP), (D, BOTTOM)),
            ((D, TOP), (B, BOTTOM)),
        ],
    )
