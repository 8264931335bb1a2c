"""
Saddle connections and cylinders up to a given length.

Saddle connections are found by developing the triangulation into the plane
from every corner, keeping track of the wedge of directions that is still
visible from the corner's vertex. Every vertex that shows up inside the
wedge is the end of a saddle connection and splits the wedge in two.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass, field

import numpy as np

from ..errors import ToleranceBreach
from .surface import EPSILON, Corner, TranslationSurface, cross

# Relative alignments below this are roundoff and count as exact
ROUNDOFF = 1e-13

MAX_STEPS = 1000000


@dataclass(frozen=True)
class SaddleConnectionRecord:
    holonomy: typing.Tuple[float, float]
    from_zero: int
    to_zero: int
    is_closed: bool
    start_corner: Corner

    @property
    def length(self) -> float:
        return math.hypot(*self.holonomy)


@dataclass(frozen=True)
class Cylinder:
    holonomy: typing.Tuple[float, float]
    height: float
    edges: typing.Tuple = field(default=(), compare=False, repr=False)

    @property
    def circumference(self) -> float:
        return math.hypot(*self.holonomy)

    @property
    def area(self) -> float:
        return self.circumference * self.height


def is_upper(vector) -> bool:
    """
    True for vectors in the half plane that represents each unoriented
    direction once: y > 0, or y = 0 and x > 0.
    """
    x, y = vector
    return y > 0 or (y == 0 and x > 0)


def _side(ray: np.ndarray, point: np.ndarray, epsilon: float) -> int:
    """
    +1 if point is strictly left of ray, -1 if strictly right, 0 on it.
    """
    norm = float(np.hypot(*ray) * np.hypot(*point))
    relative = cross(ray, point) / norm if norm else 0.0
    if abs(relative) <= ROUNDOFF:
        return 0
    if abs(relative) <= epsilon:
        raise ToleranceBreach(
            f"Ambiguous alignment of {tuple(point)} with direction {tuple(ray)}"
        )
    return 1 if relative > 0 else -1


def _segment_distance(a: np.ndarray, b: np.ndarray) -> float:
    """
    Distance from the origin to the segment from a to b.
    """
    direction = b - a
    length2 = float(np.dot(direction, direction))
    if not length2:
        return float(np.hypot(*a))
    s = min(1.0, max(0.0, -float(np.dot(a, direction)) / length2))
    return float(np.hypot(*(a + s * direction)))


def _from_corner(
    surface: TranslationSurface, corner: Corner, L: float, epsilon: float
) -> typing.Iterator[typing.Tuple[np.ndarray, Corner]]:
    t, i = corner
    right = surface.edge(t, i)
    left = -surface.edge(t, i - 1)

    if np.hypot(*right) <= L:
        yield right, (t, (i + 1) % 3)

    # State: triangle, the edge we enter it through, the positions of that
    # edge's start (left of us) and end (right of us), and the wedge
    start = surface.vertex(t, i)
    a = surface.vertex(t, i + 2) - start
    b = surface.vertex(t, i + 1) - start
    if _segment_distance(a, b) > L:
        return
    other = surface.gluings[(t, (i + 1) % 3)]
    stack = [(other, a, b, right, left)]
    steps = 0

    while stack:
        steps += 1
        if steps > MAX_STEPS:
            raise ToleranceBreach(f"Development from {corner} did not terminate")
        (u, j), a, b, right, left = stack.pop()
        c = b + surface.edge(u, j + 1)
        right_side = _side(right, c, epsilon)
        left_side = _side(c, left, epsilon)

        # Crossing edge j + 1 (b to c) or edge j + 2 (c to a)
        through_bc = ((u, (j + 1) % 3), c, b)
        through_ca = ((u, (j + 2) % 3), a, c)

        if right_side > 0 and left_side > 0:
            if np.hypot(*c) <= L:
                yield c, (u, (j + 2) % 3)
            branches = [(through_bc, right, c), (through_ca, c, left)]
        elif right_side <= 0 and left_side > 0:
            branches = [(through_ca, right, left)]
        elif left_side <= 0 and right_side > 0:
            branches = [(through_bc, right, left)]
        else:
            branches = []

        for (edge, new_a, new_b), new_right, new_left in branches:
            if _segment_distance(new_a, new_b) > L:
                continue
            stack.append((surface.gluings[edge], new_a, new_b, new_right, new_left))


def saddle_connections_up_to(
    surface: TranslationSurface, L: float, epsilon: float = EPSILON
) -> typing.List[SaddleConnectionRecord]:
    """
    Every saddle connection of length at most L, each unoriented connection
    once, oriented into the upper half plane.
    """
    records = []
    for corner in surface.corners:
        from_zero = surface.cone_of[corner]
        for holonomy, end in _from_corner(surface, corner, L, epsilon):
            if not is_upper(holonomy):
                continue
            to_zero = surface.cone_of[end]
            records.append(
                SaddleConnectionRecord(
                    holonomy=(float(holonomy[0]), float(holonomy[1])),
                    from_zero=from_zero,
                    to_zero=to_zero,
                    is_closed=from_zero == to_zero,
                    start_corner=corner,
                )
            )
    records.sort(key=lambda r: (r.length, r.holonomy, r.start_corner))
    return records


def _exit(
    surface: TranslationSurface, t: int, x: np.ndarray, u: np.ndarray
) -> typing.Tuple[int, float]:
    """
    The edge through which the ray x + s u leaves triangle t, and s.
    """
    best_edge, best_s = -1, math.inf
    for k in range(3):
        e = surface.edge(t, k)
        speed = -cross(e, u)
        if speed <= 0:
            continue
        s = max(0.0, cross(e, x - surface.vertex(t, k))) / speed
        if s < best_s:
            best_edge, best_s = k, s
    return best_edge, best_s


def _cross_edge(
    surface: TranslationSurface, t: int, k: int, y: np.ndarray
) -> typing.Tuple[int, np.ndarray]:
    """
    Carry a point on edge k of triangle t over to the glued triangle.
    """
    u, j = surface.gluings[(t, k)]
    return u, y - surface.vertex(t, k + 1) + surface.vertex(u, j)


def flow(
    surface: TranslationSurface, t: int, x: np.ndarray, u: np.ndarray, length: float
) -> typing.Tuple[int, np.ndarray]:
    """
    Follow the straight line from x in triangle t in the unit direction u.
    """
    remaining = length
    for _ in range(MAX_STEPS):
        k, s = _exit(surface, t, x, u)
        if s >= remaining:
            return t, x + remaining * u
        remaining -= s
        t, x = _cross_edge(surface, t, k, x + s * u)
    raise ToleranceBreach("Straight line flow did not terminate")


def _closed_orbit(
    surface: TranslationSurface,
    t0: int,
    x0: np.ndarray,
    u: np.ndarray,
    L: float,
    tolerance: float,
) -> typing.Optional[typing.Tuple[float, typing.Tuple]]:
    """
    If the line from x0 in direction u closes up within length L, its
    length and the cycle of edges it crosses.
    """
    t, x = t0, x0
    travelled = 0.0
    crossed = []
    while travelled <= L + tolerance:
        k, s = _exit(surface, t, x, u)
        if t == t0 and crossed:
            offset = x0 - x
            along = float(np.dot(offset, u))
            if -tolerance <= along <= s + tolerance and abs(cross(u, offset)) <= tolerance:
                return travelled + along, tuple(crossed)
        if k < 0:
            return None
        crossed.append((t, k))
        travelled += s
        t, x = _cross_edge(surface, t, k, x + s * u)
        if len(crossed) > MAX_STEPS:
            return None
    return None


def _canonical_cycle(edges: typing.Tuple) -> typing.Tuple:
    return min(edges[k:] + edges[:k] for k in range(len(edges)))


def _start_point(
    surface: TranslationSurface, record: SaddleConnectionRecord
) -> typing.Tuple[int, np.ndarray, np.ndarray, float]:
    """
    A point a short step along the start of the saddle connection, inside the
    triangle that contains its initial direction, in that triangle's frame.
    """
    holonomy = np.array(record.holonomy)
    u = holonomy / np.hypot(*holonomy)
    corner = record.start_corner
    for _ in range(len(surface.corners)):
        t, i = corner
        origin = surface.vertex(t, i)
        shortest = min(np.hypot(*surface.edge(t, k)) for k in range(3))
        step = shortest * 1e-3
        point = origin + u * step
        if surface.contains(t, point):
            return t, point, u, step
        corner = surface.next_corner(corner)
    raise ToleranceBreach(f"Direction {record.holonomy} not found around its start")


def _trace_cylinder(
    surface: TranslationSurface,
    start: typing.Tuple[int, np.ndarray],
    u: np.ndarray,
    normal: np.ndarray,
    offset: float,
    L: float,
    tolerance: float,
):
    t, x = flow(surface, start[0], start[1], normal, offset)
    return _closed_orbit(surface, t, x, u, L, tolerance)


def cylinders_up_to(
    surface: TranslationSurface, L: float, epsilon: float = EPSILON
) -> typing.List[Cylinder]:
    """
    Every maximal cylinder with circumference at most L, each once.

    Every cylinder is bounded by saddle connections parallel to its core
    curves, so it is found by pushing a line off a short saddle connection
    and checking whether it closes up. The height comes from bisecting how
    far the line can be pushed before it stops closing up the same way.
    """
    records = saddle_connections_up_to(surface, L, epsilon)
    area = surface.area
    tolerance = 1e-7 * math.sqrt(area)
    found = {}

    for record in records:
        t, point, u, step = _start_point(surface, record)
        middle = flow(surface, t, point, u, record.length / 2 - step)
        for sign in (1, -1):
            normal = sign * np.array([-u[1], u[0]])
            nudge = 10 * tolerance
            result = _trace_cylinder(surface, middle, u, normal, nudge, L, tolerance)
            if result is None:
                continue
            circumference, edges = result
            key = _canonical_cycle(edges)
            if key in found:
                continue

            low, high = nudge, area / circumference
            for _ in range(60):
                mid = (low + high) / 2
                trial = _trace_cylinder(surface, middle, u, normal, mid, L, tolerance)
                if (
                    trial is not None
                    and abs(trial[0] - circumference) <= 10 * tolerance
                    and _canonical_cycle(trial[1]) == key
                ):
                    low = mid
                else:
                    high = mid
            holonomy = (float(u[0] * circumference), float(u[1] * circumference))
            found[key] = Cylinder(holonomy, low, key)

    cylinders = sorted(found.values(), key=lambda c: (c.circumference, c.holonomy))
    return cylinders
