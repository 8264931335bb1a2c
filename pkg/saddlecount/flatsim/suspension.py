"""
Random translation surfaces from suspensions of interval exchanges.

An interval exchange on d intervals is given by a permutation in one-line
notation: pi[a - 1] is the position of interval a after the exchange.
Choosing lengths lambda and heights tau gives vectors zeta_a = (lambda_a,
tau_a). Laying them out in the original order gives the top broken line,
in the exchanged order the bottom one; when every proper partial sum of
heights is positive on top and negative at the bottom, the two lines
bound a polygon whose matching sides glue into a translation surface.
"""
from __future__ import annotations

import itertools
import math
import typing
from dataclasses import dataclass

import numpy as np

from ..errors import BadGluing, Reducible, SamplingFailure, UnknownComponent
from ..strata import Component, Partition, Stratum, StratumComponent
from .surface import TranslationSurface, build_from_polygons, corner_angle, polygon_area

MAX_ATTEMPTS = 10000

Seed = typing.Union[int, np.random.SeedSequence, np.random.Generator, None]


@dataclass(frozen=True)
class IrreduciblePermutation:
    images: typing.Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        d = len(images)
        if sorted(images) != list(range(1, d + 1)):
            raise Reducible(f"Invalid permutation: {images}")
        for k in range(1, d):
            if set(images[:k]) == set(range(1, k + 1)):
                raise Reducible(f"Permutation {images} preserves the first {k} intervals")
        object.__setattr__(self, "images", images)

    @classmethod
    def parse(cls, text: str) -> IrreduciblePermutation:
        text = text.strip().strip("()")
        try:
            images = tuple(int(part) for part in text.replace(",", " ").split())
        except ValueError:
            raise Reducible(f"Invalid permutation format: {text!r}")
        return cls(images)

    def __len__(self) -> int:
        return len(self.images)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.images) + ")"

    @property
    def bottom_order(self) -> typing.List[int]:
        """
        Interval labels from left to right after the exchange.
        """
        order = [0] * len(self.images)
        for label, position in enumerate(self.images, start=1):
            order[position - 1] = label
        return order

    def canonical_heights(self) -> np.ndarray:
        return np.array(
            [position - label for label, position in enumerate(self.images, start=1)],
            dtype=float,
        )

    def is_suspension(self, heights: np.ndarray) -> bool:
        d = len(self.images)
        top = np.cumsum(heights)[: d - 1]
        bottom = np.cumsum(heights[np.array(self.bottom_order) - 1])[: d - 1]
        return bool((top > 0).all() and (bottom < 0).all())


def suspension_polygon(
    pi: IrreduciblePermutation, lengths: np.ndarray, heights: np.ndarray
) -> typing.Tuple[np.ndarray, typing.List[typing.Tuple[typing.Tuple[int, int], typing.Tuple[int, int]]]]:
    """
    The counter-clockwise polygon (bottom line left to right, then top line
    right to left) and its side pairs.
    """
    d = len(pi)
    zeta = np.column_stack([lengths, heights])
    bottom_points = np.vstack([np.zeros(2), np.cumsum(zeta[np.array(pi.bottom_order) - 1], axis=0)])
    top_points = np.vstack([np.zeros(2), np.cumsum(zeta, axis=0)])
    points = np.vstack([bottom_points, top_points[d - 1 : 0 : -1]])

    # Side k < d is the bottom copy of interval bottom_order[k]; side d + k is
    # the top copy of interval d - k.
    bottom_side = {label: k for k, label in enumerate(pi.bottom_order)}
    pairs = [((0, bottom_side[label]), (0, d + (d - label))) for label in range(1, d + 1)]
    return points, pairs


def stratum_of_permutation(pi: typing.Union[IrreduciblePermutation, typing.Sequence[int]]) -> Stratum:
    """
    Read off the cone points of the canonical suspension (unit lengths,
    tau_a = pi(a) - a) by following polygon vertices through the gluings.
    """
    if not isinstance(pi, IrreduciblePermutation):
        pi = IrreduciblePermutation(tuple(pi))
    d = len(pi)
    points, pairs = suspension_polygon(pi, np.ones(d), pi.canonical_heights())
    count = len(points)

    parent = list(range(count))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for (_, k), (_, l) in pairs:
        # Side k runs from vertex k to k + 1, its partner backwards
        for a, b in ((k, (l + 1) % count), ((k + 1) % count, l)):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

    angles: typing.Dict[int, float] = {}
    for k in range(count):
        outgoing = points[(k + 1) % count] - points[k]
        incoming = points[k] - points[k - 1]
        angles[find(k)] = angles.get(find(k), 0.0) + corner_angle(outgoing, incoming)

    orders = tuple(round(angle / (2 * math.pi)) - 1 for angle in angles.values())
    return Stratum(Partition(orders))


def _rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def sample_surface(
    pi: typing.Union[IrreduciblePermutation, typing.Sequence[int]],
    seed: Seed = None,
    max_attempts: int = MAX_ATTEMPTS,
) -> TranslationSurface:
    """
    A random area-one surface from the suspensions of pi.

    Lengths are uniform on the simplex. Heights are uniform on the slice
    sum(tau) = 0 of [-1, 1]^d, then sheared by a uniform s in (-1, 1); draws
    that violate the suspension inequalities are rejected.
    """
    if not isinstance(pi, IrreduciblePermutation):
        pi = IrreduciblePermutation(tuple(pi))
    rng = _rng(seed)
    d = len(pi)

    lengths = rng.dirichlet(np.ones(d))
    for _ in range(max_attempts):
        free = rng.uniform(-1, 1, size=d - 1)
        last = -free.sum()
        if abs(last) > 1:
            continue
        heights = np.append(free, last) + rng.uniform(-1, 1) * lengths
        if not pi.is_suspension(heights):
            continue
        points, pairs = suspension_polygon(pi, lengths, heights)
        points = points / math.sqrt(polygon_area(points))
        try:
            return build_from_polygons([points], pairs)
        except BadGluing:
            # Degenerate polygon, draw again
            continue

    raise SamplingFailure(f"No suspension of {pi} found in {max_attempts} attempts")


def permutation_for(component: StratumComponent) -> IrreduciblePermutation:
    """
    A permutation whose suspensions lie in the component.

    The hyperelliptic component is reached by the symmetric permutation, a
    connected stratum by the first matching permutation in lexicographic
    order. Spin and non-hyperelliptic components have to be given an
    explicit permutation.
    """
    stratum = component.stratum
    d = stratum.dim_complex
    label = component.effective_label

    if label == Component.HYPERELLIPTIC:
        pi = IrreduciblePermutation(tuple(range(d, 0, -1)))
        if stratum_of_permutation(pi) == stratum:
            return pi
    elif label == Component.CONNECTED:
        for images in itertools.permutations(range(1, d + 1)):
            try:
                pi = IrreduciblePermutation(images)
            except Reducible:
                continue
            if stratum_of_permutation(pi) == stratum:
                return pi

    raise UnknownComponent(f"No permutation known for {component}, give one explicitly")
