"""
Configurations of homologous saddle connections joining a zero to itself.

Collapsing the connections cuts the surface into p pieces arranged in a
cycle. Each piece is either a figure-eight (F), where a zero of order
a' + a'' was broken up, or a pair of holes (H), where two zeros of orders
b' and b'' became the ends of a slit. Neighbouring pieces are glued either
directly ("-") or through a cylinder ("=").
"""
from __future__ import annotations

import itertools
import typing
from dataclasses import dataclass

from ..errors import DimensionMismatch, MalformedCycle, OddSum, UnknownComponent
from ..strata import Component, Partition, Stratum, StratumComponent, genus_of
from .base import (
    Rest,
    SymmetryInfo,
    compositions,
    distributions,
    is_rotation_of,
    normalize_rest,
    rotation_stabilizer,
)

DIRECT = "-"
CYLINDER = "="

FIGURE_EIGHT = "F"
PAIR_OF_HOLES = "H"

TYPE_TAGS = ("I", "II", "III")


@dataclass(frozen=True, order=True)
class ClosedPiece:
    """
    For a figure-eight, x and y are a' and a''; for a pair of holes they are
    b' (the left side of the slit) and b'' (the right side).
    """

    kind: str
    x: int
    y: int
    rest: Rest = ()

    def __post_init__(self):
        if self.kind not in (FIGURE_EIGHT, PAIR_OF_HOLES):
            raise ValueError(f"Invalid piece kind: {self.kind}")
        object.__setattr__(self, "rest", normalize_rest(self.rest))

    @property
    def is_figure_eight(self) -> bool:
        return self.kind == FIGURE_EIGHT

    @property
    def partition(self) -> Partition:
        if self.is_figure_eight:
            return Partition(self.rest + (self.x + self.y,))
        return Partition(self.rest + (self.x, self.y))

    @property
    def genus(self) -> int:
        return genus_of(self.partition)

    @property
    def d(self) -> int:
        return 2 * Stratum(self.partition).dim_complex

    def swapped(self) -> ClosedPiece:
        return ClosedPiece(self.kind, self.y, self.x, self.rest)

    def key(self) -> typing.Tuple:
        return (self.kind, self.x, self.y, self.rest)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "x": self.x, "y": self.y, "rest": list(self.rest)}


@dataclass(frozen=True)
class NewbornZero:
    order: int
    type_tag: str
    chain: typing.Tuple[int, ...]


@dataclass(frozen=True)
class ClosedConfig:
    """
    glue[i] is the gluing between piece i - 1 and piece i, cyclically.
    """

    pieces: typing.Tuple[ClosedPiece, ...]
    glue: typing.Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        object.__setattr__(self, "glue", tuple(self.glue))

    @property
    def p(self) -> int:
        return len(self.pieces)

    @property
    def q(self) -> int:
        return self.glue.count(CYLINDER)

    @property
    def multiplicity(self) -> int:
        return self.p + self.q

    @property
    def rests(self) -> typing.List[Rest]:
        return [piece.rest for piece in self.pieces]

    def decorated(self) -> typing.Tuple:
        return tuple(zip(self.glue, (piece.key() for piece in self.pieces)))

    def key(self) -> typing.Tuple:
        return self.decorated()

    def rotated(self, shift: int) -> ClosedConfig:
        return ClosedConfig(
            self.pieces[shift:] + self.pieces[:shift],
            self.glue[shift:] + self.glue[:shift],
        )

    def reversed(self) -> ClosedConfig:
        """
        Walk the cycle the other way: left and right sides trade places and
        every gluing moves to the reversed boundary.
        """
        p = self.p
        pieces = tuple(self.pieces[-j % p].swapped() for j in range(p))
        glue = tuple(self.glue[(1 - j) % p] for j in range(p))
        return ClosedConfig(pieces, glue)

    def orbit(self) -> typing.Iterator[ClosedConfig]:
        for config in (self, self.reversed()):
            for shift in range(config.p):
                yield config.rotated(shift)

    def to_dict(self) -> dict:
        return {
            "pieces": [piece.to_dict() for piece in self.pieces],
            "glue": list(self.glue),
        }


def canonicalize_closed(cfg: ClosedConfig) -> ClosedConfig:
    return min(cfg.orbit(), key=ClosedConfig.key)


def symmetry_closed(cfg: ClosedConfig) -> SymmetryInfo:
    decorated = cfg.decorated()
    rot_order = rotation_stabilizer(decorated)
    gamma_order = 2 if is_rotation_of(cfg.reversed().decorated(), decorated) else 1
    return SymmetryInfo(gamma_order, rot_order)


class _Sides:
    """
    Union-find over the left and right sides of the pieces.
    """

    def __init__(self, p: int):
        self.parent = {(i, side): (i, side) for i in range(p) for side in "LR"}

    def find(self, node):
        while self.parent[node] != node:
            self.parent[node] = self.parent[self.parent[node]]
            node = self.parent[node]
        return node

    def union(self, a, b) -> None:
        root_a, root_b = self.find(a), self.find(b)
        if root_a != root_b:
            self.parent[max(root_a, root_b)] = min(root_a, root_b)


def newborn_zeros(cfg: ClosedConfig) -> typing.List[NewbornZero]:
    """
    The zeros created when the pieces are glued back together.

    Each newborn zero is a maximal chain of sides joined by figure-eights and
    direct gluings. Its order is the sum of a + 2 over the figure-eights in
    the chain plus b + 1 for every slit side that ends it.
    """
    p = cfg.p
    if p == 0 or len(cfg.glue) != p:
        raise MalformedCycle(
            f"Invalid cycle, {p} pieces and {len(cfg.glue)} gluings"
        )

    sides = _Sides(p)
    for i, piece in enumerate(cfg.pieces):
        if piece.is_figure_eight:
            sides.union((i, "L"), (i, "R"))
        if cfg.glue[i] == DIRECT:
            sides.union(((i - 1) % p, "R"), (i, "L"))

    groups: typing.Dict[typing.Tuple[int, str], typing.List[typing.Tuple[int, str]]] = {}
    for i in range(p):
        for side in "LR":
            groups.setdefault(sides.find((i, side)), []).append((i, side))

    zeros = []
    for root in sorted(groups):
        nodes = groups[root]
        order = 0
        hole_sides = 0
        ends = 0
        chain = sorted({i for i, _ in nodes})
        for i, side in nodes:
            piece = cfg.pieces[i]
            if piece.is_figure_eight:
                if side == "L":
                    order += piece.x + piece.y + 2
            else:
                hole_sides += 1
                order += (piece.x if side == "L" else piece.y) + 1
            boundary = i if side == "L" else (i + 1) % p
            if cfg.glue[boundary] == CYLINDER:
                ends += 1
        if not hole_sides and not ends:
            raise MalformedCycle("Invalid cycle, figure-eights glued into a closed loop")
        zeros.append(NewbornZero(order, TYPE_TAGS[hole_sides], tuple(chain)))
    return zeros


def validate_closed(cfg: ClosedConfig, ambient: Stratum) -> typing.List[str]:
    violations = []
    if cfg.p == 0 or len(cfg.glue) != cfg.p:
        return [f"Invalid cycle, {cfg.p} pieces and {len(cfg.glue)} gluings"]

    if not cfg.q and all(piece.is_figure_eight for piece in cfg.pieces):
        violations.append("No pair of holes and no cylinder")

    for i, piece in enumerate(cfg.pieces):
        try:
            piece.genus
        except OddSum:
            violations.append(f"Piece {i}: H({piece.partition}) has odd total order")

    try:
        zeros = newborn_zeros(cfg)
    except MalformedCycle as e:
        violations.append(str(e))
        return violations

    collected = Partition(
        tuple(zero.order for zero in zeros)
        + tuple(e for rest in cfg.rests for e in rest)
    ).positive
    if collected != ambient.alpha.positive:
        violations.append(
            f"Zeros ({collected}) do not add up to the stratum ({ambient.alpha.positive})"
        )
    return violations


def d_values(cfg: ClosedConfig, ambient: typing.Optional[Stratum] = None) -> typing.List[int]:
    """
    Real dimensions of the piece strata, marked points included. With an
    ambient stratum, checks 2q + 2 + sum(d) = dim_R.
    """
    values = [piece.d for piece in cfg.pieces]
    if ambient is not None:
        total = 2 * cfg.q + 2 + sum(values)
        if total != ambient.dim_real:
            raise DimensionMismatch(
                f"Invalid dimensions, 2q + 2 + sum(d) = {total} but dim_R {ambient} = "
                f"{ambient.dim_real}"
            )
    return values


def is_hyperelliptic_closed_shape(cfg: ClosedConfig, alpha: Partition) -> bool:
    """
    True when the configuration can occur on the hyperelliptic component:
    every piece is symmetric and free of unchanged zeros, and the cycle is
    one of the few shapes compatible with the hyperelliptic involution.
    """
    alpha = alpha.positive
    if any(piece.rest or piece.x != piece.y for piece in cfg.pieces):
        return False
    kinds = sorted(piece.kind for piece in cfg.pieces)
    g = genus_of(alpha)
    if alpha.entries == (2 * g - 2,):
        if cfg.p == 1 and cfg.glue == (DIRECT,):
            return kinds == [PAIR_OF_HOLES]
        if cfg.p == 1 and cfg.glue == (CYLINDER,):
            return kinds == [FIGURE_EIGHT]
        if cfg.p == 2 and cfg.glue == (DIRECT, DIRECT):
            return kinds == [FIGURE_EIGHT, PAIR_OF_HOLES]
        return False
    if alpha.entries == (g - 1, g - 1):
        if cfg.p == 1 and cfg.glue == (CYLINDER,):
            return kinds == [PAIR_OF_HOLES]
        if cfg.p == 2 and cfg.glue == (DIRECT, DIRECT):
            return kinds == [PAIR_OF_HOLES, PAIR_OF_HOLES]
    return False


def _candidates(alpha: Partition, p: int) -> typing.Iterator[ClosedConfig]:
    g = genus_of(alpha)
    entries = [e for e in alpha if e > 0]
    for parts in distributions(entries, p + 1):
        rests, newborn = parts[:p], parts[p]
        if not newborn:
            continue
        surgery = 2 * (g - 1 - p) - sum(sum(rest) for rest in rests)
        if surgery < 0:
            continue
        for sizes in compositions(surgery, p):
            if any((sum(rest) + s) % 2 for rest, s in zip(rests, sizes)):
                continue
            splits = [range(s + 1) for s in sizes]
            for kinds in itertools.product((FIGURE_EIGHT, PAIR_OF_HOLES), repeat=p):
                for xs in itertools.product(*splits):
                    pieces = tuple(
                        ClosedPiece(kind, x, s - x, rest)
                        for kind, x, s, rest in zip(kinds, xs, sizes, rests)
                    )
                    for glue in itertools.product((DIRECT, CYLINDER), repeat=p):
                        config = ClosedConfig(pieces, glue)
                        try:
                            zeros = newborn_zeros(config)
                        except MalformedCycle:
                            continue
                        if normalize_rest(z.order for z in zeros) == newborn:
                            yield config


def enumerate_closed_configs(
    ambient: Stratum, p: typing.Optional[int] = None
) -> typing.List[ClosedConfig]:
    """
    Every admissible configuration on the whole stratum, one canonical
    representative per symmetry class, sorted.
    """
    alpha = ambient.alpha.positive
    g = genus_of(alpha)
    multiplicities = range(1, g) if p is None else [m for m in [p] if 1 <= m < g]

    found = {}
    for count in multiplicities:
        for config in _candidates(alpha, count):
            config = canonicalize_closed(config)
            found.setdefault(config.key(), config)
    return [found[key] for key in sorted(found, key=lambda key: (len(key), key))]


def enumerate_closed(
    component: StratumComponent, table=None
) -> typing.List[ClosedConfig]:
    """
    The configurations admitted by a component. On the hyperelliptic
    component these are the hyperelliptic shapes; on spin and
    non-hyperelliptic components, the configurations with a nonzero
    constant.
    """
    from ..sv.closed import constant_closed
    from ..volumes import bundled_table

    label = component.effective_label
    if label not in Component.ALL:
        raise UnknownComponent(f"Invalid component label: {label}")

    configs = enumerate_closed_configs(component.stratum)
    if label == Component.CONNECTED:
        return configs
    if label == Component.HYPERELLIPTIC:
        return [c for c in configs if is_hyperelliptic_closed_shape(c, component.alpha)]

    table = table or bundled_table()
    return [c for c in configs if constant_closed(c, component, table).coeff != 0]
