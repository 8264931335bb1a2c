"""
Configurations of homologous saddle connections joining two distinct zeros.

Collapsing p homologous saddle connections between zeros of orders m1 and
m2 cuts the surface into p pieces arranged in a cycle. Piece i carries a new
zero of order a'_i + a''_i, where a'_i and a''_i are the parts of the cone
angles of the two original zeros that ended up on it, together with a share
of the unchanged zeros.
"""
from __future__ import annotations

import typing
from dataclasses import dataclass

from ..errors import ZeroNotInStratum
from ..strata import Partition, Stratum, genus_of
from .base import (
    Rest,
    SymmetryInfo,
    compositions,
    distributions,
    is_rotation_of,
    normalize_rest,
    rotation_stabilizer,
    rotations,
)


@dataclass(frozen=True, order=True)
class DistinctPiece:
    a_prime: int
    a_dprime: int
    rest: Rest = ()

    def __post_init__(self):
        object.__setattr__(self, "rest", normalize_rest(self.rest))

    @property
    def a(self) -> int:
        return self.a_prime + self.a_dprime

    @property
    def partition(self) -> Partition:
        """
        The piece stratum rest + (a). A zero of order 0 is a marked point, so
        the torus piece is exactly H(0).
        """
        return Partition(self.rest + (self.a,))

    @property
    def stratum(self) -> Stratum:
        return Stratum(self.partition)

    @property
    def genus(self) -> int:
        return genus_of(self.partition)

    @property
    def d(self) -> int:
        return self.stratum.dim_real

    def swapped(self) -> DistinctPiece:
        return DistinctPiece(self.a_dprime, self.a_prime, self.rest)

    def key(self) -> typing.Tuple:
        return (self.a_prime, self.a_dprime, self.rest)

    def to_dict(self) -> dict:
        return {"a1": self.a_prime, "a2": self.a_dprime, "rest": list(self.rest)}


@dataclass(frozen=True)
class DistinctConfig:
    m1: int
    m2: int
    pieces: typing.Tuple[DistinctPiece, ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    @property
    def p(self) -> int:
        return len(self.pieces)

    @property
    def rests(self) -> typing.List[Rest]:
        return [piece.rest for piece in self.pieces]

    @property
    def d_values(self) -> typing.List[int]:
        return [piece.d for piece in self.pieces]

    def key(self) -> typing.Tuple:
        return (self.m1, self.m2, tuple(piece.key() for piece in self.pieces))

    def reversed(self) -> DistinctConfig:
        """
        Reverse the cycle and swap the roles of the two zeros.
        """
        pieces = tuple(piece.swapped() for piece in reversed(self.pieces))
        return DistinctConfig(self.m2, self.m1, pieces)

    def orbit(self) -> typing.Iterator[DistinctConfig]:
        for config in (self, self.reversed()):
            for pieces in rotations(config.pieces):
                yield DistinctConfig(config.m1, config.m2, pieces)

    def to_dict(self) -> dict:
        return {
            "m1": self.m1,
            "m2": self.m2,
            "pieces": [piece.to_dict() for piece in self.pieces],
        }


def canonicalize_distinct(cfg: DistinctConfig) -> DistinctConfig:
    return min(cfg.orbit(), key=DistinctConfig.key)


def symmetry_distinct(cfg: DistinctConfig) -> SymmetryInfo:
    rot_order = rotation_stabilizer(cfg.pieces)
    gamma_order = 1
    if cfg.m1 == cfg.m2 and is_rotation_of(cfg.reversed().pieces, cfg.pieces):
        gamma_order = 2
    return SymmetryInfo(gamma_order, rot_order)


def validate_distinct(cfg: DistinctConfig, ambient: Stratum) -> typing.List[str]:
    """
    Check the admissibility conditions of a configuration against the
    ambient stratum. Returns a list of violations; an empty list means the
    configuration is admissible.
    """
    violations = []
    p = cfg.p
    if p == 0:
        return ["Invalid configuration, no pieces"]

    sum_prime = sum(piece.a_prime for piece in cfg.pieces)
    if sum_prime != cfg.m1 + 1 - p:
        violations.append(
            f"Sum of a' is {sum_prime}, expected m1 + 1 - p = {cfg.m1 + 1 - p}"
        )
    sum_dprime = sum(piece.a_dprime for piece in cfg.pieces)
    if sum_dprime != cfg.m2 + 1 - p:
        violations.append(
            f"Sum of a'' is {sum_dprime}, expected m2 + 1 - p = {cfg.m2 + 1 - p}"
        )

    collected = Partition(
        tuple(e for rest in cfg.rests for e in rest) + (cfg.m1, cfg.m2)
    ).positive
    if collected != ambient.alpha.positive:
        violations.append(
            f"Zeros ({collected}) do not add up to the stratum ({ambient.alpha.positive})"
        )

    for i, piece in enumerate(cfg.pieces):
        if sum(piece.rest) % 2 != piece.a % 2:
            violations.append(
                f"Piece {i}: weight of rest {piece.rest} and a' + a'' = {piece.a} "
                f"differ in parity"
            )
    return violations


def _check_zeros(alpha: Partition, m1: int, m2: int) -> None:
    counter = alpha.counter()
    if m1 <= 0 or m2 <= 0:
        raise ZeroNotInStratum(f"Invalid zero orders ({m1}, {m2})")
    if m1 == m2:
        if counter[m1] < 2:
            raise ZeroNotInStratum(f"H({alpha}) has fewer than two zeros of order {m1}")
    elif not counter[m1] or not counter[m2]:
        raise ZeroNotInStratum(f"H({alpha}) has no zeros of orders ({m1}, {m2})")


def enumerate_distinct(
    ambient: Stratum, m1: int, m2: int, p: typing.Optional[int] = None
) -> typing.List[DistinctConfig]:
    """
    Every admissible configuration joining a zero of order m1 to a zero of
    order m2, one canonical representative per symmetry class, sorted.
    Pass p to restrict to a single multiplicity.
    """
    alpha = ambient.alpha.positive
    _check_zeros(alpha, m1, m2)
    remaining = alpha.remove(m1, m2)
    unchanged = [e for e in remaining if e > 0]

    if p is None:
        multiplicities = range(1, min(m1, m2) + 2)
    else:
        multiplicities = [p] if 1 <= p <= min(m1, m2) + 1 else []

    found = {}
    for count in multiplicities:
        for rests in distributions(unchanged, count):
            for primes in compositions(m1 + 1 - count, count):
                for dprimes in compositions(m2 + 1 - count, count):
                    pieces = tuple(
                        DistinctPiece(x, y, rest)
                        for x, y, rest in zip(primes, dprimes, rests)
                    )
                    if any(sum(piece.rest) % 2 != piece.a % 2 for piece in pieces):
                        continue
                    config = canonicalize_distinct(DistinctConfig(m1, m2, pieces))
                    found.setdefault(config.key(), config)
    return [found[key] for key in sorted(found, key=_sort_key)]


def _sort_key(key: typing.Tuple) -> typing.Tuple:
    m1, m2, pieces = key
    return (len(pieces), m1, m2, pieces)


def zero_pairs(alpha: Partition) -> typing.List[typing.Tuple[int, int]]:
    """
    Every pair m1 <= m2 of zero orders that a saddle connection can join.
    """
    counter = alpha.counter()
    orders = sorted(counter)
    pairs = []
    for i, m1 in enumerate(orders):
        if counter[m1] >= 2:
            pairs.append((m1, m1))
        for m2 in orders[i + 1 :]:
            pairs.append((m1, m2))
    return pairs
