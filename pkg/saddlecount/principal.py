"""
Closed formulas for the principal stratum H(1, ..., 1).

They are evaluated directly from genera and volumes, without going
through configuration enumeration, and serve as an independent check of
the general pipelines.
"""
from __future__ import annotations

import typing
from fractions import Fraction
from math import factorial

from .config.base import compositions, is_rotation_of, rotation_stabilizer, rotations
from .strata import Component, Partition
from .sv.base import CLOSED, DISTINCT, SVConstant
from .volumes import VolumeTable


def principal_partition(g: int) -> Partition:
    """
    (1, ..., 1) with 2g - 2 entries; the torus for g = 1.
    """
    if g < 1:
        raise ValueError(f"Invalid genus: {g}")
    return Partition((1,) * (2 * g - 2) or (0,))


def _volume(alpha: Partition, table: VolumeTable) -> Fraction:
    return table.coefficient(alpha, Component.CONNECTED)


def distinct_mult1(g: int, table: VolumeTable) -> SVConstant:
    """
    3(g-1)(2g-3) Vol(2, 1^(2g-4)) / Vol(1^(2g-2))
    """
    collapsed = Partition((2,) + (1,) * (2 * g - 4))
    ratio = _volume(collapsed, table) / _volume(principal_partition(g), table)
    return SVConstant(3 * (g - 1) * (2 * g - 3) * ratio, DISTINCT)


def distinct_mult2(g1: int, g2: int, table: VolumeTable) -> SVConstant:
    g = g1 + g2
    gamma = 2 if g1 == g2 else 1
    coeff = Fraction(
        factorial(2 * g - 2) * factorial(4 * g1 - 3) * factorial(4 * g2 - 3),
        4 * gamma * factorial(2 * g1 - 2) * factorial(2 * g2 - 2) * factorial(4 * g - 5),
    )
    coeff *= _volume(principal_partition(g1), table) * _volume(principal_partition(g2), table)
    coeff /= _volume(principal_partition(g), table)
    return SVConstant(coeff, DISTINCT)


def closed_mult1(g: int, table: VolumeTable) -> SVConstant:
    """
    (g-1)(2g-3)/(4g-5) Vol(1^(2g-4)) / Vol(1^(2g-2)), in units of pi^-2.
    """
    coeff = Fraction((g - 1) * (2 * g - 3), 4 * g - 5)
    coeff *= _volume(principal_partition(g - 1), table) / _volume(principal_partition(g), table)
    return SVConstant(coeff, CLOSED)


def closed_cyclic(genera: typing.Sequence[int], table: VolumeTable) -> SVConstant:
    """
    Closed saddle connections cutting the surface into pieces of the given
    genera, in cyclic order, each piece glued to the next by a cylinder.
    """
    genera = tuple(genera)
    p = len(genera)
    g = sum(genera) + 1
    gamma_minus = 2 if is_rotation_of(tuple(reversed(genera)), genera) else 1
    gamma = rotation_stabilizer(genera)

    denominator = gamma_minus * gamma
    for gi in genera:
        denominator *= factorial(2 * gi - 2)
    M = Fraction(factorial(2 * g - 2), denominator)

    coeff = M / (2 ** (p - 1) * factorial(4 * g - 5) * _volume(principal_partition(g), table))
    for gi in genera:
        coeff *= factorial(4 * gi - 2) * _volume(principal_partition(gi), table)
    return SVConstant(coeff, CLOSED)


def cyclic_genera(total: int) -> typing.List[typing.Tuple[int, ...]]:
    """
    Cyclic sequences of at least two positive genera summing to total, one
    per class under rotation and reversal.
    """
    found = set()
    for p in range(2, total + 1):
        for parts in compositions(total - p, p):
            genera = tuple(x + 1 for x in parts)
            orbit = list(rotations(genera)) + list(rotations(tuple(reversed(genera))))
            found.add(min(orbit))
    return sorted(found, key=lambda genera: (len(genera), genera))


def principal_rows(g: int, table: VolumeTable) -> typing.List[typing.Tuple[str, SVConstant]]:
    if g < 2:
        raise ValueError(f"Invalid genus for the principal stratum: {g}")
    rows = [("distinct, multiplicity 1", distinct_mult1(g, table))]
    for g1 in range(1, g // 2 + 1):
        rows.append(
            (f"distinct, multiplicity 2, genera {g1},{g - g1}", distinct_mult2(g1, g - g1, table))
        )
    rows.append(("closed, multiplicity 1", closed_mult1(g, table)))
    for genera in cyclic_genera(g - 1):
        name = ",".join(str(gi) for gi in genera)
        rows.append((f"closed, genera {name}", closed_cyclic(genera, table)))
    return rows
