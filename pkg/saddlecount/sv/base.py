from __future__ import annotations

import math
import typing
from dataclasses import dataclass
from fractions import Fraction

from ..errors import MissingVolume
from ..strata import Partition, Stratum, genus_of
from ..volumes import StratumVolume, VolumeTable, factorial_ratio, volume_with_hyp

DISTINCT = "distinct"
CLOSED = "closed"

ZETA2 = math.pi ** 2 / 6


@dataclass(frozen=True)
class SVConstant:
    """
    A Siegel-Veech constant. For distinct zeros the constant is coeff
    itself; for closed saddle connections it is coeff / pi^2, which is
    reported as c * zeta(2) = coeff / 6.
    """

    coeff: Fraction
    kind: str = DISTINCT

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    @property
    def exact(self) -> Fraction:
        """
        The rational that is printed: c, or c * zeta(2) for closed kinds.
        """
        if self.kind == CLOSED:
            return self.coeff / 6
        return self.coeff

    @property
    def approx(self) -> float:
        if self.kind == CLOSED:
            return float(self.coeff) / math.pi ** 2
        return float(self.coeff)

    def __add__(self, other: SVConstant) -> SVConstant:
        if other.kind != self.kind:
            raise TypeError(f"Cannot add {self.kind} and {other.kind} constants")
        return SVConstant(self.coeff + other.coeff, self.kind)

    def __mul__(self, factor) -> SVConstant:
        return SVConstant(self.coeff * Fraction(factor), self.kind)

    __rmul__ = __mul__

    def __str__(self) -> str:
        text = f"{self.exact.numerator}/{self.exact.denominator}"
        if self.kind == CLOSED:
            text += " * zeta2^-1"
        return text

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": str(self), "approx": self.approx}


def volume_factor(
    d_values: typing.Sequence[int],
    n: int,
    numerator: StratumVolume,
    denominator: StratumVolume,
) -> Fraction:
    """
    1/2^(p-1) prod (d_i/2 - 1)! / (n/2 - 2)! prod Vol(alpha'_i) / Vol(alpha).
    The product of piece volumes is passed in already multiplied out.
    """
    if not denominator.coeff:
        raise MissingVolume("Invalid volume table, ambient volume is zero")
    ratio = Fraction(1, 2 ** (len(d_values) - 1)) * factorial_ratio(d_values, n // 2 - 2)
    return ratio * (numerator / denominator).coeff


def product_of_volumes(
    partitions: typing.Iterable[Partition], label: str, table: VolumeTable
) -> StratumVolume:
    result = StratumVolume(Fraction(1), 0)
    for alpha in partitions:
        result = result * table.volume(alpha, label)
    return result


def parity_sums(
    partitions: typing.Sequence[Partition], table: VolumeTable
) -> typing.Tuple[StratumVolume, StratumVolume]:
    """
    For each parity phi, the sum over phi_1 + ... + phi_p = phi (mod 2) of
    prod volume_with_hyp(alpha_i, phi_i).
    """
    pi_power = sum(2 * genus_of(alpha) for alpha in partitions)
    sums = [Fraction(1), Fraction(0)]
    for alpha in partitions:
        even = volume_with_hyp(alpha, 0, table).coeff
        odd = volume_with_hyp(alpha, 1, table).coeff
        sums = [
            sums[0] * even + sums[1] * odd,
            sums[0] * odd + sums[1] * even,
        ]
    return StratumVolume(sums[0], pi_power), StratumVolume(sums[1], pi_power)


def ambient_volume(stratum: Stratum, label: str, table: VolumeTable) -> StratumVolume:
    return table.volume(stratum.alpha, label)
