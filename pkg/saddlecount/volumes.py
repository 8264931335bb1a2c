"""
Volumes of strata of abelian differentials.

Every volume is stored as the rational coefficient r of Vol(H_1(alpha)) =
r * pi^(2g). The bundled table covers all strata up to genus four; larger
genera can be supplied by the user in the same text format.
"""
from __future__ import annotations

import io
import math
import os
import pathlib
import re
import typing
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    ConflictWarning,
    MissingVolume,
    NoSpinStructure,
    ParseError,
    SaddleCountError,
    UnknownComponent,
)
from .strata import (
    Component,
    Partition,
    Stratum,
    StratumComponent,
    classify_components,
    delta,
    genus_of,
    has_spin_structure,
    is_hyperelliptic_shape,
)

BUNDLED_TABLE_PATH = pathlib.Path(__file__).parent / "volumes.txt"

ENVIRONMENT_VARIABLE = "SADDLECOUNT_VOLUMES"

Source = typing.Union[bytes, str, typing.BinaryIO, typing.TextIO, None]


@dataclass(frozen=True)
class StratumVolume:
    coeff: Fraction
    pi_power: int

    def __mul__(self, other: StratumVolume) -> StratumVolume:
        return StratumVolume(self.coeff * other.coeff, self.pi_power + other.pi_power)

    def __truediv__(self, other: StratumVolume) -> StratumVolume:
        if not other.coeff:
            raise ZeroDivisionError("Division by a vanishing volume")
        return StratumVolume(self.coeff / other.coeff, self.pi_power - other.pi_power)

    def __str__(self) -> str:
        return f"{self.coeff} * pi^{self.pi_power}"


class VolumeTable:
    """
    Immutable map from (partition, component label) to volume coefficient.
    """

    LINE_RE = re.compile(
        r"^(?P<partition>[0-9,\s]+)\|(?P<label>[^|]+)\|\s*(?P<num>\d+)\s*(/\s*(?P<den>\d+))?\s*$"
    )

    def __init__(self, entries: typing.Mapping[typing.Tuple[Partition, str], Fraction]):
        self._entries = {
            (alpha.positive, label): Fraction(value)
            for (alpha, label), value in entries.items()
        }

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: typing.Tuple[Partition, str]) -> bool:
        alpha, label = key
        return (alpha.positive, label) in self._entries

    def __eq__(self, other) -> bool:
        if type(other) is type(self):
            return self._entries == other._entries
        return False

    def items(self) -> typing.List[typing.Tuple[typing.Tuple[Partition, str], Fraction]]:
        def sort_key(item):
            (alpha, label), _ = item
            return genus_of(alpha), tuple(-e for e in alpha.entries), label

        return sorted(self._entries.items(), key=sort_key)

    def merged(self, other: VolumeTable) -> VolumeTable:
        entries = dict(self._entries)
        entries.update(other._entries)
        return VolumeTable(entries)

    def scaled(self, factor: Fraction) -> VolumeTable:
        """
        A copy of the table with every coefficient of genus g multiplied by
        factor^g. Constants for distinct zeros do not change; closed
        constants, whose pieces have total genus g - 1, are divided by
        factor.
        """
        return VolumeTable(
            {
                (alpha, label): value * Fraction(factor) ** genus_of(alpha)
                for (alpha, label), value in self._entries.items()
            }
        )

    def coefficient(self, alpha: Partition, label: str) -> Fraction:
        """
        The coefficient of pi^(2g) for one component, resolving aliases,
        dummy components and sums over components.
        """
        alpha = alpha.positive
        key = (alpha, label)
        if key in self._entries:
            return self._entries[key]

        g = genus_of(alpha)
        labels = classify_components(Stratum(alpha))

        if label == Component.CONNECTED:
            parts = labels - {Component.CONNECTED}
            if not parts:
                raise MissingVolume(f"Missing volume for H({alpha})")
            return sum(
                (self._stored(alpha, part) for part in sorted(parts)), Fraction(0)
            )

        if label == Component.HYPERELLIPTIC:
            if not is_hyperelliptic_shape(alpha):
                return Fraction(0)
            if g <= 2:
                # The whole stratum is hyperelliptic
                return self._stored(alpha, Component.CONNECTED)
            raise MissingVolume(f"Missing volume for H^hyp({alpha})")

        if label in (Component.EVEN, Component.ODD):
            if label not in labels:
                # Dummy components in low genus
                return Fraction(0)
            raise MissingVolume(f"Missing volume for H^{label}({alpha})")

        if label == Component.NONHYPERELLIPTIC:
            if label in labels:
                raise MissingVolume(f"Missing volume for H^nonhyp({alpha})")
            total = self.coefficient(alpha, Component.CONNECTED)
            return total - self.coefficient(alpha, Component.HYPERELLIPTIC)

        raise UnknownComponent(f"Invalid component label: {label}")

    def _stored(self, alpha: Partition, label: str) -> Fraction:
        key = (alpha, label)
        if key in self._entries:
            return self._entries[key]
        if label == Component.CONNECTED or genus_of(alpha) <= 2:
            raise MissingVolume(f"Missing volume for H({alpha})")
        return self.coefficient(alpha, label)

    def volume(self, alpha: Partition, label: str) -> StratumVolume:
        return StratumVolume(self.coefficient(alpha, label), 2 * genus_of(alpha))


def lookup_volume(component: StratumComponent, table: VolumeTable) -> StratumVolume:
    return table.volume(component.alpha, component.label)


def volume_with_hyp(
    alpha: Partition, phi: typing.Optional[int], table: VolumeTable
) -> StratumVolume:
    """
    Vol(H^phi(alpha)) + delta(alpha, phi) Vol(H^hyp(alpha)).

    A parity of None asks for the total volume of the stratum.
    """
    alpha = alpha.positive
    if phi is None:
        return table.volume(alpha, Component.CONNECTED)
    if not has_spin_structure(alpha):
        raise NoSpinStructure(f"H({alpha}) has no spin structure")

    label = Component.EVEN if phi == 0 else Component.ODD
    coeff = table.coefficient(alpha, label)
    if delta(alpha, phi):
        coeff += table.coefficient(alpha, Component.HYPERELLIPTIC)
    return StratumVolume(coeff, 2 * genus_of(alpha))


def factorial_ratio(d_values: typing.Sequence[int], top: int) -> Fraction:
    """
    prod (d_i/2 - 1)! / top!
    """
    numerator = 1
    for d in d_values:
        numerator *= math.factorial(d // 2 - 1)
    return Fraction(numerator, math.factorial(top))


def volume_disconnected(
    parts: typing.Sequence[StratumComponent], table: VolumeTable
) -> StratumVolume:
    d_values = [part.stratum.dim_real for part in parts]
    coeff = Fraction(1, 2 ** (len(parts) - 1))
    coeff *= factorial_ratio(d_values, sum(d_values) // 2 - 1)
    pi_power = 0
    for part in parts:
        volume = lookup_volume(part, table)
        coeff *= volume.coeff
        pi_power += volume.pi_power
    return StratumVolume(coeff, pi_power)


def _read_text(source: Source) -> str:
    if source is None:
        return ""
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def parse_volume_lines(text: str) -> VolumeTable:
    entries = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        match = VolumeTable.LINE_RE.match(line)
        if not match:
            raise ParseError(f"Invalid volume line: {line!r}", lineno=lineno)
        try:
            alpha = Partition.parse(match.group("partition"))
            genus_of(alpha)
            label = Component.parse(match.group("label"))
        except SaddleCountError as e:
            raise ParseError(str(e), lineno=lineno)

        num = int(match.group("num"))
        den = int(match.group("den") or 1)
        if den == 0:
            raise ParseError(f"Invalid volume, zero denominator: {line!r}", lineno=lineno)
        entries[(alpha.positive, label)] = Fraction(num, den)
    return VolumeTable(entries)


@lru_cache()
def bundled_table() -> VolumeTable:
    return parse_volume_lines(BUNDLED_TABLE_PATH.read_text(encoding="utf-8"))


def load_volume_table(source: Source = None) -> VolumeTable:
    """
    Load user volumes and merge them over the bundled table.

    Overriding a bundled value with a different one issues a
    ConflictWarning; the user value wins.
    """
    bundled = bundled_table()
    user = parse_volume_lines(_read_text(source))
    for (alpha, label), value in user.items():
        if (alpha, label) in bundled:
            previous = bundled.coefficient(alpha, label)
            if previous != value:
                warnings.warn(
                    f"Overriding bundled volume of H^{label}({alpha}): "
                    f"{previous} -> {value}",
                    ConflictWarning,
                )
    return bundled.merged(user)


def load_volume_file(path: typing.Union[str, os.PathLike]) -> VolumeTable:
    with open(path, "rb") as fp:
        return load_volume_table(fp)


def table_from_environment(
    path: typing.Optional[str] = None,
) -> VolumeTable:
    """
    The effective table: the explicit path if given, else the file named by
    $SADDLECOUNT_VOLUMES, else the bundled table.
    """
    path = path or os.environ.get(ENVIRONMENT_VARIABLE)
    if path:
        return load_volume_file(path)
    return bundled_table()


def dump_volume_table(table: VolumeTable) -> str:
    buffer = io.StringIO()
    for (alpha, label), value in table.items():
        buffer.write(f"{alpha} | {label} | {value}\n")
    return buffer.getvalue()
