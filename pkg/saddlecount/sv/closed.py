"""
Siegel-Veech constants for saddle connections joining a zero to itself.

The coefficient q of an SVConstant of kind "closed" is the rational in
c = q / pi^2; tables print c * zeta(2) = q / 6.
"""
from __future__ import annotations

import typing
from dataclasses import dataclass
from fractions import Fraction

from ..config.base import SymmetryInfo, factorial_multiplicities
from ..config.closed import (
    ClosedConfig,
    d_values,
    enumerate_closed_configs,
    is_hyperelliptic_closed_shape,
    symmetry_closed,
    validate_closed,
)
from ..errors import NotAdmissible
from ..strata import Component, Stratum, StratumComponent, delta
from ..volumes import StratumVolume, VolumeTable
from .base import CLOSED, SVConstant, parity_sums, product_of_volumes, volume_factor


@dataclass(frozen=True)
class ClosedRow:
    config: ClosedConfig
    symmetry: SymmetryInfo
    M: Fraction
    constant: SVConstant


def combinatorial_factor_closed(
    cfg: ClosedConfig,
    ambient: Stratum,
    hyperelliptic: bool = False,
    symmetry: typing.Optional[SymmetryInfo] = None,
) -> Fraction:
    """
    M = 1/(|Gamma_-| |Gamma|) prod_m o(m)!/prod_i o_i(m)! prod_F (a + 1)
    prod_H (b' + 1)(b'' + 1).

    On the hyperelliptic component a slit is determined by one of its ends,
    so (b' + 1)(b'' + 1) is replaced by (b' + 1).
    """
    symmetry = symmetry or symmetry_closed(cfg)
    product = 1
    for piece in cfg.pieces:
        if piece.is_figure_eight:
            product *= piece.x + piece.y + 1
        elif hyperelliptic:
            product *= piece.x + 1
        else:
            product *= (piece.x + 1) * (piece.y + 1)
    multiplicities = factorial_multiplicities(ambient.alpha, cfg.rests)
    return Fraction(multiplicities * product, symmetry.order)


def _spin_numerator(
    cfg: ClosedConfig, phi: int, table: VolumeTable
) -> StratumVolume:
    parts = [piece.partition for piece in cfg.pieces]
    holes = [piece for piece in cfg.pieces if not piece.is_figure_eight]

    if not holes:
        shift = sum(piece.x for piece in cfg.pieces) + cfg.p + 1
        return parity_sums(parts, table)[(phi - shift) % 2]

    if all(piece.x % 2 == 0 and piece.y % 2 == 0 for piece in holes):
        return parity_sums(parts, table)[phi]

    # Odd slit ends: half of the glued surfaces get each parity
    total = product_of_volumes(parts, Component.CONNECTED, table)
    return StratumVolume(total.coeff / 2, total.pi_power)


def constant_closed(
    cfg: ClosedConfig, component: StratumComponent, table: VolumeTable
) -> SVConstant:
    stratum = component.stratum
    violations = validate_closed(cfg, stratum)
    if violations:
        raise NotAdmissible(f"Configuration is not admissible: {violations[0]}")

    alpha = stratum.alpha
    label = component.effective_label
    parts = [piece.partition for piece in cfg.pieces]
    d = d_values(cfg, stratum)
    n = stratum.dim_real
    hyp_shape = is_hyperelliptic_closed_shape(cfg, alpha)
    symmetry = symmetry_closed(cfg)

    def hyperelliptic_term(denominator: StratumVolume) -> Fraction:
        M_hyp = combinatorial_factor_closed(cfg, stratum, True, symmetry)
        numerator = product_of_volumes(parts, Component.HYPERELLIPTIC, table)
        return M_hyp * volume_factor(d, n, numerator, denominator)

    if label == Component.HYPERELLIPTIC:
        if not hyp_shape:
            raise NotAdmissible(
                f"Configuration does not occur on the hyperelliptic component of {stratum}"
            )
        return SVConstant(hyperelliptic_term(table.volume(alpha, label)), CLOSED)

    M = combinatorial_factor_closed(cfg, stratum, False, symmetry)

    if label == Component.NONHYPERELLIPTIC:
        denominator = table.volume(alpha, label)
        numerator = product_of_volumes(parts, Component.CONNECTED, table)
        value = M * volume_factor(d, n, numerator, denominator)
        if hyp_shape:
            value -= hyperelliptic_term(denominator)
        return SVConstant(value, CLOSED)

    if label in (Component.EVEN, Component.ODD):
        phi = Component.parity(label)
        denominator = table.volume(alpha, label)
        numerator = _spin_numerator(cfg, phi, table)
        value = M * volume_factor(d, n, numerator, denominator)
        if hyp_shape and delta(alpha, phi):
            value -= hyperelliptic_term(denominator)
        return SVConstant(value, CLOSED)

    numerator = product_of_volumes(parts, Component.CONNECTED, table)
    denominator = table.volume(alpha, Component.CONNECTED)
    return SVConstant(M * volume_factor(d, n, numerator, denominator), CLOSED)


def table_closed(
    component: StratumComponent, table: VolumeTable
) -> typing.List[ClosedRow]:
    """
    One row per admissible configuration, zero rows left out. The M column
    is the factor the row's constant is built from, the hyperelliptic one on
    the hyperelliptic component.
    """
    stratum = component.stratum
    hyperelliptic = component.effective_label == Component.HYPERELLIPTIC
    rows = []
    for cfg in enumerate_closed_configs(stratum):
        if hyperelliptic and not is_hyperelliptic_closed_shape(cfg, stratum.alpha):
            continue
        constant = constant_closed(cfg, component, table)
        if not constant.coeff:
            continue
        symmetry = symmetry_closed(cfg)
        M = combinatorial_factor_closed(cfg, stratum, hyperelliptic, symmetry)
        rows.append(ClosedRow(cfg, symmetry, M, constant))
    return rows
