"""
Siegel-Veech constants for saddle connections joining two distinct zeros.
"""
from __future__ import annotations

import typing
from dataclasses import dataclass
from fractions import Fraction

from ..config.base import SymmetryInfo, factorial_multiplicities
from ..config.distinct import (
    DistinctConfig,
    enumerate_distinct,
    symmetry_distinct,
    validate_distinct,
    zero_pairs,
)
from ..errors import NotAdmissible
from ..strata import Component, Partition, Stratum, StratumComponent, delta, genus_of
from ..volumes import VolumeTable
from .base import DISTINCT, SVConstant, parity_sums, product_of_volumes, volume_factor


@dataclass(frozen=True)
class DistinctRow:
    config: DistinctConfig
    symmetry: SymmetryInfo
    M: Fraction
    constant: SVConstant


def is_hyperelliptic_distinct_shape(cfg: DistinctConfig, alpha: Partition) -> bool:
    """
    Configurations compatible with the hyperelliptic involution: one or two
    pieces, no unchanged zeros, and a' = a'' on every piece.
    """
    alpha = alpha.positive
    g = genus_of(alpha)
    if alpha.entries != (g - 1, g - 1) or cfg.p > 2:
        return False
    return all(not piece.rest and piece.a_prime == piece.a_dprime for piece in cfg.pieces)


def combinatorial_factor_distinct(
    cfg: DistinctConfig,
    ambient: Stratum,
    symmetry: typing.Optional[SymmetryInfo] = None,
) -> Fraction:
    """
    M = 1/(|Gamma_-| |Gamma|) prod_m o(m)!/prod_i o_i(m)! prod (a_i + 1).
    """
    symmetry = symmetry or symmetry_distinct(cfg)
    product = 1
    for piece in cfg.pieces:
        product *= piece.a + 1
    multiplicities = factorial_multiplicities(ambient.alpha, cfg.rests)
    return Fraction(multiplicities * product, symmetry.order)


def _check(cfg: DistinctConfig, component: StratumComponent) -> None:
    violations = validate_distinct(cfg, component.stratum)
    if violations:
        raise NotAdmissible(f"Configuration is not admissible: {violations[0]}")


def distinct_volume_part(
    cfg: DistinctConfig, component: StratumComponent, table: VolumeTable
) -> Fraction:
    """
    Everything in the constant except the combinatorial factor M, with the
    component dispatch applied.
    """
    stratum = component.stratum
    alpha = stratum.alpha
    label = component.effective_label
    parts = [piece.partition for piece in cfg.pieces]
    d = cfg.d_values
    n = stratum.dim_real
    hyp_shape = is_hyperelliptic_distinct_shape(cfg, alpha)

    if label == Component.HYPERELLIPTIC:
        if not hyp_shape:
            raise NotAdmissible(
                f"Configuration does not occur on the hyperelliptic component of {stratum}"
            )
        numerator = product_of_volumes(parts, Component.HYPERELLIPTIC, table)
        return volume_factor(d, n, numerator, table.volume(alpha, label))

    if label == Component.NONHYPERELLIPTIC:
        denominator = table.volume(alpha, label)
        numerator = product_of_volumes(parts, Component.CONNECTED, table)
        value = volume_factor(d, n, numerator, denominator)
        if hyp_shape:
            hyp = product_of_volumes(parts, Component.HYPERELLIPTIC, table)
            value -= volume_factor(d, n, hyp, denominator)
        return value

    if label in (Component.EVEN, Component.ODD):
        phi = Component.parity(label)
        denominator = table.volume(alpha, label)
        numerator = parity_sums(parts, table)[phi]
        value = volume_factor(d, n, numerator, denominator)
        if hyp_shape and delta(alpha, phi):
            hyp = product_of_volumes(parts, Component.HYPERELLIPTIC, table)
            value -= volume_factor(d, n, hyp, denominator)
        return value

    numerator = product_of_volumes(parts, Component.CONNECTED, table)
    return volume_factor(d, n, numerator, table.volume(alpha, Component.CONNECTED))


def constant_general(
    cfg: DistinctConfig, component: StratumComponent, table: VolumeTable
) -> SVConstant:
    _check(cfg, component)
    M = combinatorial_factor_distinct(cfg, component.stratum)
    return SVConstant(M * distinct_volume_part(cfg, component, table), DISTINCT)


def constant_problem1(
    cfg: DistinctConfig, component: StratumComponent, table: VolumeTable
) -> SVConstant:
    """
    The constant for saddle connections joining two named zeros, where the
    unchanged zeros are labelled and no redistribution factor applies.
    """
    _check(cfg, component)
    product = 1
    for piece in cfg.pieces:
        product *= piece.a + 1
    M = Fraction(product)
    if component.alpha.positive.card == 2:
        M /= symmetry_distinct(cfg).rot_order
    return SVConstant(M * distinct_volume_part(cfg, component, table), DISTINCT)


def constant_mult1(
    component: StratumComponent, m1: int, m2: int, table: VolumeTable
) -> SVConstant:
    (cfg,) = enumerate_distinct(component.stratum, m1, m2, p=1)
    return constant_general(cfg, component, table)


def table_distinct(
    component: StratumComponent, table: VolumeTable
) -> typing.List[DistinctRow]:
    """
    One row per pair of zero orders and admissible configuration. Rows
    that vanish on the component are left out.
    """
    stratum = component.stratum
    rows = []
    for m1, m2 in zero_pairs(stratum.alpha):
        for cfg in enumerate_distinct(stratum, m1, m2):
            if component.effective_label == Component.HYPERELLIPTIC:
                if not is_hyperelliptic_distinct_shape(cfg, stratum.alpha):
                    continue
            symmetry = symmetry_distinct(cfg)
            M = combinatorial_factor_distinct(cfg, stratum, symmetry)
            constant = SVConstant(M * distinct_volume_part(cfg, component, table), DISTINCT)
            if constant.coeff:
                rows.append(DistinctRow(cfg, symmetry, M, constant))
    return rows
