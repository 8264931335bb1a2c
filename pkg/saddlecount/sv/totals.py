"""
Constants for counting every saddle connection or cylinder at once, the
quantities a simulation on random surfaces estimates.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..strata import StratumComponent
from ..volumes import VolumeTable
from .base import CLOSED, DISTINCT, SVConstant
from .closed import table_closed
from .distinct import table_distinct


@dataclass(frozen=True)
class ClosedTotals:
    saddle_connections: SVConstant
    cylinders: SVConstant


def total_distinct(component: StratumComponent, table: VolumeTable) -> SVConstant:
    """
    Saddle connections joining two distinct zeros, each configuration
    weighted by its p homologous connections.
    """
    total = SVConstant(0, DISTINCT)
    for row in table_distinct(component, table):
        total += row.config.p * row.constant
    return total


def total_closed(component: StratumComponent, table: VolumeTable) -> ClosedTotals:
    """
    A configuration with p pieces and q cylinders holds p + q closed saddle
    connections and q cylinders.
    """
    saddle_connections = SVConstant(0, CLOSED)
    cylinders = SVConstant(0, CLOSED)
    for row in table_closed(component, table):
        saddle_connections += row.config.multiplicity * row.constant
        cylinders += row.config.q * row.constant
    return ClosedTotals(saddle_connections, cylinders)
