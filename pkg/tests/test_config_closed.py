from __future__ import annotations

import itertools

import pytest

from saddlecount.config.base import SymmetryInfo
from saddlecount.config.closed import (
    CYLINDER,
    DIRECT,
    FIGURE_EIGHT,
    PAIR_OF_HOLES,
    ClosedConfig,
    ClosedPiece,
    canonicalize_closed,
    d_values,
    enumerate_closed,
    enumerate_closed_configs,
    is_hyperelliptic_closed_shape,
    newborn_zeros,
    symmetry_closed,
    validate_closed,
)
from saddlecount.errors import DimensionMismatch, MalformedCycle
from saddlecount.notation import parse_closed, print_closed
from saddlecount.strata import Partition, Stratum, StratumComponent


def test_newborn_zero_of_a_figure_eight():
    (zero,) = newborn_zeros(parse_closed("=(F1+0;1)"))
    assert zero.order == 3
    assert zero.type_tag == "I"


def test_newborn_zeros_of_a_slit():
    zeros = newborn_zeros(parse_closed("=(H2,2)"))
    assert sorted(zero.order for zero in zeros) == [3, 3]
    assert {zero.type_tag for zero in zeros} == {"II"}

    (zero,) = newborn_zeros(parse_closed("-(H1,0;1)"))
    assert zero.order == 3
    assert zero.type_tag == "III"


def test_newborn_zeros_of_a_chain():
    zeros = newborn_zeros(parse_closed("-(H0,0)-(H1,1)"))
    assert sorted(zero.order for zero in zeros) == [3, 3]
    assert all(zero.chain == (0, 1) for zero in zeros)


def test_newborn_zeros_rejects_a_loop_of_figure_eights():
    with pytest.raises(MalformedCycle):
        newborn_zeros(parse_closed("-(F0+0)"))
    with pytest.raises(MalformedCycle):
        newborn_zeros(ClosedConfig((ClosedPiece("F", 0, 0),), ()))


@pytest.mark.parametrize(
    "text,stratum,values",
    [
        ("=(F0+0)", "2", [4]),
        ("-(F0+0)=(H0,0)", "3,1", [4, 6]),
        ("-(H1,0;1)", "3,1", [12]),
        ("=(F0+3;1)", "5,1", [14]),
    ],
)
def test_d_values(text, stratum, values):
    assert d_values(parse_closed(text), Stratum.parse(stratum)) == values


def test_d_values_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        d_values(parse_closed("=(F0+0)"), Stratum.parse("4"))


def test_validate_closed():
    assert validate_closed(parse_closed("=(F0+0)"), Stratum.parse("2")) == []
    assert validate_closed(parse_closed("-(H1,0;1)"), Stratum.parse("3,1")) == []

    violations = validate_closed(parse_closed("-(F0+0)"), Stratum.parse("2"))
    assert "No pair of holes and no cylinder" in violations

    violations = validate_closed(parse_closed("=(F0+0)"), Stratum.parse("4"))
    assert any("do not add up" in v for v in violations)

    violations = validate_closed(parse_closed("=(H1,0)"), Stratum.parse("1,1"))
    assert any("odd total order" in v for v in violations)


@pytest.mark.parametrize(
    "text,gamma_order,rot_order",
    [
        ("=(F2+2;2)=(F2+2;2)", 2, 2),
        ("=(F0+0)=(F0+0)", 2, 2),
        ("-(H0,0)-(H1,1)", 2, 1),
        ("-(H0,3;1)", 1, 1),
        ("=(H1,1)", 2, 1),
    ],
)
def test_symmetry_closed(text, gamma_order, rot_order):
    assert symmetry_closed(parse_closed(text)) == SymmetryInfo(gamma_order, rot_order)


def test_reversal_swaps_slit_sides():
    cfg = parse_closed("-(H0,3;1)")
    assert cfg.reversed().pieces == (ClosedPiece("H", 3, 0, (1,)),)
    assert print_closed(cfg.reversed()) == print_closed(cfg)


def test_hyperelliptic_shapes():
    alpha = Partition.of(3, 3)
    assert is_hyperelliptic_closed_shape(parse_closed("=(H2,2)"), alpha)
    assert is_hyperelliptic_closed_shape(parse_closed("-(H0,0)-(H1,1)"), alpha)
    assert not is_hyperelliptic_closed_shape(parse_closed("-(H0,1)-(H1,0)"), alpha)

    alpha = Partition.of(4)
    assert is_hyperelliptic_closed_shape(parse_closed("-(H2,0)"), alpha) is False
    assert is_hyperelliptic_closed_shape(parse_closed("-(H1,1)"), alpha)
    assert is_hyperelliptic_closed_shape(parse_closed("=(F1+1)"), alpha)


def test_enumerate_closed_configs_genus_two():
    configs = enumerate_closed_configs(Stratum.parse("2"))
    assert [print_closed(cfg) for cfg in configs] == ["-(H0,0)", "=(F0+0)"]

    configs = enumerate_closed_configs(Stratum.parse("1,1"))
    assert [print_closed(cfg) for cfg in configs] == ["=(H0,0)"]


def test_enumerate_closed_configs_are_admissible():
    stratum = Stratum.parse("5,1")
    configs = enumerate_closed_configs(stratum)
    texts = {print_closed(cfg) for cfg in configs}
    assert {"=(H0,4)", "=(F0+3;1)", "-(H0,3;1)", "-(H1,2;1)"} <= texts
    for cfg in configs:
        assert validate_closed(cfg, stratum) == []
        d_values(cfg, stratum)


def test_enumerate_closed_bounds_pieces_by_genus():
    stratum = Stratum.parse("1,1,1,1,1,1")
    assert all(cfg.p <= 3 for cfg in enumerate_closed_configs(stratum))
    assert enumerate_closed_configs(stratum, p=4) == []
    assert enumerate_closed_configs(stratum, p=3)


def test_enumerate_closed_on_hyperelliptic_component(table):
    configs = enumerate_closed(StratumComponent.parse("3,3", "hyp"), table)
    assert {print_closed(cfg) for cfg in configs} == {"=(H2,2)", "-(H0,0)-(H1,1)"}


def test_enumerate_closed_on_spin_component(table):
    configs = enumerate_closed(StratumComponent.parse("2,2", "odd"), table)
    texts = {print_closed(cfg) for cfg in configs}
    assert len(texts) == 4
    assert {"-(H0,0;2)", "=(F0+0;2)", "=(H1,1)", "=(F0+0)=(F0+0)"} == texts


def sub_multisets(entries):
    return {
        tuple(sorted(chosen, reverse=True))
        for size in range(len(entries) + 1)
        for chosen in itertools.combinations(entries, size)
    }


def exhaustive_closed(stratum):
    """
    Canonical keys of every cycle of pieces and gluings the validator
    accepts, with at most g - 1 pieces.
    """
    g = stratum.genus
    entries = [e for e in stratum.alpha if e > 0]
    # A piece has genus at least one, so its own zeros weigh at most 2g - 4
    choices = [
        ClosedPiece(kind, x, y, rest)
        for kind in (FIGURE_EIGHT, PAIR_OF_HOLES)
        for x in range(2 * g - 3)
        for y in range(2 * g - 3 - x)
        for rest in sub_multisets(entries)
    ]
    found = set()
    for p in range(1, g):
        for pieces in itertools.product(choices, repeat=p):
            for glue in itertools.product((DIRECT, CYLINDER), repeat=p):
                cfg = ClosedConfig(pieces, glue)
                if not validate_closed(cfg, stratum):
                    found.add(canonicalize_closed(cfg).key())
    return found


@pytest.mark.parametrize("stratum", ["2", "1,1", "4", "3,1", "2,2", "2,1,1", "1,1,1,1"])
def test_enumerate_closed_configs_matches_exhaustive_search(stratum):
    stratum = Stratum.parse(stratum)
    keys = [cfg.key() for cfg in enumerate_closed_configs(stratum)]
    assert len(set(keys)) == len(keys)
    assert set(keys) == exhaustive_closed(stratum)
