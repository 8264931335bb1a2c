from __future__ import annotations

import pytest

from saddlecount.errors import InvalidStratum, OddSum, UnknownComponent
from saddlecount.strata import (
    EVEN,
    ODD,
    Component,
    Partition,
    Stratum,
    StratumComponent,
    classify_components,
    delta,
    dim_complex,
    genus_of,
    hyperelliptic_spin_parity,
)


@pytest.mark.parametrize(
    "entries,genus",
    [
        ((3, 1), 3),
        ((0,), 1),
        ((4, 3, 2, 1, 0, 0), 6),
        ((1, 1, 1, 1, 1, 1), 4),
        ((2,), 2),
    ],
)
def test_genus_of(entries, genus):
    assert genus_of(Partition(entries)) == genus


def test_genus_of_odd_sum():
    with pytest.raises(OddSum):
        genus_of(Partition.of(2, 1))


def test_partition_is_sorted_and_parsed():
    assert Partition.of(1, 3, 0).entries == (3, 1, 0)
    assert Partition.parse("1, 3") == Partition.of(3, 1)
    assert Partition.parse("H(2,2)") == Partition.of(2, 2)
    assert Partition.of(1, 1, 0).positive == Partition.of(1, 1)
    assert Partition.of(0, 0).positive == Partition.of(0)


@pytest.mark.parametrize("text", ["", "3,-1", "a,b", "3;1"])
def test_partition_parse_invalid(text):
    with pytest.raises(InvalidStratum):
        Partition.parse(text)


@pytest.mark.parametrize(
    "text,dim",
    [("3,1", 7), ("0", 2), ("1,1,0", 6), ("2", 4), ("1,1,1,1,1,1", 13)],
)
def test_dim_complex(text, dim):
    stratum = Stratum.parse(text)
    assert dim_complex(stratum) == dim
    assert stratum.dim_real == 2 * dim


@pytest.mark.parametrize(
    "text,labels",
    [
        ("0", {"c"}),
        ("2", {"hyp"}),
        ("1,1", {"hyp"}),
        ("4", {"hyp", "odd"}),
        ("2,2", {"hyp", "odd"}),
        ("3,1", {"c"}),
        ("6", {"hyp", "even", "odd"}),
        ("3,3", {"hyp", "nonhyp"}),
        ("4,2", {"even", "odd"}),
        ("2,2,2", {"even", "odd"}),
        ("4,4", {"hyp", "even", "odd"}),
        ("2,1,1", {"c"}),
    ],
)
def test_classify_components(text, labels):
    assert classify_components(Stratum.parse(text)) == frozenset(labels)


def test_hyperelliptic_spin_parity():
    assert hyperelliptic_spin_parity(Stratum.parse("4")) == EVEN
    assert hyperelliptic_spin_parity(Stratum.parse("2")) == ODD
    assert hyperelliptic_spin_parity(Stratum.parse("2,2")) == EVEN
    assert hyperelliptic_spin_parity(Stratum.parse("3,3")) is None
    assert hyperelliptic_spin_parity(Stratum.parse("3,1")) is None


@pytest.mark.parametrize(
    "entries,phi,value",
    [
        ((0,), ODD, 1),
        ((0,), EVEN, 0),
        ((4,), EVEN, 1),
        ((4,), ODD, 0),
        ((2, 1, 1), ODD, 0),
        ((6,), ODD, 0),
        ((6,), EVEN, 1),
    ],
)
def test_delta(entries, phi, value):
    assert delta(Partition(entries), phi) == value


def test_component_labels():
    assert Component.parse("Hyperelliptic") == Component.HYPERELLIPTIC
    assert Component.parse(" odd ") == Component.ODD
    with pytest.raises(UnknownComponent):
        Component.parse("spin")


def test_stratum_component_rejects_missing_component():
    with pytest.raises(UnknownComponent):
        StratumComponent.parse("2,2", "even")
    with pytest.raises(UnknownComponent):
        StratumComponent.parse("3,1", "hyp")


def test_connected_alias_resolves_single_component():
    assert StratumComponent.parse("2").effective_label == Component.HYPERELLIPTIC
    assert StratumComponent.parse("3,1").effective_label == Component.CONNECTED
    assert StratumComponent.parse("4").effective_label == Component.CONNECTED


def test_stratum_component_str():
    assert str(StratumComponent.parse("2,2", "odd")) == "H^odd(2,2)"
    assert str(StratumComponent.parse("3,1")) == "H(3,1)"


def test_primitive_forgets_marked_points():
    assert Stratum.parse("1,1,0").primitive == Stratum.parse("1,1")
