from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from conftest import component
from saddlecount.sv.closed import table_closed
from saddlecount.sv.distinct import table_distinct


def rows(*lines):
    """
    Rows written as "|Gamma-| |Gamma| M value", counted as a multiset.
    """
    counted = Counter()
    for line in lines:
        gamma_order, rot_order, M, value = line.split()
        counted[(int(gamma_order), int(rot_order), Fraction(M), Fraction(value))] += 1
    return counted


def observed(table_rows):
    return Counter(
        (row.symmetry.gamma_order, row.symmetry.rot_order, Fraction(row.M), row.constant.exact)
        for row in table_rows
    )


DISTINCT_TABLES = {
    "5,1": rows(
        "1 1 7 4311167/373248",
        "1 1 5 38125/93312",
        "1 2 9/2 21/512",
    ),
    "4,1,1": rows(
        "2 1 3 2403/616",
        "1 1 12 186624/9625",
        "2 1 1 61/616",
        "1 1 8 1024/1925",
        "1 1 12 108/1375",
    ),
    "3,2,1": rows(
        "1 1 4 368/63",
        "1 1 5 55625/7168",
        "1 1 6 81/7",
        "1 1 3 765/3584",
        "1 1 2 10/63",
        "1 1 4 20/63",
        "1 1 3 27/1024",
        "1 1 6 3/64",
        "1 1 6 3/64",
        "1 1 2 5/288",
    ),
    "3,1,1,1": rows(
        "2 1 9 729/62",
        "1 1 15 185625/7936",
        "2 1 3 15/62",
        "1 1 9 2025/3968",
        "1 1 9 405/7936",
        "1 2 12 3/62",
    ),
    "2,2,1,1": rows(
        "2 1 3 4101/1048",
        "1 1 16 3072/131",
        "2 1 5 6875/786",
        "2 1 1 85/1048",
        "1 1 8 200/393",
        "2 1 3 25/131",
        "2 2 1 3/524",
        "1 1 8 16/393",
        "2 1 3 5/262",
        "2 1 8 128/3537",
        "2 1 1 25/3537",
    ),
    "2,1,1,1,1": rows(
        "2 1 18 1179/50",
        "1 1 16 15872/675",
        "2 1 6 2/5",
        "1 1 8 56/135",
        "2 1 6 1/50",
        "1 1 24 16/225",
    ),
}

CLOSED_TABLES = {
    "5,1": rows(
        "1 1 5 38125/15552",
        "1 1 4 2240/243",
        "1 1 4 320/243",
        "1 1 4 320/243",
        "1 1 6 175/18",
        "1 1 3 35/288",
        "1 1 3 35/576",
        "1 1 3 35/576",
        "1 1 3 35/576",
        "1 1 2 175/486",
        "1 1 2 35/243",
        "1 1 2 35/486",
        "1 1 2 35/486",
        "1 1 1 175/7776",
    ),
    "4,1,1": rows(
        "2 1 1 61/88",
        "1 1 8 1024/275",
        "1 1 3 432/55",
        "1 1 3 54/55",
        "2 1 3/2 27/55",
        "2 1 2 224/55",
        "1 1 6 27/275",
        "1 1 6 27/1100",
        "2 1 3 27/2200",
        "2 1 1/2 6/55",
        "2 1 1/2 2/55",
        "1 1 1 2/55",
        "1 1 4 8/55",
        "1 1 4 16/275",
        "1 1 4 16/275",
        "2 1 1 1/110",
        "2 1 1 1/220",
    ),
    "3,2,1": rows(
        "1 1 3 765/512",
        "2 1 1/2 20/9",
        "2 1 1/2 5/18",
        "1 1 2 10/9",
        "1 1 2 25/4",
        "1 1 2 25/32",
        "1 1 6 75/32",
        "1 1 1 25/512",
        "1 1 1 5/256",
        "1 1 3 15/256",
        "1 1 3 15/512",
        "1 1 2 25/144",
        "1 1 2 25/288",
        "1 1 4 5/72",
        "1 1 2 5/288",
        "1 1 1 25/2304",
        "1 1 1 25/4608",
    ),
    "3,1,1,1": rows(
        "2 1 3 60/31",
        "1 1 9 2025/496",
        "1 1 2 1575/248",
        "1 1 2 175/248",
        "1 1 18 405/7936",
        "1 1 3 225/1984",
        "1 1 3 75/1984",
        "1 1 12 75/496",
        "1 1 12 15/496",
        "1 1 6 75/7936",
    ),
    "2,2,1,1": rows(
        "2 1 1 85/131",
        "2 1 1 600/131",
        "2 1 1 200/393",
        "1 1 8 1600/393",
        "2 1 4 5600/3537",
        "1 1 4 25/393",
        "2 1 2 25/1572",
        "2 1 2 5/786",
        "2 1 1 100/1179",
        "1 1 8 400/3537",
        "2 1 1 25/3537",
        "1 1 8 200/3537",
        "2 1 8 80/3537",
        "2 1 2 25/3537",
        "2 1 2 25/7074",
        "2 1 2 25/14148",
    ),
    "2,1,1,1,1": rows(
        "2 1 6 18/5",
        "2 1 1/2 7/3",
        "2 1 1/2 7/30",
        "1 1 8 56/15",
        "2 1 12 1/40",
        "1 1 12 2/15",
        "2 1 6 1/30",
        "2 1 6 1/90",
        "1 1 48 4/45",
        "2 1 12 1/180",
        "2 1 12 1/360",
    ),
    "1,1,1,1,1,1": rows(
        "2 1 15 3150/377",
        "2 1 180 90/377",
        "2 3 120 5/754",
    ),
}

# Closed constants of the genus four components, as multiples of 1/zeta(2)
COMPONENT_CLOSED_VALUES = {
    ("6", "hyp"): "384/25 6 84/25 896/225",
    ("6", "even"): "30375/4096 10125/8192 875/256 405/128 15 2835/2048 2835/4096 2835/8192",
    ("6", "odd"): "350/27 175/81 25/32 175/162 105/16 256/27 7/32 7/32 7/27 35/432 35/864",
    ("3,3", "hyp"): "15/2 35/9",
    ("3,3", "nonhyp"): "3699/1120 64/5 64/35 27/80 1/5 1/32",
    ("4,2", "even"): (
        "4/3 4/21 256/45 256/315 8/9 32768/8505 128/27 8/27 16/135 32/45 2/45 256/1215"
    ),
    ("4,2", "odd"): "49/18 7/18 147/16 21/16 3/10 128/45 7/2 7/80 21/320 7/45 7/144 7/576",
    ("2,2,2", "even"): "180/37 45/74 225/37 225/296 5/37",
    ("2,2,2", "odd"): "252/31 63/62 144/31 9/155 16/155 4/93 1/186",
}


@pytest.mark.parametrize("stratum", sorted(DISTINCT_TABLES))
def test_distinct_table_genus_four(table, stratum):
    assert observed(table_distinct(component(stratum), table)) == DISTINCT_TABLES[stratum]


@pytest.mark.parametrize("stratum", sorted(CLOSED_TABLES))
def test_closed_table_genus_four(table, stratum):
    assert observed(table_closed(component(stratum), table)) == CLOSED_TABLES[stratum]


@pytest.mark.parametrize("stratum,label", sorted(COMPONENT_CLOSED_VALUES))
def test_closed_table_of_a_component(table, stratum, label):
    values = sorted(row.constant.exact for row in table_closed(component(stratum, label), table))
    expected = sorted(Fraction(v) for v in COMPONENT_CLOSED_VALUES[stratum, label].split())
    assert values == expected
