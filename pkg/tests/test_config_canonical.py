from __future__ import annotations

import numpy as np
import pytest

from saddlecount.config.closed import (
    ClosedConfig,
    canonicalize_closed,
    enumerate_closed_configs,
    symmetry_closed,
)
from saddlecount.config.distinct import (
    DistinctConfig,
    canonicalize_distinct,
    enumerate_distinct,
    symmetry_distinct,
    zero_pairs,
)
from saddlecount.strata import Stratum

STRATA = ["3,1", "2,2", "2,1,1", "1,1,1,1", "5,1", "4,1,1", "3,2,1", "2,2,1,1", "2,1,1,1,1"]


def scramble_distinct(cfg, rng):
    pieces, m1, m2 = cfg.pieces, cfg.m1, cfg.m2
    if rng.integers(2):
        pieces = tuple(piece.swapped() for piece in reversed(pieces))
        m1, m2 = m2, m1
    shift = int(rng.integers(len(pieces)))
    return DistinctConfig(m1, m2, pieces[shift:] + pieces[:shift])


def scramble_closed(cfg, rng):
    pieces, glue = cfg.pieces, cfg.glue
    if rng.integers(2):
        # Read the cycle of gluings and pieces backwards from the first gluing
        pieces = tuple(piece.swapped() for piece in reversed(pieces))
        glue = glue[:1] + tuple(reversed(glue[1:]))
    shift = int(rng.integers(len(pieces)))
    return ClosedConfig(pieces[shift:] + pieces[:shift], glue[shift:] + glue[:shift])


@pytest.fixture(scope="module")
def distinct_configs():
    configs = []
    for text in STRATA:
        stratum = Stratum.parse(text)
        for m1, m2 in zero_pairs(stratum.alpha):
            configs.extend(enumerate_distinct(stratum, m1, m2))
    return configs


@pytest.fixture(scope="module")
def closed_configs():
    configs = []
    for text in STRATA:
        configs.extend(enumerate_closed_configs(Stratum.parse(text)))
    return configs


@pytest.mark.parametrize("seed", [0, 1])
def test_distinct_canonical_form_is_constant_on_orbits(distinct_configs, seed):
    rng = np.random.default_rng(seed)
    for _ in range(2500):
        cfg = distinct_configs[rng.integers(len(distinct_configs))]
        moved = scramble_distinct(cfg, rng)
        assert canonicalize_distinct(moved) == cfg
        assert symmetry_distinct(moved) == symmetry_distinct(cfg)


@pytest.mark.parametrize("seed", [0, 1])
def test_closed_canonical_form_is_constant_on_orbits(closed_configs, seed):
    rng = np.random.default_rng(seed)
    for _ in range(2500):
        cfg = closed_configs[rng.integers(len(closed_configs))]
        moved = scramble_closed(cfg, rng)
        assert canonicalize_closed(moved) == cfg
        assert symmetry_closed(moved) == symmetry_closed(cfg)


def test_hand_reversal_agrees_with_orbit(closed_configs):
    for cfg in closed_configs:
        keys = {c.key() for c in cfg.orbit()}
        reversed_by_hand = ClosedConfig(
            tuple(piece.swapped() for piece in reversed(cfg.pieces)),
            cfg.glue[:1] + tuple(reversed(cfg.glue[1:])),
        )
        assert reversed_by_hand.key() in keys
