from __future__ import annotations

import math

import numpy as np
import pytest

from conftest import component, primitive_upper_vectors
from saddlecount.flatsim.simulate import (
    CLOSED,
    CYLINDERS,
    PAIRS,
    count_surface,
    empirical_constant,
    summarize,
    trial_seeds,
)
from saddlecount.flatsim.surface import four_square_surface, square_torus
from saddlecount.sv.totals import total_closed, total_distinct


@pytest.mark.parametrize("L", [1.5, 3.0])
def test_count_square_torus(L):
    torus = square_torus()
    expected = len(primitive_upper_vectors(L))
    assert count_surface(torus, CLOSED, L) == expected
    assert count_surface(torus, PAIRS, L) == 0
    assert count_surface(torus, CYLINDERS, L) == expected


def test_count_four_square_surface():
    surface = four_square_surface()
    # Vertical sides join the two zeros, horizontal ones close up
    assert count_surface(surface, PAIRS, 1.01) == 4
    assert count_surface(surface, CLOSED, 1.01) == 4


def test_count_invalid_class():
    with pytest.raises(ValueError):
        count_surface(square_torus(), "everything", 1.0)


def test_summarize():
    report = summarize([1, 2, 3], CLOSED, 1.0)
    assert report.trials == 3
    assert report.counts == (1, 2, 3)
    assert report.mean == pytest.approx(2 / math.pi)
    assert report.stderr == pytest.approx(1 / math.pi / math.sqrt(3))


def test_summarize_single_count():
    report = summarize([4], PAIRS, 2.0)
    assert report.mean == pytest.approx(1 / math.pi)
    assert math.isnan(report.stderr)


def test_report_to_dict():
    data = summarize([1, 2], CYLINDERS, 1.0).to_dict()
    assert data["counting_class"] == CYLINDERS
    assert data["counts"] == [1, 2]
    assert data["trials"] == 2


def test_trial_seeds_are_independent_and_reproducible():
    first = [seed.generate_state(2).tolist() for seed in trial_seeds(9, 4)]
    second = [seed.generate_state(2).tolist() for seed in trial_seeds(9, 4)]
    assert first == second
    assert len({tuple(state) for state in first}) == 4


def test_empirical_constant_is_deterministic():
    first = empirical_constant((4, 3, 2, 1), CLOSED, 1.5, 3, seed=2)
    second = empirical_constant((4, 3, 2, 1), CLOSED, 1.5, 3, seed=2)
    assert first == second
    assert first.trials == 3
    assert all(count >= 0 for count in first.counts)


def test_empirical_constant_on_a_torus_has_no_pairs():
    report = empirical_constant((2, 1), PAIRS, 2.0, 3, seed=1)
    assert report.counts == (0, 0, 0)
    assert report.mean == 0


@pytest.mark.parametrize(
    "kwargs",
    [{"counting_class": "everything", "trials": 2}, {"counting_class": CLOSED, "trials": 0}],
)
def test_empirical_constant_rejects_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        empirical_constant((2, 1), L=1.0, seed=0, **kwargs)


@pytest.mark.slow
def test_random_tori_closed_connections():
    # Primitive vectors of a unimodular lattice, counted up to sign
    report = empirical_constant((2, 1), CLOSED, 10.0, 20, seed=0)
    assert report.mean == pytest.approx(3 / math.pi ** 2, rel=0.1)


@pytest.mark.slow
def test_random_tori_cylinders_match_closed_connections():
    closed = empirical_constant((2, 1), CLOSED, 6.0, 5, seed=3)
    cylinders = empirical_constant((2, 1), CYLINDERS, 6.0, 5, seed=3)
    np.testing.assert_array_equal(closed.counts, cylinders.counts)


@pytest.mark.slow
@pytest.mark.parametrize(
    "pi,counting_class,stratum",
    [
        ((4, 3, 2, 1), CYLINDERS, "2"),
        ((5, 4, 3, 2, 1), CYLINDERS, "1,1"),
        ((5, 4, 3, 2, 1), PAIRS, "1,1"),
    ],
)
def test_random_surfaces_approach_the_exact_constant(table, pi, counting_class, stratum):
    if counting_class == PAIRS:
        target = total_distinct(component(stratum), table).approx
    else:
        target = total_closed(component(stratum), table).cylinders.approx
    report = empirical_constant(pi, counting_class, 8.0, 6, seed=1)
    assert report.mean == pytest.approx(target, rel=0.1), (
        f"{report.mean:.4f} +- {report.stderr:.4f}, expected {target:.4f}"
    )
