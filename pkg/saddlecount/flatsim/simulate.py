"""
Empirical Siegel-Veech constants from random surfaces.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass

import numpy as np

from .search import cylinders_up_to, saddle_connections_up_to
from .surface import EPSILON, TranslationSurface
from .suspension import IrreduciblePermutation, sample_surface

PAIRS = "pairs"
CLOSED = "closed"
CYLINDERS = "cylinders"

COUNTING_CLASSES = (PAIRS, CLOSED, CYLINDERS)


@dataclass(frozen=True)
class CountReport:
    L: float
    trials: int
    counting_class: str
    counts: typing.Tuple[int, ...]
    mean: float
    stderr: float

    def to_dict(self) -> dict:
        return {
            "L": self.L,
            "trials": self.trials,
            "counting_class": self.counting_class,
            "counts": list(self.counts),
            "mean": self.mean,
            "stderr": self.stderr,
        }


def count_surface(
    surface: TranslationSurface, counting_class: str, L: float, epsilon: float = EPSILON
) -> int:
    """
    N(L) for one surface: saddle connections joining distinct zeros, closed
    saddle connections, or maximal cylinders.
    """
    if counting_class == PAIRS:
        records = saddle_connections_up_to(surface, L, epsilon)
        return sum(1 for record in records if not record.is_closed)
    if counting_class == CLOSED:
        records = saddle_connections_up_to(surface, L, epsilon)
        return sum(1 for record in records if record.is_closed)
    if counting_class == CYLINDERS:
        return len(cylinders_up_to(surface, L, epsilon))
    raise ValueError(f"Invalid counting class: {counting_class!r}")


def trial_seeds(seed: typing.Optional[int], trials: int) -> typing.List[np.random.SeedSequence]:
    """
    One independent seed per trial, so that results do not depend on the
    order in which the trials run.
    """
    return np.random.SeedSequence(seed).spawn(trials)


def run_trial(
    pi: IrreduciblePermutation,
    counting_class: str,
    L: float,
    seed: np.random.SeedSequence,
    epsilon: float = EPSILON,
) -> int:
    surface = sample_surface(pi, seed)
    return count_surface(surface, counting_class, L, epsilon)


def summarize(counts: typing.Sequence[int], counting_class: str, L: float) -> CountReport:
    """
    Mean and standard error of N(L) / (pi L^2).
    """
    trials = len(counts)
    values = np.asarray(counts, dtype=float) / (math.pi * L * L)
    mean = float(values.mean()) if trials else math.nan
    stderr = float(values.std(ddof=1) / math.sqrt(trials)) if trials > 1 else math.nan
    return CountReport(L, trials, counting_class, tuple(int(c) for c in counts), mean, stderr)


def empirical_constant(
    pi: typing.Union[IrreduciblePermutation, typing.Sequence[int]],
    counting_class: str,
    L: float,
    trials: int,
    seed: typing.Optional[int] = None,
    epsilon: float = EPSILON,
) -> CountReport:
    if counting_class not in COUNTING_CLASSES:
        raise ValueError(f"Invalid counting class: {counting_class!r}")
    if trials < 1:
        raise ValueError(f"Invalid number of trials: {trials}")
    if not isinstance(pi, IrreduciblePermutation):
        pi = IrreduciblePermutation(tuple(pi))

    counts = [
        run_trial(pi, counting_class, L, trial_seed, epsilon)
        for trial_seed in trial_seeds(seed, trials)
    ]
    return summarize(counts, counting_class, L)
