"""
Combinatorial helpers shared by the distinct and closed configuration
enumerators: compositions, multiset distributions and cyclic symmetry.
"""
from __future__ import annotations

import itertools
import typing
from collections import Counter
from dataclasses import dataclass
from math import factorial

T = typing.TypeVar("T")

Rest = typing.Tuple[int, ...]


@dataclass(frozen=True)
class SymmetryInfo:
    """
    gamma_order is |Gamma_-| (1 or 2), rot_order is |Gamma| (a divisor of
    the number of pieces).
    """

    gamma_order: int
    rot_order: int

    @property
    def order(self) -> int:
        return self.gamma_order * self.rot_order


def normalize_rest(entries: typing.Iterable[int]) -> Rest:
    """
    Unchanged zeros on a piece, weakly decreasing, marked points dropped.
    """
    return tuple(sorted((e for e in entries if e > 0), reverse=True))


def compositions(total: int, parts: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    """
    Weak compositions of total into the given number of ordered parts, in
    lexicographic order.
    """
    if parts <= 0:
        if total == 0:
            yield ()
        return
    if total < 0:
        return
    # Stars and bars
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        previous = -1
        sizes = []
        for bar in bars:
            sizes.append(bar - previous - 1)
            previous = bar
        sizes.append(total + parts - 2 - previous)
        yield tuple(sizes)


def distributions(
    entries: typing.Iterable[int], parts: int
) -> typing.Iterator[typing.Tuple[Rest, ...]]:
    """
    Every way to distribute a multiset into the given number of ordered
    sub-multisets. Equal entries are indistinguishable.
    """
    counter = Counter(entries)
    values = sorted(counter, reverse=True)
    per_value = [list(compositions(counter[v], parts)) for v in values]
    for choice in itertools.product(*per_value):
        yield tuple(
            normalize_rest(
                itertools.chain.from_iterable(
                    [v] * counts[i] for v, counts in zip(values, choice)
                )
            )
            for i in range(parts)
        )


def rotations(sequence: typing.Sequence[T]) -> typing.Iterator[typing.Tuple[T, ...]]:
    items = tuple(sequence)
    for shift in range(len(items)):
        yield items[shift:] + items[:shift]


def rotation_stabilizer(sequence: typing.Sequence[T]) -> int:
    items = tuple(sequence)
    return sum(1 for rotated in rotations(items) if rotated == items)


def is_rotation_of(candidate: typing.Sequence[T], sequence: typing.Sequence[T]) -> bool:
    candidate = tuple(candidate)
    return any(rotated == candidate for rotated in rotations(sequence))


def factorial_multiplicities(
    alpha_entries: typing.Iterable[int], rests: typing.Iterable[Rest]
) -> int:
    """
    prod_m o(m)! / prod_i o_i(m)!, the number of ways to hand the unchanged
    zeros of each order out to the pieces.
    """
    total = Counter(e for e in alpha_entries if e > 0)
    result = 1
    for count in total.values():
        result *= factorial(count)
    denominator = 1
    for rest in rests:
        for count in Counter(rest).values():
            denominator *= factorial(count)
    return result // denominator
