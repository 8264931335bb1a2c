from __future__ import annotations

import re
import typing
from collections import Counter
from dataclasses import dataclass, field

from .errors import InvalidStratum, OddSum, UnknownComponent

EVEN = 0
ODD = 1

PARITY_NAMES = {EVEN: "even", ODD: "odd"}


class Component:
    """
    Connected component labels, as they appear in volume files and on the
    command line.
    """

    CONNECTED = "c"
    HYPERELLIPTIC = "hyp"
    EVEN = "even"
    ODD = "odd"
    NONHYPERELLIPTIC = "nonhyp"

    ALL = (CONNECTED, HYPERELLIPTIC, EVEN, ODD, NONHYPERELLIPTIC)

    ALIASES = {
        "connected": CONNECTED,
        "hyperelliptic": HYPERELLIPTIC,
        "non-hyperelliptic": NONHYPERELLIPTIC,
    }

    @classmethod
    def parse(cls, text: str) -> str:
        tag = text.strip().lower()
        tag = cls.ALIASES.get(tag, tag)
        if tag not in cls.ALL:
            raise UnknownComponent(f"Invalid component label: {text}")
        return tag

    @staticmethod
    def parity(label: str) -> typing.Optional[int]:
        """
        The spin parity carried by a label, None for labels without one.
        """
        if label == Component.EVEN:
            return EVEN
        elif label == Component.ODD:
            return ODD
        return None


@dataclass(frozen=True, order=True)
class Partition:
    """
    A multiset of zero orders, stored weakly decreasing. Entries equal to 0
    are marked points.
    """

    entries: typing.Tuple[int, ...] = ()

    RE = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")

    def __post_init__(self):
        entries = tuple(sorted((int(e) for e in self.entries), reverse=True))
        if any(e < 0 for e in entries):
            raise InvalidStratum(f"Invalid partition, negative entry: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> Partition:
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """
        Parse the comma separated text form, e.g. "3,1" or "2,0".
        """
        text = text.strip()
        if text.startswith("H(") and text.endswith(")"):
            text = text[2:-1]
        if not cls.RE.match(text):
            raise InvalidStratum(f"Invalid partition format: {text!r}")
        return cls(tuple(int(part) for part in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)

    def __iter__(self) -> typing.Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def card(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    @property
    def positive(self) -> Partition:
        """
        The partition with marked points removed. An empty positive part is
        the torus, stored as (0).
        """
        positive = tuple(e for e in self.entries if e > 0)
        return Partition(positive or (0,))

    @property
    def is_torus(self) -> bool:
        return self.weight == 0

    def multiplicity(self, m: int) -> int:
        return self.entries.count(m)

    def counter(self) -> typing.Counter[int]:
        return Counter(e for e in self.entries if e > 0)

    def add(self, *entries: int) -> Partition:
        return Partition(self.entries + tuple(entries))

    def remove(self, *entries: int) -> Partition:
        remaining = list(self.entries)
        for e in entries:
            if e not in remaining:
                raise ValueError(f"Invalid removal, {e} is not in {self}")
            remaining.remove(e)
        return Partition(tuple(remaining))


def genus_of(alpha: Partition) -> int:
    """
    The genus g of a stratum H(alpha), from sum(alpha) = 2g - 2.
    """
    total = alpha.weight
    if total % 2:
        raise OddSum(f"Invalid partition, entries sum to an odd number: {alpha}")
    return total // 2 + 1


@dataclass(frozen=True, order=True)
class Stratum:
    alpha: Partition

    def __post_init__(self):
        if not self.alpha.entries:
            raise InvalidStratum("Invalid stratum, empty partition")
        genus_of(self.alpha)

    @classmethod
    def parse(cls, text: str) -> Stratum:
        return cls(Partition.parse(text))

    def __str__(self) -> str:
        return f"H({self.alpha})"

    @property
    def genus(self) -> int:
        return genus_of(self.alpha)

    @property
    def dim_complex(self) -> int:
        return dim_complex(self)

    @property
    def dim_real(self) -> int:
        return 2 * dim_complex(self)

    @property
    def primitive(self) -> Stratum:
        """
        The same stratum with the marked points forgotten.
        """
        return Stratum(self.alpha.positive)


def dim_complex(stratum: Stratum) -> int:
    return 2 * stratum.genus - 1 + stratum.alpha.card


def is_hyperelliptic_shape(alpha: Partition) -> bool:
    """
    True for (2g-2) and (g-1, g-1), the only strata containing a
    hyperelliptic component. The torus counts as (2g-2) with g = 1.
    """
    entries = alpha.positive.entries
    g = genus_of(alpha)
    return entries in ((2 * g - 2,), (g - 1, g - 1))


def classify_components(stratum: Stratum) -> typing.FrozenSet[str]:
    alpha = stratum.alpha.positive
    entries = alpha.entries
    g = stratum.genus
    if alpha.is_torus:
        return frozenset({Component.CONNECTED})
    if g == 2:
        return frozenset({Component.HYPERELLIPTIC})
    if g == 3:
        if entries in ((4,), (2, 2)):
            return frozenset({Component.HYPERELLIPTIC, Component.ODD})
        return frozenset({Component.CONNECTED})

    if entries == (2 * g - 2,):
        return frozenset({Component.HYPERELLIPTIC, Component.EVEN, Component.ODD})
    if entries == (g - 1, g - 1):
        if g % 2 == 0:
            return frozenset({Component.HYPERELLIPTIC, Component.NONHYPERELLIPTIC})
        return frozenset({Component.HYPERELLIPTIC, Component.EVEN, Component.ODD})
    if all(e % 2 == 0 for e in entries):
        return frozenset({Component.EVEN, Component.ODD})
    return frozenset({Component.CONNECTED})


def has_spin_structure(alpha: Partition) -> bool:
    return all(e % 2 == 0 for e in alpha.entries)


def hyperelliptic_spin_parity(stratum: Stratum) -> typing.Optional[int]:
    """
    Parity of the spin structure on the hyperelliptic component, when it is
    defined.
    """
    entries = stratum.alpha.positive.entries
    g = stratum.genus
    if entries == (2 * g - 2,):
        return ((g + 1) // 2) % 2
    if g % 2 == 1 and entries == (g - 1, g - 1):
        return ((g + 1) // 2) % 2
    return None


def delta(alpha: Partition, phi: int) -> int:
    parity = hyperelliptic_spin_parity(Stratum(alpha))
    return int(parity is not None and parity == phi)


@dataclass(frozen=True)
class StratumComponent:
    stratum: Stratum
    label: str = field(default=Component.CONNECTED)

    def __post_init__(self):
        label = Component.parse(self.label)
        object.__setattr__(self, "label", label)
        if label == Component.CONNECTED:
            return
        if label not in classify_components(self.stratum):
            raise UnknownComponent(
                f"Invalid component {label} for stratum {self.stratum}"
            )

    @classmethod
    def parse(cls, stratum: str, label: str = Component.CONNECTED) -> StratumComponent:
        return cls(Stratum.parse(stratum), label)

    def __str__(self) -> str:
        if self.label == Component.CONNECTED:
            return str(self.stratum)
        return f"H^{self.label}({self.stratum.alpha})"

    @property
    def alpha(self) -> Partition:
        return self.stratum.alpha

    @property
    def genus(self) -> int:
        return self.stratum.genus

    @property
    def parity(self) -> typing.Optional[int]:
        return Component.parity(self.label)

    @property
    def effective_label(self) -> str:
        """
        The label formulas dispatch on. A connected alias on a stratum with a
        single component resolves to that component.
        """
        labels = classify_components(self.stratum)
        if self.label == Component.CONNECTED and len(labels) == 1:
            return next(iter(labels))
        return self.label
