from .base import SymmetryInfo
from .closed import (
    CYLINDER,
    DIRECT,
    FIGURE_EIGHT,
    PAIR_OF_HOLES,
    ClosedConfig,
    ClosedPiece,
    NewbornZero,
    canonicalize_closed,
    d_values,
    enumerate_closed,
    enumerate_closed_configs,
    is_hyperelliptic_closed_shape,
    newborn_zeros,
    symmetry_closed,
    validate_closed,
)
from .distinct import (
    DistinctConfig,
    DistinctPiece,
    canonicalize_distinct,
    enumerate_distinct,
    symmetry_distinct,
    validate_distinct,
    zero_pairs,
)
