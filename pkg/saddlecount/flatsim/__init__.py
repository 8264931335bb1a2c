"""
Flat-surface simulator: random translation surfaces, their saddle
connections and cylinders, and the empirical counting constants.
"""
from .runner import TrialRunner
from .search import (
    Cylinder,
    SaddleConnectionRecord,
    cylinders_up_to,
    flow,
    is_upper,
    saddle_connections_up_to,
)
from .simulate import (
    CLOSED,
    COUNTING_CLASSES,
    CYLINDERS,
    PAIRS,
    CountReport,
    count_surface,
    empirical_constant,
)
from .surface import (
    ConePoint,
    TranslationSurface,
    build_from_polygons,
    four_square_surface,
    regular_octagon,
    square_torus,
    triangulate_polygon,
    two_marked_torus,
)
from .suspension import (
    IrreduciblePermutation,
    permutation_for,
    sample_surface,
    stratum_of_permutation,
)
