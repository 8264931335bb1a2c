"""
isort:skip_file
"""
from .__version__ import __version__
from .errors import SaddleCountError, ConflictWarning
from .strata import (
    Component,
    Partition,
    Stratum,
    StratumComponent,
    classify_components,
    genus_of,
)
from .volumes import (
    StratumVolume,
    VolumeTable,
    bundled_table,
    load_volume_table,
    lookup_volume,
)
from .config import (
    ClosedConfig,
    DistinctConfig,
    enumerate_closed,
    enumerate_distinct,
)
from .sv import (
    SVConstant,
    constant_closed,
    constant_general,
    table_closed,
    table_distinct,
    total_closed,
    total_distinct,
)
from .notation import parse_closed, parse_distinct, print_closed, print_distinct

__title__ = "Saddle Connection Counting"
__author__ = "The saddlecount developers"
__license__ = "MIT"
__copyright__ = "(c) 2026 The saddlecount developers"
