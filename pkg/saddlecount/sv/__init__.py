from .base import CLOSED, DISTINCT, SVConstant
from .closed import ClosedRow, combinatorial_factor_closed, constant_closed, table_closed
from .distinct import (
    DistinctRow,
    combinatorial_factor_distinct,
    constant_general,
    constant_mult1,
    constant_problem1,
    table_distinct,
)
from .totals import ClosedTotals, total_closed, total_distinct
