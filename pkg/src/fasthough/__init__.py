"""Fast Hough (discrete Radon) transform for images of arbitrary size."""

from .core import (
    OverflowBudgetError,
    SplitStrategy,
    as_image,
    fht2d,
    fht2d_counted,
    rotate,
    round_half_up_ratio,
    split,
    split_simple,
    split_tweaked,
)
from .patterns import Pattern, fht2d_pattern, pattern_matrix, pattern_set
from .oracle import count_additions_tree, line_error, slow_hough

__all__ = [
    "OverflowBudgetError",
    "Pattern",
    "SplitStrategy",
    "as_image",
    "count_additions_tree",
    "fht2d",
    "fht2d_counted",
    "fht2d_pattern",
    "line_error",
    "pattern_matrix",
    "pattern_set",
    "rotate",
    "round_half_up_ratio",
    "slow_hough",
    "split",
    "split_simple",
    "split_tweaked",
]

__version__ = "0.1.0"
