"""Slow reference computations used to check the fast paths."""

from __future__ import annotations

import functools
from fractions import Fraction

import numpy as np

from .core import SplitStrategy, as_image, split
from .patterns import fht2d_pattern


def slow_hough(img, strategy=SplitStrategy.TWEAKED):
    """Hough image by direct summation along every shifted pattern.

    No partial sums are shared, so the cost is ``w * w * h`` additions.
    Output layout matches :func:`fasthough.fht2d`.
    """
    strategy = SplitStrategy(strategy)
    a = as_image(img)
    h, w = a.shape
    out = np.zeros((h, w), dtype=np.int64)
    x = np.arange(w)
    shifts = np.arange(h)[:, None]
    for t in range(w):
        pat = np.array(fht2d_pattern(w, t, strategy).values)
        rows = (pat[None, :] + shifts) % h
        out[:, t] = a[rows, x[None, :]].sum(axis=1)
    return out


@functools.lru_cache(maxsize=None)
def _node_width_sum(w, strategy):
    if w == 1:
        return 0
    w0, w1 = split(w, strategy)
    return w + _node_width_sum(w0, strategy) + _node_width_sum(w1, strategy)


def count_additions_tree(w, h, strategy=SplitStrategy.TWEAKED):
    """Additions needed by the fast transform on a ``w x h`` image.

    Sums the widths of all non-leaf nodes of the split tree, times ``h``.
    """
    w, h = int(w), int(h)
    if w < 1 or h < 1:
        raise ValueError(f"image must be at least 1x1, got {w}x{h}")
    return h * _node_width_sum(w, SplitStrategy(strategy))


def line_error(n, pat):
    """Largest vertical gap between ``pat`` and its ideal line, as a Fraction.

    The ideal line is ``y = x * t / (n - 1)``, so every gap is a multiple
    of ``1 / (n - 1)`` and the maximum is taken over integer numerators.
    """
    n = int(n)
    if pat.n != n:
        raise ValueError(f"pattern width {pat.n} does not match n={n}")
    if n == 1:
        return Fraction(0)
    den = n - 1
    worst = max(abs(x * pat.t - den * y) for x, y in enumerate(pat.values))
    return Fraction(worst, den)
