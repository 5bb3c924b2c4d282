"""Generating dyadic patterns summed over by the fast Hough transform."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import SplitStrategy, child_slopes, round_half_up_ratio, split


@dataclass(frozen=True)
class Pattern:
    """Discrete approximation of the line ``y = x * t / (n - 1)``.

    ``values[x]`` is the row visited in column ``x``.  Values are not
    wrapped; the transform applies the modulo when it sums.
    """

    n: int
    t: int
    values: tuple

    def __len__(self):
        return self.n


def _fill(n, t, offset, x0, strategy, out):
    if n == 1:
        out[x0] = offset
        return
    n0, n1 = split(n, strategy)
    t0 = round_half_up_ratio(t * (n0 - 1), n - 1)
    t1 = round_half_up_ratio(t * (n1 - 1), n - 1)
    _fill(n0, t0, offset, x0, strategy, out)
    _fill(n1, t1, offset + t - t1, x0 + n0, strategy, out)


def fht2d_pattern(n, t, strategy=SplitStrategy.TWEAKED):
    """Build the generating pattern of slope ``t`` for width ``n``.

    The width is split recursively; each part gets its slope rounded from
    ``t`` and the right part is lifted by ``t - t_right`` so the pieces
    join into a single chain from ``(0, 0)`` to ``(n - 1, t)``.
    """
    n, t = int(n), int(t)
    if n < 1:
        raise ValueError(f"pattern width must be positive, got {n}")
    if not 0 <= t < n:
        raise ValueError(f"slope {t} outside [0, {n})")
    strategy = SplitStrategy(strategy)
    out = [0] * n
    _fill(n, t, 0, 0, strategy, out)
    return Pattern(n, t, tuple(out))


def pattern_set(n, strategy=SplitStrategy.TWEAKED):
    """All ``n`` generating patterns for width ``n``, in slope order."""
    n = int(n)
    if n < 1:
        raise ValueError(f"pattern width must be positive, got {n}")
    return [fht2d_pattern(n, t, strategy) for t in range(n)]


def pattern_matrix(n, strategy=SplitStrategy.TWEAKED):
    """Every pattern for width ``n`` at once, as an ``(n, n)`` array.

    Row ``t`` equals ``fht2d_pattern(n, t, strategy).values``.  Built by
    gathering rows of the two part matrices instead of walking each slope.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"pattern width must be positive, got {n}")
    strategy = SplitStrategy(strategy)
    memo = {}

    def build(m):
        if m in memo:
            return memo[m]
        if m == 1:
            mat = np.zeros((1, 1), dtype=np.int64)
        else:
            m0, m1 = split(m, strategy)
            t0 = child_slopes(m, m0)
            t1 = child_slopes(m, m1)
            lift = np.arange(m) - t1
            mat = np.hstack([build(m0)[t0], build(m1)[t1] + lift[:, None]])
        memo[m] = mat
        return mat

    return build(n)
