"""Recursive fast Hough transform for ``w x h`` images.

Images are 2-D integer arrays of shape ``(h, w)`` indexed ``img[y, x]``
(x fastest in memory).  Hough images use the same shape and are indexed
``J[s, t]``: column ``t`` is the slope index, row ``s`` the vertical shift.
Each value is the sum of the input along the generating dyadic pattern of
slope ``t`` shifted down by ``s`` with vertical wrap-around::

    J[s, t] = sum(img[(pat[x] + s) % h, x] for x in range(w))

Two ways of splitting the width are supported.  ``SIMPLE`` bisects it,
``TWEAKED`` cuts off the largest power of two strictly below it.  Both
reduce to the Brady-Yong transform when ``w`` is a power of two.
"""

from __future__ import annotations

import enum

import numpy as np

ACCUMULATOR = np.int64
# |value| * width must stay below this so no partial sum can overflow int64.
OVERFLOW_LIMIT = 2**62


class OverflowBudgetError(ValueError):
    """The image could overflow 64-bit accumulators."""


class SplitStrategy(enum.Enum):
    SIMPLE = "simple"
    TWEAKED = "tweaked"

    def __str__(self):
        return self.value


def split_simple(w):
    """Split ``w`` into ``(floor(w/2), ceil(w/2))``."""
    w = int(w)
    if w < 2:
        raise ValueError(f"cannot split width {w}; need w >= 2")
    return w // 2, w - w // 2


def split_tweaked(w):
    """Split ``w`` into the largest power of two below ``w`` and the rest."""
    w = int(w)
    if w < 2:
        raise ValueError(f"cannot split width {w}; need w >= 2")
    # 2**(ceil(log2 w) - 1) == 2**((w - 1).bit_length() - 1)
    head = 1 << ((w - 1).bit_length() - 1)
    return head, w - head


def split(w, strategy):
    if SplitStrategy(strategy) is SplitStrategy.SIMPLE:
        return split_simple(w)
    return split_tweaked(w)


def round_half_up_ratio(num, den):
    """Return ``num / den`` rounded to the nearest integer, ties up.

    Computed in exact integer arithmetic as ``(2*num + den) // (2*den)``.
    """
    num, den = int(num), int(den)
    if den < 1:
        raise ValueError(f"denominator must be positive, got {den}")
    if num < 0:
        raise ValueError(f"numerator must be non-negative, got {num}")
    return (2 * num + den) // (2 * den)


def child_slopes(width, part):
    """Slopes handed to a part of ``part`` columns, for every parent slope.

    Entry ``t`` is ``round_half_up_ratio(t * (part - 1), width - 1)``.
    """
    t = np.arange(width, dtype=np.int64)
    return (2 * t * (part - 1) + (width - 1)) // (2 * (width - 1))


def rotate(v, r):
    """Circularly shift ``v`` so that ``u[i] = v[(i + r) % len(v)]``."""
    v = np.asarray(v)
    h = v.shape[0]
    if not 0 <= r < h:
        raise ValueError(f"shift {r} outside [0, {h})")
    return np.roll(v, -r)


def as_image(img):
    """Validate ``img`` and return it as a C-contiguous int64 array.

    Raises
    ------
    TypeError
        For non-integer input.
    ValueError
        For anything that is not a non-empty 2-D array.
    OverflowBudgetError
        If ``w * max|value| >= 2**62``.
    """
    a = np.asarray(img)
    if a.ndim != 2:
        raise ValueError(f"image must be 2-D, got shape {a.shape}")
    h, w = a.shape
    if h < 1 or w < 1:
        raise ValueError(f"image must be at least 1x1, got {w}x{h}")
    if a.dtype == np.bool_:
        a = a.astype(ACCUMULATOR)
    if not np.issubdtype(a.dtype, np.integer):
        raise TypeError(f"integer pixels required, got {a.dtype}")
    vmax = max(abs(int(a.min())), abs(int(a.max())))
    if w * vmax >= OVERFLOW_LIMIT:
        raise OverflowBudgetError(
            f"{w} columns with |value| up to {vmax} may overflow int64 sums"
        )
    return np.ascontiguousarray(a, dtype=ACCUMULATOR)


def _transform_columns(cols, strategy, counter):
    # cols[x] is column x of the image; the result row t is J(t, :).
    w, h = cols.shape
    if w == 1:
        return cols.copy()
    w0, w1 = split(w, strategy)
    left = _transform_columns(cols[:w0], strategy, counter)
    right = _transform_columns(cols[w0:], strategy, counter)

    t = np.arange(w)
    t0 = child_slopes(w, w0)
    t1 = child_slopes(w, w1)
    shift = (t - t1) % h
    rows = (np.arange(h)[None, :] + shift[:, None]) % h
    out = left[t0] + np.take_along_axis(right[t1], rows, axis=1)
    if counter is not None:
        counter[0] += out.size
    return out


def fht2d(img, strategy=SplitStrategy.TWEAKED):
    """Fast Hough transform of an integer image.

    Parameters
    ----------
    img : array_like of int, shape (h, w)
        Input image indexed ``img[y, x]``.
    strategy : SplitStrategy or str
        ``"simple"`` or ``"tweaked"``.

    Returns
    -------
    numpy.ndarray of int64, shape (h, w)
        Hough image indexed ``J[s, t]``.
    """
    return fht2d_counted(img, strategy)[0]


def fht2d_counted(img, strategy=SplitStrategy.TWEAKED):
    """Like :func:`fht2d`, also returning the number of scalar additions."""
    strategy = SplitStrategy(strategy)
    a = as_image(img)
    counter = [0]
    cols = _transform_columns(np.ascontiguousarray(a.T), strategy, counter)
    return np.ascontiguousarray(cols.T), counter[0]
