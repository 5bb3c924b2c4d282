"""Addition counts and line-approximation errors of the two split strategies.

Counts come from the split tree (:func:`fasthough.oracle.count_additions_tree`)
and are compared with their closed forms.  Errors are exact ``Fraction``
values: the deviation of a pattern from ``y = x * t / (n - 1)`` is always
a multiple of ``1 / (n - 1)``.  Normalized quantities involve ``log2 n``
and are evaluated as 40-digit ``Decimal`` values.
"""

from __future__ import annotations

import decimal
import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from ._kernels import max_error_numerator
from .core import SplitStrategy
from .oracle import count_additions_tree, line_error
from .patterns import pattern_set

PRECISION = 40
FAST_MODE_LIMIT = 1024
FAST_MODE_SENTINELS = (1451, 2048, 4095, 4096)

_CTX = decimal.Context(prec=PRECISION)


@functools.lru_cache(maxsize=None)
def _log2(n):
    if n & (n - 1) == 0:
        return decimal.Decimal(n.bit_length() - 1)
    return _CTX.divide(_CTX.ln(decimal.Decimal(n)), _CTX.ln(decimal.Decimal(2)))


# 5 * log_3(2) / 3 and 81 * log_17(2) / 17
SIMPLE_PEAK_CONSTANT = _CTX.divide(decimal.Decimal(5), _CTX.multiply(3, _log2(3)))
TWEAKED_PEAK_CONSTANT = _CTX.divide(decimal.Decimal(81), _CTX.multiply(17, _log2(17)))


def count_additions(w, h, strategy=SplitStrategy.TWEAKED):
    return count_additions_tree(w, h, strategy)


def closed_form_f_simple(n):
    """Additions of the simple strategy on an ``n x n`` image, in closed form."""
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    q = n.bit_length() - 1
    return (q + 2) * n * n - (1 << (q + 1)) * n


def peak_f_tweaked(k):
    """Additions of the tweaked strategy at ``n = 2**k + 1``."""
    p = 1 << k
    return (p + 1) * (p + 1 + k * p)


def theorem2_bound(n):
    """Upper bound ``floor(log2 n)/6 + 1 - 2**-floor(log2 n)`` on the tweaked error."""
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    q = n.bit_length() - 1
    return Fraction(q, 6) + 1 - Fraction(1, 1 << q)


def normalized_complexity(count, n):
    """``count / (n**2 * log2 n)``; None for ``n == 1``."""
    if n < 2:
        return None
    return _CTX.divide(decimal.Decimal(count), _CTX.multiply(n * n, _log2(n)))


def normalized_error(err, n):
    """``err / (log2(n) / 6)``; None for ``n == 1``."""
    if n < 2:
        return None
    num = _CTX.divide(decimal.Decimal(err.numerator), decimal.Decimal(err.denominator))
    return _CTX.divide(_CTX.multiply(6, num), _log2(n))


def max_orthotropic_error(n, strategy=SplitStrategy.TWEAKED, reference=False):
    """Largest vertical deviation of any width-``n`` pattern from its line.

    With ``reference=True`` every pattern is built and scored one by one in
    pure Python; otherwise a compiled sweep over the split tree is used.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    strategy = SplitStrategy(strategy)
    if n == 1:
        return Fraction(0)
    if reference:
        return max(line_error(n, pat) for pat in pattern_set(n, strategy))
    num = max_error_numerator(n, strategy is SplitStrategy.TWEAKED)
    return Fraction(int(num), n - 1)


@dataclass(frozen=True)
class ComplexityRecord:
    n: int
    f_simple: int
    f_tweaked: int
    norm_simple: Optional[decimal.Decimal]
    norm_tweaked: Optional[decimal.Decimal]


@dataclass(frozen=True)
class ErrorRecord:
    n: int
    e_simple: Fraction
    e_tweaked: Fraction
    bound_t2: Fraction
    norm_simple: Optional[decimal.Decimal]
    norm_tweaked: Optional[decimal.Decimal]

    @property
    def separated(self):
        """True when the bound lies strictly below the simple strategy's error."""
        return self.e_simple > self.bound_t2


def complexity_record(n):
    f_s = count_additions_tree(n, n, SplitStrategy.SIMPLE)
    f_t = count_additions_tree(n, n, SplitStrategy.TWEAKED)
    return ComplexityRecord(
        n, f_s, f_t, normalized_complexity(f_s, n), normalized_complexity(f_t, n)
    )


def complexity_series(n_max):
    n_max = int(n_max)
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    return [complexity_record(n) for n in range(1, n_max + 1)]


def error_record(n):
    e_s = max_orthotropic_error(n, SplitStrategy.SIMPLE)
    e_t = max_orthotropic_error(n, SplitStrategy.TWEAKED)
    return ErrorRecord(
        n,
        e_s,
        e_t,
        theorem2_bound(n),
        normalized_error(e_s, n),
        normalized_error(e_t, n),
    )


def simple_error_peaks(n_max, start=23):
    """Sizes ``23, 45, 91, 181, ...`` where ``n[k+1] = 2*n[k] + (-1)**(k+1)``.

    The simple strategy's normalized error spikes at these widths; from 181
    on each one is the largest value within its power-of-two octave.
    """
    out = []
    n, k = start, 0
    while n <= n_max:
        out.append(n)
        n = 2 * n + (-1) ** (k + 1)
        k += 1
    return out


def fast_mode_sizes(n_max):
    """All sizes up to 1024 plus the large sentinel sizes, capped at ``n_max``."""
    n_max = int(n_max)
    small = range(1, min(n_max, FAST_MODE_LIMIT) + 1)
    return list(small) + [n for n in FAST_MODE_SENTINELS if FAST_MODE_LIMIT < n <= n_max]


def iter_error_series(sizes: Iterable[int]) -> Iterator[ErrorRecord]:
    """Yield an :class:`ErrorRecord` per size, in the order given.

    The cost grows with the cube of the largest size, so records are
    produced one at a time for the caller to stream.
    """
    for n in sizes:
        yield error_record(n)


def error_series(n_max, fast=False):
    n_max = int(n_max)
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    sizes = fast_mode_sizes(n_max) if fast else range(1, n_max + 1)
    return list(iter_error_series(sizes))


def separation_fraction(n_max):
    """Share of ``n`` in ``[1, n_max]`` whose simple error exceeds the bound."""
    n_max = int(n_max)
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    hits = sum(
        max_orthotropic_error(n, SplitStrategy.SIMPLE) > theorem2_bound(n)
        for n in range(1, n_max + 1)
    )
    return Fraction(hits, n_max)
