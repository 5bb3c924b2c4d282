"""Compiled kernel for the all-slopes pattern error sweep.

The split tree of width ``n`` does not depend on the slope, so it is laid
out once in preorder and every node is then evaluated for all ``n`` slopes
in a flat inner loop.  Rows of per-depth scratch buffers hold the slope and
vertical lift reaching the current node; preorder guarantees the parent row
is still intact when a child reads it.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def _split(m, tweaked):
    if tweaked:
        head = 1
        while head * 2 < m:
            head *= 2
        return head, m - head
    return m // 2, m - m // 2


@numba.njit(cache=True)
def _layout(n, tweaked):
    # Preorder nodes of the split tree, stopping at width 2 (pattern <0, t>).
    cap = 2 * n
    size = np.empty(cap, np.int64)
    depth = np.empty(cap, np.int64)
    x0 = np.empty(cap, np.int64)
    right = np.empty(cap, np.bool_)
    parent = np.empty(cap, np.int64)
    stack = np.empty(cap, np.int64)

    size[0] = n
    depth[0] = 0
    x0[0] = 0
    right[0] = False
    parent[0] = -1
    count = 1
    top = 0
    stack[0] = 0
    # Ids are assigned when children are created; `order` records the
    # preorder visit sequence as nodes are popped.
    order = np.empty(cap, np.int64)
    k = 0
    while top >= 0:
        node = stack[top]
        top -= 1
        order[k] = node
        k += 1
        m = size[node]
        if m <= 2:
            continue
        a, b = _split(m, tweaked)
        for side in range(2):
            c = count
            count += 1
            size[c] = a if side == 0 else b
            depth[c] = depth[node] + 1
            x0[c] = x0[node] if side == 0 else x0[node] + a
            right[c] = side == 1
            parent[c] = node
        # push right (c) then left (c - 1) so left pops first
        top += 1
        stack[top] = count - 1
        top += 1
        stack[top] = count - 2
    return order[:k], size, depth, x0, right, parent


@numba.njit(cache=True)
def max_error_numerator(n, tweaked):
    """Largest ``|x*t - (n-1)*pat_t(x)|`` over all slopes ``t`` and columns ``x``."""
    if n <= 2:
        return 0
    order, size, depth, x0, right, parent = _layout(n, tweaked)
    max_depth = 0
    for i in range(order.shape[0]):
        if depth[order[i]] > max_depth:
            max_depth = depth[order[i]]
    slope = np.empty((max_depth + 1, n), np.int32)
    lift = np.empty((max_depth + 1, n), np.int32)
    for t in range(n):
        slope[0, t] = t
        lift[0, t] = 0
    table = np.empty(n, np.int32)
    den = n - 1
    best = 0
    for i in range(1, order.shape[0]):
        node = order[i]
        d = depth[node]
        m = size[node]
        pm = size[parent[node]]
        # child slope for every possible parent slope: round half up of
        # sp * (m - 1) / (pm - 1)
        pden = pm - 1
        for sp in range(pm):
            table[sp] = (2 * sp * (m - 1) + pden) // (2 * pden)
        if right[node]:
            for t in range(n):
                sp = slope[d - 1, t]
                sc = table[sp]
                slope[d, t] = sc
                lift[d, t] = lift[d - 1, t] + sp - sc
        else:
            for t in range(n):
                slope[d, t] = table[slope[d - 1, t]]
                lift[d, t] = lift[d - 1, t]
        if m <= 2:
            xa = x0[node]
            for t in range(n):
                dev = abs(xa * t - den * np.int64(lift[d, t]))
                if dev > best:
                    best = dev
            if m == 2:
                for t in range(n):
                    y = np.int64(lift[d, t]) + slope[d, t]
                    dev = abs((xa + 1) * t - den * y)
                    if dev > best:
                        best = dev
    return best
