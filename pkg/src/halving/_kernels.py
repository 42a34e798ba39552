"""Integer sidedness kernels.

Both kernels work on integer coordinates (callers scale rationals by a common
denominator first), so every sign is exact. The numba path is used for
coordinates that fit the int64 safety bound; anything larger runs the numpy
path on object arrays of Python ints.

Set ``HALVING_NO_JIT=1`` to force the pure-numpy path everywhere. Outputs are
identical either way; the flag only changes speed.
"""
import os

import numpy as np

# |coord| < 2**29 keeps (q-p) x (r-p) below 2**62 in magnitude.
INT64_SAFE_BOUND = 1 << 29

_JIT_DISABLED = os.environ.get("HALVING_NO_JIT", "").strip().lower() in {"1", "true", "yes"}

try:
    if _JIT_DISABLED:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def _sign(c):
    # np.sign is not defined on object arrays of Python ints
    return (c > 0).astype(np.int64) - (c < 0).astype(np.int64)


def halving_pairs_numpy(xs, ys):
    """Index pairs (i < j) whose line leaves equal counts on both sides.

    Points on the line through i and j contribute a zero cross product, so i
    and j themselves never need to be masked out.
    """
    n = xs.shape[0]
    found = []
    for i in range(n - 1):
        dx = xs - xs[i]
        dy = ys - ys[i]
        # cross[j, r] = (p_j - p_i) x (p_r - p_i)
        cross = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]
        balance = _sign(cross).sum(axis=1)
        for j in np.flatnonzero(balance[i + 1:] == 0):
            found.append((i, i + 1 + int(j)))
    return np.array(found, dtype=np.int64).reshape(-1, 2)


def collinear_triple_numpy(xs, ys):
    """First collinear triple (i < j < k) in lexicographic order, or None."""
    n = xs.shape[0]
    for i in range(n - 2):
        dx = xs[i + 1:] - xs[i]
        dy = ys[i + 1:] - ys[i]
        cross = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]
        zero = np.triu(cross == 0, k=1)
        if zero.any():
            j, k = np.argwhere(zero)[0]
            return i, i + 1 + int(j), i + 1 + int(k)
    return None


if HAVE_NUMBA:
    @njit(cache=True)
    def _halving_pairs_jit(xs, ys):
        n = xs.shape[0]
        out = np.empty((n * (n - 1) // 2, 2), dtype=np.int64)
        k = 0
        for i in range(n - 1):
            for j in range(i + 1, n):
                dx = xs[j] - xs[i]
                dy = ys[j] - ys[i]
                bal = 0
                for r in range(n):
                    c = dx * (ys[r] - ys[i]) - dy * (xs[r] - xs[i])
                    if c > 0:
                        bal += 1
                    elif c < 0:
                        bal -= 1
                if bal == 0:
                    out[k, 0] = i
                    out[k, 1] = j
                    k += 1
        return out[:k]

    @njit(cache=True)
    def _collinear_triple_jit(xs, ys):
        n = xs.shape[0]
        for i in range(n - 2):
            for j in range(i + 1, n - 1):
                dx = xs[j] - xs[i]
                dy = ys[j] - ys[i]
                for r in range(j + 1, n):
                    if dx * (ys[r] - ys[i]) - dy * (xs[r] - xs[i]) == 0:
                        return i, j, r
        return -1, -1, -1

    def halving_pairs_jit(xs, ys):
        return _halving_pairs_jit(xs, ys)

    def collinear_triple_jit(xs, ys):
        t = _collinear_triple_jit(xs, ys)
        return None if t[0] < 0 else (int(t[0]), int(t[1]), int(t[2]))
else:
    halving_pairs_jit = halving_pairs_numpy
    collinear_triple_jit = collinear_triple_numpy


def as_arrays(xs, ys):
    """Pack integer coordinates, choosing int64 when the safety bound allows."""
    if all(abs(v) < INT64_SAFE_BOUND for v in xs) and all(abs(v) < INT64_SAFE_BOUND for v in ys):
        return np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64)
    return np.array(xs, dtype=object), np.array(ys, dtype=object)


def halving_pairs(xs, ys):
    """Dispatch to the fastest exact kernel for these integer coordinates."""
    ax, ay = as_arrays(xs, ys)
    if ax.dtype == np.int64 and len(xs) >= 2:
        pairs = halving_pairs_jit(ax, ay)
    else:
        pairs = halving_pairs_numpy(ax, ay)
    return [(int(i), int(j)) for i, j in pairs]


def collinear_triple(xs, ys):
    ax, ay = as_arrays(xs, ys)
    if ax.dtype == np.int64:
        return collinear_triple_jit(ax, ay)
    return collinear_triple_numpy(ax, ay)
