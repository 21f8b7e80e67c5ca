"""Compensated summation.

All divergence sums go through :func:`comp_sum` so that results are
reproducible regardless of how callers batch their inputs (a row of a bulk
matrix sums exactly like the same values passed one pair at a time), and so
that near-cancelling sums keep full double precision.
"""

from __future__ import annotations

import numpy as np


def comp_sum(terms, axis: int = -1):
    """Sum ``terms`` along ``axis`` left to right with Neumaier compensation.

    The compensation term recovers the rounding error of every partial sum,
    so the result is accurate to a few ulps even under heavy cancellation.
    Returns a float for 1-D input, an ndarray otherwise.
    """
    a = np.moveaxis(np.asarray(terms, dtype=np.float64), axis, -1)
    total = np.zeros(a.shape[:-1])
    comp = np.zeros(a.shape[:-1])
    for k in range(a.shape[-1]):
        t = a[..., k]
        partial = total + t
        comp = comp + np.where(
            np.abs(total) >= np.abs(t),
            (total - partial) + t,
            (t - partial) + total,
        )
        total = partial
    out = total + comp
    return float(out) if out.ndim == 0 else out
