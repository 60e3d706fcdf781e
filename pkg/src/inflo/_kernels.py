"""Numeric kernels for graph construction and ranking.

The two hot loops of the graphical extractor — pairwise reciprocal-distance
edge weights and the damped power iteration — exist in two variants: a
numba @njit scalar-loop version and a vectorized pure-numpy fallback.
Selection happens once at import: set INFLO_NUMBA=0 to force the numpy
path (it is also used automatically when numba is not installed).
benchmarks/bench_kernels.py compares both variants head to head.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("INFLO_NUMBA", "").strip().lower()
_WANT_NUMBA = _FLAG not in ("0", "false", "no", "off")

USING_NUMBA = False
if _WANT_NUMBA:
    try:
        from numba import njit

        USING_NUMBA = True
    except ImportError:
        USING_NUMBA = False


def _pair_weights_loops(starts, counts, flat, topics):
    """W[i, j] = sum over occurrence pairs of 1/|p_i - p_j|, cross-topic only."""
    n = starts.shape[0]
    weights = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(n):
            if i == j or topics[i] == topics[j]:
                continue
            total = 0.0
            for a in range(starts[i], starts[i] + counts[i]):
                for b in range(starts[j], starts[j] + counts[j]):
                    total += 1.0 / abs(flat[a] - flat[b])
            weights[i, j] = total
    return weights


def _power_iteration_loops(weights, damping, tol, max_iter):
    """Damped random walk; dangling mass redistributed uniformly."""
    n = weights.shape[0]
    out_weight = np.zeros(n, dtype=np.float64)
    for j in range(n):
        for i in range(n):
            out_weight[j] += weights[j, i]
    scores = np.full(n, 1.0 / n, dtype=np.float64)
    base = (1.0 - damping) / n
    for _ in range(max_iter):
        dangling = 0.0
        for j in range(n):
            if out_weight[j] == 0.0:
                dangling += scores[j]
        new_scores = np.empty(n, dtype=np.float64)
        for i in range(n):
            acc = 0.0
            for j in range(n):
                if out_weight[j] > 0.0:
                    acc += weights[j, i] * scores[j] / out_weight[j]
            new_scores[i] = base + damping * (acc + dangling / n)
        delta = 0.0
        for i in range(n):
            delta += abs(new_scores[i] - scores[i])
        scores = new_scores
        if delta < tol:
            break
    return scores


def pair_weights_numpy(starts, counts, flat, topics):
    n = starts.shape[0]
    if n == 0:
        return np.zeros((0, 0), dtype=np.float64)
    owner = np.repeat(np.arange(n), counts)
    diffs = np.abs(flat[:, None] - flat[None, :]).astype(np.float64)
    same_topic = topics[owner][:, None] == topics[owner][None, :]
    with np.errstate(divide="ignore"):
        recip = np.where(same_topic, 0.0, 1.0 / diffs)
    weights = np.zeros((n, n), dtype=np.float64)
    rows, cols = np.broadcast_arrays(owner[:, None], owner[None, :])
    np.add.at(weights, (rows.ravel(), cols.ravel()), recip.ravel())
    return weights


def power_iteration_numpy(weights, damping, tol, max_iter):
    n = weights.shape[0]
    out_weight = weights.sum(axis=1)
    nondangling = out_weight > 0
    transition = np.zeros_like(weights)
    transition[nondangling] = weights[nondangling] / out_weight[nondangling, None]
    scores = np.full(n, 1.0 / n, dtype=np.float64)
    base = (1.0 - damping) / n
    for _ in range(max_iter):
        dangling_mass = scores[~nondangling].sum()
        new_scores = base + damping * (transition.T @ scores + dangling_mass / n)
        delta = np.abs(new_scores - scores).sum()
        scores = new_scores
        if delta < tol:
            break
    return scores


if USING_NUMBA:
    pair_weights = njit(cache=True)(_pair_weights_loops)
    power_iteration = njit(cache=True)(_power_iteration_loops)
else:
    pair_weights = pair_weights_numpy
    power_iteration = power_iteration_numpy
