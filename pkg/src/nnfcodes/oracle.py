"""Brute-force weight and distance distributions.

These scan the codeword bits directly and share nothing with the polynomial
machinery, so they serve as independent references and as the baseline in
benchmarks.
"""

from __future__ import annotations

import numpy as np

from .boolfn import OpCounter
from .codes import BinaryCode
from .distance import DistanceDistribution
from .errors import EmptyAfterExclusion, TooFewWords
from .weight import WeightDistribution


def weight_distribution_bf(c: BinaryCode, counter: OpCounter | None = None) -> WeightDistribution:
    """Weight tally by inspecting all ``n * M`` bits; works for any ``M``."""
    weights = c.words.sum(axis=1, dtype=np.int64)
    if counter is not None:
        counter.bit_ops += c.n * c.M
    hist = np.bincount(weights, minlength=c.n + 1)
    idx = int(np.argmin(weights))
    k = c.M.bit_length() - 1 if c.M & (c.M - 1) == 0 else None
    return WeightDistribution(
        n=c.n,
        counts={int(w): int(cnt) for w, cnt in enumerate(hist) if cnt},
        min_weight=int(weights[idx]),
        witness_index=idx,
        witness=c.word(idx),
        total=c.M,
        k=k,
        method="bruteforce",
        ops=counter.as_dict() if counter else {},
    )


def distance_distribution_bf(
    c: BinaryCode, ordered: bool = False, counter: OpCounter | None = None
) -> DistanceDistribution:
    """Distance tally over all ``M(M-1)/2`` unordered pairs of positions."""
    if c.M < 2:
        raise TooFewWords("distance needs at least 2 codewords")
    words = c.words
    hist = np.zeros(c.n + 1, dtype=np.int64)
    best = None
    for i in range(c.M - 1):
        dists = (words[i + 1:] ^ words[i]).sum(axis=1, dtype=np.int64)
        hist += np.bincount(dists, minlength=c.n + 1)
        j = int(np.argmin(dists))
        cand = (int(dists[j]), i, i + 1 + j)
        if best is None or cand < best:
            best = cand
    if counter is not None:
        counter.bit_ops += c.n * c.M * (c.M - 1) // 2
    counts = {int(v): int(cnt) for v, cnt in enumerate(hist) if cnt}
    ordered_counts = None
    if ordered:
        ordered_counts = {v: 2 * cnt for v, cnt in counts.items()}
        ordered_counts[0] = ordered_counts.get(0, 0) + c.M
        ordered_counts = dict(sorted(ordered_counts.items()))
    m, i, j = best
    k = c.M.bit_length() - 1 if c.M & (c.M - 1) == 0 else None
    return DistanceDistribution(
        n=c.n,
        counts=counts,
        min_distance=m,
        witness_indices=(i, j),
        witness=(c.word(i), c.word(j)),
        pairs_total=c.M * (c.M - 1) // 2,
        M=c.M,
        k=k,
        ordered_counts=ordered_counts,
        method="bruteforce",
        ops=counter.as_dict() if counter else {},
    )


def min_weight_bf(c: BinaryCode, exclude_zero: bool = False) -> tuple[int, int]:
    """``(weight, first index)`` of the lightest codeword, optionally skipping zero words."""
    weights = c.words.sum(axis=1, dtype=np.int64)
    if exclude_zero:
        weights = np.where(weights == 0, np.iinfo(np.int64).max, weights)
        if (weights == np.iinfo(np.int64).max).all():
            raise EmptyAfterExclusion("every codeword is the zero word")
    idx = int(np.argmin(weights))
    return int(weights[idx]), idx
