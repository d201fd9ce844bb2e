"""Distance distribution through the distance polynomial over 2k variables.

Variables are laid out as ``(x_1..x_k, x~_1..x~_k)`` with ``x_1`` most
significant, so evaluation point ``v * 2**k + w`` holds the distance between
codewords ``v`` and ``w``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import NamedTuple, Union

import numpy as np

from .boolfn import NnfPoly, OpCounter, embed_variables, eval_nnf_hypercube, poly_mul_squarefree, poly_sum
from .boolfn import shift_variables
from .codes import BinaryCode, DefiningPolynomials, defining_polynomials, is_power_of_two
from .codes import partition_power_subcodes
from .errors import KTooLarge, TooFewWords
from .weight import decode_word

DEFAULT_MAX_K = 14
MAX_K_ENV = "NNFCODES_MAX_K"

# evaluation entries scanned per block when tallying pairs
_TALLY_CHUNK = 1 << 22

CodeSource = Union[BinaryCode, DefiningPolynomials]


def distance_limit(max_k: int | None = None) -> int:
    """Largest ``k`` accepted in distance mode.

    Starts at :data:`DEFAULT_MAX_K`; the ``NNFCODES_MAX_K`` environment
    variable and ``max_k`` can only lower it.
    """
    limit = DEFAULT_MAX_K
    env = os.environ.get(MAX_K_ENV)
    if env:
        limit = min(limit, int(env))
    if max_k is not None:
        limit = min(limit, max_k)
    return limit


@dataclass(frozen=True)
class DistanceDistribution:
    """Tally of distances over unordered pairs of distinct positions.

    ``witness_indices`` is the lexicographically first pair ``(i, j)``, ``i < j``,
    at minimum distance.  ``ordered_counts``, when requested, tallies all
    ``M**2`` ordered points including the diagonal.
    """

    n: int
    counts: dict[int, int]
    min_distance: int
    witness_indices: tuple[int, int]
    witness: tuple[str, str]
    pairs_total: int
    M: int
    k: int | None = None
    partition: tuple[int, ...] | None = None
    ordered_counts: dict[int, int] | None = None
    method: str = "nnf"
    ops: dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def duplicate_pairs(self) -> int:
        return self.counts.get(0, 0)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "M": self.M,
            "distribution": {str(w): c for w, c in sorted(self.counts.items())},
            "pairs_total": self.pairs_total,
            "min_distance": self.min_distance,
            "witness_indices": list(self.witness_indices),
            "witness": list(self.witness),
            "duplicate_pairs": self.duplicate_pairs,
            "method": self.method,
        }
        if self.ordered_counts is not None:
            out["ordered_distribution"] = {str(w): c for w, c in sorted(self.ordered_counts.items())}
        if self.partition is not None:
            out["partitioned"] = list(self.partition)
        return out


class MinDistance(NamedTuple):
    distance: int
    pair: tuple[int, int]
    words: tuple[str, str]


def column_difference(f: NnfPoly, counter: OpCounter | None = None) -> NnfPoly:
    """``f(X) - f(X~)``: the two copies only share the constant term."""
    k2 = 2 * f.k
    return poly_sum([embed_variables(f, k2, 0), shift_variables(f).scale(-1)], counter, phase="distance polynomial")


def distance_polynomial(
    d: DefiningPolynomials, counter: OpCounter | None = None, max_k: int | None = None
) -> NnfPoly:
    """Sum over columns of ``(f_i(X) - f_i(X~))**2`` in the square-free ring."""
    limit = distance_limit(max_k)
    if d.k > limit:
        raise KTooLarge(f"distance mode supports k <= {limit}, code has k={d.k}")
    acc = NnfPoly.zero(2 * d.k)
    for f in d.polys:
        diff = column_difference(f, counter)
        if not diff.nnz:
            continue
        square = poly_mul_squarefree(diff, diff, counter)
        acc = poly_sum([acc, square], counter, phase="distance polynomial")
    return acc


def distance_evaluations(
    d: DefiningPolynomials, counter: OpCounter | None = None, max_k: int | None = None
) -> np.ndarray:
    """Raw ``2**(2k)`` evaluation vector; entry ``v * 2**k + w`` is d(c_v, c_w)."""
    return eval_nnf_hypercube(distance_polynomial(d, counter, max_k), counter)


def _tally_upper(matrix: np.ndarray, n: int):
    """Histogram and lexicographically first argmin over ``i < j`` entries."""
    size = matrix.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    best = None
    rows = max(1, _TALLY_CHUNK // max(size, 1))
    cols = np.arange(size)
    for r0 in range(0, size, rows):
        block = matrix[r0:r0 + rows]
        mask = cols[None, :] > np.arange(r0, r0 + block.shape[0])[:, None]
        vals = block[mask]
        if not vals.size:
            continue
        hist += np.bincount(vals, minlength=n + 1)[: n + 1]
        m = int(vals.min())
        if best is None or m < best[0]:
            i, j = np.argwhere(mask & (block == m))[0]
            best = (m, int(r0 + i), int(j))
    return hist, best


def _hist_dict(hist: np.ndarray) -> dict[int, int]:
    return {int(v): int(c) for v, c in enumerate(hist) if c}


def distance_distribution(
    source: CodeSource,
    ordered: bool = False,
    counter: OpCounter | None = None,
    max_k: int | None = None,
) -> DistanceDistribution:
    """Distance distribution over unordered pairs, minimum distance and witness pair.

    A :class:`BinaryCode` whose size is not a power of 2 is split into
    power-of-2 blocks; pairs across blocks are compared directly.
    """
    if isinstance(source, BinaryCode):
        if source.M < 2:
            raise TooFewWords("distance needs at least 2 codewords")
        if not is_power_of_two(source.M):
            return _partitioned_distance_distribution(source, ordered, counter, max_k)
        d = defining_polynomials(source, counter)
    else:
        d = source
        if d.k < 1:
            raise TooFewWords("distance needs at least 2 codewords")
    size = 1 << d.k
    evals = distance_evaluations(d, counter, max_k)
    hist, (m, i, j) = _tally_upper(evals.reshape(size, size), d.n)
    if isinstance(source, BinaryCode):
        words = (source.word(i), source.word(j))
    else:
        words = (decode_word(d, i), decode_word(d, j))
    ordered_counts = None
    if ordered:
        ordered_counts = _hist_dict(np.bincount(evals, minlength=d.n + 1))
    return DistanceDistribution(
        n=d.n,
        counts=_hist_dict(hist),
        min_distance=m,
        witness_indices=(i, j),
        witness=words,
        pairs_total=size * (size - 1) // 2,
        M=size,
        k=d.k,
        ordered_counts=ordered_counts,
        ops=counter.as_dict() if counter else {},
    )


def _cross_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.empty((a.shape[0], b.shape[0]), dtype=np.int64)
    rows = max(1, _TALLY_CHUNK // max(b.size, 1))
    for r0 in range(0, a.shape[0], rows):
        out[r0:r0 + rows] = (a[r0:r0 + rows, None, :] != b[None, :, :]).sum(axis=2)
    return out


def _partitioned_distance_distribution(
    c: BinaryCode, ordered: bool, counter: OpCounter | None, max_k: int | None
) -> DistanceDistribution:
    part = partition_power_subcodes(c)
    hist = np.zeros(c.n + 1, dtype=np.int64)
    diag = 0
    best = None
    for bi, block in enumerate(part.blocks):
        if block.code.M >= 2:
            d = defining_polynomials(block.code, counter)
            size = block.code.M
            evals = distance_evaluations(d, counter, max_k).reshape(size, size)
            h, (m, i, j) = _tally_upper(evals, c.n)
            hist += h
            cand = (m, block.indices[i], block.indices[j])
            if best is None or cand < best:
                best = cand
        for other in part.blocks[bi + 1:]:
            cross = _cross_distances(block.code.words, other.code.words)
            hist += np.bincount(cross.reshape(-1), minlength=c.n + 1)
            m = int(cross.min())
            i, j = np.argwhere(cross == m)[0]
            cand = (m, block.indices[int(i)], other.indices[int(j)])
            if best is None or cand < best:
                best = cand
        diag += block.code.M
    ordered_counts = None
    if ordered:
        ordered_counts = _hist_dict(2 * hist)
        ordered_counts[0] = ordered_counts.get(0, 0) + diag
    m, i, j = best
    return DistanceDistribution(
        n=c.n,
        counts=_hist_dict(hist),
        min_distance=m,
        witness_indices=(i, j),
        witness=(c.word(i), c.word(j)),
        pairs_total=c.M * (c.M - 1) // 2,
        M=c.M,
        partition=tuple(part.sizes),
        ordered_counts=ordered_counts,
        ops=counter.as_dict() if counter else {},
    )


def min_distance(source: CodeSource, counter: OpCounter | None = None, max_k: int | None = None) -> MinDistance:
    """Minimum distance between distinct positions; 0 when a word is repeated."""
    dist = distance_distribution(source, counter=counter, max_k=max_k)
    return MinDistance(dist.min_distance, dist.witness_indices, dist.witness)
