"""Weight distribution through the weight polynomial.

The weight polynomial is the integer sum of the defining NNFs; its value at
point ``p`` is the Hamming weight of codeword ``p``.  One zeta transform
therefore yields every codeword weight at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

import numpy as np

from .boolfn import NnfPoly, OpCounter, eval_nnf_hypercube, poly_sum
from .codes import BinaryCode, DefiningPolynomials, defining_polynomials, is_power_of_two
from .codes import pad_to_power_of_two, partition_power_subcodes
from .errors import EmptyAfterExclusion

CodeSource = Union[BinaryCode, DefiningPolynomials]


@dataclass(frozen=True)
class WeightDistribution:
    """Tally of codeword weights with a minimum-weight witness.

    ``witness_index`` is the 0-based position (message index) of the first
    codeword of weight ``min_weight``.
    """

    n: int
    counts: dict[int, int]
    min_weight: int
    witness_index: int
    witness: str
    total: int
    k: int | None = None
    partition: tuple[int, ...] | None = None
    method: str = "nnf"
    ops: dict[str, int] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "M": self.total,
            "distribution": {str(w): c for w, c in sorted(self.counts.items())},
            "min_weight": self.min_weight,
            "witness_index": self.witness_index,
            "witness": self.witness,
            "method": self.method,
        }
        if self.partition is not None:
            out["partitioned"] = list(self.partition)
        return out


class MinWeight(NamedTuple):
    weight: int
    index: int
    word: str


def weight_polynomial(d: DefiningPolynomials, counter: OpCounter | None = None) -> NnfPoly:
    """Sparse integer sum of the defining NNFs.

    Uses at most ``sum(nnz(f_i))`` additions, none when the supports are disjoint.
    """
    if not d.polys:
        return NnfPoly.zero(d.k)
    return poly_sum(d.polys, counter, phase="weight polynomial")


def weight_evaluations(d: DefiningPolynomials, counter: OpCounter | None = None) -> np.ndarray:
    """Weight of every codeword, in message order."""
    return eval_nnf_hypercube(weight_polynomial(d, counter), counter)


def decode_word(d: DefiningPolynomials, point: int) -> str:
    """Codeword at ``point`` read back from the defining polynomials."""
    return "".join(str(p.evaluate(point)) for p in d.polys)


def _as_defs(source: CodeSource, counter: OpCounter | None) -> DefiningPolynomials:
    if isinstance(source, DefiningPolynomials):
        return source
    return defining_polynomials(source, counter)


def _tally(weights: np.ndarray, n: int) -> dict[int, int]:
    hist = np.bincount(weights, minlength=n + 1)
    return {int(w): int(c) for w, c in enumerate(hist) if c}


def weight_distribution(source: CodeSource, counter: OpCounter | None = None) -> WeightDistribution:
    """Weight distribution, minimum weight and first minimum-weight codeword.

    A :class:`BinaryCode` whose size is not a power of 2 is split into
    power-of-2 blocks and the block tallies are added.
    """
    if isinstance(source, BinaryCode) and not is_power_of_two(source.M):
        return _partitioned_weight_distribution(source, counter)
    d = _as_defs(source, counter)
    weights = weight_evaluations(d, counter)
    idx = int(np.argmin(weights))
    word = source.word(idx) if isinstance(source, BinaryCode) else decode_word(d, idx)
    return WeightDistribution(
        n=d.n,
        counts=_tally(weights, d.n),
        min_weight=int(weights[idx]),
        witness_index=idx,
        witness=word,
        total=int(weights.size),
        k=d.k,
        ops=counter.as_dict() if counter else {},
    )


def _partitioned_weight_distribution(c: BinaryCode, counter: OpCounter | None) -> WeightDistribution:
    part = partition_power_subcodes(c)
    counts: dict[int, int] = {}
    best = None
    for block in part.blocks:
        weights = weight_evaluations(defining_polynomials(block.code, counter), counter)
        for w, cnt in _tally(weights, c.n).items():
            counts[w] = counts.get(w, 0) + cnt
        local = int(np.argmin(weights))
        cand = (int(weights[local]), block.indices[local])
        if best is None or cand < best:
            best = cand
    return WeightDistribution(
        n=c.n,
        counts=dict(sorted(counts.items())),
        min_weight=best[0],
        witness_index=best[1],
        witness=c.word(best[1]),
        total=c.M,
        partition=tuple(part.sizes),
        ops=counter.as_dict() if counter else {},
    )


def min_weight(source: CodeSource, exclude_zero: bool = False, counter: OpCounter | None = None) -> MinWeight:
    """Smallest weight and the first codeword attaining it.

    With ``exclude_zero`` the zero word is skipped, giving the minimum nonzero
    weight (the minimum distance of a linear code).  A code whose size is not
    a power of 2 is padded by repeating its first word, which cannot change
    the minimum.
    """
    code = None
    if isinstance(source, BinaryCode):
        code = source
        if not is_power_of_two(code.M):
            code = pad_to_power_of_two(code)
        d = defining_polynomials(code, counter)
    else:
        d = source
    weights = weight_evaluations(d, counter)
    if exclude_zero:
        candidates = np.flatnonzero(weights != 0)
        if candidates.size == 0:
            raise EmptyAfterExclusion("every codeword is the zero word")
        idx = int(candidates[np.argmin(weights[candidates])])
    else:
        idx = int(np.argmin(weights))
    word = code.word(idx) if code is not None else decode_word(d, idx)
    return MinWeight(int(weights[idx]), idx, word)
