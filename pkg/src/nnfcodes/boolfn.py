"""Boolean functions as truth tables, ANF and NNF polynomials.

Index convention (used for both monomials and hypercube points): bit ``b`` of
an index (``b = 0`` least significant) stands for variable ``x_{k-b}``, so the
binary expansion of the index read most-significant-first is the exponent
vector ``(u_1, ..., u_k)``.  Index 0 is the constant term / the origin and
``2**k - 1`` is ``x_1 * ... * x_k`` / the all-ones point.

Butterflies run dense on numpy arrays.  Polynomial sums and products run on
sparse ``(indices, values)`` pairs.  All integer arithmetic is checked signed
64-bit: an overflow raises :class:`IntegerOverflow` instead of wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Iterable, Sequence

import numpy as np

from .errors import IntegerOverflow, InvalidVariableSet

INT64_MAX = int(np.iinfo(np.int64).max)

# products evaluated per block in poly_mul_squarefree
_MUL_CHUNK = 1 << 22


@dataclass
class OpCounter:
    """Tally of logical operations performed by the instrumented routines.

    Subtractions are counted as additions.  ``xors`` counts F2 additions in the
    ANF butterfly; ``bit_ops`` counts bit inspections of brute-force scans.
    """

    int_adds: int = 0
    int_muls: int = 0
    xors: int = 0
    bit_ops: int = 0

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def __sub__(self, other: OpCounter) -> OpCounter:
        return OpCounter(**{f.name: getattr(self, f.name) - getattr(other, f.name) for f in fields(self)})

    def copy(self) -> OpCounter:
        return OpCounter(**self.as_dict())


def variable_bit(i: int, k: int) -> int:
    """Mask of variable ``x_i`` (1-based) among ``k`` variables."""
    if not 1 <= i <= k:
        raise InvalidVariableSet(f"variable x{i} out of range for k={k}")
    return 1 << (k - i)


def index_from_exponents(exponents: Sequence[int]) -> int:
    idx = 0
    for e in exponents:
        idx = (idx << 1) | (1 if e else 0)
    return idx


def exponents_from_index(idx: int, k: int) -> tuple[int, ...]:
    return tuple((idx >> (k - 1 - j)) & 1 for j in range(k))


def _log2_exact(length: int) -> int:
    k = length.bit_length() - 1
    if length < 1 or (1 << k) != length:
        raise ValueError(f"length {length} is not a power of 2")
    return k


# ---------------------------------------------------------------------------
# Dense representations
# ---------------------------------------------------------------------------


class TruthTable:
    """Evaluation vector of a Boolean function; ``bits[p] = f(point p)``."""

    __slots__ = ("k", "bits")

    def __init__(self, k: int, bits: Iterable[int] | np.ndarray):
        arr = np.array(bits, dtype=np.uint8).reshape(-1)
        if arr.size != 1 << k:
            raise ValueError(f"truth table over k={k} variables needs {1 << k} entries, got {arr.size}")
        if arr.size and arr.max() > 1:
            raise ValueError("truth table entries must be 0 or 1")
        arr.setflags(write=False)
        self.k = k
        self.bits = arr

    @classmethod
    def from_string(cls, s: str) -> TruthTable:
        s = s.strip()
        if set(s) - {"0", "1"}:
            raise ValueError(f"truth table string must be 0/1, got {s!r}")
        return cls(_log2_exact(len(s)), [int(ch) for ch in s])

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    def __repr__(self) -> str:
        return f"TruthTable(k={self.k}, bits='{self}')"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.k, self.bits.tobytes()))


class AnfPoly:
    """Algebraic normal form: ``coeffs[u]`` is the F2 coefficient of ``X^u``."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: Iterable[int] | np.ndarray):
        arr = np.array(coeffs, dtype=np.uint8).reshape(-1)
        if arr.size != 1 << k:
            raise ValueError(f"ANF over k={k} variables needs {1 << k} coefficients, got {arr.size}")
        if arr.size and arr.max() > 1:
            raise ValueError("ANF coefficients must be 0 or 1")
        arr.setflags(write=False)
        self.k = k
        self.coeffs = arr

    @classmethod
    def from_monomials(cls, k: int, monomials: Iterable[int]) -> AnfPoly:
        """Build from monomial indices; a repeated monomial cancels over F2."""
        coeffs = np.zeros(1 << k, dtype=np.uint8)
        for m in monomials:
            coeffs[m] ^= 1
        return cls(k, coeffs)

    @property
    def monomials(self) -> list[int]:
        return np.flatnonzero(self.coeffs).tolist()

    @property
    def nnz(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def __repr__(self) -> str:
        return f"AnfPoly(k={self.k}, {format_terms(self.k, [(m, 1) for m in self.monomials])})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AnfPoly):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.k, self.coeffs.tobytes()))


# ---------------------------------------------------------------------------
# Sparse integer polynomials in the square-free quotient ring
# ---------------------------------------------------------------------------


class NnfPoly:
    """Integer square-free multilinear polynomial over ``k`` variables.

    Stored sparsely as sorted monomial ``indices`` with nonzero ``values``.
    The dense coefficient vector is built on first access of :attr:`coeffs`.
    """

    __slots__ = ("k", "indices", "values", "_dense")

    def __init__(self, k: int, indices: np.ndarray, values: np.ndarray, *, _canonical: bool = False):
        indices = np.asarray(indices, dtype=np.int64).reshape(-1)
        values = np.asarray(values, dtype=np.int64).reshape(-1)
        if not _canonical:
            if indices.size and (indices.min() < 0 or indices.max() >= 1 << k):
                raise ValueError(f"monomial index out of range for k={k}")
            indices, values = _group_sum(indices, values, None, "polynomial construction")
        indices.setflags(write=False)
        values.setflags(write=False)
        self.k = k
        self.indices = indices
        self.values = values
        self._dense: np.ndarray | None = None

    @classmethod
    def zero(cls, k: int) -> NnfPoly:
        return cls(k, np.empty(0, np.int64), np.empty(0, np.int64), _canonical=True)

    @classmethod
    def constant(cls, k: int, value: int) -> NnfPoly:
        return cls(k, [0], [value])

    @classmethod
    def monomial(cls, k: int, index: int, coeff: int = 1) -> NnfPoly:
        return cls(k, [index], [coeff])

    @classmethod
    def from_terms(cls, k: int, terms: Iterable[tuple[int, int]]) -> NnfPoly:
        """Build from ``(index, coeff)`` pairs; repeated indices are summed."""
        terms = list(terms)
        if not terms:
            return cls.zero(k)
        for _, c in terms:
            if not -INT64_MAX - 1 <= int(c) <= INT64_MAX:
                raise IntegerOverflow("coefficient does not fit in 64 bits", phase="polynomial construction")
        idx, val = zip(*terms)
        return cls(k, np.array(idx, dtype=np.int64), np.array(val, dtype=np.int64))

    @classmethod
    def from_dense(cls, k: int, coeffs: np.ndarray) -> NnfPoly:
        coeffs = np.asarray(coeffs, dtype=np.int64).reshape(-1)
        if coeffs.size != 1 << k:
            raise ValueError(f"dense coefficients over k={k} need {1 << k} entries, got {coeffs.size}")
        idx = np.flatnonzero(coeffs).astype(np.int64)
        poly = cls(k, idx, coeffs[idx], _canonical=True)
        dense = coeffs.copy()
        dense.setflags(write=False)
        poly._dense = dense
        return poly

    @property
    def coeffs(self) -> np.ndarray:
        """Dense, read-only coefficient vector of length ``2**k``."""
        if self._dense is None:
            dense = np.zeros(1 << self.k, dtype=np.int64)
            dense[self.indices] = self.values
            dense.setflags(write=False)
            self._dense = dense
        return self._dense

    @property
    def terms(self) -> list[tuple[int, int]]:
        return list(zip(self.indices.tolist(), self.values.tolist()))

    @property
    def nnz(self) -> int:
        return int(self.indices.size)

    def coefficient(self, index: int) -> int:
        pos = int(np.searchsorted(self.indices, index))
        if pos < self.indices.size and self.indices[pos] == index:
            return int(self.values[pos])
        return 0

    def evaluate(self, point: int) -> int:
        """Value at hypercube point ``point``: sum of coefficients of ``a <= point``."""
        below = (self.indices & ~np.int64(point)) == 0
        return int(sum(self.values[below].tolist()))

    def to_dict(self) -> dict:
        return {"k": self.k, "terms": [[i, c] for i, c in self.terms]}

    @classmethod
    def from_dict(cls, data: dict) -> NnfPoly:
        return cls.from_terms(int(data["k"]), [(int(i), int(c)) for i, c in data["terms"]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NnfPoly):
            return NotImplemented
        return (
            self.k == other.k
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash((self.k, self.indices.tobytes(), self.values.tobytes()))

    def __repr__(self) -> str:
        return f"NnfPoly(k={self.k}, {format_terms(self.k, self.terms)})"

    def __add__(self, other: NnfPoly) -> NnfPoly:
        return poly_add(self, other)

    def __sub__(self, other: NnfPoly) -> NnfPoly:
        return poly_add(self, other.scale(-1))

    def __mul__(self, other: NnfPoly) -> NnfPoly:
        return poly_mul_squarefree(self, other)

    def __neg__(self) -> NnfPoly:
        return self.scale(-1)

    def scale(self, factor: int) -> NnfPoly:
        if factor == 0 or not self.nnz:
            return NnfPoly.zero(self.k)
        bound = max(int(self.values.max()), -int(self.values.min()))
        if bound * abs(factor) > INT64_MAX:
            raise IntegerOverflow(phase="scalar multiplication")
        return NnfPoly(self.k, self.indices.copy(), self.values * np.int64(factor), _canonical=True)


def format_terms(k: int, terms: Sequence[tuple[int, int]]) -> str:
    """Human-readable form such as ``2 + 3*x1 - 2*x1*x2``."""
    if not terms:
        return "0"
    out = []
    for idx, c in terms:
        names = [f"x{j + 1}" for j, e in enumerate(exponents_from_index(idx, k)) if e]
        mono = "*".join(names)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def _group_sum(indices: np.ndarray, values: np.ndarray, counter: OpCounter | None, phase: str, dense_size: int = 0):
    """Merge equal monomials, drop zero coefficients.

    Counts one integer addition per merge, i.e. ``len(indices) - distinct``.
    With ``dense_size`` set and at least that many terms, accumulates into a
    dense array of that length instead of sorting.
    """
    if indices.size == 0:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    dense_size = dense_size or indices.size + 1
    if indices.size >= dense_size:
        return _group_sum_dense(indices, values, dense_size, counter, phase)
    order = np.argsort(indices, kind="stable")
    idx = indices[order]
    val = values[order]
    starts = np.flatnonzero(np.concatenate(([True], idx[1:] != idx[:-1])))
    uniq = idx[starts]
    if starts.size == idx.size:
        sums = val
    else:
        bound = max(int(val.max()), -int(val.min()))
        if bound * int(np.diff(np.append(starts, idx.size)).max()) <= INT64_MAX:
            sums = np.add.reduceat(val, starts)
        else:
            exact = np.add.reduceat(val.astype(object), starts)
            if any(not -INT64_MAX - 1 <= int(s) <= INT64_MAX for s in exact):
                raise IntegerOverflow(phase=phase)
            sums = exact.astype(np.int64)
    if counter is not None:
        counter.int_adds += int(idx.size - uniq.size)
    keep = sums != 0
    return np.ascontiguousarray(uniq[keep]), np.ascontiguousarray(sums[keep])


def _group_sum_dense(indices, values, size, counter, phase):
    mult = np.bincount(indices, minlength=size)
    bound = max(int(values.max()), -int(values.min()))
    if bound * int(mult.max()) <= INT64_MAX:
        sums = np.zeros(size, dtype=np.int64)
        np.add.at(sums, indices, values)
    else:
        exact = np.zeros(size, dtype=object)
        np.add.at(exact, indices, values.astype(object))
        if any(not -INT64_MAX - 1 <= int(v) <= INT64_MAX for v in exact):
            raise IntegerOverflow(phase=phase)
        sums = exact.astype(np.int64)
    if counter is not None:
        counter.int_adds += int(indices.size - np.count_nonzero(mult))
    uniq = np.flatnonzero(sums).astype(np.int64)
    return uniq, sums[uniq]


def _same_k(p: NnfPoly, q: NnfPoly) -> None:
    if p.k != q.k:
        raise ValueError(f"polynomials over different variable counts: {p.k} vs {q.k}")


def poly_add(p: NnfPoly, q: NnfPoly, counter: OpCounter | None = None) -> NnfPoly:
    """Coefficient-wise sum; one counted addition per monomial present in both."""
    _same_k(p, q)
    return poly_sum([p, q], counter)


def poly_sum(polys: Sequence[NnfPoly], counter: OpCounter | None = None, phase: str = "polynomial sum") -> NnfPoly:
    """Sum of many polynomials at once.

    Disjoint supports are concatenated without any counted addition.
    """
    if not polys:
        raise ValueError("poly_sum needs at least one polynomial")
    k = polys[0].k
    for p in polys[1:]:
        _same_k(polys[0], p)
    idx = np.concatenate([p.indices for p in polys])
    val = np.concatenate([p.values for p in polys])
    idx, val = _group_sum(idx, val, counter, phase, dense_size=1 << k)
    return NnfPoly(k, idx, val, _canonical=True)


def poly_mul_squarefree(p: NnfPoly, q: NnfPoly, counter: OpCounter | None = None) -> NnfPoly:
    """Product in Z[X]/<x_i^2 - x_i>: monomial product is bitwise OR of indices."""
    _same_k(p, q)
    if not p.nnz or not q.nnz:
        return NnfPoly.zero(p.k)
    if p.nnz < q.nnz:
        p, q = q, p
    pb = max(int(p.values.max()), -int(p.values.min()))
    qb = max(int(q.values.max()), -int(q.values.min()))
    exact_path = pb * qb > INT64_MAX
    if counter is not None:
        counter.int_muls += p.nnz * q.nnz

    rows = max(1, _MUL_CHUNK // q.nnz)
    parts_idx, parts_val = [], []
    for start in range(0, p.nnz, rows):
        pi = p.indices[start:start + rows, None]
        pv = p.values[start:start + rows, None]
        idx = (pi | q.indices[None, :]).reshape(-1)
        if exact_path:
            prod = (pv.astype(object) * q.values[None, :].astype(object)).reshape(-1)
            if any(not -INT64_MAX - 1 <= int(v) <= INT64_MAX for v in prod):
                raise IntegerOverflow(phase="square-free product")
            val = prod.astype(np.int64)
        else:
            val = (pv * q.values[None, :]).reshape(-1)
        idx, val = _group_sum(idx, val, counter, "square-free product", dense_size=1 << p.k)
        parts_idx.append(idx)
        parts_val.append(val)
    if len(parts_idx) == 1:
        idx, val = parts_idx[0], parts_val[0]
    else:
        idx, val = _group_sum(
            np.concatenate(parts_idx), np.concatenate(parts_val), counter, "square-free product", dense_size=1 << p.k
        )
    return NnfPoly(p.k, idx, val, _canonical=True)


def embed_variables(p: NnfPoly, total_k: int, offset: int) -> NnfPoly:
    """Rename ``x_i`` to ``x_{offset+i}`` inside a ``total_k``-variable space."""
    if offset < 0 or offset + p.k > total_k:
        raise ValueError(f"cannot place {p.k} variables at offset {offset} among {total_k}")
    shift = total_k - offset - p.k
    return NnfPoly(total_k, p.indices << np.int64(shift), p.values.copy(), _canonical=True)


def shift_variables(p: NnfPoly) -> NnfPoly:
    """``p(X~)`` in the ``2k``-variable space ``(x_1..x_k, x~_1..x~_k)``."""
    return embed_variables(p, 2 * p.k, p.k)


# ---------------------------------------------------------------------------
# Butterflies
# ---------------------------------------------------------------------------


def _butterfly(arr: np.ndarray, kind: str, counter: OpCounter | None, phase: str) -> np.ndarray:
    """In-place subset butterfly over the last axis of a C-contiguous array.

    ``kind`` selects the update ``hi <- hi (op) lo``: ``xor``, ``add`` or
    ``sub``.  Every stage touches each of the ``2**(k-1)`` pairs exactly once.
    """
    size = arr.shape[-1]
    k = _log2_exact(size)
    batch = arr.size // size if size else 0
    view = arr.reshape(batch, size)
    for b in range(k):
        half = 1 << b
        blocks = view.reshape(batch, size >> (b + 1), 2, half)
        lo = blocks[:, :, 0, :]
        hi = blocks[:, :, 1, :]
        if kind == "xor":
            hi ^= lo
            continue
        if kind == "add":
            res = hi + lo
            bad = ((hi ^ res) & (lo ^ res)) < 0
        else:
            res = hi - lo
            bad = ((hi ^ lo) & (hi ^ res)) < 0
        if bad.any():
            raise IntegerOverflow(phase=phase)
        hi[...] = res
    if counter is not None:
        ops = batch * k * (size >> 1)
        if kind == "xor":
            counter.xors += ops
        else:
            counter.int_adds += ops
    return arr


def anf_transform(bits: np.ndarray, counter: OpCounter | None = None) -> np.ndarray:
    """Binary Moebius transform of each row; self-inverse."""
    out = np.array(bits, dtype=np.uint8, order="C", copy=True)
    return _butterfly(out, "xor", counter, "ANF transform")


def nnf_transform(bits: np.ndarray, counter: OpCounter | None = None) -> np.ndarray:
    """Integer Moebius transform of each row: values -> NNF coefficients."""
    out = np.array(bits, dtype=np.int64, order="C", copy=True)
    return _butterfly(out, "sub", counter, "NNF extraction")


def zeta_transform(coeffs: np.ndarray, counter: OpCounter | None = None) -> np.ndarray:
    """Integer zeta transform of each row: NNF coefficients -> hypercube values."""
    out = np.array(coeffs, dtype=np.int64, order="C", copy=True)
    return _butterfly(out, "add", counter, "hypercube evaluation")


def anf_from_truth(t: TruthTable, counter: OpCounter | None = None) -> AnfPoly:
    return AnfPoly(t.k, anf_transform(t.bits, counter))


def truth_from_anf(a: AnfPoly, counter: OpCounter | None = None) -> TruthTable:
    return TruthTable(a.k, anf_transform(a.coeffs, counter))


def nnf_from_truth(t: TruthTable, counter: OpCounter | None = None) -> NnfPoly:
    return NnfPoly.from_dense(t.k, nnf_transform(t.bits, counter))


def eval_nnf_hypercube(p: NnfPoly, counter: OpCounter | None = None) -> np.ndarray:
    """Values of ``p`` at all ``2**k`` points in index order."""
    return zeta_transform(p.coeffs, counter)


def nnf_coefficient_direct(t: TruthTable, u: int) -> int:
    """Coefficient of ``X^u`` from the signed sum over all points below ``u``.

    Quadratic-time reference used to check the butterfly.
    """
    wu = u.bit_count()
    total = 0
    a = u
    while True:
        if t.bits[a]:
            total += -1 if (wu - a.bit_count()) & 1 else 1
        if a == 0:
            break
        a = (a - 1) & u
    return total


def nnf_from_anf(a: AnfPoly, counter: OpCounter | None = None) -> NnfPoly:
    """Fold the ANF monomials with ``x XOR y = x + y - 2xy``.

    Works on the sparse support only, so the cost follows the size of the
    result rather than ``2**k``.  Counts one multiplication per term of the
    running sum multiplied by the next monomial and one addition per merge of
    equal monomials.
    """
    acc: dict[int, int] = {}
    for m in a.monomials:
        cross = {}
        for idx, c in acc.items():
            j = idx | m
            if j in cross:
                cross[j] += -2 * c
                if counter is not None:
                    counter.int_adds += 1
            else:
                cross[j] = -2 * c
        if counter is not None:
            counter.int_muls += len(acc)
        nxt = dict(acc)
        for idx, c in [(m, 1), *cross.items()]:
            if idx in nxt:
                nxt[idx] += c
                if counter is not None:
                    counter.int_adds += 1
            else:
                nxt[idx] = c
        acc = {i: c for i, c in nxt.items() if c}
    if any(not -INT64_MAX - 1 <= c <= INT64_MAX for c in acc.values()):
        raise IntegerOverflow(phase="ANF to NNF")
    return NnfPoly.from_terms(a.k, acc.items())


def anf_from_nnf(p: NnfPoly) -> AnfPoly:
    return AnfPoly(p.k, np.mod(p.coeffs, 2).astype(np.uint8))


def nnf_of_linear(variables: Iterable[int], k: int) -> NnfPoly:
    """Closed-form NNF of ``x_{i1} XOR ... XOR x_{ir}`` (variables 1-based).

    Every nonempty product of ``w`` of the variables appears with coefficient
    ``(-1)**(w-1) * 2**(w-1)``.
    """
    variables = list(variables)
    if not variables:
        raise InvalidVariableSet("need at least one variable")
    if len(set(variables)) != len(variables):
        raise InvalidVariableSet(f"repeated variable in {variables}")
    masks = [variable_bit(i, k) for i in variables]
    r = len(masks)
    idx = np.zeros(1 << r, dtype=np.int64)
    for j, m in enumerate(masks):
        step = 1 << j
        idx[step:2 * step] = idx[:step] | m
    weights = np.array([s.bit_count() for s in range(1 << r)], dtype=np.int64)[1:]
    vals = np.where(weights % 2 == 1, 1, -1) * (np.int64(1) << (weights - 1))
    return NnfPoly(k, idx[1:], vals)
