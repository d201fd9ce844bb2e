"""Binary codes as codeword lists and as defining polynomials."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .boolfn import NnfPoly, OpCounter, nnf_of_linear, nnf_transform, zeta_transform
from .errors import EmptyInput, NotBoolean, NotPowerOfTwo, ParseError, RaggedInput


def is_power_of_two(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


@dataclass(frozen=True, eq=False)
class BinaryCode:
    """Ordered list of ``M`` codewords of length ``n``.

    ``words`` is a read-only ``(M, n)`` uint8 array.  Row ``p`` is the image of
    message/point ``p``; duplicates are allowed.
    """

    words: np.ndarray

    def __post_init__(self):
        self.words.setflags(write=False)

    @property
    def n(self) -> int:
        return int(self.words.shape[1])

    @property
    def M(self) -> int:
        return int(self.words.shape[0])

    @property
    def k(self) -> int:
        """``log2(M)``; only defined for power-of-2 cardinalities."""
        if not is_power_of_two(self.M):
            raise NotPowerOfTwo(f"code has M={self.M} words, not a power of 2")
        return self.M.bit_length() - 1

    def word(self, i: int) -> str:
        return "".join("1" if b else "0" for b in self.words[i])

    def as_strings(self) -> list[str]:
        return [self.word(i) for i in range(self.M)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.words.shape == other.words.shape and np.array_equal(self.words, other.words)

    def __repr__(self) -> str:
        return f"BinaryCode(n={self.n}, M={self.M})"


@dataclass(frozen=True)
class DefiningPolynomials:
    """The ``n`` coordinate functions of a ``(n, 2**k)`` code, in NNF."""

    k: int
    polys: tuple[NnfPoly, ...]

    @property
    def n(self) -> int:
        return len(self.polys)


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    rows: np.ndarray  # (k, n) uint8

    @classmethod
    def from_rows(cls, rows: Sequence[str] | Sequence[Sequence[int]]) -> GeneratorMatrix:
        arr = _bit_matrix(rows)
        arr.setflags(write=False)
        return cls(arr)

    @property
    def k(self) -> int:
        return int(self.rows.shape[0])

    @property
    def n(self) -> int:
        return int(self.rows.shape[1])


@dataclass(frozen=True)
class Subcode:
    code: BinaryCode
    indices: tuple[int, ...]  # original position of each word of ``code``


@dataclass(frozen=True)
class SubcodePartition:
    blocks: tuple[Subcode, ...]

    @property
    def sizes(self) -> list[int]:
        return [b.code.M for b in self.blocks]


def _bit_matrix(words: Iterable) -> np.ndarray:
    rows = []
    for w in words:
        if isinstance(w, str):
            if set(w) - {"0", "1"}:
                raise ValueError(f"codeword {w!r} is not a 0/1 string")
            rows.append([1 if ch == "1" else 0 for ch in w])
        else:
            row = [int(b) for b in w]
            if any(b not in (0, 1) for b in row):
                raise ValueError(f"codeword {row!r} has entries outside 0/1")
            rows.append(row)
    if not rows:
        raise EmptyInput("no codewords given")
    lengths = {len(r) for r in rows}
    if len(lengths) != 1:
        raise RaggedInput(f"codewords have differing lengths {sorted(lengths)}")
    return np.array(rows, dtype=np.uint8).reshape(len(rows), lengths.pop())


def load_code(words: Iterable) -> BinaryCode:
    """Build a code from 0/1 strings or 0/1 sequences, keeping their order."""
    if isinstance(words, np.ndarray):
        arr = np.array(words, dtype=np.uint8)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise EmptyInput("expected a nonempty (M, n) array")
        if arr.size and arr.max() > 1:
            raise ValueError("codeword entries must be 0 or 1")
        return BinaryCode(arr)
    return BinaryCode(_bit_matrix(words))


def message_bits(k: int) -> np.ndarray:
    """``(2**k, k)`` matrix whose row ``p`` is the exponent vector of point ``p``."""
    points = np.arange(1 << k, dtype=np.int64)[:, None]
    shifts = np.arange(k - 1, -1, -1, dtype=np.int64)[None, :]
    return ((points >> shifts) & 1).astype(np.uint8)


def defining_polynomials(c: BinaryCode, counter: OpCounter | None = None) -> DefiningPolynomials:
    """NNF of every column of the codeword matrix.

    Costs exactly ``n * k * 2**(k-1)`` integer subtractions.
    """
    k = c.k
    coeffs = nnf_transform(np.ascontiguousarray(c.words.T), counter)
    return DefiningPolynomials(k, tuple(NnfPoly.from_dense(k, row) for row in coeffs))


def code_from_polynomials(d: DefiningPolynomials, counter: OpCounter | None = None) -> BinaryCode:
    if d.n == 0:
        raise EmptyInput("no defining polynomials")
    values = zeta_transform(np.stack([p.coeffs for p in d.polys]), counter)
    bad = (values != 0) & (values != 1)
    if bad.any():
        j, p = np.argwhere(bad)[0]
        raise NotBoolean(f"polynomial {j + 1} evaluates to {values[j, p]} at point {p}")
    return BinaryCode(np.ascontiguousarray(values.T.astype(np.uint8)))


def code_from_generator(g: GeneratorMatrix) -> BinaryCode:
    """All ``2**k`` encodings ``m G`` with messages enumerated by point index."""
    msgs = message_bits(g.k).astype(np.int64)
    words = (msgs @ g.rows.astype(np.int64)) & 1
    return BinaryCode(words.astype(np.uint8))


def linear_defining_polynomials(g: GeneratorMatrix) -> DefiningPolynomials:
    """Defining NNFs of the linear code spanned by ``g``, built in closed form."""
    polys = []
    for j in range(g.n):
        support = [i + 1 for i in np.flatnonzero(g.rows[:, j]).tolist()]
        polys.append(nnf_of_linear(support, g.k) if support else NnfPoly.zero(g.k))
    return DefiningPolynomials(g.k, tuple(polys))


def pad_to_power_of_two(c: BinaryCode) -> BinaryCode:
    """Append copies of the first word up to the next power of 2.

    Minimum weight survives padding; distributions do not.
    """
    target = 1 << (c.M - 1).bit_length()
    if target == c.M:
        return c
    extra = np.repeat(c.words[:1], target - c.M, axis=0)
    return BinaryCode(np.concatenate([c.words, extra]))


def partition_power_subcodes(c: BinaryCode) -> SubcodePartition:
    """Consecutive blocks sized by the binary expansion of ``M``, largest first."""
    blocks = []
    start = 0
    for bit in range(c.M.bit_length() - 1, -1, -1):
        size = 1 << bit
        if c.M & size:
            words = np.array(c.words[start:start + size])
            blocks.append(Subcode(BinaryCode(words), tuple(range(start, start + size))))
            start += size
    return SubcodePartition(tuple(blocks))


_HEADER_RE = re.compile(r"^#\s*n\s*=\s*(\d+)\s+M\s*=\s*(\d+)\s*$")


def parse_code_text(text: str) -> BinaryCode:
    """Parse the plain-text code or generator-matrix format.

    A code file holds one 0/1 codeword per line with an optional
    ``# n=<n> M=<M>`` header.  A generator file starts with ``# generator``
    followed by ``k`` rows.  Blank lines are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("input contains no codewords")
    generator = False
    expected = None
    if lines[0].startswith("#"):
        head = lines.pop(0)
        if head[1:].strip().lower() == "generator":
            generator = True
        else:
            m = _HEADER_RE.match(head)
            if not m:
                raise ParseError(f"unrecognized header line {head!r}")
            expected = int(m.group(1)), int(m.group(2))
    for lineno, ln in enumerate(lines, start=1):
        if set(ln) - {"0", "1"}:
            raise ParseError(f"line {lineno}: {ln!r} is not a 0/1 string")
    try:
        if generator:
            return code_from_generator(GeneratorMatrix.from_rows(lines))
        code = load_code(lines)
    except (RaggedInput, EmptyInput) as exc:
        raise ParseError(str(exc)) from exc
    if expected is not None and expected != (code.n, code.M):
        raise ParseError(f"header says n={expected[0]} M={expected[1]}, file has n={code.n} M={code.M}")
    return code


def read_code_file(path: str | Path) -> BinaryCode:
    return parse_code_text(Path(path).read_text())


def format_code_text(c: BinaryCode) -> str:
    return "\n".join([f"# n={c.n} M={c.M}", *c.as_strings()]) + "\n"
