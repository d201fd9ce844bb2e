"""Operation-count verification, NNF sparsity census and growth benchmarks."""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .boolfn import AnfPoly, NnfPoly, OpCounter, anf_transform, eval_nnf_hypercube, nnf_from_anf, nnf_transform
from .codes import BinaryCode, DefiningPolynomials, GeneratorMatrix, code_from_generator
from .codes import defining_polynomials, linear_defining_polynomials
from .errors import KTooLarge
from .oracle import weight_distribution_bf
from .weight import weight_evaluations, weight_polynomial

CENSUS_MAX_K = 4
MODES = ("bf-linear", "nnf-linear", "nnf-sparse", "nnf-dense")


@dataclass(frozen=True)
class CensusRow:
    k: int
    representation: str  # "ANF" or "NNF"
    counts: tuple[int, ...]  # counts[s]: functions with exactly s nonzero coefficients


def nnf_census(k: int) -> tuple[CensusRow, CensusRow]:
    """Nonzero-coefficient histograms of every Boolean function in ``k`` variables."""
    if k > CENSUS_MAX_K:
        raise KTooLarge(f"census enumerates 2^(2^k) functions; k <= {CENSUS_MAX_K} supported")
    if k < 1:
        raise ValueError("census needs k >= 1")
    size = 1 << k
    tables = (np.arange(1 << size, dtype=np.int64)[:, None] >> np.arange(size)[None, :]) & 1
    rows = []
    for tag, coeffs in (("ANF", anf_transform(tables)), ("NNF", nnf_transform(tables))):
        nnz = np.count_nonzero(coeffs, axis=1)
        hist = np.bincount(nnz, minlength=size + 1)
        rows.append(CensusRow(k, tag, tuple(int(x) for x in hist)))
    return rows[0], rows[1]


def format_census(rows: Sequence[CensusRow]) -> str:
    width = max(len(r.counts) for r in rows)
    cells = [["k"] + [str(s) for s in range(width)]]
    for r in rows:
        cells.append([f"{r.representation[0]}: {r.k}"] + [str(c) for c in r.counts] + ["-"] * (width - len(r.counts)))
    widths = [max(len(row[i]) for row in cells) for i in range(width + 1)]
    lines = [" ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines)


@dataclass(frozen=True)
class Phase:
    name: str
    measured: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.measured <= self.bound


@dataclass(frozen=True)
class ComplexityReport:
    """Integer operations of each weight-distribution phase against its bound.

    ``n_over_h`` is the total number of nonzero NNF coefficients divided by
    ``2**k``, so that the sum phase is bounded by ``n_over_h * 2**k``.
    """

    n: int
    k: int
    phases: tuple[Phase, ...]
    nnz_total: int
    n_over_h: float
    combined_measured: int  # sum + evaluation
    combined_bound: float
    min_weight: int

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.phases) and self.combined_measured <= self.combined_bound

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def complexity_report(c: BinaryCode) -> ComplexityReport:
    """Instrumented weight distribution of a codeword list, NNF extraction included."""
    nnf_ops = OpCounter()
    d = defining_polynomials(c, nnf_ops)
    return polynomial_complexity_report(d, nnf_phase=(nnf_ops.int_adds, c.n * c.k * (1 << c.k) // 2))


def polynomial_complexity_report(d: DefiningPolynomials, nnf_phase: tuple[int, int] | None = None) -> ComplexityReport:
    """Same as :func:`complexity_report` for a code already given in NNF."""
    k, n = d.k, d.n
    half = k * (1 << k) // 2
    nnz_total = sum(p.nnz for p in d.polys)

    sum_ops = OpCounter()
    wp = weight_polynomial(d, sum_ops)
    eval_ops = OpCounter()
    weights = eval_nnf_hypercube(wp, eval_ops)

    phases = []
    if nnf_phase is not None:
        phases.append(Phase("nnf", *nnf_phase))
    phases.append(Phase("sum", sum_ops.int_adds, nnz_total))
    phases.append(Phase("evaluation", eval_ops.int_adds, half))
    n_over_h = nnz_total / (1 << k)
    return ComplexityReport(
        n=n,
        k=k,
        phases=tuple(phases),
        nnz_total=nnz_total,
        n_over_h=n_over_h,
        combined_measured=sum_ops.int_adds + eval_ops.int_adds,
        combined_bound=n_over_h * (1 << k) + half,
        min_weight=int(weights.min()),
    )


# ---------------------------------------------------------------------------
# Growth benchmark
# ---------------------------------------------------------------------------


def random_generator(k: int, n: int, rng: np.random.Generator) -> GeneratorMatrix:
    return GeneratorMatrix(rng.integers(0, 2, (k, n), dtype=np.uint8))


def random_sparse_anf(k: int, rng: np.random.Generator, terms: int | None = None) -> AnfPoly:
    """ANF with exactly ``terms`` distinct monomials (default ``ceil(k/2)``)."""
    terms = math.ceil(k / 2) if terms is None else terms
    monomials = rng.choice(1 << k, size=terms, replace=False)
    return AnfPoly.from_monomials(k, monomials.tolist())


def prepare_trial(mode: str, k: int, n: int, rng: np.random.Generator):
    """Input representation for one trial; its construction is not measured."""
    if mode == "bf-linear":
        return code_from_generator(random_generator(k, n, rng))
    if mode == "nnf-linear":
        return linear_defining_polynomials(random_generator(k, n, rng))
    if mode == "nnf-sparse":
        return DefiningPolynomials(k, tuple(nnf_from_anf(random_sparse_anf(k, rng)) for _ in range(n)))
    if mode == "nnf-dense":
        tables = anf_transform(rng.integers(0, 2, (n, 1 << k), dtype=np.uint8))
        coeffs = nnf_transform(tables)
        return DefiningPolynomials(k, tuple(NnfPoly.from_dense(k, row) for row in coeffs))
    raise ValueError(f"unknown benchmark mode {mode!r}; expected one of {MODES}")


def _min_weight_ops(mode: str, rep) -> tuple[int, int, float]:
    counter = OpCounter()
    t0 = time.perf_counter()
    if mode == "bf-linear":
        w = weight_distribution_bf(rep, counter).min_weight
        ops = counter.bit_ops
    else:
        w = int(weight_evaluations(rep, counter).min())
        ops = counter.int_adds
    return ops, w, time.perf_counter() - t0


@dataclass(frozen=True)
class GrowthRow:
    k: int
    ops_small: float  # mean over trials, (2^k, 2^k) codes
    ops_large: float  # mean over trials, (2^(k+1), 2^(k+1)) codes
    time_small: float
    time_large: float

    @property
    def exponent(self) -> float:
        return math.log2(self.ops_large / self.ops_small)

    @property
    def time_exponent(self) -> float:
        return math.log2(self.time_large / self.time_small)


@dataclass(frozen=True)
class GrowthReport:
    mode: str
    seed: int
    trials: int
    rows: tuple[GrowthRow, ...] = field(default_factory=tuple)

    @property
    def exponents(self) -> list[float]:
        return [r.exponent for r in self.rows]

    @property
    def mean_exponent(self) -> float:
        return float(np.mean(self.exponents))

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "rows": [
                {**asdict(r), "exponent": r.exponent, "time_exponent": r.time_exponent} for r in self.rows
            ],
            "mean_exponent": self.mean_exponent,
        }


def growth_benchmark(mode: str, k_range: Sequence[int], trials: int = 10, seed: int = 0) -> GrowthReport:
    """Growth of the minimum-weight cost from ``(2^k, 2^k)`` to ``(2^(k+1), 2^(k+1))`` codes.

    The cost is counted in logical operations (bit checks for brute force,
    integer additions for the polynomial pipelines); wall-clock time is kept
    alongside for information.
    """
    if mode not in MODES:
        raise ValueError(f"unknown benchmark mode {mode!r}; expected one of {MODES}")
    rng = np.random.default_rng(seed)
    rows = []
    for k in k_range:
        stats = {}
        for kk in (k, k + 1):
            ops, secs = [], []
            for _ in range(trials):
                rep = prepare_trial(mode, kk, 1 << kk, rng)
                o, _, t = _min_weight_ops(mode, rep)
                ops.append(o)
                secs.append(t)
            stats[kk] = (float(np.mean(ops)), float(np.mean(secs)))
        rows.append(GrowthRow(k, stats[k][0], stats[k + 1][0], stats[k][1], stats[k + 1][1]))
    return GrowthReport(mode, seed, trials, tuple(rows))


def format_growth(reports: Sequence[GrowthReport]) -> str:
    ks = [r.k for r in reports[0].rows]
    header = ["k"] + [f"{k}-{k + 1}" for k in ks]
    cells = [header]
    for rep in reports:
        cells.append([rep.mode] + [f"{e:.2f}" for e in rep.exponents])
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = [" ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(row, widths))) for row in cells]
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines)
