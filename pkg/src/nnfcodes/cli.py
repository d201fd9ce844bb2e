"""Command-line front end.

Exit codes: 0 success, 2 I/O error, 3 parse error, 4 integer overflow,
5 size limit or unmet precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .codes import BinaryCode, defining_polynomials, is_power_of_two, read_code_file
from .distance import distance_distribution, distance_limit
from .errors import EmptyAfterExclusion, IntegerOverflow, KTooLarge, NotPowerOfTwo, ParseError, TooFewWords
from .boolfn import format_terms
from .metrics import MODES, format_census, format_growth, growth_benchmark, nnf_census
from .oracle import distance_distribution_bf, min_weight_bf, weight_distribution_bf
from .weight import min_weight, weight_distribution

EXIT_IO, EXIT_PARSE, EXIT_OVERFLOW, EXIT_LIMIT = 2, 3, 4, 5


def _load(path: str) -> BinaryCode:
    try:
        return read_code_file(path)
    except OSError as exc:
        raise _CliIOError(str(exc)) from exc


class _CliIOError(Exception):
    pass


def cmd_weight(args) -> tuple[dict, str]:
    code = _load(args.input)
    if args.oracle:
        dist = weight_distribution_bf(code)
    else:
        dist = weight_distribution(code)
    result = dist.to_dict()
    if args.exclude_zero:
        if args.oracle:
            w, idx = min_weight_bf(code, exclude_zero=True)
        else:
            w, idx, _ = min_weight(code, exclude_zero=True)
        result.update(min_weight=w, witness_index=idx, witness=code.word(idx), exclude_zero=True)
    lines = [f"n={code.n} M={code.M} method={result['method']}"]
    if "partitioned" in result:
        lines.append(f"partitioned: {result['partitioned']}")
    lines += [f"  weight {w:>4}: {c}" for w, c in result["distribution"].items()]
    label = "min nonzero weight" if args.exclude_zero else "min weight"
    lines.append(f"{label}: {result['min_weight']} (word {result['witness_index']}: {result['witness']})")
    return result, "\n".join(lines)


def cmd_distance(args) -> tuple[dict, str]:
    code = _load(args.input)
    if code.M >= 2 and is_power_of_two(code.M) and not args.oracle:
        limit = distance_limit(args.max_k)
        if code.k > limit:
            raise KTooLarge(f"distance mode supports k <= {limit}, code has k={code.k}")
    if args.oracle:
        dist = distance_distribution_bf(code, ordered=args.ordered_pairs)
    else:
        dist = distance_distribution(code, ordered=args.ordered_pairs, max_k=args.max_k)
    result = dist.to_dict()
    if dist.duplicate_pairs:
        print(f"warning: {dist.duplicate_pairs} pair(s) of identical codewords", file=sys.stderr)
    lines = [f"n={code.n} M={code.M} pairs={dist.pairs_total} method={dist.method}"]
    if "partitioned" in result:
        lines.append(f"partitioned: {result['partitioned']}")
    lines += [f"  distance {d:>4}: {c}" for d, c in result["distribution"].items()]
    if "ordered_distribution" in result:
        lines.append("ordered (incl. diagonal):")
        lines += [f"  distance {d:>4}: {c}" for d, c in result["ordered_distribution"].items()]
    i, j = dist.witness_indices
    lines.append(f"min distance: {dist.min_distance} (words {i}, {j}: {dist.witness[0]} {dist.witness[1]})")
    return result, "\n".join(lines)


def cmd_nnf(args) -> tuple[dict, str]:
    code = _load(args.input)
    defs = defining_polynomials(code)
    nnz = [p.nnz for p in defs.polys]
    result = {
        "n": defs.n,
        "k": defs.k,
        "polynomials": [p.to_dict() for p in defs.polys],
        "nonzero_counts": nnz,
        "nonzero_total": sum(nnz),
        "nonzero_mean": sum(nnz) / len(nnz),
    }
    lines = [f"f{j + 1} [{p.nnz}] = {format_terms(p.k, p.terms)}" for j, p in enumerate(defs.polys)]
    lines.append(f"nonzero coefficients: total {sum(nnz)}, mean {result['nonzero_mean']:.2f}")
    return result, "\n".join(lines)


def cmd_census(args) -> tuple[dict, str]:
    rows = []
    for k in args.k:
        rows.extend(nnf_census(k))
    result = {"rows": [{"k": r.k, "representation": r.representation, "counts": list(r.counts)} for r in rows]}
    return result, format_census(rows)


def cmd_bench(args) -> tuple[dict, str]:
    modes = MODES if args.mode == "all" else (args.mode,)
    ks = range(args.k_min, args.k_max + 1)
    reports = [growth_benchmark(m, ks, trials=args.trials, seed=args.seed) for m in modes]
    result = {"metric": "ops", "reports": [r.to_dict() for r in reports]}
    return result, format_growth(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nnfcodes", description="Weight and distance distributions of binary codes via NNF polynomials."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weight", parents=[fmt], help="weight distribution and minimum weight")
    p.add_argument("input", help="code file or generator-matrix file")
    p.add_argument("--oracle", action="store_true", help="use brute force")
    p.add_argument("--exclude-zero", action="store_true", help="report the minimum nonzero weight")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("distance", parents=[fmt], help="distance distribution and minimum distance")
    p.add_argument("input")
    p.add_argument("--oracle", action="store_true", help="use brute force")
    p.add_argument("--ordered-pairs", action="store_true", help="also tally all ordered pairs incl. the diagonal")
    p.add_argument("--max-k", type=int, default=None, help="lower the distance-mode limit on k")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("nnf", parents=[fmt], help="dump the defining polynomials")
    p.add_argument("input")
    p.set_defaults(func=cmd_nnf)

    p = sub.add_parser("census", parents=[fmt], help="nonzero-coefficient census of ANF and NNF")
    p.add_argument("k", type=int, nargs="*", default=[1, 2, 3, 4])
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("bench", parents=[fmt], help="operation-count growth exponents")
    p.add_argument("mode", choices=(*MODES, "all"))
    p.add_argument("--k-min", type=int, default=8)
    p.add_argument("--k-max", type=int, default=11)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def _params(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("func", "command", "format")}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result, text = args.func(args)
    except _CliIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IntegerOverflow as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (KTooLarge, NotPowerOfTwo, TooFewWords, EmptyAfterExclusion) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    if args.format == "json":
        envelope = {"command": args.command, "params": _params(args), "result": result}
        print(json.dumps(envelope, indent=2))
    else:
        print(text)
    return 0
