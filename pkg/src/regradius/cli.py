"""Command-line front end.

Subcommands: radius, bounds, finiteness, bench, gen.  Results go to stdout
as JSON with a "schema": 1 field; an infinite radius is serialized as the
string "inf".  Exit codes: 0 success, 1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import api
from .bench import load_config, run_experiment, summarize
from .bounds import compute_bounds
from .core import DEFAULT_TOL, RadiusError, SingularInput
from .finiteness import is_radius_infinite
from .formats import (
    format_matrix,
    load_matrix,
    load_tridiagonal,
    parse_tridiagonal,
    save_matrix,
)
from .generators import FAMILIES, GeneratorSpec, generate
from .orthant import radius_orthant_search
from .tridiag import TridiagonalMatrix, TridiagonalRadius, tridiag_radius


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we want exit 1
        raise _UsageError(message)


def _jsonable(value):
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return value
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return _jsonable(float(value))
    return value


def _emit(payload) -> None:
    payload = {"schema": 1, **payload}
    print(json.dumps(_jsonable(payload), indent=1))


def _result_payload(result, extra=None):
    payload = {
        "value": result.value,
        "method": result.method,
        "tolerance": result.tolerance,
        "certificate": None,
    }
    if result.certificate is not None:
        payload["certificate"] = {
            "y": list(result.certificate.y),
            "z": list(result.certificate.z),
            "matrix": result.certificate.matrix,
        }
    if extra:
        payload.update(extra)
    return payload


def _load_delta(args, n):
    if getattr(args, "delta", None):
        D = load_matrix(args.delta)
        if D.shape[0] != n:
            raise _UsageError("matrix and delta dimensions differ")
        return D
    return None


def _try_tridiagonal(path):
    try:
        return load_tridiagonal(path)
    except ValueError:
        return None


def _cmd_radius(args) -> int:
    if args.method == api.TRIDIAG:
        parsed = _try_tridiagonal(args.matrix)
        if parsed is not None:
            T = TridiagonalMatrix(*parsed)
            if args.delta:
                dparsed = _try_tridiagonal(args.delta)
                if dparsed is None:
                    raise _UsageError("delta is not in the tridiagonal format")
                W = TridiagonalRadius(*dparsed)
            else:
                W = TridiagonalRadius.ones_like(T)
            result = tridiag_radius(T, W, eps=DEFAULT_TOL.eps_bisect)
            _emit(_result_payload(result))
            return 0

    A = load_matrix(args.matrix)
    Delta = _load_delta(args, A.shape[0])
    extra = {}
    if args.method == api.ORTHANT:
        n = A.shape[0]
        D = np.ones((n, n)) if Delta is None else Delta
        try:
            trace = radius_orthant_search(A, D)
        except SingularInput:
            _emit(_result_payload(api.regularity_radius(A, Delta, method=api.FULL)))
            return 0
        extra = {"visited_orthants": len(trace.visited), "lp_calls": trace.lp_calls}
        if args.trace:
            extra["trace"] = [
                {
                    "signs": list(v.signs),
                    "delta_e": v.delta_e,
                    "neighbor_deltas": {str(k): d for k, d in v.neighbor_deltas.items()},
                }
                for v in trace.visited
            ]
        _emit(_result_payload(trace.result, extra))
        return 0
    result = api.regularity_radius(A, Delta, method=args.method)
    _emit(_result_payload(result))
    return 0


def _cmd_bounds(args) -> int:
    A = load_matrix(args.matrix)
    Delta = _load_delta(args, A.shape[0])
    bounds = compute_bounds(A, Delta)
    _emit(
        {
            "lower": [[name, v] for name, v in bounds.lower],
            "upper": [[name, v] for name, v in bounds.upper],
            "best_lower": bounds.best_lower,
            "best_upper": bounds.best_upper,
        }
    )
    return 0


def _cmd_finiteness(args) -> int:
    A = load_matrix(args.matrix)
    Delta = load_matrix(args.delta)
    if Delta.shape[0] != A.shape[0]:
        raise _UsageError("matrix and delta dimensions differ")
    try:
        report = is_radius_infinite(A, Delta, exact=args.exact)
    except SingularInput:
        _emit({"infinite": False, "singular_input": True})
        return 0
    _emit(
        {
            "infinite": report.infinite,
            "final_index_set": list(report.final_index_set),
            "zeroed_positions": [list(p) for p in report.zeroed_positions],
            "iterations": report.iterations,
        }
    )
    return 0


def _cmd_bench(args) -> int:
    cfg = load_config(args.config)
    rows = run_experiment(cfg)
    summary = summarize(rows)
    _emit(
        {
            "rows": len(rows),
            "output": cfg.output,
            "summary": {
                f"{fam}/n={n}": stats for (fam, n), stats in summary.items()
            },
        }
    )
    return 0


def _cmd_gen(args) -> int:
    spec = GeneratorSpec(args.family, args.n, args.seed, args.negate_fraction)
    A, Delta = generate(spec)
    if args.out_matrix:
        save_matrix(args.out_matrix, A)
    if args.out_delta:
        save_matrix(args.out_delta, Delta)
    _emit(
        {
            "family": spec.family,
            "n": spec.n,
            "seed": spec.seed,
            "matrix": A,
            "delta": Delta,
        }
    )
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="regradius", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="compute the regularity radius of a matrix")
    p.add_argument("matrix", help="matrix file (square text format)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--delta", help="weight matrix file")
    group.add_argument("--all-ones", action="store_true", help="all-ones weights (default)")
    p.add_argument("--method", choices=api.CLI_METHODS, default=api.AUTO)
    p.add_argument("--trace", action="store_true", help="dump the full orthant trace")
    p.set_defaults(func=_cmd_radius)

    p = sub.add_parser("bounds", help="polynomial lower/upper bounds")
    p.add_argument("matrix")
    p.add_argument("--delta")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("finiteness", help="decide whether the radius is infinite")
    p.add_argument("matrix")
    p.add_argument("--delta", required=True)
    p.add_argument("--exact", action="store_true", help="rational-arithmetic rank tests")
    p.set_defaults(func=_cmd_finiteness)

    p = sub.add_parser("bench", help="run the experiment harness")
    p.add_argument("--config", required=True)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--negate-fraction", type=float, default=0.10)
    p.add_argument("--out-matrix", help="also write A in the matrix text format")
    p.add_argument("--out-delta", help="also write Delta in the matrix text format")
    p.set_defaults(func=_cmd_gen)
    return parser


def cli_dispatch(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except RadiusError as exc:
        print(f"numerical failure: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
