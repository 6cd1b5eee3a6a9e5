"""Command-line interface with deterministic JSON and text reports.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 precondition violation.  Reports are canonical: keys sorted, integers
exact, rationals as "p/q" strings, field elements as coefficient arrays
with their minimal polynomial; timings live under the volatile key so the
rest of the payload is byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import upoly
from .arrangement import SingularLocusError, rationality_test
from .chebyshev import build, curve_polynomial, verify_nodes
from .hilbert import (
    chebyshev_milnor_numerator,
    expected_node_count,
    milnor_profile,
)
from .interp import evaluation_kernel_dim, evaluation_thresholds, node_evaluation_surjective
from .numberfield import AlgNum
from .polyring import MPoly, ParseError, parse, to_string
from .syzygy import syzygy_dim, syzygy_dim_from_hilbert, verify_resolution

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION = 3

GROEBNER_MAX_D = 8
FACTOR_MAX_D = 10
SURJECTIVITY_MAX_D = 6


def _encode(value):
    """Map report values onto JSON-serializable primitives, canonically."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, AlgNum):
        return {
            "coeffs": [_encode(c) for c in value.coeffs],
            "minpoly": [_encode(c) for c in value.field.minpoly],
        }
    if isinstance(value, MPoly):
        return to_string(value)
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def _render_text(value, indent: int = 0, out=None) -> list[str]:
    lines = out if out is not None else []
    pad = "  " * indent
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                _render_text(v, indent + 1, lines)
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                _render_text(v, indent + 1, lines)
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
    else:
        lines.append(f"{pad}{json.dumps(value)}")
    return lines


def _emit(report: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = "\n".join(_render_text(report)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(command: str, inputs: dict, results: dict, seed=None, timings=None) -> dict:
    return {
        "command": command,
        "inputs": _encode(inputs),
        "results": _encode(results),
        "seed": seed,
        "volatile": {"timings_ms": timings or {}},
    }


def _read_poly(path: str) -> MPoly:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}", 1)
    return parse(text.strip(), nvars=3)


def _point(pt) -> list:
    return [pt[0], pt[1]]


def cmd_gen(args) -> int:
    t0 = time.perf_counter()
    data = build(args.d)
    constant, factors = (
        data.plus_factorization if args.sign == "plus" else data.minus_factorization
    )
    results = {
        "d": args.d,
        "chebyshev": upoly.to_string(data.chebyshev, var="x"),
        "plus_curve": data.plus_curve,
        "minus_curve": data.minus_curve,
        "projective_curve": data.projective_curve,
        "field_minpoly": list(data.field.minpoly),
        "critical_points": list(data.critical_points),
        "plus_nodes": [_point(p) for p in data.plus_nodes],
        "minus_nodes": [_point(p) for p in data.minus_nodes],
        "node_count": len(data.plus_nodes),
        "factorization": {
            "sign": args.sign,
            "constant": constant,
            "factors": list(factors),
        },
    }
    timings = {"total": round((time.perf_counter() - t0) * 1000.0, 3)}
    _emit(_report("gen", {"d": args.d, "sign": args.sign}, results, timings=timings), args)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    t0 = time.perf_counter()
    f = _read_poly(args.file)
    if f.is_zero() or not f.is_homogeneous() or f.degree() < 2:
        sys.stderr.write("error: input must be homogeneous of degree >= 2\n")
        return EXIT_PRECONDITION
    t1 = time.perf_counter()
    prof = milnor_profile(f, kmax=args.kmax)
    t2 = time.perf_counter()
    results = {
        "degree": prof.d,
        "numerator": list(prof.hilbert.numerator),
        "dims": list(prof.hilbert.dims),
        "tau": prof.tau,
        "stabilized_value": prof.hilbert.stabilized_value,
        "stabilized_from": prof.hilbert.stabilized_from,
        "q_polynomial": list(prof.q_polynomial) if prof.q_polynomial is not None else None,
    }
    timings = {
        "parse": round((t1 - t0) * 1000.0, 3),
        "profile": round((t2 - t1) * 1000.0, 3),
        "total": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    _emit(_report("hilbert", {"file": args.file, "kmax": args.kmax}, results, timings=timings), args)
    return EXIT_OK


def cmd_syzygy(args) -> int:
    t0 = time.perf_counter()
    f = _read_poly(args.file)
    if f.is_zero() or not f.is_homogeneous() or f.degree() < 2:
        sys.stderr.write("error: input must be homogeneous of degree >= 2\n")
        return EXIT_PRECONDITION
    r_max = args.rmax if args.rmax is not None else 2 * f.degree()
    per_degree = []
    for r in range(r_max + 1):
        per_degree.append(
            {
                "r": r,
                "dimension": syzygy_dim(f, r),
                "expected_from_hilbert": syzygy_dim_from_hilbert(f, r),
            }
        )
    results = {"degree": f.degree(), "per_degree": per_degree}
    timings = {"total": round((time.perf_counter() - t0) * 1000.0, 3)}
    _emit(_report("syzygy", {"file": args.file, "rmax": r_max}, results, timings=timings), args)
    return EXIT_OK


def cmd_interp(args) -> int:
    t0 = time.perf_counter()
    max_inj, min_surj = evaluation_thresholds(args.d)
    kernel = [
        {"r": r, "kernel_dim": evaluation_kernel_dim(args.d, r)} for r in range(args.d + 1)
    ]
    results = {
        "d": args.d,
        "max_injective_degree": max_inj,
        "min_surjective_degree": min_surj,
        "kernel_dims": kernel,
    }
    timings = {"total": round((time.perf_counter() - t0) * 1000.0, 3)}
    _emit(_report("interp", {"d": args.d}, results, timings=timings), args)
    return EXIT_OK


def cmd_rational_test(args) -> int:
    t0 = time.perf_counter()
    f = _read_poly(args.file)
    if f.is_zero() or not f.is_homogeneous() or f.degree() < 3:
        sys.stderr.write("error: input must be homogeneous of degree >= 3\n")
        return EXIT_PRECONDITION
    try:
        rep = rationality_test(f, seed=args.seed)
    except SingularLocusError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    results = {
        "degree": rep.degree,
        "verdict": rep.verdict,
        "tau": rep.tau,
        "distinct_singular_points": rep.distinct_singular_points,
        "dim_at_2d_minus_3": rep.dim_at_2d_minus_3,
        "genus_sum": rep.genus_sum,
    }
    timings = {"total": round((time.perf_counter() - t0) * 1000.0, 3)}
    _emit(
        _report("rational-test", {"file": args.file}, results, seed=args.seed, timings=timings),
        args,
    )
    return EXIT_OK


def _verify_items(d: int, strategy: str, timings: dict) -> list[dict]:
    items = []
    clock = time.perf_counter()

    def item(name: str, ok: bool, detail: dict | None = None):
        nonlocal clock
        items.append({"name": name, "pass": bool(ok), "detail": detail or {}})
        now = time.perf_counter()
        timings[name] = round((now - clock) * 1000.0, 3)
        clock = now

    data = build(d)
    nv = verify_nodes(d)
    item(
        "node_certification",
        nv.ok and nv.points_checked == expected_node_count(d),
        {"points_checked": nv.points_checked, "failures": [list(f) for f in nv.failures]},
    )
    for sign in ("plus", "minus"):
        constant, factors = data.plus_factorization if sign == "plus" else data.minus_factorization
        prod = MPoly.constant(Fraction(1), 2)
        for p in factors:
            prod = prod * p
        prod = prod * constant
        target = (data.plus_curve if sign == "plus" else data.minus_curve).map_coefficients(
            data.field.from_rational
        )
        item(
            f"factorization_{sign}",
            prod == target,
            {"constant": _encode(Fraction(constant)), "factor_count": len(factors)},
        )
    if d % 2 == 1:
        mirrored = MPoly(2, {(a, b): c * (-1) ** b for (a, b), c in data.plus_curve.terms.items()})
        item("plus_minus_mirror", mirrored == data.minus_curve, {})
    thresholds = evaluation_thresholds(d)
    item(
        "evaluation_thresholds",
        thresholds == (d - 3, d - 2),
        {"got": list(thresholds), "expected": [d - 3, d - 2]},
    )

    if d <= GROEBNER_MAX_D:
        from .groebner import Ideal, buchberger, leading_ideal
        from .hilbert import hilbert_numerator
        from .polyring import partials as poly_partials

        f = curve_polynomial(d)
        gens = tuple(p for p in poly_partials(f) if not p.is_zero())
        gb = buchberger(Ideal(gens), strategy=strategy)
        numerator = hilbert_numerator(leading_ideal(gb))
        closed = chebyshev_milnor_numerator(d)
        item(
            "hilbert_numerator_matches_closed_form",
            numerator == closed,
            {"computed": list(numerator), "closed_form": list(closed)},
        )
        prof = milnor_profile(f)
        window = prof.dims[2 * d - 3 :]
        item(
            "dims_stabilize_at_node_count",
            all(v == expected_node_count(d) for v in window),
            {"window_start": 2 * d - 3, "dims": list(window)},
        )
        res = verify_resolution(d)
        item(
            "syzygy_resolution",
            res.ok,
            {
                "first_syzygy_degree": res.first_syzygy_degree,
                "first_syzygy_count": res.first_syzygy_count,
                "checked_degrees": len(res.syzygy_checks),
            },
        )
        if d <= SURJECTIVITY_MAX_D:
            item("node_evaluation_surjective", node_evaluation_surjective(d), {})
    return items


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    timings: dict[str, float] = {}
    items = _verify_items(args.d, args.strategy, timings)
    all_pass = all(it["pass"] for it in items)
    results = {"d": args.d, "items": items, "all_pass": all_pass}
    timings["total"] = round((time.perf_counter() - t0) * 1000.0, 3)
    _emit(
        _report("verify", {"d": args.d, "strategy": args.strategy}, results, timings=timings),
        args,
    )
    return EXIT_OK if all_pass else EXIT_VERIFY_FAILED


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="write the report to a file")


def _degree_arg(lo: int, hi: int):
    def check(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        if not lo <= v <= hi:
            raise argparse.ArgumentTypeError(f"d must be in {lo}..{hi}")
        return v

    return check


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebcurve",
        description="Exact Chebyshev curve toolkit: Milnor algebras, Hilbert series, "
        "syzygies and the rational-arrangement certificate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit curve data and factorizations")
    p.add_argument("-d", type=_degree_arg(3, 30), required=True)
    p.add_argument("--sign", choices=("plus", "minus"), default="plus")
    _add_common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hilbert", help="Milnor algebra Hilbert data of a polynomial file")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("syzygy", help="per-degree syzygy dimensions of a polynomial file")
    p.add_argument("file")
    p.add_argument("--rmax", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_syzygy)

    p = sub.add_parser("interp", help="node-grid evaluation thresholds")
    p.add_argument("-d", type=_degree_arg(3, GROEBNER_MAX_D), required=True)
    _add_common(p)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("rational-test", help="rational-arrangement certificate for a curve file")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_rational_test)

    p = sub.add_parser("verify", help="run the full verification bundle for degree d")
    p.add_argument("-d", type=_degree_arg(3, FACTOR_MAX_D), required=True)
    p.add_argument("--strategy", choices=("normal", "fifo"), default="normal")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
