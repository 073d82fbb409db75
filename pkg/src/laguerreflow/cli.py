"""Command-line front end for scripted verification runs.

Rationals cross the boundary as strings like "3/4" or "-2", never floats;
decimal output appears only in fields labeled approx. Exit status is 0 when
the requested check passes (or the command is purely computational), 1 when
a verified property fails, and 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from math import factorial

from .basis import AlphaParam, XiParam, laguerre_transform
from .flow import (
    counterexample_search,
    flow_trace,
    hermite_radius_bound,
    laguerre_radius_bound,
    lemma1_localize,
    lemma2_localize,
    random_alpha,
    random_poly,
    random_rational,
    random_real_rooted,
    semigroup_check,
    verify_theorem1,
)
from .orthocheck import hermite_diagonal_reference, hermite_inner, laguerre_inner
from .ratpoly import Poly, format_rational, parse_poly_literal, poly_literal, to_rational
from .realroot import DEFAULT_WIDTH, certify, isolate_roots

OUTDIR_ENV = "LAGUERREFLOW_OUTDIR"


def _parse_poly(text: str) -> Poly:
    return parse_poly_literal(text)


def _parse_grid(text: str) -> list[Fraction]:
    parts = [piece.strip() for piece in text.split(",")]
    if not parts or any(not piece for piece in parts):
        raise ValueError("grid must be a comma-separated list of rationals")
    return [to_rational(piece) for piece in parts]


def _alpha(args: argparse.Namespace) -> AlphaParam:
    return AlphaParam(to_rational(args.alpha))


def _require_seed(args: argparse.Namespace) -> random.Random:
    if args.seed is None:
        raise ValueError("a seed is required for randomized trials")
    return random.Random(args.seed)


def _cmd_transform(args: argparse.Namespace) -> tuple[dict, bool]:
    f = _parse_poly(args.poly)
    alpha = _alpha(args)
    image = laguerre_transform(f, alpha, verify=args.verify)
    report = {
        "command": "transform",
        "inputs": {"poly": poly_literal(f), "alpha": args.alpha},
        "result": {"transformed": poly_literal(image), "display": str(image)},
    }
    return report, True


def _cmd_certify(args: argparse.Namespace) -> tuple[dict, bool]:
    f = _parse_poly(args.poly)
    cert = certify(f, to_rational(args.width))
    report = {
        "command": "certify",
        "inputs": {"poly": poly_literal(f), "width": args.width},
        "result": cert.to_json(),
    }
    return report, True


def _cmd_isolate(args: argparse.Namespace) -> tuple[dict, bool]:
    f = _parse_poly(args.poly)
    intervals = isolate_roots(f, to_rational(args.width))
    report = {
        "command": "isolate",
        "inputs": {"poly": poly_literal(f), "width": args.width},
        "result": {
            "count": len(intervals),
            "intervals": [iv.to_json() for iv in intervals],
            "approx": [iv.approx() for iv in intervals],
        },
    }
    return report, True


def _cmd_orthogonality(args: argparse.Namespace) -> tuple[dict, bool]:
    alpha = _alpha(args)
    xi = XiParam(to_rational(args.xi))
    top = args.max_index
    if top < 0:
        raise ValueError("max index must be nonnegative")
    ok = True

    laguerre_entries = []
    for n in range(top + 1):
        for m in range(n, top + 1):
            value = laguerre_inner(n, m, alpha)
            if n == m:
                expected = Fraction(1)
                for i in range(1, n + 1):
                    expected *= alpha.value + i
                expected /= factorial(n)
                ok = ok and value.coeff == expected
            else:
                ok = ok and value.is_zero
            laguerre_entries.append({"n": n, "m": m, "value": value.to_json()})

    hermite_entries = []
    diagonal_ratios = []
    for k in range(top + 1):
        for n in range(k, top + 1):
            value = hermite_inner(k, n, xi)
            if k == n:
                expected = 2 * factorial(k) * (2 * xi.value) ** k
                ok = ok and value.coeff == expected
                nominal = hermite_diagonal_reference(k)
                diagonal_ratios.append(
                    {
                        "k": k,
                        "computed": format_rational(value.coeff),
                        "nominal": format_rational(nominal),
                        "ratio": format_rational(value.coeff / nominal),
                    }
                )
            else:
                ok = ok and value.is_zero
            hermite_entries.append({"k": k, "n": n, "value": value.to_json()})

    report = {
        "command": "orthogonality",
        "inputs": {"alpha": args.alpha, "xi": args.xi, "max_index": top},
        "result": {
            "laguerre": {"entries": laguerre_entries},
            "hermite": {"entries": hermite_entries, "diagonal_ratios": diagonal_ratios},
            "orthogonal": ok,
        },
    }
    return report, ok


def _cmd_verify_theorem(args: argparse.Namespace) -> tuple[dict, bool]:
    if args.poly is not None:
        alpha = AlphaParam(to_rational(args.alpha if args.alpha is not None else "0"))
        f = _parse_poly(args.poly)
        result = verify_theorem1(f, alpha)
        report = {
            "command": "verify-theorem",
            "inputs": {"poly": poly_literal(f), "alpha": format_rational(alpha.value)},
            "result": result.to_json(),
        }
        return report, result.passed

    rng = _require_seed(args)
    failures = []
    for _ in range(args.trials):
        alpha = (
            AlphaParam(to_rational(args.alpha)) if args.alpha is not None else random_alpha(rng)
        )
        f = random_real_rooted(rng, args.max_degree, nonneg=not args.allow_negative_roots)
        result = verify_theorem1(f, alpha)
        if not result.passed:
            failures.append(
                {
                    "poly": poly_literal(f),
                    "alpha": format_rational(alpha.value),
                    "transformed": poly_literal(result.transformed),
                }
            )
    passed = not failures
    report = {
        "command": "verify-theorem",
        "inputs": {
            "trials": args.trials,
            "seed": args.seed,
            "max_degree": args.max_degree,
            "alpha": args.alpha,
            "allow_negative_roots": args.allow_negative_roots,
        },
        "result": {"trials": args.trials, "failures": failures, "passed": passed},
    }
    return report, passed


def _cmd_verify_lemma1(args: argparse.Namespace) -> tuple[dict, bool]:
    localization = lemma1_localize(
        args.k,
        XiParam(to_rational(args.xi)),
        _parse_poly(args.p),
        _alpha(args),
        to_rational(args.eta),
    )
    report = {
        "command": "verify-lemma1",
        "inputs": {
            "k": args.k,
            "xi": args.xi,
            "p": poly_literal(_parse_poly(args.p)),
            "alpha": args.alpha,
            "eta": args.eta,
        },
        "result": localization.to_json(),
    }
    return report, localization.passed


def _cmd_verify_lemma2(args: argparse.Namespace) -> tuple[dict, bool]:
    localization = lemma2_localize(
        args.k, _parse_poly(args.p), _alpha(args), to_rational(args.h)
    )
    report = {
        "command": "verify-lemma2",
        "inputs": {
            "k": args.k,
            "p": poly_literal(_parse_poly(args.p)),
            "alpha": args.alpha,
            "h": args.h,
        },
        "result": localization.to_json(),
    }
    return report, localization.passed


def _cmd_semigroup(args: argparse.Namespace) -> tuple[dict, bool]:
    if args.poly is not None:
        if args.h1 is None or args.h2 is None:
            raise ValueError("--h1 and --h2 are required with --poly")
        f = _parse_poly(args.poly)
        equal = semigroup_check(f, _alpha(args), to_rational(args.h1), to_rational(args.h2))
        report = {
            "command": "semigroup",
            "inputs": {
                "poly": poly_literal(f),
                "alpha": args.alpha,
                "h1": args.h1,
                "h2": args.h2,
            },
            "result": {"equal": equal},
        }
        return report, equal

    rng = _require_seed(args)
    failures = 0
    for _ in range(args.trials):
        f = random_poly(rng, args.max_degree)
        alpha = random_alpha(rng)
        h1 = random_rational(rng, -64, 64)
        h2 = random_rational(rng, -64, 64)
        if not semigroup_check(f, alpha, h1, h2):
            failures += 1
    passed = failures == 0
    report = {
        "command": "semigroup",
        "inputs": {"trials": args.trials, "seed": args.seed, "max_degree": args.max_degree},
        "result": {"trials": args.trials, "failures": failures, "passed": passed},
    }
    return report, passed


def _cmd_flow_trace(args: argparse.Namespace) -> tuple[dict | str, bool]:
    f = _parse_poly(args.poly)
    trace = flow_trace(f, _alpha(args), _parse_grid(args.grid), to_rational(args.width))
    if args.format == "csv":
        lines = ["h,root_index,interval_lo,interval_hi,approx"]
        lines.extend(",".join(row) for row in trace.csv_rows())
        return "\n".join(lines), True
    report = {
        "command": "flow-trace",
        "inputs": {"poly": poly_literal(f), "alpha": args.alpha, "grid": args.grid},
        "result": trace.to_json(),
    }
    return report, True


def _cmd_search_counterexamples(args: argparse.Namespace) -> tuple[dict, bool]:
    points = counterexample_search(_alpha(args), _parse_grid(args.grid), args.k)
    report = {
        "command": "search-counterexamples",
        "inputs": {"alpha": args.alpha, "k": args.k, "grid": args.grid},
        "result": {"points": [p.to_json() for p in points]},
    }
    return report, True


_COMMANDS = {
    "transform": _cmd_transform,
    "certify": _cmd_certify,
    "isolate": _cmd_isolate,
    "orthogonality": _cmd_orthogonality,
    "verify-theorem": _cmd_verify_theorem,
    "verify-lemma1": _cmd_verify_lemma1,
    "verify-lemma2": _cmd_verify_lemma2,
    "semigroup": _cmd_semigroup,
    "flow-trace": _cmd_flow_trace,
    "search-counterexamples": _cmd_search_counterexamples,
}

_WIDTH_DEFAULT = format_rational(DEFAULT_WIDTH)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laguerreflow",
        description="Exact heat-flow transforms, root certification, and verification harnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--output", help="write the report to this path instead of stdout")
        return cmd

    cmd = add("transform", "apply the monomial-to-Laguerre transform")
    cmd.add_argument("--poly", required=True, help='polynomial literal, e.g. {"coeffs":["1","2"]}')
    cmd.add_argument("--alpha", default="0", help="nonnegative rational parameter")
    cmd.add_argument(
        "--verify",
        action="store_true",
        help="cross-check the basis-sum result against the flow at h=1",
    )

    cmd = add("certify", "certify real-rootedness via Sturm counting")
    cmd.add_argument("--poly", required=True)
    cmd.add_argument("--width", default=_WIDTH_DEFAULT, help="max isolating-interval width")

    cmd = add("isolate", "isolate all distinct real roots")
    cmd.add_argument("--poly", required=True)
    cmd.add_argument("--width", default=_WIDTH_DEFAULT)

    cmd = add("orthogonality", "exact inner-product tables for both weighted families")
    cmd.add_argument("--alpha", default="0")
    cmd.add_argument("--xi", default="1", help="positive rational scale")
    cmd.add_argument("--max-index", type=int, default=6)

    cmd = add("verify-theorem", "check the transform preserves real-rootedness")
    cmd.add_argument("--poly", help="single input; omit to run randomized trials")
    cmd.add_argument("--alpha", help="fixed rational (batch mode: omit to randomize per trial)")
    cmd.add_argument("--trials", type=int, default=100)
    cmd.add_argument("--seed", type=int, help="required for randomized trials")
    cmd.add_argument("--max-degree", type=int, default=12)
    cmd.add_argument(
        "--allow-negative-roots",
        action="store_true",
        help="sample roots of either sign instead of the verified nonnegative regime",
    )

    cmd = add("verify-lemma1", "count flowed roots near xi in the Hermite-radius window")
    cmd.add_argument("--k", type=int, required=True)
    cmd.add_argument("--xi", required=True, help="positive rational root location")
    cmd.add_argument("--p", required=True, help="cofactor polynomial literal with p(0) != 0")
    cmd.add_argument("--alpha", default="0")
    cmd.add_argument("--eta", required=True, help="positive rational; flow time is eta^2")

    cmd = add("verify-lemma2", "count flowed roots near 0 in the Laguerre-radius window")
    cmd.add_argument("--k", type=int, required=True)
    cmd.add_argument("--p", required=True, help="cofactor polynomial literal with p(0) != 0")
    cmd.add_argument("--alpha", default="0")
    cmd.add_argument("--h", required=True, help="positive rational flow time")

    cmd = add("semigroup", "check flowing by h1 then h2 equals flowing by h1+h2")
    cmd.add_argument("--poly", help="single input; omit to run randomized trials")
    cmd.add_argument("--alpha", default="0")
    cmd.add_argument("--h1")
    cmd.add_argument("--h2")
    cmd.add_argument("--trials", type=int, default=100)
    cmd.add_argument("--seed", type=int, help="required for randomized trials")
    cmd.add_argument("--max-degree", type=int, default=20)

    cmd = add("flow-trace", "certify the flowed polynomial along a time grid")
    cmd.add_argument("--poly", required=True)
    cmd.add_argument("--alpha", default="0")
    cmd.add_argument("--grid", required=True, help="comma-separated rationals, ascending from 0")
    cmd.add_argument("--format", choices=("json", "csv"), default="json")
    cmd.add_argument("--width", default=_WIDTH_DEFAULT)

    cmd = add("search-counterexamples", "map pass/fail of the transform over a root grid")
    cmd.add_argument("--alpha", default="0")
    cmd.add_argument("--k", type=int, default=2, help="multiplicity of the probed root")
    cmd.add_argument("--grid", required=True, help="comma-separated rational root locations")

    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        print(text)
        return
    path = output
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not os.path.isabs(path):
        path = os.path.join(outdir, path)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
        handle.write("\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, passed = _COMMANDS[args.command](args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"property failure: {exc}", file=sys.stderr)
        return 1
    if isinstance(report, str):
        _emit(report, args.output)
    else:
        _emit(json.dumps(report, sort_keys=True, indent=2), args.output)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
