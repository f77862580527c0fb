"""Command-line interface: ``jalpha compute | series | betti | scan``.

Exit codes: 0 success (conjecture findings included), 1 usage error,
2 theorem violation, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial, prod
from pathlib import Path
from typing import Sequence

from . import cache as jcache
from .betti import euler_characteristic, poincare_polynomial
from .engine import JTable, j_fermionic, j_toda_typeA
from .errors import BudgetExceeded, TheoremViolation, TodaError
from .lab import ALL_CHECKS, DEFAULT_CHECKS, ScanOptions, TheoremCheckFailed, run_checks
from .monopole import monopole_series_certified
from .poly import IntPoly, RatFunc, format_poly, poly_to_json
from .qseries import eval_at_one, q_pochhammer_alpha, series_expand
from .rootsys import RootSystemError, RootSystemSpec, require_positive
from .typea import h_recursive

EXIT_OK, EXIT_USAGE, EXIT_THEOREM, EXIT_BUDGET = 0, 1, 2, 3
FORMATS = ("plain", "json", "csv", "latex")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- rendering ------------------------------------------------------------------


def latex_poly(p: IntPoly, var: str = "q") -> str:
    text = format_poly(p.c, var)
    # q^12 -> q^{12}
    out, k = [], 0
    while k < len(text):
        if text[k] == "^":
            j = k + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append("^{" + text[k + 1 : j] + "}")
            k = j
        else:
            out.append(text[k])
            k += 1
    return "".join(out)


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _csv_row(label: str, values: Sequence) -> str:
    return ",".join([label, *map(str, values)])


def _alpha_text(alpha: Sequence[int]) -> str:
    return ",".join(map(str, alpha))


def _parse_alpha(spec: RootSystemSpec, text: str) -> tuple[int, ...]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--alpha must be comma-separated integers, got {text!r}") from None
    return require_positive(spec.check(values))


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- compute ------------------------------------------------------------------


def _compute_j(spec: RootSystemSpec, alpha, method: str) -> RatFunc:
    if method == "fermionic":
        return j_fermionic(spec, alpha)
    if spec.family != "A":
        raise UsageError(f"--method {method} needs a type A system, got {spec.name}")
    if method == "toda":
        try:
            return j_toda_typeA(spec.rank, alpha)
        except TodaError as exc:
            raise TheoremViolation(str(exc)) from exc
    return RatFunc(h_recursive(alpha)) / RatFunc(q_pochhammer_alpha(spec, alpha) ** 2)


def cmd_compute(args) -> int:
    spec = RootSystemSpec.parse(args.system)
    alpha = _parse_alpha(spec, args.alpha)
    j = _compute_j(spec, alpha, args.method)
    h = RatFunc(q_pochhammer_alpha(spec, alpha) ** 2) * j
    if not h.is_polynomial() or h.den.c != (1,):
        raise TheoremViolation(f"(q)^2 J{alpha} = {h} is not an integer polynomial")
    num = h.num
    k = Fraction(eval_at_one(num), prod(factorial(x) for x in alpha) ** 2)

    fmt = args.format
    if fmt == "json":
        data = {
            "system": spec.name,
            "alpha": list(alpha),
            "method": args.method,
            "j": {"num": poly_to_json(j.num), "den": poly_to_json(j.den)},
            "numerator": poly_to_json(num),
            "degree": num.degree,
            "K": _fraction_text(k),
        }
        _emit(json.dumps(data, indent=1))
    elif fmt == "csv":
        _emit(
            "\n".join(
                [
                    _csv_row("j_num", j.num.c),
                    _csv_row("j_den", j.den.c),
                    _csv_row("numerator", num.c),
                    _csv_row("degree", [num.degree]),
                    _csv_row("K", [_fraction_text(k)]),
                ]
            )
        )
    elif fmt == "latex":
        lines = [
            r"\mathfrak{J}_{\alpha} = \frac{%s}{%s}" % (latex_poly(j.num), latex_poly(j.den)),
            r"(q)_{\alpha}^{2}\,\mathfrak{J}_{\alpha} = %s" % latex_poly(num),
        ]
        if spec.family == "A" and spec.rank == 2:
            a1, a2 = alpha
            lines.append(r"(q)_{\alpha}^{2}\,\mathfrak{J}_{\alpha} = \begin{bmatrix} %d \\ %d \end{bmatrix}_{q}" % (a1 + a2, a1))
        lines.append(r"K_{\alpha} = %s" % _latex_fraction(k))
        _emit("\n".join(lines))
    else:
        _emit(
            "\n".join(
                [
                    f"system: {spec.name}",
                    f"alpha: {_alpha_text(alpha)}",
                    f"method: {args.method}",
                    f"J: ({format_poly(j.num.c)})/({format_poly(j.den.c)})",
                    f"numerator: {format_poly(num.c)}",
                    f"degree: {num.degree}",
                    f"K: {_fraction_text(k)}",
                ]
            )
        )
    return EXIT_OK


def _latex_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return r"\frac{%d}{%d}" % (x.numerator, x.denominator)


# -- series -------------------------------------------------------------------


def _series(spec, alpha, order, oracle):
    if oracle == "expand":
        return series_expand(j_fermionic(spec, alpha), order).coeffs
    if not spec.simply_laced:
        raise UsageError(f"the monopole oracle needs a simply-laced system, got {spec.name}")
    return monopole_series_certified(spec, alpha, order)[0].coeffs


def _render_series(coeffs, fmt, label) -> str:
    if fmt == "json":
        return json.dumps({label: [str(c) for c in coeffs]})
    if fmt == "csv":
        return _csv_row(label, coeffs)
    if fmt == "latex":
        return latex_poly(IntPoly(coeffs)) + r" + O(q^{%d})" % len(coeffs)
    return ",".join(map(str, coeffs))


def cmd_series(args) -> int:
    spec = RootSystemSpec.parse(args.system)
    alpha = _parse_alpha(spec, args.alpha)
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    if not args.compare:
        _emit(_render_series(_series(spec, alpha, args.order, args.oracle), args.format, args.oracle))
        return EXIT_OK
    expand = _series(spec, alpha, args.order, "expand")
    mono = _series(spec, alpha, args.order, "monopole")
    verdict = "match" if expand == mono else "mismatch"
    if args.format == "json":
        _emit(json.dumps({"expand": [str(c) for c in expand], "monopole": [str(c) for c in mono], "verdict": verdict}))
    else:
        fmt = "plain" if args.format == "latex" else args.format
        lines = [_render_series(expand, fmt, "expand"), _render_series(mono, fmt, "monopole")]
        if fmt == "plain":
            lines = ["expand: " + lines[0], "monopole: " + lines[1], f"verdict: {verdict}"]
        else:
            lines.append(_csv_row("verdict", [verdict]))
        _emit("\n".join(lines))
    return EXIT_OK if verdict == "match" else EXIT_THEOREM


# -- betti --------------------------------------------------------------------


def cmd_betti(args) -> int:
    spec = RootSystemSpec.parse(args.system)
    if spec.family != "A":
        raise UsageError(f"betti needs a type A system, got {spec.name}")
    alpha = _parse_alpha(spec, args.alpha)
    h = h_recursive(alpha)
    if eval_at_one(h) > args.limit:
        raise BudgetExceeded(f"about {eval_at_one(h)} fixed points, above --limit {args.limit}")
    p = poincare_polynomial(alpha)
    chi = euler_characteristic(alpha)
    match = p == h
    proven = spec.rank <= 3
    verdict = "match" if match else ("mismatch" if proven else "mismatch (conjecture finding)")
    if args.format == "json":
        _emit(json.dumps({"poincare": poly_to_json(p), "euler": chi, "numerator": poly_to_json(h), "verdict": verdict}))
    elif args.format == "csv":
        _emit("\n".join([_csv_row("poincare", p.c), _csv_row("euler", [chi]), _csv_row("numerator", h.c), _csv_row("verdict", [verdict])]))
    elif args.format == "latex":
        _emit("\n".join([r"P(q) = %s" % latex_poly(p), r"\chi = %d" % chi]))
    else:
        _emit("\n".join([f"poincare: {format_poly(p.c)}", f"euler: {chi}", f"numerator: {format_poly(h.c)}", f"verdict: {verdict}"]))
    return EXIT_THEOREM if (proven and not match) else EXIT_OK


# -- scan ---------------------------------------------------------------------


def _parse_checks(text: str | None) -> tuple[str, ...]:
    if text is None:
        return DEFAULT_CHECKS
    if text.strip() == "all":
        return ALL_CHECKS
    names = tuple(x.strip() for x in text.split(",") if x.strip())
    unknown = sorted(set(names) - set(ALL_CHECKS))
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(ALL_CHECKS)}")
    return names


def _parse_bounds(spec: RootSystemSpec, text: str):
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--max-coeff must be an integer or a comma list, got {text!r}") from None
    if any(v < 0 for v in values):
        raise UsageError("--max-coeff must be nonnegative")
    return values[0] if len(values) == 1 else spec.check(values)


def cmd_scan(args) -> int:
    spec = RootSystemSpec.parse(args.system)
    bounds = _parse_bounds(spec, args.max_coeff)
    checks = _parse_checks(args.checks)
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    cache_dir = args.cache if args.cache is not None else jcache.default_cache_dir()
    table = JTable(spec)
    if cache_dir is not None:
        jcache.load_into(table, cache_dir)
    opts = ScanOptions(max_degree=args.max_degree, timings=args.timings)
    status = EXIT_OK
    try:
        report = run_checks(spec, bounds, checks, workers=args.workers, table=table, options=opts)
    except TheoremCheckFailed as exc:
        report = exc.report
        status = EXIT_THEOREM
        print(f"theorem violation: {exc}", file=sys.stderr)
    text = report.to_json()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if cache_dir is not None and status == EXIT_OK:
        jcache.save(table, cache_dir)
    s = report.summary()
    print(
        f"{spec.name}: {len(report.results)} alphas, {s['pass']} pass, {s['fail']} fail, "
        f"{s['findings']} findings, {s['skip']} skip",
        file=sys.stderr,
    )
    return status


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jalpha", description="Exact computation and checking of the rational functions J_alpha.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, alpha=True):
        p.add_argument("--system", required=True, help="root system such as A3, D4, G2")
        if alpha:
            p.add_argument("--alpha", required=True, help="coefficients in the simple-root basis, e.g. 1,1,1")
        p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("compute", help="J_alpha, its numerator, degree and K_alpha")
    common(p)
    p.add_argument("--method", choices=("fermionic", "toda", "typea"), default="fermionic")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("series", help="power series coefficients of J_alpha")
    common(p)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--oracle", choices=("expand", "monopole"), default="expand")
    p.add_argument("--compare", action="store_true", help="run both oracles and report whether they agree")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("betti", help="Poincare polynomial from torus fixed points (type A)")
    common(p)
    p.add_argument("--limit", type=int, default=1_000_000, help="maximum number of fixed points to enumerate")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("scan", help="check theorems and conjectures over a box of alphas")
    p.add_argument("--system", required=True)
    p.add_argument("--max-coeff", required=True, help="bound k on every a_i, or one bound per node")
    p.add_argument("--checks", default=None, help=f"comma list or 'all' (default: {','.join(DEFAULT_CHECKS)})")
    p.add_argument("--out", default=None, help="report path (default: stdout)")
    p.add_argument("--cache", default=None, help=f"table cache directory (default: ${jcache.ENV_VAR})")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="record per-alpha milliseconds (not reproducible)")
    p.add_argument("--max-degree", type=int, default=160, help="budget on deg (q)_alpha^2")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RootSystemError) as exc:
        print(f"jalpha: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        print(f"jalpha: theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except BudgetExceeded as exc:
        print(f"jalpha: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"jalpha: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
