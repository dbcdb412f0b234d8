"""Command-line frontend.

Commands: analyze, derivations, ladder, catalog list, catalog run [NAME].
Exit codes: 0 success, 2 parse/usage error, 3 precondition violation
(non-reduced input, f(0) != 0, point off the divisor), 4 resource limit.
Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import list_catalog, run_catalog
from .config import (
    Budget,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    default_budget,
)
from .criteria import ALL_CHECKS, AnalyzeOptions, DivisorReport, analyze
from .logder import format_derivation, logarithmic_derivations, SaitoData
from .polycore import Point, Ring, format_polynomial, parse_polynomial
from .strata import minor_ladder


def _fmt_bool(b) -> str:
    return "true" if b else "false"


def _verdict_line(label, verdict, alias=None, detail_first=True) -> str:
    if verdict is None:
        return f"{label}: (not computed)"
    line = f"{label}: {_fmt_bool(verdict.value)}"
    notes = []
    if not verdict.value:
        for key, payload in verdict.evidence:
            if key == "fails":
                notes.append(f"fails: {payload}")
                break
            if key in ("reason", "conclusion", "inapplicable") and detail_first:
                notes.append(str(payload))
                break
    else:
        for key, payload in verdict.evidence:
            if key == "conclusion":
                notes.append(str(payload))
                break
    if alias:
        notes.append(alias)
    if notes:
        line += " (" + "; ".join(notes) + ")"
    return line


def render_text(report: DivisorReport) -> str:
    """Stable plain-text layout: one verdict per line with evidence summary."""
    lines = []
    lines.append(f"f = {format_polynomial(report.f)}")
    lines.append("vars: " + ", ".join(report.ring.names))
    if report.homogeneous:
        lines.append(f"homogeneous: true (degree {report.degree})")
    else:
        lines.append("homogeneous: false")
    lines.append(_verdict_line("reduced", report.reduced))
    if report.product is not None:
        lines.append(_verdict_line("product at origin", report.product))
    if report.free is not None:
        lines.append(_verdict_line("free at origin", report.free))
    if report.linear_free is not None:
        lines.append(_verdict_line("linear free", report.linear_free))
    if report.generators:
        lines.append(f"derivation generators: {len(report.generators)}")
        for i, d in enumerate(report.generators, 1):
            lines.append(
                f"  delta_{i} = {format_derivation(d)} | cofactor: "
                f"{format_polynomial(d.cofactor)}"
            )
    if report.seh_on_D0 is not None:
        lines.append(_verdict_line("SEH on D0", report.seh_on_D0))
    if report.seh_off_D0 is not None:
        lines.append(_verdict_line("SEH off D0", report.seh_off_D0))
    if report.seh is not None:
        lines.append(_verdict_line("SEH", report.seh))
    alias = "alias: weakly Koszul-free" if report.koszul_alias else None
    if report.weak_sh is not None:
        lines.append(_verdict_line("weak Saito-holonomic", report.weak_sh, alias))
    alias = "alias: Koszul-free" if report.koszul_alias else None
    if report.sh is not None:
        lines.append(_verdict_line("Saito-holonomic", report.sh, alias))
    alias = "alias: strongly Koszul-free" if report.koszul_alias else None
    if report.strong_sh is not None:
        lines.append(_verdict_line("strong Saito-holonomic", report.strong_sh, alias))
    if report.lct_trace_necessary is not None:
        lines.append(
            _verdict_line("LCT trace necessary condition", report.lct_trace_necessary)
        )
    if report.colon_consistency is not None:
        lines.append(_verdict_line("colon consistency", report.colon_consistency))
    if report.ljt is not None:
        lines.append(_verdict_line("linear Jacobian type", report.ljt))
    if report.dims_D is not None:
        lines.append(
            "ladder dims: dim D_i = "
            + str(list(report.dims_D))
            + ", dim Dtilde_i = "
            + str(list(report.dims_D_ext))
        )
    for pv in report.points:
        line = f"point {pv.point}: SEH = {_fmt_bool(pv.seh)}"
        if pv.witness is not None:
            line += f" (witness: {format_derivation(pv.witness)})"
        lines.append(line)
    if report.warnings:
        lines.append("warnings:")
        for w in report.warnings:
            lines.append(f"  - {w}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _build_parser():
    top = argparse.ArgumentParser(
        prog="divlab",
        description="Exact singularity analysis of a divisor germ at the origin.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--vars", required=True, help="comma-separated variable names")
        p.add_argument("poly", help="polynomial in the declared variables")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--max-pairs", type=int, default=None)
        p.add_argument("--max-degree", type=int, default=None)

    a = sub.add_parser("analyze", help="run the divisor checks and print a report")
    add_common(a)
    a.add_argument(
        "--checks",
        default=None,
        help="comma-separated subset of: " + ",".join(sorted(ALL_CHECKS)),
    )
    a.add_argument(
        "--point",
        action="append",
        default=[],
        help="comma-separated rational coordinates; repeatable",
    )
    a.add_argument("--unit", default=None, help="unit u for the colon ideal of u*f")
    a.add_argument(
        "--no-validate",
        action="store_true",
        help="skip the internal ladder consistency assertions",
    )

    d = sub.add_parser("derivations", help="print a generating set of Der_f")
    add_common(d)

    l = sub.add_parser("ladder", help="print the minor-ideal ladder summary")
    add_common(l)

    c = sub.add_parser("catalog", help="list or run the built-in corpus")
    csub = c.add_subparsers(dest="catalog_command", required=True)
    cl = csub.add_parser("list", help="list catalog entries")
    cl.add_argument("--json", action="store_true")
    cr = csub.add_parser("run", help="run entries against their expectations")
    cr.add_argument("name", nargs="?", default=None)
    cr.add_argument("--budget", choices=["default", "high"], default="default")
    cr.add_argument("--json", action="store_true")
    return top


def _budget_from_args(args) -> Budget:
    base = default_budget()
    max_pairs = args.max_pairs if args.max_pairs is not None else base.max_pairs
    max_degree = args.max_degree if args.max_degree is not None else base.max_degree
    return Budget(max_pairs=max_pairs, max_degree=max_degree)


def _parse_input(args):
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    ring = Ring(names)
    f = parse_polynomial(args.poly, ring)
    return ring, f


def _cmd_analyze(args) -> int:
    ring, f = _parse_input(args)
    budget = _budget_from_args(args)
    checks = None
    if args.checks is not None:
        wanted = {c.strip() for c in args.checks.split(",") if c.strip()}
        unknown = wanted - ALL_CHECKS
        if unknown:
            print(f"unknown checks: {', '.join(sorted(unknown))}", file=sys.stderr)
            return 2
        checks = frozenset(wanted)
    points = tuple(
        Point(ring, [c.strip() for c in ptxt.split(",")]) for ptxt in args.point
    )
    unit = parse_polynomial(args.unit, ring) if args.unit else None
    options = AnalyzeOptions(
        checks=checks if checks is not None else AnalyzeOptions().checks,
        points=points,
        unit=unit,
        budget=budget,
        validate_ladder=not args.no_validate,
    )
    report = analyze(f, options)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(render_text(report))
    return 0


def _cmd_derivations(args) -> int:
    _, f = _parse_input(args)
    sd = logarithmic_derivations(f, _budget_from_args(args))
    if args.json:
        out = [
            {
                "coefficients": [format_polynomial(a) for a in d.coefficients],
                "cofactor": format_polynomial(d.cofactor),
            }
            for d in sd.derivations
        ]
        print(json.dumps(out, indent=2))
    else:
        for i, d in enumerate(sd.derivations, 1):
            print(
                f"delta_{i} = {format_derivation(d)} | cofactor: "
                f"{format_polynomial(d.cofactor)}"
            )
    return 0


def _cmd_ladder(args) -> int:
    _, f = _parse_input(args)
    budget = _budget_from_args(args)
    sd = logarithmic_derivations(f, budget)
    ladder = minor_ladder(sd, budget)
    if args.json:
        out = {
            "dims_D": list(ladder.dims_D),
            "dims_D_ext": list(ladder.dims_D_ext),
            "I": [
                [format_polynomial(g) for g in ladder.ideal_I(i).groebner_basis()]
                for i in range(1, ladder.n + 1)
            ],
            "I_ext": [
                [format_polynomial(g) for g in ladder.ideal_I_ext(i).groebner_basis()]
                for i in range(1, ladder.n + 1)
            ],
            "colon": [format_polynomial(g) for g in ladder.colon.groebner_basis()],
        }
        print(json.dumps(out, indent=2))
    else:
        print(f"dims: dim D_i = {list(ladder.dims_D)}, dim Dtilde_i = {list(ladder.dims_D_ext)}")
        for i in range(1, ladder.n + 1):
            gb = ladder.ideal_I(i).groebner_basis()
            print(f"I_{i}: {len(gb)} basis elements")
            gbe = ladder.ideal_I_ext(i).groebner_basis()
            print(f"Itilde_{i}: {len(gbe)} basis elements")
        print(
            "colon ideal basis: "
            + ", ".join(format_polynomial(g) for g in ladder.colon.groebner_basis())
        )
    return 0


def _cmd_catalog(args) -> int:
    if args.catalog_command == "list":
        entries = list_catalog()
        if args.json:
            out = [
                {
                    "name": e.name,
                    "vars": list(e.vars),
                    "poly": e.poly,
                    "expensive": e.expensive,
                    "homogeneous": e.homogeneous,
                    "notes": list(e.notes),
                    **({"metadata": e.metadata} if e.metadata else {}),
                }
                for e in entries
            ]
            print(json.dumps(out, indent=2))
        else:
            for e in entries:
                flag = " [expensive]" if e.expensive else ""
                print(f"{e.name:22s} vars={','.join(e.vars)}{flag}")
                print(f"{'':22s} f = {e.poly}")
        return 0
    rows = run_catalog(args.name, budget=args.budget)
    if args.json:
        print(
            json.dumps(
                [
                    {"name": r.name, "status": r.status, "details": list(r.details)}
                    for r in rows
                ],
                indent=2,
            )
        )
    else:
        for r in rows:
            line = f"{r.name:22s} {r.status}"
            if r.details:
                line += "  " + "; ".join(r.details)
            print(line)
    return 0 if all(r.ok for r in rows) else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "derivations":
            return _cmd_derivations(args)
        if args.command == "ladder":
            return _cmd_ladder(args)
        if args.command == "catalog":
            return _cmd_catalog(args)
        parser.error(f"unknown command {args.command!r}")
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
