"""Command line surface: verify-algebra, orbit, scan, classify, tables.

Reports are printed as text, CSV (comma separated, header row, dot decimal
separator, LF endings, floats at 17 significant digits so parsed values
round-trip exactly) or JSON (one top-level object with ``meta`` and
``rows``).  Exit status is 0 only when every check the subcommand performs
passes.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from . import verify
from .classify import (
    EXPECTED_MULTIPLICITIES,
    classify_type,
    closed_form_spectrum,
    compare_spectra,
    principal_interval,
)
from .orbits import ACTION_TYPES, action_spec, spectrum_report

SPECTRUM_TOLERANCE = 1e-8
PARAMETER_TOLERANCE = 1e-8


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(
            ",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row)
        )
    return "\n".join(lines) + "\n"


def _json_doc(meta: dict, rows: list[dict]) -> str:
    return json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n"


def _meta(command: str, **extra) -> dict:
    meta = {"tool": "g2orbits", "version": __version__, "command": command}
    meta.update(extra)
    return meta


def _resolve_t(args, spec) -> float:
    if (args.t is None) == (args.s is None):
        raise SystemExit("exactly one of --t / --s is required")
    if args.t is not None:
        return float(args.t)
    return float(args.s) * spec.section_ratio


def _closed_form_label(action_type: str) -> str:
    return f"type {action_type} principal-curvature closed forms"


def cmd_verify_algebra(args) -> int:
    results = verify.run_all(seed=args.seed)
    rows = [
        {"check": r.name, "passed": r.passed, "detail": r.detail} for r in results
    ]
    if args.format == "json":
        _emit(_json_doc(_meta("verify-algebra", seed=args.seed), rows), args.output)
    elif args.format == "csv":
        _emit(
            _csv(["check", "passed", "detail"],
                 [[r.name, str(r.passed), r.detail] for r in results]),
            args.output,
        )
    else:
        lines = [
            f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}"
            for r in results
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if all(r.passed for r in results) else 1


def _report_row(report) -> dict:
    return {
        "t": report.t,
        "s": report.s,
        "dim": report.orbit_dim,
        "mean_curvature": report.mean_curvature,
        "norm_sq": report.norm_sq,
        "austere": report.austere,
        "cluster_ambiguous": report.cluster_ambiguous,
        "curvatures": [[v, m] for v, m in report.curvatures],
    }


def _expanded(report) -> list[float]:
    out: list[float] = []
    for v, m in report.curvatures:
        out.extend([v] * m)
    return out


def cmd_orbit(args) -> int:
    spec = action_spec(args.type)
    t = _resolve_t(args, spec)
    report = spectrum_report(spec, t, cluster_tol=args.cluster_tol)
    if args.format == "json":
        _emit(
            _json_doc(_meta("orbit", action_type=args.type), [_report_row(report)]),
            args.output,
        )
    elif args.format == "csv":
        header = ["t", "s", "dim", "mean_curvature", "norm_sq"] + [
            f"pc{i + 1:02d}" for i in range(report.orbit_dim)
        ]
        row = [report.t, report.s, report.orbit_dim, report.mean_curvature,
               report.norm_sq] + _expanded(report)
        _emit(_csv(header, [row]), args.output)
    else:
        lines = [
            f"action type {args.type}",
            f"  t = {_fmt(report.t)}   s = {_fmt(report.s)}",
            f"  orbit dimension  {report.orbit_dim}",
            f"  mean curvature   {_fmt(report.mean_curvature)}",
            f"  |shape|^2        {_fmt(report.norm_sq)}",
            f"  austere          {report.austere}",
            "  principal curvatures (value x multiplicity):",
        ]
        for v, m in report.curvatures:
            lines.append(f"    {_fmt(v)} x {m}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_scan(args) -> int:
    spec = action_spec(args.type)
    lo, hi = principal_interval(spec)
    ts = np.linspace(lo, hi, args.samples)
    reports = [spectrum_report(spec, float(t), cluster_tol=args.cluster_tol) for t in ts]
    dim = reports[0].orbit_dim
    if args.format == "json":
        _emit(
            _json_doc(
                _meta("scan", action_type=args.type, samples=args.samples),
                [_report_row(r) for r in reports],
            ),
            args.output,
        )
        return 0
    header = ["t", "s", "dim", "mean_curvature", "norm_sq"] + [
        f"pc{i + 1:02d}" for i in range(dim)
    ]
    rows = [
        [r.t, r.s, r.orbit_dim, r.mean_curvature, r.norm_sq] + _expanded(r)
        for r in reports
    ]
    if args.format == "csv":
        _emit(_csv(header, rows), args.output)
    else:
        lines = ["  ".join(header)]
        for row in rows:
            lines.append("  ".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_classify(args) -> int:
    types = [args.type] if args.type else list(ACTION_TYPES)
    rows = []
    failures = 0
    for ty in types:
        res = classify_type(ty)
        dev_min = abs(res.minimal_t - res.closed_form_minimal_t)
        dev_bi = max(
            (
                abs(a - b)
                for a, b in zip(res.biharmonic_t, res.closed_form_biharmonic_t)
            ),
            default=0.0,
        )
        ok = (
            dev_min <= PARAMETER_TOLERANCE
            and len(res.biharmonic_t) == len(res.closed_form_biharmonic_t)
            and dev_bi <= PARAMETER_TOLERANCE
        )
        failures += 0 if ok else 1
        rows.append(
            {
                "action_type": ty,
                "minimal_t": res.minimal_t,
                "minimal_s": res.minimal_s,
                "closed_form_minimal_t": res.closed_form_minimal_t,
                "minimal_deviation": dev_min,
                "minimal_austere": res.minimal_austere,
                "biharmonic_t": list(res.biharmonic_t),
                "biharmonic_s": list(res.biharmonic_s),
                "closed_form_biharmonic_t": list(res.closed_form_biharmonic_t),
                "biharmonic_deviation": dev_bi,
                "singular_dims": list(res.singular_dims),
                "closed_form": _closed_form_label(ty),
                "notes": list(res.discrepancy_notes),
                "passed": ok,
            }
        )
    if args.format == "json":
        _emit(_json_doc(_meta("classify"), rows), args.output)
    elif args.format == "csv":
        header = [
            "action_type", "minimal_t", "minimal_s", "closed_form_minimal_t",
            "minimal_deviation", "minimal_austere", "biharmonic_t",
            "closed_form_biharmonic_t", "biharmonic_deviation",
            "singular_dim_lo", "singular_dim_hi", "passed",
        ]
        csv_rows = [
            [
                r["action_type"], r["minimal_t"], r["minimal_s"],
                r["closed_form_minimal_t"], r["minimal_deviation"],
                str(r["minimal_austere"]),
                ";".join(_fmt(v) for v in r["biharmonic_t"]),
                ";".join(_fmt(v) for v in r["closed_form_biharmonic_t"]),
                r["biharmonic_deviation"], r["singular_dims"][0],
                r["singular_dims"][1], str(r["passed"]),
            ]
            for r in rows
        ]
        _emit(_csv(header, csv_rows), args.output)
    else:
        lines = []
        for r in rows:
            lines.append(f"action type {r['action_type']}")
            lines.append(
                f"  minimal orbit        t = {_fmt(r['minimal_t'])}   "
                f"s = {_fmt(r['minimal_s'])}"
            )
            lines.append(
                f"  closed-form minimal  t = {_fmt(r['closed_form_minimal_t'])}   "
                f"(deviation {r['minimal_deviation']:.2e})"
            )
            lines.append(f"  austere at minimal   {r['minimal_austere']}")
            for bt, bs in zip(r["biharmonic_t"], r["biharmonic_s"]):
                lines.append(
                    f"  proper biharmonic    t = {_fmt(bt)}   s = {_fmt(bs)}"
                )
            lines.append(
                "  closed-form biharmonic t = "
                + ", ".join(_fmt(v) for v in r["closed_form_biharmonic_t"])
                + f"   (deviation {r['biharmonic_deviation']:.2e})"
            )
            lines.append(
                f"  singular orbit dims at range endpoints: {tuple(r['singular_dims'])}"
            )
            for note in r["notes"]:
                lines.append(f"  note: {note}")
            lines.append(f"  status: {'ok' if r['passed'] else 'FAILED'}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if failures == 0 else 1


def cmd_tables(args) -> int:
    types = [args.type] if args.type else list(ACTION_TYPES)
    rows = []
    failures = 0
    for ty in types:
        spec = action_spec(ty)
        lo, hi = principal_interval(spec)
        for frac in (0.25, 0.5, 0.75):
            t = lo + frac * (hi - lo)
            deviation = compare_spectra(spec, t, tol=args.cluster_tol)
            report = spectrum_report(spec, t, cluster_tol=args.cluster_tol)
            reference = closed_form_spectrum(ty, t)
            ok = deviation <= SPECTRUM_TOLERANCE and [
                m for _, m in report.curvatures
            ] == [m for _, m in reference]
            failures += 0 if ok else 1
            rows.append(
                {
                    "action_type": ty,
                    "t": t,
                    "s": t / spec.section_ratio,
                    "closed_form": _closed_form_label(ty),
                    "expected_multiplicities": list(EXPECTED_MULTIPLICITIES[ty]),
                    "computed": [[v, m] for v, m in report.curvatures],
                    "reference": [[v, m] for v, m in reference],
                    "max_deviation": deviation,
                    "passed": ok,
                }
            )
    if args.format == "json":
        _emit(_json_doc(_meta("tables"), rows), args.output)
    elif args.format == "csv":
        header = ["action_type", "t", "s", "max_deviation", "passed"]
        _emit(
            _csv(header, [
                [r["action_type"], r["t"], r["s"], r["max_deviation"], str(r["passed"])]
                for r in rows
            ]),
            args.output,
        )
    else:
        lines = []
        for r in rows:
            lines.append(
                f"type {r['action_type']}  t = {_fmt(r['t'])}  "
                f"max deviation {r['max_deviation']:.3e}  "
                f"{'ok' if r['passed'] else 'FAILED'}"
            )
            lines.append("    computed : " + ", ".join(
                f"{_fmt(v)} x{m}" for v, m in r["computed"]
            ))
            lines.append("    reference: " + ", ".join(
                f"{_fmt(v)} x{m}" for v, m in r["reference"]
            ))
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2orbits",
        description="Orbit geometry of the cohomogeneity-one actions on G2 and SO(7)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_type=True, type_required=False):
        if with_type:
            p.add_argument(
                "--type", choices=ACTION_TYPES, required=type_required,
                help="action type",
            )
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--output", default=None, help="write the report to a file")
        p.add_argument(
            "--cluster-tol", dest="cluster_tol", type=float, default=1e-6,
            help="eigenvalue clustering tolerance",
        )

    p = sub.add_parser("verify-algebra", help="run the algebra identity suites")
    p.add_argument("--seed", type=int, default=0)
    common(p, with_type=False)
    p.set_defaults(func=cmd_verify_algebra)

    p = sub.add_parser("orbit", help="report one principal orbit")
    common(p, type_required=True)
    p.add_argument("--t", type=float, default=None, help="geodesic parameter")
    p.add_argument("--s", type=float, default=None,
                   help="section parameter (t = section_ratio * s)")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("scan", help="sweep the principal parameter range")
    common(p, type_required=True)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("classify", help="minimal / austere / biharmonic summary")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tables", help="closed-form vs computed spectra")
    common(p)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
