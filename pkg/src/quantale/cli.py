"""Command-line interface.

Subcommands:

  check-quantale   validate a quantale table file
  classify         classify a map between two quantales
  aggregate        aggregate distance matrices or fuzzy families by a rule
  verify-theorems  exhaustively confirm the preservation/laxity equivalences
  convolve         exact convolution of step-function files

Exit codes: 0 success / property holds, 1 property fails (witness printed),
2 unreadable input or exceeded budget.  Output is deterministic for a
fixed configuration: identical arguments give byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import resolve
from .continuous import LAWVERE, DDFQuantale, PointwiseDDFQuantale
from .core import FiniteQuantale
from .ddf import ddf_convolve
from .errors import (
    BridgeError,
    DDFError,
    DomainError,
    ParseError,
    QuantaleAxiomError,
    SizeBudgetError,
    StructureError,
    UnsupportedOperationError,
)
from .formats import (
    distance_to_csv,
    ddf_to_json,
    dump_json,
    load_ddf_file,
    load_distance_csv,
    load_fuzzy_file,
    load_map_file,
    load_quantale_file,
    validate_quantale_file,
)
from .morphisms import (
    REPORT_KEYS,
    classify,
    rule_morphism,
    table_morphism,
    threshold_half_morphism,
    verify_equivalences,
)
from .vcat import (
    aggregate_category,
    category_to_distance,
    category_to_fuzzy,
    check_fuzzy_qpm,
    check_quasi_pseudometric,
    diagonal_category,
    fuzzy_bridge,
    product_category,
    qpm_bridge,
)

_INPUT_ERRORS = (
    ParseError,
    StructureError,
    SizeBudgetError,
    UnsupportedOperationError,
    BridgeError,
    DomainError,
    DDFError,
    OSError,
)

DEFAULT_ROSTER = (
    "two->two",
    "chain:3->two",
    "two->chain:3",
    "three-drastic->three-drastic",
    "lawvere-trunc:2->lawvere-trunc:2",
    "grid:luk:2->grid:luk:2",
)


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _resolve_quantale(token: str):
    path = Path(token)
    if path.suffix or path.exists():
        return load_quantale_file(path)
    return resolve(token)


# -- check-quantale -----------------------------------------------------------


def cmd_check_quantale(args) -> int:
    report, _labels = validate_quantale_file(args.path)
    if args.format == "json":
        _emit(args, dump_json(report.to_dict()))
    else:
        lines = [f"valid: {'yes' if report.passed else 'no'}"]
        for v in report.violations:
            lines.append(f"  {v.axiom} at ({', '.join(v.witness)}) {v.detail}".rstrip())
        _emit(args, "\n".join(lines) + "\n")
    return 0 if report.passed else 1


# -- classify -----------------------------------------------------------------


def _build_morphism(args, V, W):
    if args.map:
        pairs = load_map_file(args.map)
        if not isinstance(V, FiniteQuantale) or not isinstance(W, FiniteQuantale):
            raise ParseError("map files need finite quantales on both sides")
        images = [None] * V.n
        for src, dst in pairs:
            i = V.index(src)
            if images[i] is not None:
                raise ParseError(f"duplicate map entry for {src!r}")
            images[i] = W.index(dst)
        missing = [V.labels[i] for i, x in enumerate(images) if x is None]
        if missing:
            raise ParseError(f"partial map: missing {', '.join(missing)}")
        return table_morphism(V, W, images, name=str(args.map))
    if args.rule == "threshold-half" and isinstance(V, PointwiseDDFQuantale):
        return threshold_half_morphism()
    return rule_morphism(args.rule, V, W)


def _format_classification_text(report) -> str:
    lines = [
        f"rule: {report.name}",
        f"domain: {report.domain}",
        f"codomain: {report.codomain}",
        f"mode: {report.mode} (seed={report.seed}, samples={report.samples})",
    ]
    data = report.to_dict()
    for key in REPORT_KEYS:
        entry = data["verdicts"][key]
        line = f"{key}: {entry['status']}"
        if "witness" in entry:
            w = entry["witness"]
            line += f"  [witness {', '.join(w['elements'])}"
            if w["lhs"] is not None:
                line += f": {w['lhs']} not below {w['rhs']}"
            if w["note"]:
                line += f" ({w['note']})"
            line += "]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    V = _resolve_quantale(args.frm)
    W = _resolve_quantale(args.to)
    if bool(args.map) == bool(args.rule):
        raise ParseError("exactly one of --map or --rule is required")
    F = _build_morphism(args, V, W)
    report = classify(F, seed=args.seed, samples=args.samples)
    if args.format == "json":
        _emit(args, dump_json(report.to_dict()))
    else:
        _emit(args, _format_classification_text(report))
    return 0 if report.preserving.ok else 1


# -- aggregate ----------------------------------------------------------------


def _combine_categories(cats, mode):
    if mode == "diagonal":
        return diagonal_category(cats)
    return product_category(cats)


def _violation_lines(violations, quantale):
    return [f"  {v.describe(quantale)}" for v in violations]


def cmd_aggregate(args) -> int:
    suffixes = {Path(p).suffix.lower() for p in args.inputs}
    if suffixes <= {".csv"}:
        return _aggregate_distance(args)
    if suffixes <= {".json"}:
        return _aggregate_fuzzy(args)
    raise ParseError("inputs must be all distance CSVs or all fuzzy JSON families")


def _aggregate_distance(args) -> int:
    mats = [load_distance_csv(p) for p in args.inputs]
    cats = [qpm_bridge(m) for m in mats]
    combined = _combine_categories(cats, args.mode)
    F = rule_morphism(args.rule, combined.quantale, LAWVERE)
    out_cat, _ = aggregate_category(F, combined)
    d_out = category_to_distance(out_cat)
    violations = check_quasi_pseudometric(d_out)
    body = distance_to_csv(d_out)
    # --out receives the aggregated matrix itself; the report always goes
    # to stdout so validity stays visible
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
    if args.format == "json":
        payload = {
            "rule": args.rule,
            "mode": args.mode,
            "valid": not violations,
            "violations": [
                {
                    "axiom": v.axiom,
                    "points": list(v.points),
                    "lhs": str(v.lhs),
                    "rhs": str(v.rhs),
                }
                for v in violations
            ],
            "matrix": body,
        }
        sys.stdout.write(dump_json(payload))
    else:
        lines = [f"rule: {args.rule}", f"mode: {args.mode}",
                 f"valid quasi-pseudometric: {'yes' if not violations else 'no'}"]
        lines += _violation_lines(violations[:3], LAWVERE)
        lines.append(f"wrote {args.out}" if args.out else body.rstrip("\n"))
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if not violations else 1


def _aggregate_fuzzy(args) -> int:
    fams = [load_fuzzy_file(p) for p in args.inputs]
    tnorm = fams[0].tnorm
    if any(f.tnorm != tnorm for f in fams):
        raise ParseError("fuzzy families must share one t-norm")
    cats = [fuzzy_bridge(f) for f in fams]
    combined = _combine_categories(cats, args.mode)
    F = rule_morphism(args.rule, combined.quantale, DDFQuantale(tnorm))
    out_cat, _ = aggregate_category(F, combined)
    fam_out = category_to_fuzzy(out_cat, tnorm)
    violations = check_fuzzy_qpm(fam_out)
    from .formats import fuzzy_to_json

    payload = {
        "rule": args.rule,
        "mode": args.mode,
        "valid": not violations,
        "violations": [
            {
                "axiom": v.axiom,
                "points": list(v.points),
                "lhs": str(v.lhs),
                "rhs": str(v.rhs),
            }
            for v in violations
        ],
        "family": fuzzy_to_json(fam_out),
    }
    if args.out:
        Path(args.out).write_text(dump_json(fuzzy_to_json(fam_out)), encoding="utf-8")
    if args.format == "json":
        sys.stdout.write(dump_json(payload))
    else:
        lines = [f"rule: {args.rule}", f"mode: {args.mode}",
                 f"valid fuzzy quasi-pseudometric: {'yes' if not violations else 'no'}"]
        lines += _violation_lines(violations[:3], DDFQuantale(tnorm))
        if args.out:
            lines.append(f"wrote {args.out}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if not violations else 1


# -- verify-theorems ----------------------------------------------------------


def cmd_verify_theorems(args) -> int:
    pairs = args.pairs or list(DEFAULT_ROSTER)
    summaries = []
    for token in pairs:
        if "->" not in token:
            raise ParseError(f"bad pair {token!r}: expected FROM->TO")
        left, _, right = token.partition("->")
        V = _resolve_quantale(left.strip())
        W = _resolve_quantale(right.strip())
        summaries.append(verify_equivalences(V, W, nmax=args.nmax))
    total_disagreements = sum(len(s.disagreements) for s in summaries)
    if args.format == "json":
        payload = {
            "nmax": args.nmax,
            "pairs": [s.to_dict() for s in summaries],
            "disagreements": total_disagreements,
        }
        _emit(args, dump_json(payload))
    else:
        lines = []
        for s in summaries:
            lines.append(
                f"{s.domain} -> {s.codomain}: {s.n_functions} functions, "
                f"preserving {s.counts['preserving']}, "
                f"separately {s.counts['separately_preserving']}, "
                f"symmetrically {s.counts['symmetrically_preserving']}, "
                f"disagreements {len(s.disagreements)}"
            )
            for sig in sorted(s.class_table):
                entry = s.class_table[sig]
                lines.append(
                    f"  {sig}: {entry['count']} (e.g. {', '.join(entry['example'])})"
                )
        lines.append(f"total disagreements: {total_disagreements}")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if total_disagreements == 0 else 1


# -- convolve -----------------------------------------------------------------


def cmd_convolve(args) -> int:
    fs = [load_ddf_file(p) for p in args.inputs]
    acc = fs[0]
    for f in fs[1:]:
        acc = ddf_convolve(acc, f, args.tnorm)
    _emit(args, dump_json(ddf_to_json(acc)))
    return 0


# -- argument plumbing ----------------------------------------------------------


def _add_common(p):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write primary output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantale",
        description="quantales, enriched categories and aggregation-map classification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-quantale", help="validate a quantale table file")
    p.add_argument("path")
    _add_common(p)
    p.set_defaults(fn=cmd_check_quantale)

    p = sub.add_parser("classify", help="classify a map between quantales")
    p.add_argument("--from", dest="frm", required=True, metavar="QUANTALE")
    p.add_argument("--to", dest="to", required=True, metavar="QUANTALE")
    p.add_argument("--map", default=None, help="map file with `src -> dst` lines")
    p.add_argument(
        "--rule",
        default=None,
        help="numeric rule: sum|max|min|prod|wsum:w1,..|proj:i|nonzero:i|gatestep|threshold-half",
    )
    _add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("aggregate", help="aggregate distances or fuzzy families")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--rule", required=True)
    p.add_argument("--mode", choices=("product", "diagonal"), default="diagonal")
    _add_common(p)
    p.set_defaults(fn=cmd_aggregate)

    p = sub.add_parser(
        "verify-theorems",
        help="check preserving == lax == triplet characterizations exhaustively",
    )
    p.add_argument("--pairs", nargs="*", default=None, metavar="FROM->TO")
    _add_common(p)
    p.set_defaults(fn=cmd_verify_theorems)

    p = sub.add_parser("convolve", help="convolve step-function files")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--tnorm", default="min")
    _add_common(p)
    p.set_defaults(fn=cmd_convolve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except QuantaleAxiomError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except _INPUT_ERRORS as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
