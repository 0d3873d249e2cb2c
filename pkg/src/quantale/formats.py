"""File formats: quantale tables, step functions, distance matrices,
relations, fuzzy families and morphism map files.

All rational values travel as strings ("3/4", "2", "inf") so nothing is
ever parsed through floating point.  Writers emit canonical, sorted,
newline-terminated output: identical data gives byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction

from .arith import ExtNonNeg, ext
from .core import FiniteQuantale, validate_finite_quantale
from .ddf import StepDDF
from .errors import ParseError
from .vcat import DistanceMatrix, FuzzyMetricFamily, distance_matrix, fuzzy_family

# -- quantale table files -----------------------------------------------------
#
#   elements = [bot, x, top]
#   leq = [(bot,x), (x,top)]          # reflexive pairs optional; closure applied
#   tensor = { (x,x): bot, ... }      # symmetric pairs may be omitted
#   unit = top

_KEY_RE = re.compile(r"^[ \t]*(elements|leq|tensor|unit)\s*=", re.M)


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _split_statements(text: str) -> dict:
    statements = {}
    matches = list(_KEY_RE.finditer(text))
    if not matches:
        raise ParseError("no quantale keys found")
    for i, m in enumerate(matches):
        end = matches[i + 1].start() if i + 1 < len(matches) else len(text)
        key = m.group(1)
        if key in statements:
            raise ParseError(f"duplicate key {key!r}")
        statements[key] = text[m.end() : end].strip()
    missing = {"elements", "leq", "tensor", "unit"} - set(statements)
    if missing:
        raise ParseError(f"missing keys: {', '.join(sorted(missing))}")
    return statements


def _parse_label_list(text: str):
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("elements must be a [a, b, ...] list")
    inner = body[1:-1].strip()
    if not inner:
        raise ParseError("element list is empty")
    return [t.strip() for t in inner.split(",") if t.strip()]


_PAIR_RE = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)")


def _parse_pairs(text: str):
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("leq must be a [(a,b), ...] list")
    return [(a, b) for a, b in _PAIR_RE.findall(body)]


_TENSOR_RE = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)\s*:\s*([^,{}()\s]+)")


def _parse_tensor_entries(text: str):
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ParseError("tensor must be a {(a,b): c, ...} table")
    return [(a, b, c) for a, b, c in _TENSOR_RE.findall(body)]


def parse_quantale_tables(text: str):
    """Parse a quantale file into (labels, leq, tensor, unit) raw tables.

    Reflexive order pairs may be omitted and the transitive closure is
    applied; symmetric tensor entries may be omitted.  Conflicting or
    missing tensor entries are rejected here, before any axiom checking.
    """
    statements = _split_statements(_strip_comments(text))
    labels = _parse_label_list(statements["elements"])
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate element labels")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)

    def look(label):
        if label not in index:
            raise ParseError(f"unknown element label {label!r}")
        return index[label]

    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in _parse_pairs(statements["leq"]):
        leq[look(a)][look(b)] = True
    for k in range(n):  # transitive closure
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True

    tensor = [[None] * n for _ in range(n)]
    for a, b, c in _parse_tensor_entries(statements["tensor"]):
        i, j, k = look(a), look(b), look(c)
        for p, q in ((i, j), (j, i)):
            if tensor[p][q] is not None and tensor[p][q] != k:
                raise ParseError(
                    f"ambiguous tensor entry ({labels[p]},{labels[q]})"
                )
            tensor[p][q] = k
    for i in range(n):
        for j in range(n):
            if tensor[i][j] is None:
                raise ParseError(
                    f"incomplete tensor table: missing ({labels[i]},{labels[j]})"
                )

    unit_label = statements["unit"].strip()
    return labels, leq, tensor, look(unit_label)


def load_quantale_file(path) -> FiniteQuantale:
    with open(path, encoding="utf-8") as fh:
        labels, leq, tensor, unit = parse_quantale_tables(fh.read())
    return FiniteQuantale(labels, leq, tensor, unit, name=str(path))


def validate_quantale_file(path):
    """Returns (AxiomReport, labels); parse problems raise ParseError."""
    with open(path, encoding="utf-8") as fh:
        labels, leq, tensor, unit = parse_quantale_tables(fh.read())
    return validate_finite_quantale(labels, leq, tensor, unit), labels


# -- step functions -----------------------------------------------------------


def ddf_to_json(f: StepDDF) -> dict:
    return {
        "steps": [
            {"breakpoint": str(b), "value": str(v)}
            for b, v in zip(f.breakpoints, f.values)
        ],
        "value_at_infinity": str(f.value_at_infinity),
    }


def ddf_from_json(data) -> StepDDF:
    if isinstance(data, list):
        steps, vinf = data, None
    elif isinstance(data, dict):
        steps = data.get("steps", [])
        vinf = data.get("value_at_infinity")
    else:
        raise ParseError("a step function must be a JSON array or object")
    jumps = []
    for item in steps:
        try:
            jumps.append((Fraction(str(item["breakpoint"])), Fraction(str(item["value"]))))
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"bad step entry {item!r}: {e}") from None
    try:
        f = StepDDF.from_jumps(jumps)
    except Exception as e:
        raise ParseError(f"invalid step function: {e}") from None
    if vinf is not None and Fraction(str(vinf)) != f.value_at_infinity:
        raise ParseError(
            "value_at_infinity must equal the supremum of the finite values"
        )
    return f


def load_ddf_file(path) -> StepDDF:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: {e}") from None
    return ddf_from_json(data)


def dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def save_ddf_file(path, f: StepDDF):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(ddf_to_json(f)))


# -- distance matrices --------------------------------------------------------


def parse_distance_csv(text: str) -> DistanceMatrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if len(rows) < 2:
        raise ParseError("distance matrix needs a header row and one data row")
    points = [c.strip() for c in rows[0][1:]]
    if not points:
        raise ParseError("distance matrix header names no points")
    entries = []
    for row in rows[1:]:
        if len(row) != len(points) + 1:
            raise ParseError(f"row {row[0]!r} has {len(row) - 1} entries, expected {len(points)}")
        try:
            entries.append([ext(c.strip()) for c in row[1:]])
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad distance value in row {row[0]!r}: {e}") from None
    labels = [row[0].strip() for row in rows[1:]]
    if labels != points:
        raise ParseError("row labels must match column labels in the same order")
    return distance_matrix(points, entries)


def load_distance_csv(path) -> DistanceMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_distance_csv(fh.read())


def distance_to_csv(d: DistanceMatrix) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + list(d.points))
    for label, row in zip(d.points, d.entries):
        writer.writerow([label] + [str(v) for v in row])
    return out.getvalue()


# -- relations ----------------------------------------------------------------


def parse_relation(text: str):
    """Lines of `a b` pairs; an optional `points = a b c` line lists
    isolated points.  Returns (points, pairs)."""
    pairs = []
    declared = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("points"):
            _, _, rest = line.partition("=")
            declared = rest.replace(",", " ").split()
            continue
        parts = line.replace("->", " ").split()
        if len(parts) != 2:
            raise ParseError(f"bad relation line {raw!r}")
        pairs.append((parts[0], parts[1]))
    seen = []
    for a, b in pairs:
        for p in (a, b):
            if p not in seen:
                seen.append(p)
    points = declared if declared is not None else seen
    return points, pairs


def load_relation_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_relation(fh.read())


# -- fuzzy families -----------------------------------------------------------


def fuzzy_from_json(data, *, base_dir=None) -> FuzzyMetricFamily:
    if not isinstance(data, dict):
        raise ParseError("fuzzy family must be a JSON object")
    try:
        points = [str(p) for p in data["points"]]
        tnorm = str(data["tnorm"])
        entries = data["entries"]
    except KeyError as e:
        raise ParseError(f"fuzzy family missing key {e}") from None
    n = len(points)
    idx = {p: i for i, p in enumerate(points)}
    rows = [[None] * n for _ in range(n)]
    for key, value in entries.items():
        try:
            a, b = (s.strip() for s in key.split(","))
            i, j = idx[a], idx[b]
        except (ValueError, KeyError):
            raise ParseError(f"bad fuzzy entry key {key!r}") from None
        if isinstance(value, str):
            if base_dir is None:
                raise ParseError("file references need a base directory")
            rows[i][j] = load_ddf_file(base_dir / value)
        else:
            rows[i][j] = ddf_from_json(value)
    for i in range(n):
        for j in range(n):
            if rows[i][j] is None:
                raise ParseError(
                    f"fuzzy family missing entry {points[i]},{points[j]}"
                )
    return fuzzy_family(points, rows, tnorm)


def load_fuzzy_file(path) -> FuzzyMetricFamily:
    from pathlib import Path

    p = Path(path)
    with open(p, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: {e}") from None
    return fuzzy_from_json(data, base_dir=p.parent)


def fuzzy_to_json(fam: FuzzyMetricFamily) -> dict:
    return {
        "points": list(fam.points),
        "tnorm": fam.tnorm,
        "entries": {
            f"{a},{b}": ddf_to_json(fam.entries[i][j])
            for i, a in enumerate(fam.points)
            for j, b in enumerate(fam.points)
        },
    }


# -- morphism map files -------------------------------------------------------


def parse_map_file(text: str):
    """Lines of `src -> dst` over element labels; returns list of pairs."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ParseError(f"bad map line {raw!r}: expected `src -> dst`")
        src, _, dst = line.partition("->")
        out.append((src.strip(), dst.strip()))
    if not out:
        raise ParseError("empty map file")
    return out


def load_map_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_map_file(fh.read())
