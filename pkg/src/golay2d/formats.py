"""Serialization: JSON function/spec/array schemas, CSV arrays, correlation tables.

Array CSV carries a leading '# q=<int>' line so the alphabet travels with the
data; rows follow row-major as comma-separated integers.  Correlation CSV has
one row per u1 from -(L1-1) to L1-1 and one column per u2 ascending; cells
print as plain integers whenever the value is exactly a rational integer,
as 'a+bi' with integer parts when it is exactly a Gaussian integer, and as
12-significant-digit floats otherwise.  Integer and Gaussian-integer cells
re-parse to exact values; float cells do not, so JSON (which stores the raw
exponent-count vectors) is the lossless interchange format for every q.
"""

from __future__ import annotations

import json
import re

from .boolfunc import GeneralizedBooleanFunction, QaryArray
from .constructions import GcapBasicSpec, GcapGeneralSpec, GcasSpec
from .correlation import CorrelationTable, CorrelationValue
from .papr import PaprReport
from .verify import VerificationResult

__all__ = [
    "function_to_json_dict",
    "function_from_json_dict",
    "array_to_csv",
    "array_from_csv",
    "array_to_json_dict",
    "array_from_json_dict",
    "load_array",
    "save_array",
    "format_correlation_value",
    "parse_correlation_value",
    "correlation_table_to_csv",
    "correlation_table_from_csv",
    "correlation_table_to_json_dict",
    "correlation_table_from_json_dict",
    "parse_construction_spec",
    "spec_to_json_dict",
    "papr_report_to_json_dict",
    "verification_to_json_dict",
    "GEN_KINDS",
]

GEN_KINDS = ("gcap-basic", "gcap-general", "mate", "gcas", "gdj", "gcs1d")


# ---------------------------------------------------------------------------
# Boolean functions
# ---------------------------------------------------------------------------

def function_to_json_dict(f: GeneralizedBooleanFunction) -> dict:
    return {
        "q": f.q,
        "n": f.n,
        "m": f.m,
        "terms": [{"coeff": c, "vars": list(vs)} for c, vs in f.terms],
        "constant": f.constant,
    }


def function_from_json_dict(d: dict) -> GeneralizedBooleanFunction:
    try:
        terms = [(t["coeff"], t["vars"]) for t in d.get("terms", [])]
        return GeneralizedBooleanFunction(
            d["q"], d["n"], d["m"], terms, constant=d.get("constant", 0)
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed function spec: {exc}") from exc


# ---------------------------------------------------------------------------
# Arrays
# ---------------------------------------------------------------------------

def array_to_csv(arr: QaryArray) -> str:
    lines = [f"# q={arr.q}"]
    lines += [",".join(str(int(x)) for x in row) for row in arr.entries]
    return "\n".join(lines) + "\n"


def array_from_csv(text: str, q: int | None = None) -> QaryArray:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = re.search(r"q\s*=\s*(\d+)", line)
            if match:
                q = int(match.group(1))
            continue
        rows.append([int(cell) for cell in line.split(",")])
    if q is None:
        raise ValueError("array CSV has no '# q=' header and no q was supplied")
    return QaryArray(q, rows)


def array_to_json_dict(arr: QaryArray) -> dict:
    return {"q": arr.q, "entries": [[int(x) for x in row] for row in arr.entries]}


def array_from_json_dict(d: dict) -> QaryArray:
    try:
        return QaryArray(d["q"], d["entries"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed array JSON: {exc}") from exc


def load_array(path, q: int | None = None) -> QaryArray:
    """Read an array file; JSON when the content starts with '{', else CSV."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return array_from_json_dict(json.loads(text))
    return array_from_csv(text, q=q)


def save_array(arr: QaryArray, path, fmt: str = "csv"):
    with open(path, "w", encoding="utf-8") as fh:
        if fmt == "csv":
            fh.write(array_to_csv(arr))
        elif fmt == "json":
            json.dump(array_to_json_dict(arr), fh)
            fh.write("\n")
        else:
            raise ValueError(f"unknown array format {fmt!r}")


# ---------------------------------------------------------------------------
# Correlation values and tables
# ---------------------------------------------------------------------------

_INT_CELL = re.compile(r"[+-]?\d+")
_GAUSS_CELL = re.compile(r"([+-]?\d+)([+-]\d+)i")


def format_correlation_value(v: CorrelationValue) -> str:
    z = v.to_complex()
    a, b = round(z.real), round(z.imag)
    try:
        exact = v == CorrelationValue.from_gaussian(a, b, v.q)
    except ValueError:
        exact = False
    if exact:
        return str(a) if b == 0 else f"{a}{b:+d}i"
    if v == v.conjugate():
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}i"


def parse_correlation_value(cell: str, q: int) -> CorrelationValue:
    cell = cell.strip()
    if _INT_CELL.fullmatch(cell):
        return CorrelationValue.from_int(int(cell), q)
    match = _GAUSS_CELL.fullmatch(cell)
    if match:
        return CorrelationValue.from_gaussian(int(match.group(1)), int(match.group(2)), q)
    raise ValueError(
        f"cell {cell!r} is not an exact integer or Gaussian integer; "
        "use the JSON table format for such values"
    )


def correlation_table_to_csv(table: CorrelationTable) -> str:
    lines = [f"# q={table.q} L1={table.L1} L2={table.L2}"]
    for u1 in range(-(table.L1 - 1), table.L1):
        cells = [
            format_correlation_value(table.value(u1, u2))
            for u2 in range(-(table.L2 - 1), table.L2)
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def correlation_table_from_csv(text: str, q: int | None = None) -> CorrelationTable:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = re.search(r"q\s*=\s*(\d+)", line)
            if match:
                q = int(match.group(1))
            continue
        rows.append(line.split(","))
    if q is None:
        raise ValueError("table CSV has no '# q=' header and no q was supplied")
    if not rows or len(rows) % 2 == 0 or len(rows[0]) % 2 == 0:
        raise ValueError("table CSV must have odd row and column counts")
    L1 = (len(rows) + 1) // 2
    L2 = (len(rows[0]) + 1) // 2
    grid = [[parse_correlation_value(cell, q) for cell in row] for row in rows]
    return CorrelationTable(q, L1, L2, grid)


def correlation_table_to_json_dict(table: CorrelationTable) -> dict:
    return {
        "q": table.q,
        "L1": table.L1,
        "L2": table.L2,
        "counts": [
            [list(table.value(u1, u2).counts) for u2 in range(-(table.L2 - 1), table.L2)]
            for u1 in range(-(table.L1 - 1), table.L1)
        ],
    }


def correlation_table_from_json_dict(d: dict) -> CorrelationTable:
    try:
        q = d["q"]
        grid = [[CorrelationValue(q, cell) for cell in row] for row in d["counts"]]
        return CorrelationTable(q, d["L1"], d["L2"], grid)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed table JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# Construction specs
# ---------------------------------------------------------------------------

def _take(d: dict, kind: str, required, optional):
    unknown = set(d) - set(required) - set(optional)
    if unknown:
        raise ValueError(f"unknown keys for {kind} spec: {sorted(unknown)}")
    missing = [k for k in required if k not in d]
    if missing:
        raise ValueError(f"{kind} spec is missing keys: {missing}")


def parse_construction_spec(kind: str, d: dict):
    """Validate a spec dict for the given kind.

    Returns a spec dataclass for the pair/set constructions and a kwargs dict
    for the 1-D sequence constructions.
    """
    if kind in ("gcap-general", "mate"):
        _take(d, kind, ("q", "n", "m", "pi"), ("p", "p0"))
        return GcapGeneralSpec(
            d["q"], d["n"], d["m"], d["pi"], d.get("p"), d.get("p0", 0)
        )
    if kind == "gcap-basic":
        _take(d, kind, ("q", "n", "m", "pi1", "pi2"), ("p", "lambda", "p0"))
        return GcapBasicSpec(
            d["q"], d["n"], d["m"], d["pi1"], d["pi2"],
            d.get("p"), d.get("lambda"), d.get("p0", 0),
        )
    if kind == "gcas":
        _take(d, kind, ("q", "n", "m", "blocks"), ("p", "p0"))
        return GcasSpec(d["q"], d["n"], d["m"], d["blocks"], d.get("p"), d.get("p0", 0))
    if kind == "gdj":
        _take(d, kind, ("q", "m", "pi"), ("p", "p0"))
        return {"q": d["q"], "m": d["m"], "pi": d["pi"],
                "p": d.get("p"), "p0": d.get("p0", 0)}
    if kind == "gcs1d":
        _take(d, kind, ("q", "m", "blocks"), ("p", "p0"))
        return {"q": d["q"], "m": d["m"], "blocks": d["blocks"],
                "p": d.get("p"), "p0": d.get("p0", 0)}
    raise ValueError(f"unknown construction kind {kind!r}; choose from {GEN_KINDS}")


def spec_to_json_dict(spec) -> dict:
    if isinstance(spec, GcapGeneralSpec):
        return {"q": spec.q, "n": spec.n, "m": spec.m, "pi": list(spec.pi),
                "p": list(spec.p), "p0": spec.p0}
    if isinstance(spec, GcapBasicSpec):
        return {"q": spec.q, "n": spec.n, "m": spec.m, "pi1": list(spec.pi1),
                "pi2": list(spec.pi2), "p": list(spec.p),
                "lambda": list(spec.lam), "p0": spec.p0}
    if isinstance(spec, GcasSpec):
        return {"q": spec.q, "n": spec.n, "m": spec.m,
                "blocks": [list(b) for b in spec.blocks],
                "p": list(spec.p), "p0": spec.p0}
    raise TypeError(f"cannot serialize {type(spec).__name__}")


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def papr_report_to_json_dict(report: PaprReport) -> dict:
    return {
        "per_row": list(report.per_row),
        "per_col": list(report.per_col),
        "row_bound": report.row_bound,
        "col_bound": report.col_bound,
        "oversampling": report.oversampling,
    }


def verification_to_json_dict(result: VerificationResult) -> dict:
    return {
        "passed": result.passed,
        "expected_center": result.expected_center,
        "center": format_correlation_value(result.center_value),
        "violations": [
            {"shift": [u1, u2], "value": [z.real, z.imag]}
            for (u1, u2), z in result.violations
        ],
        "truncated": result.truncated,
        "notes": list(result.notes),
    }
