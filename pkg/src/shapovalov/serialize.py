"""JSON and CSV encodings.  Every number is written as a decimal string."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

from .matrix import ExactMatrix
from .partitions import Multipartition, Partition
from .symfunc import SymPoly


def label_to_json(label) -> Any:
    if isinstance(label, Multipartition):
        return [list(c) for c in label]
    if isinstance(label, (Partition, tuple)):
        return list(label)
    return label


def label_from_json(obj):
    if isinstance(obj, list):
        if obj and all(isinstance(x, list) for x in obj):
            return Multipartition(obj)
        return Partition(obj)
    return obj


def number_to_str(x) -> str:
    return str(x)  # Fraction prints as "p/q", int as decimal


def number_from_str(s: str):
    v = Fraction(s)
    return int(v) if v.denominator == 1 else v


def matrix_to_json(m: ExactMatrix) -> dict:
    return {
        "rows": [label_to_json(r) for r in m.rows],
        "cols": [label_to_json(c) for c in m.cols],
        "entries": [[number_to_str(x) for x in row] for row in m.entries],
    }


def matrix_from_json(obj: dict) -> ExactMatrix:
    entries = [[number_from_str(str(x)) for x in row] for row in obj["entries"]]
    rows = [label_from_json(r) for r in obj["rows"]] if "rows" in obj else None
    cols = [label_from_json(c) for c in obj["cols"]] if "cols" in obj else None
    return ExactMatrix(entries, rows, cols)


def _label_str(label) -> str:
    return json.dumps(label_to_json(label), separators=(",", ":"))


def matrix_to_csv(m: ExactMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [_label_str(c) for c in m.cols])
    for label, row in zip(m.rows, m.entries):
        w.writerow([_label_str(label)] + [number_to_str(x) for x in row])
    return buf.getvalue()


def rows_to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([x if isinstance(x, str) else json.dumps(x) if isinstance(x, (list, bool)) else str(x)
                    for x in row])
    return buf.getvalue()


def sympoly_to_json(f: SymPoly) -> dict:
    terms = []
    for lam, c in sorted(f.coeffs.items(), reverse=True):
        c = Fraction(c)
        terms.append({"index": list(lam), "num": str(c.numerator), "den": str(c.denominator)})
    return {"degree": f.degree, "basis": f.basis, "terms": terms}


def sympoly_from_json(obj: dict) -> SymPoly:
    coeffs = {Partition(t["index"]): Fraction(int(t["num"]), int(t["den"])) for t in obj["terms"]}
    return SymPoly(obj["degree"], obj["basis"], coeffs)


def snf_to_json(factors, square: bool = True) -> dict:
    out = {"invariant_factors": [str(x) for x in factors]}
    if square:
        det = 1
        for x in factors:
            det *= x
        out["det"] = str(det)
    return out


def basis_family_to_json(fam) -> dict:
    out = {"family": fam.family, "p": fam.p, "r": fam.r}
    if fam.i is not None:
        out["i"] = fam.i
    out["expansions"] = [
        {"index": list(lam), "terms": sympoly_to_json(f)["terms"]}
        for lam, f in sorted(fam.expansions.items(), key=lambda kv: (kv[0].size, tuple(-x for x in kv[0])))
    ]
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


_STR_INT = {"type": "string", "pattern": "^-?[0-9]+$"}
_STR_RAT = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}
_PART = {"type": "array", "items": {"type": "integer", "minimum": 1}}
_LABEL = {"anyOf": [_PART, {"type": "array", "items": _PART}, {"type": "integer"}]}
_TERM = {
    "type": "object",
    "required": ["index", "num", "den"],
    "properties": {"index": _PART, "num": _STR_INT, "den": _STR_INT},
}

SCHEMAS: dict[str, dict] = {
    "matrix": {
        "type": "object",
        "required": ["rows", "cols", "entries"],
        "properties": {
            "rows": {"type": "array", "items": _LABEL},
            "cols": {"type": "array", "items": _LABEL},
            "entries": {"type": "array", "items": {"type": "array", "items": _STR_RAT}},
        },
    },
    "sympoly": {
        "type": "object",
        "required": ["degree", "basis", "terms"],
        "properties": {
            "degree": {"type": "integer", "minimum": 0},
            "basis": {"enum": ["h", "m", "p"]},
            "terms": {"type": "array", "items": _TERM},
        },
    },
    "snf": {
        "type": "object",
        "required": ["invariant_factors"],
        "properties": {
            "invariant_factors": {"type": "array", "items": _STR_INT},
            "det": _STR_INT,
        },
    },
    "sform_invariants": {
        "type": "object",
        "required": ["p", "r", "degree", "computed", "predicted", "match"],
        "properties": {
            "computed": {"type": "array", "items": _STR_INT},
            "predicted": {"type": "array", "items": _STR_INT},
            "match": {"type": "boolean"},
        },
    },
    "shapovalov": {
        "type": "object",
        "required": ["family", "rank", "degree", "computed", "predicted", "match"],
        "properties": {
            "computed": {"type": "array", "items": _STR_INT},
            "predicted": {"type": "array", "items": _STR_INT},
            "predicted_multiset": {"type": "array", "items": _STR_INT},
            "match": {"type": "boolean"},
        },
    },
    "hecke_blocks": {
        "type": "object",
        "required": ["l", "degrees"],
        "properties": {
            "degrees": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["d", "invariants", "provenance"],
                    "properties": {
                        "invariants": {"type": "array", "items": _STR_INT},
                        "provenance": {"enum": ["formula", "computed"]},
                    },
                },
            }
        },
    },
    "report": {
        "type": "object",
        "required": ["p", "r", "degrees"],
        "properties": {
            "p": {"type": "integer"},
            "r": {"type": "integer"},
            "degrees": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["d", "computed", "predicted", "match"],
                    "properties": {
                        "d": {"type": "integer"},
                        "computed": {"type": "array", "items": _STR_INT},
                        "predicted": {"type": "array", "items": _STR_INT},
                        "match": {"type": "boolean"},
                    },
                },
            },
        },
    },
    "basis_family": {
        "type": "object",
        "required": ["family", "p", "r", "expansions"],
        "properties": {
            "family": {"enum": ["g", "G", "M"]},
            "expansions": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["index", "terms"],
                    "properties": {"index": _PART, "terms": {"type": "array", "items": _TERM}},
                },
            },
        },
    },
    "error": {
        "type": "object",
        "required": ["error", "message", "status"],
        "properties": {"status": {"type": "integer"}},
    },
}
