"""Command-line entry point.  Run ``shapovalov --help`` for the subcommands."""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize as ser
from .bases import (
    M_basis,
    binomial_divisibility_check,
    build_G_basis_r1,
    build_g_basis,
    check_G_properties,
    check_g_basis_properties,
)
from .divisors import check_conjecture, hecke_block_invariants, predicted_prime_power, predicted_shapovalov
from .forms import cartan, gram_power, gram_s_form, shapovalov_gram
from .matrix import CrossCheckError
from .partitions import is_prime
from .snf import smith_normal_form
from .symfunc import transition_matrix

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CROSSCHECK = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(name):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {v}")
        return v
    return conv


def _nonneg(name):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if v < 0:
            raise argparse.ArgumentTypeError(f"{name} must be non-negative, got {v}")
        return v
    return conv


def _prime(text):
    v = _positive("p")(text)
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"p must be prime, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")

    parser = _Parser(prog="shapovalov", description="Exact Gram matrices and Smith normal forms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix of the s-form")
    p.add_argument("--s", type=_positive("s"), required=True)
    p.add_argument("--degree", type=_nonneg("degree"), required=True)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form of a JSON matrix")
    p.add_argument("--input", default="-", help="matrix JSON file, '-' for stdin")

    p = sub.add_parser("sform-invariants", parents=[common], help="SNF of the p^r-form vs the closed form")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--r", type=_positive("r"), required=True)
    p.add_argument("--degree", type=_nonneg("degree"), required=True)

    p = sub.add_parser("shapovalov", parents=[common], help="Shapovalov Gram SNF vs prediction")
    p.add_argument("--family", choices=["A", "D", "E"], type=str.upper, required=True)
    p.add_argument("--rank", type=_positive("rank"), required=True)
    p.add_argument("--degree", type=_nonneg("degree"), required=True)

    p = sub.add_parser("hecke-blocks", parents=[common], help="Hecke block invariants per degree")
    p.add_argument("--l", type=_positive("l"), required=True)
    p.add_argument("--dmax", type=_nonneg("dmax"), required=True)

    p = sub.add_parser("transition", parents=[common], help="transition matrix between bases")
    p.add_argument("--from", dest="source", choices=["p", "h", "m"], required=True)
    p.add_argument("--to", dest="target", choices=["m", "p", "h"], required=True)
    p.add_argument("--degree", type=_nonneg("degree"), required=True)

    p = sub.add_parser("bases", parents=[common], help="auxiliary bases and their property checks")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--r", type=_positive("r"), required=True)
    p.add_argument("--dmax", type=_positive("dmax"), required=True)
    p.add_argument("--family", choices=["g", "G", "M"], default="g")

    p = sub.add_parser("verify", parents=[common], help="sweep SNF(X_{p^r}) against the closed form")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--r", type=_positive("r"), required=True)
    p.add_argument("--dmax", type=_nonneg("dmax"), default=6)
    return parser


def _strs(xs):
    return [str(x) for x in xs]


def _read_matrix(path):
    text = sys.stdin.read() if path == "-" else open(path).read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not valid JSON: {exc}")
    if isinstance(obj, list):
        obj = {"entries": obj}
    if not isinstance(obj, dict) or "entries" not in obj:
        raise UsageError("input must be an object with an 'entries' field")
    try:
        return ser.matrix_from_json(obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"bad matrix: {exc}")


def _invariants_csv(columns: dict[str, list]) -> str:
    header = ["position"] + list(columns)
    n = max((len(v) for v in columns.values()), default=0)
    rows = [[k + 1] + [v[k] if k < len(v) else "" for v in columns.values()] for k in range(n)]
    return ser.rows_to_csv(header, rows)


def cmd_gram(args):
    m = gram_s_form(args.s, args.degree)
    return ser.matrix_to_json(m), lambda: ser.matrix_to_csv(m)


def cmd_snf(args):
    m = _read_matrix(args.input)
    if not m.is_integral():
        raise UsageError("Smith normal form needs an integer matrix")
    res = smith_normal_form(m.to_integral())
    square = m.shape[0] == m.shape[1]
    out = ser.snf_to_json(res.invariant_factors, square)
    return out, lambda: _invariants_csv({"invariant_factor": out["invariant_factors"]})


def cmd_sform(args):
    computed = smith_normal_form(gram_power(args.p, args.r, args.degree)).invariant_factors
    predicted = predicted_prime_power(args.p, args.r, args.degree)
    out = {
        "p": args.p, "r": args.r, "degree": args.degree,
        "computed": _strs(computed),
        "predicted": _strs(predicted.as_chain()),
        "predicted_multiset": _strs(predicted),
        "match": tuple(computed) == predicted.as_chain(),
        "proven_regime": args.r <= args.p,
    }
    return out, lambda: _invariants_csv({"computed": out["computed"], "predicted": out["predicted"]})


def cmd_shapovalov(args):
    try:
        spec = cartan(args.family, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc))
    computed = smith_normal_form(shapovalov_gram(spec, args.degree)).invariant_factors
    predicted = predicted_shapovalov(spec.invariant_factors, args.degree)
    out = {
        "family": spec.family, "rank": spec.rank, "degree": args.degree,
        "cartan_invariants": _strs(spec.invariant_factors),
        "computed": _strs(computed),
        "predicted": _strs(predicted.as_chain()),
        "predicted_multiset": _strs(predicted),
        "match": tuple(computed) == predicted.as_chain(),
    }
    return out, lambda: _invariants_csv({"computed": out["computed"], "predicted": out["predicted"]})


def cmd_hecke(args):
    if args.l < 2:
        raise UsageError("l must be at least 2")
    degrees = []
    for d in range(args.dmax + 1):
        hb = hecke_block_invariants(args.l, d)
        degrees.append({"d": d, "invariants": _strs(hb.invariants), "provenance": hb.provenance})
    out = {"l": args.l, "degrees": degrees}

    def csv_text():
        rows = [[e["d"], e["provenance"], " ".join(e["invariants"])] for e in degrees]
        return ser.rows_to_csv(["d", "provenance", "invariants"], rows)
    return out, csv_text


def cmd_transition(args):
    if args.source == args.target:
        raise UsageError("--from and --to must differ")
    m = transition_matrix(args.source, args.target, args.degree).matrix
    return ser.matrix_to_json(m), lambda: ser.matrix_to_csv(m)


def cmd_bases(args):
    p, r, dmax = args.p, args.r, args.dmax
    if args.family == "g":
        fams = build_g_basis(p, r, dmax)
        families = [ser.basis_family_to_json(fams[i]) for i in sorted(fams)]
        checks = check_g_basis_properties(p, r, dmax)
        checks["exact_divisions"] = all(f.exact for f in fams.values())
        checks["binomial_divisibility"] = all(
            binomial_divisibility_check(n, p).holds for n in range(1, dmax + 1))
    elif args.family == "G":
        if r != 1:
            raise UsageError("the G family is built for r = 1")
        families = [ser.basis_family_to_json(build_G_basis_r1(p, dmax))]
        checks = check_G_properties(p, dmax)
    else:
        if r > p:
            raise UsageError("the M family is built for r <= p")
        fam = None
        for d in range(1, dmax + 1):
            part = M_basis(p, r, d)
            if fam is None:
                fam = part
            else:
                fam.expansions.update(part.expansions)
        fam.degree = dmax
        families = [ser.basis_family_to_json(fam)]
        checks = {"integral": all(f.is_integral() for f in fam.expansions.values())}
    out = {"p": p, "r": r, "dmax": dmax, "family": args.family,
           "families": families, "checks": checks}

    def csv_text():
        rows = []
        for fam in families:
            for e in fam["expansions"]:
                for t in e["terms"]:
                    coeff = t["num"] if t["den"] == "1" else f"{t['num']}/{t['den']}"
                    rows.append([fam["family"], fam.get("i", ""), e["index"], t["index"], coeff])
        return ser.rows_to_csv(["family", "i", "index", "term", "coefficient"], rows)
    return out, csv_text


def cmd_verify(args):
    if args.r > args.p:
        print(f"*** conjectural regime: r = {args.r} > p = {args.p}; "
              "a mismatch here is a finding, not an error ***", file=sys.stderr)
    report = check_conjecture(args.p, args.r, args.dmax)
    out = report.to_dict()
    out["proven_regime"] = report.proven_regime
    out["all_match"] = report.all_match

    def csv_text():
        rows = [[e["d"], e["match"], " ".join(e["computed"]), " ".join(e["predicted"])]
                for e in out["degrees"]]
        return ser.rows_to_csv(["d", "match", "computed", "predicted"], rows)
    return out, csv_text


COMMANDS = {
    "gram": cmd_gram,
    "snf": cmd_snf,
    "sform-invariants": cmd_sform,
    "shapovalov": cmd_shapovalov,
    "hecke-blocks": cmd_hecke,
    "transition": cmd_transition,
    "bases": cmd_bases,
    "verify": cmd_verify,
}


def _emit(text: str, path: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _error(kind: str, message: str, status: int) -> int:
    sys.stderr.write(ser.dumps({"error": kind, "message": message, "status": status}))
    return status


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload, csv_text = COMMANDS[args.command](args)
        text = csv_text() if args.format == "csv" else ser.dumps(payload)
        _emit(text, args.output)
    except UsageError as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    except CrossCheckError as exc:
        return _error("cross_check", str(exc), EXIT_CROSSCHECK)
    except OSError as exc:
        return _error("io", str(exc), EXIT_USAGE)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
