"""Command-line front end.

Subcommands: ``check``, ``twist``, ``derive``, ``construct``, ``cross-check``
and ``catalog``.  Algebras are addressed either as ``catalog:<name>`` (with
optional ``?a=1&b=2`` parameters) or as a path to an algebra document; maps
(for ``twist --by``) must be catalog references.  Exit codes: 0 success/pass,
1 checker reported violations (the report is still emitted), 2 input or
validation error, 3 precondition failure (e.g. the twisting map is not an
endomorphism).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog as _catalog
from .axioms import PROFILES
from .constructions import (
    derived2,
    derived3,
    derived_bt,
    hly_from_homlie,
    ly_from_malcev,
    sts_from_alg,
    supercommutator,
    yau_twist,
)
from .document import algebra_to_document, load_algebra, save_algebra
from .errors import (
    BadArity,
    ConstraintViolation,
    DimensionMismatch,
    DomainError,
    EvennessViolation,
    HomlyError,
    MapsDoNotCommute,
    MissingOperation,
    NoConstructionPath,
    NonIdentityTwist,
    NotEndomorphism,
    NotHomLie,
    ParseError,
    PoleError,
    UnknownEntry,
    ValidationError,
)
from .field import ScalarDomain, format_scalar
from .reports import CrossCheckReport, Report
from .superspace import LinearMap, format_vector
from .tensorops import Algebra, evaluate_algebra

_INPUT_ERRORS = (
    ParseError,
    ValidationError,
    DomainError,
    DimensionMismatch,
    EvennessViolation,
    UnknownEntry,
    ConstraintViolation,
    PoleError,
    NoConstructionPath,
    FileNotFoundError,
    IsADirectoryError,
)
_PRECONDITION_ERRORS = (
    NotEndomorphism,
    MapsDoNotCommute,
    MissingOperation,
    NotHomLie,
    NonIdentityTwist,
    BadArity,
)


class RefError(ValidationError):
    pass


def parse_ref(ref: str):
    """Split a ``catalog:name?k=v`` reference; None means a file path."""
    if not ref.startswith("catalog:"):
        return None
    body = ref[len("catalog:") :]
    name, _, query = body.partition("?")
    if not name:
        raise RefError(f"empty catalog name in {ref!r}")
    params = {}
    if query:
        for piece in query.split("&"):
            key, eq, value = piece.partition("=")
            if not eq or not key:
                raise RefError(f"bad parameter {piece!r} in {ref!r}")
            params[key] = value
    return name, params


def resolve_algebra(ref: str) -> Algebra:
    parsed = parse_ref(ref)
    if parsed is None:
        return load_algebra(ref)
    name, params = parsed
    obj = _catalog.instantiate(name, params)
    if not isinstance(obj, Algebra):
        raise RefError(f"{ref!r} names a map, not an algebra")
    return obj


def resolve_map(ref: str) -> LinearMap:
    parsed = parse_ref(ref)
    if parsed is None:
        raise RefError("twisting maps must be catalog references (catalog:<name>)")
    name, params = parsed
    obj = _catalog.instantiate(name, params)
    if not isinstance(obj, LinearMap):
        raise RefError(f"{ref!r} names an algebra, not a map")
    return obj


def parse_at(spec: str) -> Fraction:
    name, eq, value = spec.partition("=")
    if name != "l" or not eq:
        raise RefError(f"--at expects l=<rational>, got {spec!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise RefError(f"--at expects a rational value: {exc}") from exc


def substitute(alg: Algebra, spec: str) -> Algebra:
    point = parse_at(spec)
    if alg.domain is not ScalarDomain.QL:
        raise RefError("--at applies only to algebras with symbolic coefficients")
    return evaluate_algebra(alg, point)


# --- serialization -----------------------------------------------------------


def _vector_json(basis, vec):
    return [
        {"basis": basis.names[i], "coeff": format_scalar(c)}
        for i, c in enumerate(vec)
        if c
    ]


def report_json(report: Report, profile: str, max_violations=None) -> dict:
    shown = report.violations
    omitted = 0
    if max_violations is not None and len(shown) > max_violations:
        omitted = len(shown) - max_violations
        shown = shown[:max_violations]
    doc = {
        "algebra": report.algebra_name,
        "profile": profile,
        "passed": report.passed,
        "violations": [
            {
                "identity": v.identity.value,
                "tuple": [report.basis.names[i] for i in v.indices],
                "residual": _vector_json(report.basis, v.residual),
            }
            for v in shown
        ],
    }
    if omitted:
        doc["violations_omitted"] = omitted
    return doc


def report_text(report: Report, profile: str, max_violations=None) -> str:
    lines = [
        f"algebra: {report.algebra_name}",
        f"profile: {profile}",
        f"result: {'PASS' if report.passed else 'FAIL'} "
        f"({len(report.violations)} violation(s))",
    ]
    shown = report.violations
    if max_violations is not None and len(shown) > max_violations:
        lines.append(f"showing first {max_violations} violation(s)")
        shown = shown[:max_violations]
    names = report.basis.names
    for v in shown:
        tup = ", ".join(names[i] for i in v.indices)
        lines.append(
            f"  {v.identity.value} ({tup}): " + format_vector(report.basis, v.residual)
        )
    return "\n".join(lines)


def crosscheck_json(report: CrossCheckReport) -> dict:
    return {
        "entry": report.entry_name,
        "params": {k: str(v) for k, v in report.params.items()},
        "match": report.match,
        "differences": [
            {
                "op": d.op,
                "tuple": [report.basis.names[i] for i in d.indices],
                "printed": _vector_json(report.basis, d.printed),
                "computed": _vector_json(report.basis, d.computed),
            }
            for d in report.diffs
        ],
    }


def algebra_text(alg: Algebra) -> str:
    names = alg.basis.names
    lines = [
        f"name: {alg.name}",
        f"scalars: {alg.domain.value}",
        "basis: " + ", ".join(f"{n} (parity {p})" for n, p in alg.basis.entries),
    ]
    lines.append("alpha:")
    for j, col in enumerate(alg.alpha.columns):
        lines.append(f"  {names[j]} -> {format_vector(alg.basis, col)}")
    if alg.binary is not None:
        lines.append("binary products (nonzero):")
        for i in range(alg.dim):
            for j in range(alg.dim):
                vec = alg.binary.table[i][j]
                if any(vec):
                    lines.append(
                        f"  [{names[i]}, {names[j]}] = " + format_vector(alg.basis, vec)
                    )
    if alg.ternary is not None:
        lines.append("ternary products (nonzero):")
        for i in range(alg.dim):
            for j in range(alg.dim):
                for k in range(alg.dim):
                    vec = alg.ternary.table[i][j][k]
                    if any(vec):
                        lines.append(
                            f"  {{{names[i]}, {names[j]}, {names[k]}}} = "
                            + format_vector(alg.basis, vec)
                        )
    return "\n".join(lines)


def _emit_algebra(alg: Algebra, args) -> int:
    if getattr(args, "out", None):
        save_algebra(alg, args.out)
    if args.format == "json":
        print(json.dumps(algebra_to_document(alg), indent=2))
    else:
        print(algebra_text(alg))
    return 0


# --- subcommands --------------------------------------------------------------


def cmd_check(args) -> int:
    alg = resolve_algebra(args.ref)
    if args.at:
        alg = substitute(alg, args.at)
    report = PROFILES[args.profile](alg)
    if args.format == "json":
        print(json.dumps(report_json(report, args.profile, args.max_violations), indent=2))
    else:
        print(report_text(report, args.profile, args.max_violations))
    return 0 if report.passed else 1


def cmd_twist(args) -> int:
    alg = resolve_algebra(args.ref)
    beta = resolve_map(args.by)
    return _emit_algebra(yau_twist(alg, beta, args.n), args)


def cmd_derive(args) -> int:
    alg = resolve_algebra(args.ref)
    fn = {"binary": derived2, "ternary": derived3, "both": derived_bt}[args.kind]
    return _emit_algebra(fn(alg, args.n), args)


def cmd_construct(args) -> int:
    alg = resolve_algebra(args.ref)
    fn = {
        "supercommutator": supercommutator,
        "sts": sts_from_alg,
        "hly-from-homlie": hly_from_homlie,
        "ly-from-malcev": ly_from_malcev,
    }[args.kind]
    return _emit_algebra(fn(alg), args)


def cmd_cross_check(args) -> int:
    name, _, query = args.name.partition("?")
    params = {}
    if query:
        for piece in query.split("&"):
            key, eq, value = piece.partition("=")
            if not eq:
                raise RefError(f"bad parameter {piece!r}")
            params[key] = value
    report = _catalog.cross_check(name, params)
    if args.format == "json":
        print(json.dumps(crosscheck_json(report), indent=2))
    else:
        print(report.describe())
    return 0 if report.match else 1


def _entry_json(entry) -> dict:
    return {
        "name": entry.name,
        "kind": entry.kind,
        "description": entry.description,
        "parameters": [
            {"name": p.name, "kind": p.kind, "default": p.default, "note": p.note}
            for p in entry.parameters
        ],
    }


def cmd_catalog(args) -> int:
    if args.action == "list":
        entries = _catalog.list_entries()
        if args.format == "json":
            print(json.dumps({"entries": [_entry_json(e) for e in entries]}, indent=2))
        else:
            for e in entries:
                sig = ", ".join(p.name for p in e.parameters)
                print(f"{e.name}({sig}) [{e.kind}]: {e.description}")
        return 0
    if not args.name:
        raise RefError("catalog show needs an entry name")
    entry = next((e for e in _catalog.list_entries() if e.name == args.name), None)
    if entry is None:
        raise UnknownEntry(f"no catalog entry named {args.name!r}")
    if args.format == "json":
        print(json.dumps(_entry_json(entry), indent=2))
    else:
        print(f"{entry.name} [{entry.kind}]")
        print(f"  {entry.description}")
        for p in entry.parameters:
            note = f" ({p.note})" if p.note else ""
            print(f"  parameter {p.name}: {p.kind}, default {p.default}{note}")
        if entry.kind == "algebra" and not entry.parameters:
            print(algebra_text(_catalog.instantiate(entry.name)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homly",
        description="Exact checks and constructions for graded binary-ternary algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p = sub.add_parser("check", help="run an identity profile over an algebra")
    p.add_argument("ref", help="catalog:<name>[?p=v] or a document path")
    p.add_argument("--profile", required=True, choices=sorted(PROFILES))
    p.add_argument("--at", metavar="l=VALUE", help="evaluate symbolic l first")
    p.add_argument("--max-violations", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("twist", help="twist an algebra by an endomorphism")
    p.add_argument("ref")
    p.add_argument("--by", required=True, help="catalog reference of the twisting map")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="also write the resulting document to this file")
    add_format(p)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("derive", help="n-th derived algebra")
    p.add_argument("ref")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("binary", "ternary", "both"), default="both")
    p.add_argument("--out")
    add_format(p)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("construct", help="standard constructions")
    p.add_argument(
        "kind",
        choices=("supercommutator", "sts", "hly-from-homlie", "ly-from-malcev"),
    )
    p.add_argument("ref")
    p.add_argument("--out")
    add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("cross-check", help="diff a published table against its construction")
    p.add_argument("name", help="catalog entry name, optionally with ?params")
    add_format(p)
    p.set_defaults(func=cmd_cross_check)

    p = sub.add_parser("catalog", help="list or show built-in entries")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    add_format(p)
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
