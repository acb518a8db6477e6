"""Command-line front end.

Exit codes: 0 completed, 1 check failed under --strict, 2 input error.
Structured output is canonical JSON (stable key order, canonical scalar
strings) and contains nothing run-dependent, so repeated invocations on
the same inputs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import catalog_get, catalog_list, catalog_verify
from .centroids import centroid_space
from .core import check_axioms, check_multiplicativity
from .derivations import derivation_space
from .documents import (
    algebra_to_document,
    parse_algebra,
    parse_operator,
    serialize_algebra,
)
from .errors import BihomtriasError, ParseError
from .reports import map_to_strings, witness_to_dict
from .scalars import parse_scalar
from .transforms import RotaBaxterData, direct_sum, rota_baxter_check, total_sum, transport


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _load_algebra(path):
    return parse_algebra(_read(path))


def _emit(payload, fmt, text_renderer):
    if fmt == "structured":
        print(json.dumps(payload, indent=2))
    else:
        text_renderer(payload)


def _axiom_payload(report):
    checks = {}
    witnesses = {}
    for res in report.results:
        checks[res.axiom_id] = res.holds
        if not res.holds:
            witnesses[res.axiom_id] = {
                "failing_tuples": len(res.witnesses),
                "first": witness_to_dict(res.witnesses[0]),
            }
    return checks, witnesses


def _cmd_verify(args, fmt):
    algebra = _load_algebra(args.file)
    report = check_axioms(algebra).merged(check_multiplicativity(algebra))
    checks, witnesses = _axiom_payload(report)
    payload = {
        "algebra": algebra.name,
        "dim": algebra.dim,
        "checks": checks,
        "witnesses": witnesses,
        "all_hold": report.all_hold,
    }

    def render(p):
        print(f"{p['algebra'] or '(unnamed)'}: dim {p['dim']}")
        for cid, ok in p["checks"].items():
            line = f"  {cid:4s} {'PASS' if ok else 'FAIL'}"
            if not ok:
                w = p["witnesses"][cid]
                line += f"  ({w['failing_tuples']} failing tuples, first {w['first']})"
            print(line)
        print("all hold" if p["all_hold"] else "FAILURES present")

    _emit(payload, fmt, render)
    return 0 if report.all_hold else None


def _cmd_der(args, fmt):
    algebra = _load_algebra(args.file)
    space = derivation_space(algebra)
    payload = {
        "algebra": algebra.name,
        "dim": space.dim,
        "basis": [map_to_strings(b) for b in space.basis],
    }

    def render(p):
        print(f"{p['algebra'] or '(unnamed)'}: derivation space dim {p['dim']}")
        for b in p["basis"]:
            print("  " + "; ".join(" ".join(row) for row in b))

    _emit(payload, fmt, render)
    return 0


def _cmd_cent(args, fmt):
    algebra = _load_algebra(args.file)
    space = centroid_space(algebra)
    payload = {
        "algebra": algebra.name,
        "linear_dim": space.linear_dim,
        "identically_zero": space.identically_zero,
        "obstruction_too_large": space.obstruction_too_large,
        "reported_dim": space.reported_dim,
        "method": space.method,
        "solution_description": space.solution_description,
        "linear_basis": [map_to_strings(b) for b in space.linear_basis],
        "subspace_basis": [map_to_strings(b) for b in space.subspace_basis],
        "obstruction": [p.serialize() for p in space.obstruction],
    }

    def render(p):
        print(
            f"{p['algebra'] or '(unnamed)'}: centroid linear stage dim {p['linear_dim']}, "
            f"reported dim {p['reported_dim']} ({p['method']})"
        )
        print(f"  {p['solution_description']}")
        for b in p["subspace_basis"]:
            print("  " + "; ".join(" ".join(row) for row in b))

    _emit(payload, fmt, render)
    return 0


def _cmd_catalog(args, fmt):
    if args.action == "list":
        ids = list(catalog_list())
        _emit(ids, fmt, lambda p: print("\n".join(p)))
        return 0
    if args.action == "get":
        entry = catalog_get(args.id)
        # both modes emit the bare canonical document so the output can be
        # fed back to the other commands; ambiguity notes go to stderr
        print(json.dumps(algebra_to_document(entry.algebra), indent=2))
        for note in entry.ambiguity_notes:
            print(f"note: {note}", file=sys.stderr)
        return 0
    # verify
    target = None if args.all or args.id is None else args.id
    verification = catalog_verify(target)
    payload = verification.to_dict()

    def render(p):
        for e in p["entries"]:
            failing = [cid for cid, ok in e["checks"].items() if not ok]
            state = "PASS" if not failing else "FAIL " + ",".join(failing)
            der = e["derivation"]
            cent = e["centroid"]
            print(
                f"{e['entry']:12s} axioms {state:28s} coord-agree {str(e['coordinate_agrees']):5s} "
                f"der {der['computed_dim']}/{der['paper_dim']} {der['status']:12s} "
                f"cent {cent['computed_dim']}/{cent['paper_dim']} {cent['status']}"
            )
            for rec in e["ambiguity"]:
                print(f"{'':12s} ambiguity: {rec['computed']}")
        print(f"errata records: {p['errata_count']}")

    _emit(payload, fmt, render)
    clean = all(all(e["checks"].values()) for e in payload["entries"])
    return 0 if clean else None


def _cmd_iso(args, fmt):
    a = _load_algebra(args.a)
    b = _load_algebra(args.b)
    psi = parse_operator(_read(args.map), expected_dim=a.dim)
    from .transforms import is_morphism

    ok = psi.is_invertible() and is_morphism(psi, a, b).holds
    payload = {"isomorphism": ok}
    _emit(payload, fmt, lambda p: print("isomorphism" if p["isomorphism"] else "not an isomorphism"))
    return 0 if ok else None


def _cmd_construct(args, fmt):
    if args.kind == "direct-sum":
        result = direct_sum(_load_algebra(args.a), _load_algebra(args.b))
    elif args.kind == "total-sum":
        algebra = _load_algebra(args.a)
        candidate, witnesses = total_sum(algebra)
        from .core import BiHomTrialgebra, MulTensor, LEFT, MIDDLE, RIGHT

        # Export the single product as an algebra document with the sum in
        # every slot zeroed except left, which carries the product.
        result = BiHomTrialgebra(
            f"{algebra.name}~total",
            algebra.dim,
            MulTensor(algebra.dim, LEFT, candidate.mu.c),
            MulTensor.zero(algebra.dim, RIGHT),
            MulTensor.zero(algebra.dim, MIDDLE),
            candidate.alpha,
            candidate.beta,
        )
        if witnesses:
            print(f"warning: candidate is not BiHom-associative "
                  f"({len(witnesses)} failing triples)", file=sys.stderr)
    else:  # transport
        algebra = _load_algebra(args.a)
        psi = parse_operator(_read(args.map), expected_dim=algebra.dim)
        result = transport(algebra, psi)
    text = serialize_algebra(result)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    payload = {"written": args.output, "name": result.name, "dim": result.dim}
    _emit(payload, fmt, lambda p: print(f"wrote {p['written']} ({p['name']}, dim {p['dim']})"))
    return 0


def _cmd_rb(args, fmt):
    algebra = _load_algebra(args.a)
    op = parse_operator(_read(args.op), expected_dim=algebra.dim)
    weight = parse_scalar(args.weight, "weight")
    ok, witnesses = rota_baxter_check(algebra, RotaBaxterData(op, weight))
    payload = {
        "algebra": algebra.name,
        "weight": args.weight,
        "holds": ok,
        "failing_pairs": [
            [w[0], w[1], w[2]] for w in witnesses
        ],
    }

    def render(p):
        state = "verifies" if p["holds"] else "FAILS"
        print(f"Rota-Baxter check (weight {p['weight']}): {state}")
        for fp in p["failing_pairs"]:
            print(f"  failing: identity {fp[0]} at pair ({fp[1]}, {fp[2]})")

    _emit(payload, fmt, render)
    return 0 if ok else None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "structured"), default=argparse.SUPPRESS
    )
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS)

    parser = _Parser(prog="bihomtrias", description=__doc__)
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument(
        "--strict", action="store_true", default=False,
        help="exit nonzero when a verification check fails",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="axiom and multiplicativity report")
    p.add_argument("file")

    p = sub.add_parser("der", parents=[common], help="derivation space of an algebra file")
    p.add_argument("file")

    p = sub.add_parser("cent", parents=[common], help="centroid of an algebra file")
    p.add_argument("file")

    p = sub.add_parser("catalog", parents=[common], help="embedded classification data")
    p.add_argument("action", choices=("list", "get", "verify"))
    p.add_argument("id", nargs="?")
    p.add_argument("--all", action="store_true")

    p = sub.add_parser("iso", parents=[common], help="verify a map is an isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--map", required=True)

    p = sub.add_parser("construct", parents=[common], help="derived algebra constructions")
    p.add_argument("kind", choices=("direct-sum", "total-sum", "transport"))
    p.add_argument("a")
    p.add_argument("b", nargs="?")
    p.add_argument("--map")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("rb", parents=[common], help="Rota-Baxter operator verification")
    p.add_argument("action", choices=("verify",))
    p.add_argument("a")
    p.add_argument("--op", required=True)
    p.add_argument("--weight", required=True)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    strict = getattr(args, "strict", False)
    try:
        if args.command == "verify":
            status = _cmd_verify(args, fmt)
        elif args.command == "der":
            status = _cmd_der(args, fmt)
        elif args.command == "cent":
            status = _cmd_cent(args, fmt)
        elif args.command == "catalog":
            if args.action == "get" and args.id is None:
                print("error: catalog get requires an id", file=sys.stderr)
                return 2
            status = _cmd_catalog(args, fmt)
        elif args.command == "iso":
            status = _cmd_iso(args, fmt)
        elif args.command == "construct":
            if args.kind == "direct-sum" and args.b is None:
                print("error: direct-sum requires two algebra files", file=sys.stderr)
                return 2
            if args.kind == "transport" and args.map is None:
                print("error: transport requires --map", file=sys.stderr)
                return 2
            status = _cmd_construct(args, fmt)
        else:
            status = _cmd_rb(args, fmt)
    except BihomtriasError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if status is None:
        return 1 if strict else 0
    return status


if __name__ == "__main__":
    raise SystemExit(main())
