"""Command-line interface: bounds, certify, cofactor, and corpus.

All reports are JSON on stdout with a fixed key order, so repeated runs on
the same input are byte-identical.  Exit codes: 0 success (all constructed
certificates verified), 2 input or parse failure, 3 certify without
candidates, 4 a certificate failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .corpus import FamilySpec
from .darboux import (
    certificate_checks,
    cofactor,
    darboux_first_integral,
    rational_first_integral,
    relation_space_field,
    relation_space_rational,
)
from .derivation import Derivation, bounds_report
from .expressions import ParseError, format_poly, format_scalar, parse_expression
from .svgfig import emit_svg
from .systemfile import InputError, LoadedSystem, load_system

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NO_CANDIDATES = 3
EXIT_VERIFY_FAILED = 4


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _bounds_dict(derivation: Derivation) -> dict:
    report = bounds_report(derivation)
    return {
        "B": report.b,
        "sparse_darboux": report.sparse_darboux,
        "sparse_jouanolou": report.sparse_jouanolou,
        "dense_degree": report.dense_degree,
        "dense_darboux": report.dense_darboux,
        "dense_jouanolou": report.dense_jouanolou,
        "lattice_points": [list(point) for point in report.lattice_points],
    }


def _classify(system: LoadedSystem, text: str, poly) -> tuple[str, object]:
    """Status of one candidate: 'darboux' plus the pair, or a rejection reason."""
    if poly.is_zero():
        return "zero", None
    if not poly.is_polynomial():
        return "not_polynomial", None
    if poly.is_constant():
        return "constant", None
    pair = cofactor(system.derivation, poly)
    if pair is None:
        return "not_darboux", None
    return "darboux", pair


def _cmd_bounds(args) -> int:
    system = load_system(args.file)
    if args.svg is not None:
        if system.derivation.n != 2:
            raise InputError(f"{args.file}: SVG rendering supports dimension 2 only")
        svg = emit_svg(system.derivation.support_polytope, lattice_overlay=True)
        Path(args.svg).write_text(svg)
    _print_json({"bounds": _bounds_dict(system.derivation)})
    return EXIT_OK


def _certificate_dict(system: LoadedSystem, derivation, certificate) -> dict:
    checks = certificate_checks(derivation, certificate)
    if certificate.kind == "rational-fi":
        exponents = list(certificate.exponents)
    else:
        exponents = [format_scalar(s, system.parameters) for s in certificate.exponents]
    entry = {
        "kind": certificate.kind,
        "exponents": exponents,
        "factors": [format_poly(f, system.variables, system.parameters) for f in certificate.factors],
        "cofactors": [format_poly(g, system.variables, system.parameters) for g in certificate.cofactors],
        "residual_zero": checks["residual_zero"],
    }
    if certificate.kind == "rational-fi":
        entry["quotient_rule_zero"] = checks["quotient_rule_zero"]
    entry["verified"] = all(checks.values())
    return entry


def _cmd_certify(args) -> int:
    system = load_system(args.file)
    if not system.candidates:
        print(f"error: {args.file}: no darboux_candidates in the system file", file=sys.stderr)
        return EXIT_NO_CANDIDATES
    derivation = system.derivation
    accepted = []
    rejected = []
    pairs = []
    for text, poly in system.candidates:
        status, pair = _classify(system, text, poly)
        if status == "darboux":
            pairs.append(pair)
            accepted.append(
                {
                    "candidate": text,
                    "cofactor": format_poly(pair.g, system.variables, system.parameters),
                }
            )
        else:
            rejected.append({"candidate": text, "reason": status})
    polytope = derivation.support_polytope
    relations = {
        "over_field": {"dimension": 0, "basis": []},
        "over_rationals": {"dimension": 0, "basis": []},
    }
    certificates = []
    if pairs:
        field_space = relation_space_field(pairs, polytope)
        rational_space = relation_space_rational(pairs, polytope)
        relations["over_field"] = {
            "dimension": field_space.dimension,
            "basis": [
                [format_scalar(x, system.parameters) for x in vector]
                for vector in field_space.basis
            ],
        }
        relations["over_rationals"] = {
            "dimension": rational_space.dimension,
            "basis": [[str(x) for x in vector] for vector in rational_space.basis],
        }
        for certificate in (
            darboux_first_integral(pairs, polytope),
            rational_first_integral(pairs, polytope),
        ):
            if certificate is not None:
                certificates.append(_certificate_dict(system, derivation, certificate))
    _print_json(
        {
            "bounds": _bounds_dict(derivation),
            "pairs": {"accepted": accepted, "rejected": rejected},
            "relations": relations,
            "certificates": certificates,
        }
    )
    if any(not entry["verified"] for entry in certificates):
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_cofactor(args) -> int:
    system = load_system(args.file)
    try:
        poly = parse_expression(args.candidate, system.variables, system.parameters)
    except ParseError as exc:
        raise InputError(f"candidate: {exc}") from exc
    status, pair = _classify(system, args.candidate, poly)
    result = {"candidate": args.candidate, "status": status, "cofactor": None}
    if pair is not None:
        result["cofactor"] = format_poly(pair.g, system.variables, system.parameters)
    _print_json(result)
    return EXIT_OK


def _cmd_corpus(args) -> int:
    roots = None
    if args.roots is not None:
        try:
            roots = tuple(Fraction(part) for part in args.roots.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"invalid root list {args.roots!r}: {exc}") from exc
    spec = FamilySpec(
        family=args.family,
        n=args.n,
        degree=args.d,
        seed=args.seed,
        e=args.e,
        roots=roots,
    )
    try:
        instance = spec.generate()
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    document = {
        "variables": list(instance.variables),
        "parameters": list(instance.parameters),
        "derivation": [
            format_poly(poly, instance.variables, instance.parameters)
            for poly in instance.derivation.coefficients
        ],
    }
    if instance.candidates is not None:
        document["darboux_candidates"] = [
            format_poly(poly, instance.variables, instance.parameters)
            for poly in instance.candidates
        ]
    _print_json(document)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="darbouxcert",
        description="Exact Newton-polytope integrability bounds and Darboux certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="sparse and dense thresholds for a system file")
    p_bounds.add_argument("file")
    p_bounds.add_argument("--svg", metavar="PATH", help="also write the 2D support polygon")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_certify = sub.add_parser("certify", help="classify candidates and build certificates")
    p_certify.add_argument("file")
    p_certify.set_defaults(func=_cmd_certify)

    p_cof = sub.add_parser("cofactor", help="classify a single candidate")
    p_cof.add_argument("file")
    p_cof.add_argument("--candidate", required=True, metavar="EXPR")
    p_cof.set_defaults(func=_cmd_cofactor)

    p_corpus = sub.add_parser("corpus", help="emit a built-in example system file")
    p_corpus.add_argument("--family", required=True, choices=["dense", "figure-e", "optimality"])
    p_corpus.add_argument("--n", type=int, default=2)
    p_corpus.add_argument("--d", type=int, help="total degree (dense family)")
    p_corpus.add_argument("--e", type=int, help="corner size (figure-e family)")
    p_corpus.add_argument("--seed", type=int, default=0)
    p_corpus.add_argument("--roots", help="comma-separated rational roots (optimality family)")
    p_corpus.set_defaults(func=_cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
