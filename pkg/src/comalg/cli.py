"""Command-line interface: JSON in, JSON reports out."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import classify as cls
from . import construct, gauss, invariants
from .errors import ConsistencyError, DomainError, NotGenericError, UnsupportedError
from .serialize import SCHEMA_VERSION, InputError, dumps, loads, parse_algebra, parse_fields, parse_rat, to_json
from .verify import VerifyConfig, run_verify

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


def read_payload(source: str, stdin=None):
    """A file path, '-' for stdin, or an inline JSON document."""
    if source == "-":
        return loads((stdin or sys.stdin).read(), "stdin")
    if source.lstrip().startswith(("{", "[")):
        return loads(source, "inline JSON")
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    return loads(text, source)


def _report(command: str, inputs, **body) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "input": inputs, **body}


def _checks(m) -> list[dict]:
    out = [
        {"name": "twisted_eisenstein", "ok": invariants.check_eisenstein(m)},
        {"name": "disc_d_identity", "ok": invariants.check_discd_identity(m)},
    ]
    mismatches = invariants.dual_path_mismatches(m)
    out.append({"name": "expanded_matches_covariant", "ok": not mismatches})
    return out


def cmd_invariants(args) -> tuple[dict, int]:
    raw = read_payload(args.algebra)
    m = parse_algebra(raw)
    checks = _checks(m)
    report = _report("invariants", to_json(m), invariants=to_json(invariants.bundle(m)), checks=checks)
    if invariants.is_generic(m):
        report["moduli"] = to_json(invariants.moduli(m))
    return report, _status(checks)


def _status(checks) -> int:
    return EXIT_OK if all(c["ok"] for c in checks) else EXIT_CHECK


def cmd_classify(args) -> tuple[dict, int]:
    m = parse_algebra(read_payload(args.algebra))
    checks = _checks(m)
    result = {"gl": to_json(cls.classify_gl(m)), "associative": cls.is_associative(m)}
    if invariants.is_generic(m):
        result["division"] = cls.is_division(m)
        result["automorphisms"] = to_json(cls.automorphism_group(m))
        try:
            via_triple = cls.idemvalue_moduli(m)
        except UnsupportedError:
            pass  # no triple over Q or a quadratic field
        else:
            checks.append({"name": "idemvalue_moduli", "ok": via_triple == invariants.moduli(m)})
    else:
        result["division"] = cls.is_division_direct(m)
    if args.sl:
        result["sl"] = to_json(cls.classify_sl(m))
    report = _report(
        "classify", to_json(m), invariants=to_json(invariants.bundle(m)), result=result, checks=checks
    )
    return report, _status(checks)


def _construct_algebra(mode: str, raw):
    if mode == "moduli":
        return construct.from_moduli_generic(*parse_fields(raw, ("p3", "p2"), "params"))
    if mode == "cardano":
        p3, p2 = parse_fields(raw, ("p3", "p2"), "params")
        ext = parse_rat(raw.get("ext", "1"), "params.ext")
        if ext.denominator != 1 or ext == 0:
            raise InputError("params.ext must be a nonzero integer")
        return construct.from_moduli_cardano(p3, p2, int(ext))
    if mode == "cubic":
        return construct.from_cubic_exceptional(*parse_fields(raw, ("d2", "d3"), "params"))
    if mode == "eisenstein":
        return construct.from_eisenstein(construct.EisensteinPoint(*parse_fields(raw, ("A", "B", "D", "C"), "params")))
    if mode == "triple":
        if isinstance(raw, dict) and "trace" in raw:
            d1, trace, norm = parse_fields(raw, ("d1", "trace", "norm"), "params")
            return construct.from_triple_data(d1, (trace, norm))
        return construct.from_triple_data(*parse_fields(raw, ("d1", "d2", "d3"), "params"))
    raise InputError(f"unknown construct mode {mode!r}")


def cmd_construct(args) -> tuple[dict, int]:
    raw = read_payload(args.params)
    m = _construct_algebra(args.mode, raw)
    checks = _checks(m)
    report = _report(
        "construct",
        {"mode": args.mode, "params": raw},
        algebra=to_json(m),
        invariants=to_json(invariants.bundle(m)),
        checks=checks,
    )
    return report, _status(checks)


def cmd_equiv(args) -> tuple[dict, int]:
    m1 = parse_algebra(read_payload(args.a), "a")
    m2 = parse_algebra(read_payload(args.b), "b")
    if args.slxsl:
        group, verdict = "SLxSL", (cls.Equivalence.YES if gauss.slxsl_equivalent(m1, m2) else cls.Equivalence.NO)
    elif args.sl:
        group, verdict = "SL", cls.equivalent_sl(m1, m2)
    else:
        group, verdict = "GL", cls.equivalent_gl(m1, m2)
    report = _report("equiv", {"a": to_json(m1), "b": to_json(m2)}, group=group, result=verdict.value)
    report["heuristic"] = verdict in (cls.Equivalence.HEURISTIC_YES, cls.Equivalence.YES_UP_TO_Z2)
    return report, EXIT_OK


def cmd_compose(args) -> tuple[dict, int]:
    m1 = parse_algebra(read_payload(args.a), "a")
    m2 = parse_algebra(read_payload(args.b), "b")
    product = gauss.compose_algebra_classes(m1, m2, args.shear)
    c1, c2, c12 = gauss.algebra_class(m1), gauss.algebra_class(m2), gauss.algebra_class(product)
    checks = [
        {"name": "class_of_product", "ok": c12 == c1 * c2},
        {"name": "disc_d_preserved", "ok": c12.delta == c1.delta},
    ]
    report = _report(
        "compose",
        {"a": to_json(m1), "b": to_json(m2)},
        algebra=to_json(product),
        classes={
            "a": to_json(c1.rep_value),
            "b": to_json(c2.rep_value),
            "product": to_json(c12.rep_value),
            "product_is_identity": c12 == gauss.form_class(gauss.identity_form(c12.delta)),
        },
        checks=checks,
    )
    return report, _status(checks)


def cmd_verify(args) -> tuple[dict, int]:
    cfg = VerifyConfig(seed=args.seed, count=args.count, coeff_bound=args.coeff_bound, workers=args.workers)
    summary = run_verify(cfg)
    return _report("verify", to_json(vars(cfg)), summary=summary), EXIT_CHECK if summary["total_failures"] else EXIT_OK


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="comalg", description="Invariants and classification of 2D commutative algebras over Q.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="invariant bundle and identity checks")
    s.add_argument("algebra", help="JSON file, '-' for stdin, or inline JSON")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("classify", help="GL (and optionally SL) class descriptor")
    s.add_argument("algebra")
    s.add_argument("--sl", action="store_true", help="also report the SL descriptor")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("construct", help="build an algebra from moduli data")
    s.add_argument("mode", choices=("moduli", "cardano", "cubic", "eisenstein", "triple"))
    s.add_argument("params")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("equiv", help="decide equivalence of two algebras")
    s.add_argument("a")
    s.add_argument("b")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--sl", action="store_true")
    grp.add_argument("--slxsl", action="store_true")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("compose", help="compose SLxSL classes with equal Disc(D)")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--shear", type=int, default=None, help="override the automatic shear")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("verify", help="seeded fuzz run over all identity suites")
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--count", type=_positive, default=10_000)
    s.add_argument("--coeff-bound", type=_positive, default=20)
    s.add_argument("--workers", type=_positive, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def _error(command: str, kind: str, exc: Exception, code: int) -> tuple[dict, int]:
    print(f"comalg {command}: {exc}", file=sys.stderr)
    return {"schema_version": SCHEMA_VERSION, "command": command, "error": {"kind": kind, "message": str(exc)}}, code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = args.func(args)
    except InputError as exc:
        report, code = _error(args.command, "input", exc, EXIT_INPUT)
    except (NotGenericError, UnsupportedError) as exc:
        report, code = _error(args.command, "unsupported", exc, EXIT_UNSUPPORTED)
    except DomainError as exc:
        report, code = _error(args.command, "domain", exc, EXIT_INPUT)
    except ConsistencyError as exc:
        report, code = _error(args.command, "check-failure", exc, EXIT_CHECK)
    print(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
