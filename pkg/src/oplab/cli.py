"""Command-line front end: load artifacts, run suites, emit reports.

Exit codes: 0 all checks pass, 1 some check fails, 2 input or schema
error. Reports are byte-stable for identical inputs; --deterministic
zeroes the timing field.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import dataclass

from . import io as artifacts
from .enriched import EnrichedFunctor, is_enriched_functor, validate_category
from .errors import OplabError, SizeBoundExceeded
from .graphs import (
    LabelSet,
    OperadTag,
    check_operad_axioms,
    pairing,
    validate_morphism,
)
from .presheaf import (
    check_duality_bijection,
    density_decompose,
    enumerate_presheaves,
    ev,
    free_presheaf,
    join_presheaves,
    leq_presheaves,
    meet_presheaves,
    pullback,
    pushforward,
    tensor_action,
    validate_presheaf,
    yoneda_check,
)
from .quantale import (
    left_self_module,
    module_join,
    module_meet,
    right_self_module,
    validate_module,
    validate_quantale,
)
from .report import Check, ValidationReport
from .simplex import check_approximation


@dataclass(frozen=True)
class Report:
    status: str
    checks: tuple[Check, ...]
    timing_ms: int
    result: dict | None = None


def _status(rep: ValidationReport) -> str:
    return "pass" if rep.ok else "fail"


def emit_report(report: Report, fmt: str, stream=None) -> None:
    stream = stream if stream is not None else sys.stdout
    if fmt == "json":
        payload = {
            "status": report.status,
            "checks": [
                {"name": c.name, "outcome": "pass" if c.ok else "fail", "witness": c.witness}
                for c in report.checks
            ],
            "timing_ms": report.timing_ms,
        }
        if report.result is not None:
            payload["result"] = report.result
        stream.write(json.dumps(payload, sort_keys=True) + "\n")
        return
    for c in report.checks:
        line = f"{'PASS' if c.ok else 'FAIL'} {c.name}"
        if c.witness:
            line += f" -- {c.witness}"
        stream.write(line + "\n")
    if report.result is not None:
        stream.write(json.dumps(report.result, sort_keys=True) + "\n")
    stream.write(f"{report.status} ({report.timing_ms} ms)\n")


def _loaded_ok(kind):
    """Loaders validate on the way in, so reaching here means the file passed."""

    def handler(path):
        getattr(artifacts, f"load_{kind}")(path)
        return ValidationReport((Check(kind, True, None),))

    return handler


VALIDATORS = {
    "quantale": lambda p: validate_quantale(artifacts.load_quantale(p)),
    "module": lambda p: validate_module(artifacts.load_module(p)),
    "graph": _loaded_ok("graph"),
    "morphism": lambda p: validate_morphism(artifacts.load_morphism(p)),
    "simplex": _loaded_ok("simplex"),
    "category": lambda p: validate_category(artifacts.load_category(p)),
    "presheaf": lambda p: validate_presheaf(artifacts.load_presheaf(p)),
    "copresheaf": _loaded_ok("copresheaf"),
}


def _cmd_validate(args) -> tuple[ValidationReport, dict | None]:
    return VALIDATORS[args.kind](args.path), None


def _cmd_check_operad(args) -> tuple[ValidationReport, dict | None]:
    tag = {t.value: t for t in OperadTag}[args.tag]
    labels = LabelSet(tuple(args.labels.split(",")))
    return check_operad_axioms(tag, labels, args.max_edges), None


def _cmd_check_approximation(args) -> tuple[ValidationReport, dict | None]:
    labels = LabelSet(tuple(args.labels.split(",")))
    return check_approximation(labels, args.max_dim), None


def _cmd_pairing(args) -> tuple[ValidationReport, dict | None]:
    g0 = artifacts.load_graph(args.left)
    g1 = artifacts.load_graph(args.right)
    out = pairing(g0, g1)
    rep = ValidationReport(
        (Check("pairing", True, f"{len(out.edges)} spliced edges"),)
    )
    return rep, artifacts.graph_to_dict(out)


def _cmd_yoneda(args) -> tuple[ValidationReport, dict | None]:
    c = artifacts.load_category(args.category)
    module = (
        left_self_module(c.base)
        if args.module == "self"
        else artifacts.load_module(args.module)
    )
    presheaves = enumerate_presheaves(c, module)
    count = 0
    for f in presheaves:
        for x in c.objects.labels:
            for m_elt in range(module.size()):
                yoneda_check(c, x, m_elt, f)
                count += 1
    return (
        ValidationReport(
            (Check("representability", True, f"{count} (object, element, presheaf) triples"),)
        ),
        None,
    )


def _cmd_density(args) -> tuple[ValidationReport, dict | None]:
    c = artifacts.load_category(args.category)
    presheaves = enumerate_presheaves(c)
    for f in presheaves:
        density_decompose(f)
    return (
        ValidationReport((Check("density", True, f"{len(presheaves)} presheaves decomposed"),)),
        None,
    )


def _cmd_duality(args) -> tuple[ValidationReport, dict | None]:
    c = artifacts.load_category(args.category)
    n = (
        right_self_module(c.base)
        if args.module == "self"
        else artifacts.load_module(args.module)
    )
    return check_duality_bijection(c, n), None


def _cmd_colimit(args) -> tuple[ValidationReport, dict | None]:
    c = artifacts.load_category(args.category)
    presheaves = enumerate_presheaves(c)
    if len(presheaves) > 16:
        raise SizeBoundExceeded(f"{2 ** len(presheaves)} families exceed the family bound")
    module = left_self_module(c.base)
    families = 0
    for r in range(len(presheaves) + 1):
        for family in itertools.combinations(presheaves, r):
            j = join_presheaves(family, c, module)
            m = meet_presheaves(family, c, module)
            if not validate_presheaf(j).ok or not validate_presheaf(m).ok:
                return (
                    ValidationReport(
                        (Check("pointwise-limits", False, f"family of size {r} fails to validate"),)
                    ),
                    None,
                )
            for x in c.objects.labels:
                if ev(j, x) != module_join(module, tuple(ev(f, x) for f in family)):
                    return (
                        ValidationReport(
                            (Check("pointwise-limits", False, f"join not pointwise at {x}"),)
                        ),
                        None,
                    )
                if ev(m, x) != module_meet(module, tuple(ev(f, x) for f in family)):
                    return (
                        ValidationReport(
                            (Check("pointwise-limits", False, f"meet not pointwise at {x}"),)
                        ),
                        None,
                    )
            families += 1
    return (
        ValidationReport((Check("pointwise-limits", True, f"{families} families"),)),
        None,
    )


def _cmd_pushforward(args) -> tuple[ValidationReport, dict | None]:
    c = artifacts.load_category(args.source)
    d = artifacts.load_category(args.target)
    phi = EnrichedFunctor(c, d)
    is_enriched_functor(phi).require("pushforward")
    fs = enumerate_presheaves(c)
    gs = enumerate_presheaves(d)
    q = c.base
    for f in fs:
        pf = pushforward(phi, f)
        if not validate_presheaf(pf).ok:
            return ValidationReport((Check("pushforward", False, f"image of {f.values} invalid"),)), None
        for g in gs:
            if leq_presheaves(pf, g) != leq_presheaves(f, pullback(phi, g)):
                return (
                    ValidationReport(
                        (Check("pushforward", False, f"adjunction fails at {f.values}, {g.values}"),)
                    ),
                    None,
                )
        for a in range(q.size()):
            if pushforward(phi, tensor_action(f, a)) != tensor_action(pf, a):
                return (
                    ValidationReport(
                        (Check("pushforward", False, f"not equivariant at {f.values}, {q.elements[a]}"),)
                    ),
                    None,
                )
    for x in c.objects.labels:
        for a in range(q.size()):
            if pushforward(phi, free_presheaf(c, x, a)) != free_presheaf(d, x, a):
                return (
                    ValidationReport(
                        (Check("pushforward", False, f"free presheaf at ({x},{q.elements[a]}) not preserved"),)
                    ),
                    None,
                )
    return (
        ValidationReport(
            (Check("pushforward", True, f"{len(fs)} presheaves against {len(gs)}"),)
        ),
        None,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oplab", description=__doc__)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--deterministic", action="store_true", help="zero the timing field for byte-stable output"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="load an artifact and run its validator")
    p.add_argument("kind", choices=sorted(VALIDATORS))
    p.add_argument("path")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("check-operad", help="exhaustive operad axiom suite")
    p.add_argument("--labels", required=True, help="comma-separated label names")
    p.add_argument("--max-edges", type=int, default=3)
    p.add_argument("--tag", choices=[t.value for t in OperadTag], default="assoc")
    p.set_defaults(handler=_cmd_check_operad)

    p = sub.add_parser("check-approximation", help="exhaustive approximation suite")
    p.add_argument("--labels", required=True)
    p.add_argument("--max-dim", type=int, default=3)
    p.set_defaults(handler=_cmd_check_approximation)

    p = sub.add_parser("pairing", help="splice a left-modular and right-modular graph")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(handler=_cmd_pairing)

    p = sub.add_parser("yoneda", help="representability biconditional sweep")
    p.add_argument("--category", required=True)
    p.add_argument("--module", default="self")
    p.add_argument("--exhaustive", action="store_true", help="accepted for clarity; sweeps are always exhaustive")
    p.set_defaults(handler=_cmd_yoneda)

    p = sub.add_parser("density", help="decompose every presheaf over representables")
    p.add_argument("--category", required=True)
    p.set_defaults(handler=_cmd_density)

    p = sub.add_parser("duality", help="presheaf/copresheaf duality bijection")
    p.add_argument("--category", required=True)
    p.add_argument("--module", default="self")
    p.set_defaults(handler=_cmd_duality)

    p = sub.add_parser("colimit", help="pointwise joins and meets of all families")
    p.add_argument("--category", required=True)
    p.set_defaults(handler=_cmd_colimit)

    p = sub.add_parser("pushforward", help="extension/restriction adjunction suite")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(handler=_cmd_pushforward)
    return parser


def parse_and_dispatch(argv: list[str]) -> tuple[Report, int]:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        rep, result = args.handler(args)
    except OplabError as exc:
        elapsed = 0 if args.deterministic else int((time.monotonic() - started) * 1000)
        report = Report(
            "error",
            (Check("error", False, f"{type(exc).__name__}: {exc}"),),
            elapsed,
        )
        return report, 2
    elapsed = 0 if args.deterministic else int((time.monotonic() - started) * 1000)
    report = Report(_status(rep), rep.checks, elapsed, result)
    return report, 0 if rep.ok else 1


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    report, code = parse_and_dispatch(argv)
    emit_report(report, _format_from_argv(argv))
    return code


def _format_from_argv(argv: list[str]) -> str:
    for i, tok in enumerate(argv):
        if tok == "--format" and i + 1 < len(argv):
            return argv[i + 1]
        if tok.startswith("--format="):
            return tok.split("=", 1)[1]
    return "text"


if __name__ == "__main__":
    sys.exit(main())
