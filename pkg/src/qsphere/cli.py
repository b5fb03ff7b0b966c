"""Command-line interface.

All output is exact: scalars print in the canonical fraction-of-polynomials
form and chains as canonical structured JSON.  The special chain name
``fundamental`` resolves to the built-in fundamental cycle, so no fixture
file is needed for it.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .algebra import Automorphism, apply_aut
from .chains import (Chain, boundary, chain_from_json, chain_to_json,
                     cyclic_t)
from .cochains import cap, parse_cochain_name
from .expr import ExprError, parse, parse_scalar, render, render_scalar
from .homology import (TraceFunctional, fundamental_class, h0_reduce,
                       h2_class)
from .qfield import PoleError
from .verify import (DEFAULT_TRUNCATION, emit_report, run_suite,
                     suite_failed)
from .volume import FUNCTIONALS, eta, is_cyclic, phi

TRUNCATION_ENV = "QS2_TRUNCATION"


class CliError(Exception):
    pass


def _truncation(text: str | None) -> tuple[int, int]:
    if text is None:
        text = os.environ.get(TRUNCATION_ENV)
    if text is None:
        return DEFAULT_TRUNCATION
    try:
        i, j = (int(p) for p in text.split(","))
    except ValueError:
        raise CliError(f"truncation must look like I,J, got {text!r}") from None
    if i < 0 or j < 0:
        raise CliError("truncation bounds must be >= 0")
    return i, j


def read_chain(path: str) -> Chain:
    """Load a chain file; the name 'fundamental' is built in."""
    if path == "fundamental":
        return fundamental_class()
    p = Path(path)
    if not p.exists():
        raise CliError(f"no such chain file: {path}")
    try:
        return chain_from_json(p.read_text(encoding="utf-8"))
    except (ValueError, ExprError) as exc:
        raise CliError(f"{path}: {exc}") from None


def write_chain(c: Chain, path: str) -> None:
    Path(path).write_text(chain_to_json(c) + "\n", encoding="utf-8")


def _emit_chain(c: Chain, out: str | None) -> None:
    if out:
        write_chain(c, out)
    else:
        print(chain_to_json(c))


def _cmd_normalize(args) -> int:
    print(render(parse(args.expr)))
    return 0


def _cmd_mul(args) -> int:
    print(render(parse(args.left) * parse(args.right)))
    return 0


def _cmd_aut(args) -> int:
    lam = Automorphism(parse_scalar(args.twist))
    print(render(apply_aut(lam, parse(args.expr))))
    return 0


def _cmd_boundary(args) -> int:
    _emit_chain(boundary(read_chain(args.chain)), args.out)
    return 0


def _cmd_cyclic(args) -> int:
    _emit_chain(cyclic_t(read_chain(args.chain)), args.out)
    return 0


def _cmd_cap(args) -> int:
    _emit_chain(cap(read_chain(args.chain), parse_cochain_name(args.cochain)),
                args.out)
    return 0


def _cmd_cup_eval(args) -> int:
    cochain = parse_cochain_name(args.cochain)
    arg_texts = [t for t in args.args.split(",") if t.strip()] if args.args else []
    if len(arg_texts) != cochain.degree:
        raise CliError(
            f"cochain {args.cochain!r} has degree {cochain.degree}, "
            f"got {len(arg_texts)} arguments")
    print(render(cochain.eval([parse(t) for t in arg_texts])))
    return 0


def _trace_functional(kind: str, twist: Automorphism) -> TraceFunctional:
    kind = kind.strip()
    if kind == "unit":
        return TraceFunctional("unit", twist)
    if kind == "x0":
        return TraceFunctional("x0", twist)
    if kind.startswith("x0^"):
        return TraceFunctional(("x0power", int(kind[3:])), twist)
    for prefix, sign in (("xm1", -1), ("x1", 1)):
        if kind == prefix:
            return TraceFunctional(("xpower", sign, 1), twist)
        if kind.startswith(prefix + "^"):
            return TraceFunctional(("xpower", sign, int(kind[len(prefix) + 1:])),
                                   twist)
    raise CliError(f"unknown trace kind {kind!r} "
                   "(want unit, x0, x0^i, x1^j or xm1^j)")


def _cmd_trace(args) -> int:
    twist = Automorphism(parse_scalar(args.twist))
    t = _trace_functional(args.kind, twist)
    print(render_scalar(t(parse(args.expr))))
    return 0


def _cmd_h0(args) -> int:
    twist = Automorphism(parse_scalar(args.twist))
    coords = h0_reduce(parse(args.expr), twist)
    if not coords:
        print("0")
        return 0
    for label in sorted(coords):
        print(f"{label} = {render_scalar(coords[label])}")
    return 0


def _cmd_h2class(args) -> int:
    print(render_scalar(h2_class(read_chain(args.chain))))
    return 0


def _cmd_phi(args) -> int:
    print(render_scalar(phi(read_chain(args.chain), args.variant)))
    return 0


def _cmd_eta(args) -> int:
    print(render_scalar(eta(read_chain(args.chain))))
    return 0


def _cmd_cyclic_check(args) -> int:
    if args.functional not in FUNCTIONALS:
        raise CliError(f"unknown functional {args.functional!r}; "
                       f"choose from {', '.join(sorted(FUNCTIONALS))}")
    report = is_cyclic(args.functional, _truncation(args.truncation))
    print(f"functional: {report.name}")
    print(f"truncation: {report.truncation[0]},{report.truncation[1]}")
    print(f"rotation checks: {report.checked_rotations}, "
          f"violations: {report.rotation_violations}")
    print(f"leading-unit checks: {report.checked_units}, "
          f"violations: {report.unit_violations}")
    for tensor, value in report.rotation_defects:
        print(f"  rotation defect {render_scalar(value)} at "
              + " (x) ".join(str(list(k)) for k in tensor))
    for tensor, value in report.unit_values:
        print(f"  leading-unit value {render_scalar(value)} at "
              + " (x) ".join(str(list(k)) for k in tensor))
    print("cyclic" if report.is_cyclic else "not cyclic")
    return 0


def _cmd_verify(args) -> int:
    selection = None
    if args.suite != "all":
        selection = {s.strip() for s in args.suite.split(",") if s.strip()}
    results = run_suite(selection, _truncation(args.truncation))
    text = emit_report(results, args.report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 1 if suite_failed(results) else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qsphere",
        description="exact twisted homology calculus on the quantum 2-sphere")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normally order an expression")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("mul", help="multiply two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_mul)

    p = sub.add_parser("aut", help="apply the scaling automorphism")
    p.add_argument("--twist", required=True, help="scalar expression for lambda")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_aut)

    p = sub.add_parser("boundary", help="boundary of a chain file")
    p.add_argument("--chain", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_boundary)

    p = sub.add_parser("cyclic", help="cyclic rotation of a chain file")
    p.add_argument("--chain", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_cyclic)

    p = sub.add_parser("cap", help="cap a chain with a named cochain")
    p.add_argument("--chain", required=True)
    p.add_argument("--cochain", required=True,
                   help="d1, d0, dm1, x0^i, inner:<expr>@<twist>, cup(a,b)")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_cap)

    p = sub.add_parser("cup-eval", help="evaluate a named cochain on arguments")
    p.add_argument("--cochain", required=True)
    p.add_argument("--args", default="", help="comma-separated expressions")
    p.set_defaults(fn=_cmd_cup_eval)

    p = sub.add_parser("trace", help="evaluate a twisted trace")
    p.add_argument("--kind", required=True, help="unit, x0, x0^i, x1^j, xm1^j")
    p.add_argument("--twist", required=True)
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_trace)

    p = sub.add_parser("h0", help="reduce an element to homology coordinates")
    p.add_argument("--twist", required=True)
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_h0)

    p = sub.add_parser("h2class", help="pair a degree-2 cycle with the volume class")
    p.add_argument("--chain", required=True)
    p.set_defaults(fn=_cmd_h2class)

    p = sub.add_parser("phi", help="evaluate the volume functional")
    p.add_argument("--variant", default="delta", choices=("delta", "efd", "cap"))
    p.add_argument("--chain", required=True)
    p.set_defaults(fn=_cmd_phi)

    p = sub.add_parser("eta", help="evaluate the cyclic correction term")
    p.add_argument("--chain", required=True)
    p.set_defaults(fn=_cmd_eta)

    p = sub.add_parser("cyclic-check", help="bounded cyclicity check")
    p.add_argument("--functional", required=True,
                   help=", ".join(sorted(FUNCTIONALS)))
    p.add_argument("--truncation", help="I,J (default 3,3)")
    p.set_defaults(fn=_cmd_cyclic_check)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--suite", default="all", help="all or C1,C2,...")
    p.add_argument("--truncation", help="I,J (default 3,3)")
    p.add_argument("--report", default="markdown", choices=("markdown", "md", "json"))
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "report", None) == "md":
        args.report = "markdown"
    try:
        return args.fn(args)
    except (CliError, ExprError, PoleError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
