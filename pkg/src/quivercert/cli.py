"""Command-line surface with machine-readable JSON output.

Every subcommand prints a single JSON document on stdout.  Exit codes:
0 on success, 1 on a verification failure (a failed certificate or a
broken identity), 2 on malformed input.  Rational numbers render as
"p/q" strings, integers as JSON integers; output is byte-deterministic
for a fixed invocation (sorted keys, no locale dependence).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import repgeom
from .bundles import parse_expr
from .chow import ch_of, chi, integral, parse_chow_poly, render_fraction
from .quiver import Quiver, enumerate_hn_types, hn_stratum_codim, slope
from .strata import Moduli, eta, one_ps_from_hn, teleman_certify
from .verify import (
    CollectionSpec,
    check_ch_identities,
    mutation_ledger_check,
    standard_collection,
    verify_collection,
)


def _print(doc: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))


def _parse_int_tuple(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


def _moduli_from_args(args) -> Moduli:
    quiver = Quiver.from_spec(args.quiver)
    return Moduli(
        quiver=quiver,
        dim=_parse_int_tuple(args.dim),
        theta=_parse_int_tuple(args.theta),
        twist=_parse_int_tuple(args.twist),
    )


def _cmd_hn_types(args) -> tuple[dict, int]:
    quiver = Quiver.from_spec(args.quiver)
    d = _parse_int_tuple(args.dim)
    theta = _parse_int_tuple(args.theta)
    types = enumerate_hn_types(quiver, d, theta)
    rows = []
    for tau in types:
        row = {
            "parts": [list(p) for p in tau],
            "slopes": [render_fraction(slope(theta, p)) for p in tau],
            "codim": hn_stratum_codim(quiver, tau),
            "semistable_stratum": len(tau) == 1,
        }
        if len(tau) > 1:
            s = one_ps_from_hn(tau, theta)
            row["one_ps"] = [[list(block) for block in vertex] for vertex in s.blocks]
            row["eta"] = eta(quiver, s)
        else:
            row["eta"] = None
        rows.append(row)
    return {"quiver": quiver.to_json_dict(), "dim": list(d), "theta": list(theta),
            "types": rows}, 0


def _cmd_teleman(args) -> tuple[dict, int]:
    moduli = _moduli_from_args(args)
    expr = parse_expr(args.expr)
    report = teleman_certify(expr, moduli)
    return report.to_json_dict(), 0 if report.passed else 1


def _cmd_chi(args) -> tuple[dict, int]:
    expr = parse_expr(args.expr)
    return {"expr": str(expr), "chi": chi(expr)}, 0


def _cmd_ch(args) -> tuple[dict, int]:
    expr = parse_expr(args.expr)
    return {"expr": str(expr), "ch": ch_of(expr).to_json_dict()}, 0


def _cmd_chow_eval(args) -> tuple[dict, int]:
    element = parse_chow_poly(args.expr)
    return {
        "expr": args.expr,
        "coordinates": element.to_json_dict(),
        "integral": render_fraction(integral(element)),
    }, 0


def _cmd_stability(args) -> tuple[dict, int]:
    r = repgeom.parse_matrix(args.matrix)
    stable = repgeom.is_stable(r)
    quadrics = repgeom.minors(r)
    doc = {
        "matrix": str(r),
        "stable": stable,
        "minors": [repgeom.render_quadratic_form(q) for q in quadrics],
        "minors_independent": repgeom.minors_independent(r),
    }
    if stable:
        doc["abelian_plane"] = repgeom.commutes(repgeom.to_sl3_plane(r))
    else:
        doc["abelian_plane"] = None
    return doc, 0


def _cmd_syzygies(args) -> tuple[dict, int]:
    r = repgeom.parse_matrix(args.matrix)
    pair = repgeom.syzygies(r)
    doc = {
        "matrix": str(r),
        "sl3": [
            [[render_fraction(x) for x in row] for row in m] for m in pair.sl3
        ],
        "kernel_ok": all(
            all(c == 0 for c in repgeom.tensor_to_cubic(t)) for t in pair.tensors
        ),
        "commute": repgeom.commutes(pair.sl3),
    }
    if pair.degenerate:
        doc["warning"] = "degenerate syzygy: input matrix is unstable"
    return doc, 0


def _cmd_verify_collection(args) -> tuple[dict, int]:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            spec = CollectionSpec.from_json(fh.read())
    else:
        spec = standard_collection()
    moduli = _moduli_from_args(args)
    result = verify_collection(spec, moduli)
    return result.to_json_dict(), 0 if result.accepted else 1


def _cmd_ledger_check(args) -> tuple[dict, int]:
    identities = check_ch_identities()
    ledger = mutation_ledger_check()
    doc = {
        "ch_identities": identities.to_json_dict(),
        "mutation_ledger": ledger.to_json_dict(),
        "pass": identities.passed and ledger.passed,
    }
    return doc, 0 if doc["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivercert",
        description=(
            "Exact certificates for the 3-Kronecker (2,3) quiver moduli space: "
            "Harder-Narasimhan strata, Teleman vanishing, Chow ring arithmetic, "
            "and exceptional-collection verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_moduli_flags(p):
        p.add_argument("--quiver", default="kronecker:3",
                       help="'kronecker:m' or JSON {\"vertices\":n,\"arrows\":[[i,j],..]}")
        p.add_argument("--dim", default="2,3", help="dimension vector, e.g. 2,3")
        p.add_argument("--theta", default="3,-2", help="stability parameter, e.g. 3,-2")
        p.add_argument("--twist", default="1,-1", help="universal-bundle twist, e.g. 1,-1")

    p = sub.add_parser("hn-types", help="enumerate Harder-Narasimhan types")
    add_moduli_flags(p)
    p.set_defaults(func=_cmd_hn_types)

    p = sub.add_parser("teleman", help="vanishing certificate for a bundle expression")
    add_moduli_flags(p)
    p.add_argument("--expr", required=True)
    p.set_defaults(func=_cmd_teleman)

    p = sub.add_parser("chi", help="Euler characteristic via Riemann-Roch")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("ch", help="Chern character of a bundle expression")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=_cmd_ch)

    p = sub.add_parser("chow-eval", help="evaluate a polynomial in c1,c2,c3,d1,d2")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=_cmd_chow_eval)

    p = sub.add_parser("stability", help="stability of a 2x3 matrix of linear forms")
    p.add_argument("--matrix", required=True, help="e.g. 'x,y,0;0,y,z'")
    p.set_defaults(func=_cmd_stability)

    p = sub.add_parser("syzygies", help="syzygy pair and its traceless-matrix plane")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=_cmd_syzygies)

    p = sub.add_parser("verify-collection", help="certify a candidate collection")
    add_moduli_flags(p)
    p.add_argument("--file", help="collection JSON; defaults to the built-in collection")
    p.set_defaults(func=_cmd_verify_collection)

    p = sub.add_parser("ledger-check", help="Chern character identities and mutation ledger")
    p.set_defaults(func=_cmd_ledger_check)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true",
                        help="compact JSON output (the default)")
        sp.add_argument("--pretty", action="store_true", help="indent the JSON output")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        _print({"error": str(exc)}, getattr(args, "pretty", False))
        return 2
    _print(doc, args.pretty)
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
