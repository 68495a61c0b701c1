"""Command-line front end.

    gausslacet analyze 1 4 5 6 5 4 3 8 7 3 2 1 2 8 7 6 --gamma 00111011
    gausslacet klein --compact 1456543873212876
    gausslacet conn2 1 2 1 2
    gausslacet quad -p 2 --gamma 00111011 --compact 1456543873212876

Exit codes: 0 success/realizable, 1 not realizable, 2 input error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from typing import Any, Sequence

from gausslacet import gf2, klein, lacet, quad
from gausslacet.errors import GaussCodeError, RankExceedsP, TooLarge, TooManySolutions
from gausslacet.gauss import (
    GaussCode,
    bits_to_str,
    interlace_squared_table,
    interlace_table,
    labels_of,
    parity_partition,
    parse_gauss_code,
    str_to_bits,
)

EXIT_OK, EXIT_NOT_REALIZABLE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _table(masks: Sequence[int]) -> dict[str, list[int]]:
    return {str(x): labels_of(m) for x, m in enumerate(masks, start=1)}


def _surface(s: lacet.SurfaceClass) -> dict[str, Any]:
    return {"name": s.name, "connectivity": s.connectivity, "orientable": s.orientable}


def _partition(w: klein.PartitionWitness) -> dict[str, list[int]]:
    return {"O0": labels_of(w.O0), "O1": labels_of(w.O1), "E0": labels_of(w.E0), "E1": labels_of(w.E1)}


def _gamma(code: GaussCode, text: str | None) -> int | None:
    if text is None:
        return None
    if len(text) != code.n:
        raise UsageError(f"--gamma needs {code.n} bits, got {len(text)}")
    try:
        return str_to_bits(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_analyze(code: GaussCode, args: argparse.Namespace) -> tuple[str, dict, int]:
    part = parity_partition(code)
    payload: dict[str, Any] = {
        "n": code.n,
        "interlace": _table(interlace_table(code)),
        "interlace_squared": _table(interlace_squared_table(code)),
        "odd": labels_of(part.odd),
        "even": labels_of(part.even),
        "orientable": lacet.is_orientable(code),
    }
    g = _gamma(code, args.gamma)
    if g is not None:
        labels = range(1, code.n + 1)
        bm = lacet.b_matrix(code, g)
        payload["coloring"] = {
            "gamma": bits_to_str(g, code.n),
            "black": labels_of(g),
            "c": _table([lacet.c_map(code, g, x) for x in labels]),
            "c_anti": _table([lacet.c_antimap(code, g, x) for x in labels]),
            "b": _table(bm.rows),
            "surface": _surface(lacet.classify_surface(code, g)),
        }
    return "ok", payload, EXIT_OK


def cmd_klein(code: GaussCode, args: argparse.Namespace) -> tuple[str, dict, int]:
    n = code.n
    system = klein.build_system(code, twelve_class_only=args.twelve_class)
    payload: dict[str, Any] = {
        "variant": "twelve_class" if args.twelve_class else "complete",
        "m": system.m,
    }
    if args.dump_system:
        payload["system_dump"] = system.dump().splitlines()
    try:
        report = klein.solve(code, cap=args.max_enum, twelve_class_only=args.twelve_class)
    except TooManySolutions as exc:
        payload.update(affine_dim=exc.dim, cap=exc.cap)
        return "too_many_solutions", payload, EXIT_LIMIT
    if isinstance(report, klein.NotRealizable):
        payload["certificate"] = bits_to_str(report.certificate, system.m)
        payload["certificate_verified"] = gf2.verify_certificate(system.L, system.r, report.certificate)
        payload["certificate_rows"] = [
            {"row": i, "k": o.k, "l": o.l, "class": str(o.cls)}
            for i, o in enumerate(system.provenance)
            if report.certificate >> i & 1
        ]
        return "not_realizable", payload, EXIT_NOT_REALIZABLE
    payload["affine_dim"] = report.affine_dim
    payload["solution_count"] = len(report.solutions)
    payload["solutions"] = [
        {
            "gamma": bits_to_str(rec.solution.gamma, n),
            "delta": bits_to_str(rec.solution.delta, n),
            "surface": _surface(rec.surface),
            "partition": _partition(rec.partition),
            "verified": rec.verified,
        }
        for rec in report.solutions
    ]
    return "realizable", payload, EXIT_OK


def cmd_conn2(code: GaussCode, args: argparse.Namespace) -> tuple[str, dict, int]:
    try:
        k, g = lacet.min_conn2(code, n_limit=args.limit)
    except TooLarge as exc:
        return "too_large", {"n": exc.n, "limit": exc.n_limit}, EXIT_LIMIT
    payload = {
        "min_connectivity": k,
        "witness_gamma": bits_to_str(g, code.n),
        "surface": _surface(lacet.classify_surface(code, g)),
    }
    return "ok", payload, EXIT_OK


def cmd_quad(code: GaussCode, args: argparse.Namespace) -> tuple[str, dict, int]:
    if args.p < 0:
        raise UsageError("-p must be non-negative")
    system = quad.build_quadratic(code, args.p)
    anf = quad.export_anf(system)
    payload: dict[str, Any] = {
        "p": args.p,
        "equations": system.num_equations,
        "variables": system.num_variables,
    }
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(anf)
        payload["anf_path"] = args.output
    else:
        payload["anf"] = anf.splitlines()
    g = _gamma(code, args.gamma)
    if g is None:
        return "ok", payload, EXIT_OK
    fixed: dict[str, Any] = {"gamma": bits_to_str(g, code.n)}
    payload["fixed_gamma"] = fixed
    try:
        a = quad.solve_fixed_gamma(code, g, args.p)
    except RankExceedsP as exc:
        fixed.update(solved=False, rank=exc.rank)
        return "rank_exceeds_p", payload, EXIT_NOT_REALIZABLE
    fixed.update(
        solved=True,
        rank=gf2.rank(lacet.b_matrix(code, g).as_bitmatrix()),
        delta=[bits_to_str(row, args.p) for row in a.delta.rows],
        epsilon=[bits_to_str(row, args.p) for row in a.epsilon.rows],
        violations=len(quad.evaluate(system, a)),
    )
    return "ok", payload, EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "klein": cmd_klein, "conn2": cmd_conn2, "quad": cmd_quad}


def _common(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies use SUPPRESS so they never clobber values given before the subcommand
    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value

    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", default=default(False), help="emit JSON")
    parent.add_argument("--compact", action="store_true", default=default(False),
                        help="read the code as a string of single-character labels")
    parent.add_argument("--max-enum", type=int, default=default(gf2.DEFAULT_CAP),
                        help="cap on enumerated solutions (default 2^20)")
    parent.add_argument("--limit", type=int, default=default(lacet.DEFAULT_N_LIMIT),
                        help="largest n for exhaustive coloring sweeps (default 20)")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gausslacet", parents=[_common(False)],
                                     description="2-face colorable lacets of Gauss codes")
    sub = parser.add_subparsers(dest="command", required=True)
    shared = _common(True)

    p = sub.add_parser("analyze", parents=[shared], help="interlacement, parity, optional b-matrix")
    p.add_argument("--gamma", help="coloring as a bit string in label order")

    p = sub.add_parser("klein", parents=[shared], help="sphere / projective plane / Klein bottle")
    p.add_argument("--dump-system", action="store_true", help="include the system in matrix format")
    p.add_argument("--twelve-class", action="store_true",
                   help="drop restrictions from non-interlaced pairs (classical table)")

    sub.add_parser("conn2", parents=[shared], help="minimum connectivity over all colorings")

    p = sub.add_parser("quad", parents=[shared], help="quadratic system export")
    p.add_argument("-p", type=int, required=True, help="target connectivity")
    p.add_argument("--gamma", help="solve the system with this coloring fixed")
    p.add_argument("-o", "--output", help="write the ANF export to this file")

    for name in COMMANDS:
        sub.choices[name].add_argument("code", nargs="+", help="Gauss code tokens")
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[dict, int, bool]:
    args = build_parser().parse_args(argv)
    text = " ".join(args.code)
    report: dict[str, Any] = {"command": args.command}
    try:
        code = parse_gauss_code(text, compact=args.compact)
    except GaussCodeError as exc:
        report["input"] = {"text": text}
        report["status"] = "input_error"
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return report, EXIT_INPUT, args.json
    report["input"] = {
        "text": text,
        "tokens": code.original(),
        "normalized": list(code.seq),
        "label_map": code.label_map,
    }
    try:
        status, payload, rc = COMMANDS[args.command](code, args)
    except UsageError as exc:
        report["status"] = "input_error"
        report["error"] = {"type": "UsageError", "message": str(exc)}
        return report, EXIT_INPUT, args.json
    report["status"] = status
    report["payload"] = payload
    return report, rc, args.json


def render_text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, dict) or (isinstance(val, list) and val and not _inline(val)):
                lines.append(f"{pad}{key}:")
                lines += render_text(val, indent + 1)
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines += render_text(item, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _inline(items: list) -> bool:
    # label and token lists stay on one line; ANF and dump lines get one line each
    return all(isinstance(v, (int, bool)) or (isinstance(v, str) and not v.split()[1:]) for v in items)


def _scalar(val: Any) -> str:
    if isinstance(val, str):
        return val
    return json.dumps(val)


def report_schema() -> dict:
    """JSON schema that every ``--json`` report validates against."""
    return json.loads(resources.files("gausslacet").joinpath("report.schema.json").read_text())


def main(argv: Sequence[str] | None = None) -> int:
    report, rc, as_json = run(argv)
    if as_json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(render_text(report)) + "\n")
    return rc


if __name__ == "__main__":
    sys.exit(main())
