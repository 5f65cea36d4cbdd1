"""Command line interface: solve / reduce / matrix / check.

Exit codes: 0 success, 1 mathematical failure (degenerate coefficients,
exhausted degree cap, failed numeric check), 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..errors import DegenerateCoefficients, DegreeBoundExhausted, PoleAtIndex, RPiSigmaError
from ..evaluate import Evaluator
from ..reduction import extract_component_equation, shift_projection_matrix
from ..solver import SolverConfig, solve_plde_idempotent
from .files import FileFormatError, load_problem, load_tower
from .parser import parse_expression
from .printer import format_constant, format_element


def _read(path):
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load(args):
    tower = load_tower(_read(args.tower))
    a, f = load_problem(_read(args.problem), tower)
    return tower, a, f


def _constant_str(c):
    return format_constant(c)


def _emit(payload):
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_solve(args):
    tower, a, f = _load(args)
    config = SolverConfig(slack=args.slack)
    basis = solve_plde_idempotent(tower, a, f, config)
    payload = {
        "dimension": len(basis),
        "basis": [
            {"c": [_constant_str(ci) for ci in c], "g": format_element(g)}
            for c, g in basis
        ],
        "diagnostics": {
            "order": len(a) - 1,
            "parameters": len(f),
            "idempotent_order": tower.rorder,
        },
    }
    _emit(payload)
    return 0


def _cmd_reduce(args):
    tower, a, f = _load(args)
    eq = extract_component_equation(tower, a, args.component)
    if eq is None:
        _emit({"component": args.component, "absent": True})
        return 1
    payload = {
        "component": args.component,
        "order": eq.order,
        "b": [format_element(v) for v in eq.b],
        "functional": [format_element(v) for v in eq.functional],
        "rhs": [format_element(eq.rhs_for(fj)) for fj in f],
    }
    _emit(payload)
    return 0


def _cmd_matrix(args):
    tower, a, _ = _load(args)
    spm = shift_projection_matrix(tower, a)
    payload = [[format_element(entry) for entry in row] for row in spm.rows]
    _emit(payload)
    return 0


def _cmd_check(args):
    tower, a, f = _load(args)
    with open(args.basis, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    evaluator = Evaluator(tower)
    failures = []
    for idx, entry in enumerate(doc.get("basis", [])):
        c = [parse_expression(tower, s).to_ratfun().constant_value() for s in entry["c"]]
        g = parse_expression(tower, entry["g"])
        for n in range(1, args.n_max + 1):
            try:
                residual = evaluator.check_plde(a, f, c, g, n)
            except PoleAtIndex:
                continue
            if residual:
                failures.append({"index": idx, "n": n})
                break
    _emit({"ok": not failures, "checked_max_n": args.n_max, "failures": failures})
    return 1 if failures else 0


def build_arg_parser():
    parser = argparse.ArgumentParser(
        prog="rpisigma",
        description="Exact solver for parameterized linear difference equations "
        "in towers with a root-of-unity generator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve the problem, emit a solution basis as JSON")
    p_solve.add_argument("tower")
    p_solve.add_argument("problem")
    p_solve.add_argument("--slack", type=int, default=2, help="sum-generator degree slack")
    p_solve.set_defaults(func=_cmd_solve)

    p_red = sub.add_parser("reduce", help="emit one component's difference equation")
    p_red.add_argument("--component", type=int, required=True)
    p_red.add_argument("tower")
    p_red.add_argument("problem")
    p_red.set_defaults(func=_cmd_reduce)

    p_mat = sub.add_parser("matrix", help="emit the shift projection matrix")
    p_mat.add_argument("tower")
    p_mat.add_argument("problem")
    p_mat.set_defaults(func=_cmd_matrix)

    p_chk = sub.add_parser("check", help="numerically verify a basis file against the problem")
    p_chk.add_argument("--n-max", type=int, default=40)
    p_chk.add_argument("--basis", required=True)
    p_chk.add_argument("tower")
    p_chk.add_argument("problem")
    p_chk.set_defaults(func=_cmd_check)
    return parser


def main(argv=None):
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DegenerateCoefficients, DegreeBoundExhausted) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (FileFormatError, RPiSigmaError, OSError, json.JSONDecodeError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
