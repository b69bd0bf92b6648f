"""Command-line entry point.

Exit codes: 0 success / predictions hold, 1 verification mismatch,
2 usage or input error. Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from clifford_nogo.codes import CodeError, load_code, logical_action, preserves_code, standard_form
from clifford_nogo.constructions import MAX_K, construct_prime_order, construct_V, construct_W
from clifford_nogo.field import FieldSpec, find_primitive, poly_str, power_table
from clifford_nogo.gadgets import (
    Automorphism,
    Partition,
    ZXDuality,
    aut_order,
    aut_to_symplectic,
    format_cycles,
    is_fold_transversal,
    is_kfold,
    is_p_local,
    min_fold,
)
from clifford_nogo.numtheory import is_prime
from clifford_nogo.search import FeasibilityError, no_go_witness
from clifford_nogo.symplectic import PauliVec, SymplecticMatrix, element_order, group_order, parse_matrix_text, pauli_print


class UsageError(Exception):
    pass


# --- gadget files -------------------------------------------------------------------


def load_gadget(path: str | Path) -> tuple[SymplecticMatrix, Automorphism | None]:
    """JSON ``{"matrix": [...]}`` / ``{"automorphism": {...}}``, or a plain matrix text file."""
    path = Path(path)
    text = path.read_text()
    if not text.lstrip().startswith("{"):
        try:
            return parse_matrix_text(text), None
        except ValueError as exc:
            raise UsageError(f"{path}: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        if "matrix" in obj:
            return parse_matrix_text("\n".join(obj["matrix"])), None
        if "automorphism" in obj:
            spec = obj["automorphism"]
            a = Automorphism.parse(spec.get("perm", "()"), spec["locals"])
            return aut_to_symplectic(a), a
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from None
    raise UsageError(f"{path}: expected a 'matrix' or 'automorphism' key")


def _pauli_rows(rows: Sequence[int], n: int) -> list[str]:
    return [pauli_print(PauliVec(n, v)) for v in rows]


# --- subcommands -------------------------------------------------------------------


def cmd_field_table(args) -> tuple[dict, int]:
    if args.modulus:
        try:
            modulus = tuple(int(c) for c in args.modulus.split(","))
        except ValueError:
            raise UsageError(f"--modulus must be comma-separated integers, got {args.modulus!r}") from None
    else:
        modulus = find_primitive(args.p, args.m)
    spec = FieldSpec(args.p, args.m, modulus)
    rows = [f"alpha^{k} = {x}" for k, x in power_table(spec)]
    result = {
        "p": spec.p,
        "m": spec.m,
        "modulus": poly_str(spec.modulus),
        "primitive": spec.alpha().is_generator(),
        "table": rows,
    }
    return result, 0


def cmd_construct(args) -> tuple[dict, int]:
    if not 1 <= args.k <= MAX_K:
        raise UsageError(f"--k must be between 1 and {MAX_K}")
    build = {"v": construct_V, "w": construct_W, "prime": construct_prime_order}[args.which]
    c = build(args.k)
    return {"matrix": c.matrix.row_strings(), "provenance": c.provenance()}, 0


def cmd_order(args) -> tuple[dict, int]:
    M, aut = load_gadget(args.file)
    result = {"dimension": M.dim, "order": element_order(M)}
    if aut is not None:
        result["automorphism"] = str(aut)
    return result, 0


def cmd_group_order(args) -> tuple[dict, int]:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    return {"k": args.k, "order": group_order(args.k)}, 0


def cmd_standard_form(args) -> tuple[dict, int]:
    code = load_code(args.file)
    sf = standard_form(code)
    n = code.n
    to_std = sf.to_standard_frame
    result = {
        "code": code.name or Path(args.file).stem,
        "n": n,
        "k": code.k,
        "permutation": [q + 1 for q in sf.permutation],
        "x_rank": sf.x_rank,
        "generators": _pauli_rows(sf.generators, n),
        "logical_x": _pauli_rows([to_std(v) for v in sf.logical_x], n),
        "logical_z": _pauli_rows([to_std(v) for v in sf.logical_z], n),
        "destabilizers": _pauli_rows([to_std(v) for v in sf.destabilizers], n),
    }
    return result, 0


def cmd_logical_action(args) -> tuple[dict, int]:
    M, _ = load_gadget(args.gadget)
    code = load_code(args.code)
    if M.n != code.n:
        raise UsageError(f"gadget acts on {M.n} qubits but the code has {code.n}")
    if not preserves_code(M, code):
        return {"preserves_code": False}, 1
    L = logical_action(M, code)
    return {
        "preserves_code": True,
        "logical_action": L.row_strings(),
        "logical_order": element_order(L),
        "physical_order": element_order(M),
    }, 0


def cmd_classify(args) -> tuple[dict, int]:
    M, aut = load_gadget(args.gadget)
    fold, part = min_fold(M)
    result: dict = {
        "symplectic": True,
        "n": M.n,
        "order": element_order(M),
        "min_fold": fold,
        "min_partition": str(part),
    }
    if args.partition:
        p = Partition.parse(args.partition, M.n)
        result["partition"] = {"blocks": str(p), "fold": p.fold, "is_kfold": is_kfold(M, p)}
    if args.tau:
        tau = ZXDuality.parse(args.tau, M.n)
        result["fold_transversal"] = is_fold_transversal(M, tau)
    if aut is not None:
        order = aut_order(aut)
        result["automorphism"] = {
            "perm": format_cycles(aut.perm),
            "locals": list(aut.locals),
            "order": order,
            "p_local": is_p_local(aut, order) if is_prime(order) and order > 3 else None,
        }
    if args.code:
        code = load_code(args.code)
        if code.n != M.n:
            raise UsageError(f"gadget acts on {M.n} qubits but the code has {code.n}")
        keeps = preserves_code(M, code)
        result["preserves_code"] = keeps
        if keeps:
            L = logical_action(M, code)
            result["logical_action"] = L.row_strings()
            result["logical_order"] = element_order(L)
    return result, 0


def cmd_verify_nogo(args) -> tuple[dict, int]:
    code = load_code(args.file)
    report = no_go_witness(code, args.mode)
    return report.to_dict(), 0 if report.passed else 1


# --- output ---------------------------------------------------------------------


def _render(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, val in value.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render(val, indent + 1))
        elif isinstance(val, list) and val and all(isinstance(v, str) for v in val):
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {v}" for v in val)
        else:
            lines.append(f"{pad}{key}: {val}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clifford-nogo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="emit the report as JSON")
        sp.set_defaults(func=func)
        return sp

    sp = add("field-table", cmd_field_table, "power table of alpha in GF(p^m)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--modulus", help="coefficients constant-term first, e.g. 2,1,1 for x^2+x+2")

    sp = add("construct", cmd_construct, "order 2^k-1 (v), 2^k+1 (w) or primitive-prime (prime) element")
    sp.add_argument("which", choices=["v", "w", "prime"])
    sp.add_argument("--k", type=int, required=True)

    sp = add("order", cmd_order, "order of a symplectic matrix or gadget")
    sp.add_argument("file")

    sp = add("group-order", cmd_group_order, "|Sp(2k, 2)|")
    sp.add_argument("--k", type=int, required=True)

    sp = add("standard-form", cmd_standard_form, "standard form, logicals and destabilizers of a code")
    sp.add_argument("file")

    sp = add("logical-action", cmd_logical_action, "logical action of a gadget on a code")
    sp.add_argument("gadget")
    sp.add_argument("code")

    sp = add("classify", cmd_classify, "fold, automorphism and code-preservation report for a gadget")
    sp.add_argument("gadget")
    sp.add_argument("--partition", help="blocks like 1,2/3,4 (1-based)")
    sp.add_argument("--tau", help="ZX-duality pairs like 1-2,3-4 (1-based)")
    sp.add_argument("--code")

    sp = add("verify-nogo", cmd_verify_nogo, "check a code's logical group against the no-go predictions")
    sp.add_argument("file")
    sp.add_argument("--mode", choices=["transversal", "automorphism"], default="transversal")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, code = args.func(args)
    except (UsageError, CodeError, FeasibilityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {"command": argv, "result": result, "status": "ok" if code == 0 else "mismatch"}
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(_render(result)))
        if code:
            print("status: mismatch")
    return code


if __name__ == "__main__":
    sys.exit(main())
