"""Command line interface.

    complexdim dim      [--input FILE] [--mode exact|float] [--oracle ...]
    complexdim dense    [--input FILE]
    complexdim mh       [--input FILE]
    complexdim densify  [--input FILE]
    complexdim closure  [--input FILE]
    complexdim morphism [--input FILE]
    complexdim relation [--input FILE | VALUE ...]

Input is JSON read from ``--input`` or stdin; reports are JSON on stdout.
Generator and coordinate indices are 1-based in both directions.
Exit codes: 0 success, 1 bad input, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .dimension import (
    GroupSpec,
    MHReport,
    build_MH,
    closure_structure,
    densify,
)
from .errors import BudgetExceeded, ComplexDimError, InputError, InternalInvariantViolation, ParseError, PrecisionExhausted
from .exactnum import RealElement, eval_float
from .morphism import ClosedGroup, ClosedHom, image, is_injective, is_invertible, is_surjective, kernel
from .oracle import epsilon_net_oracle
from .realparse import parse
from .relation import (
    DEFAULT_DELTA,
    DEFAULT_MAX_COEFF,
    DEFAULT_SCALE_DIGITS,
    find_integer_relation,
    float_build_mh,
)

SCHEMA_VERSION = "1.0"


# -- input -------------------------------------------------------------------------


def _load(args: argparse.Namespace) -> dict:
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                data = json.load(fh)
        else:
            data = json.load(sys.stdin)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    except OSError as exc:
        raise InputError(str(exc)) from exc
    if not isinstance(data, dict):
        raise InputError("job input must be a JSON object")
    return data


def _parse_entry(text: Any, where: str) -> RealElement:
    if isinstance(text, int) and not isinstance(text, bool):
        return RealElement.rational(text)
    if not isinstance(text, str):
        raise InputError(f"{where}: expected an expression string, got {text!r}")
    try:
        return parse(text)
    except ParseError as exc:
        raise type(exc)(f"{where}: {exc.message}", exc.position, exc.expected) from exc
    except InputError as exc:
        raise type(exc)(f"{where}: {exc}") from exc


def _parse_float_entry(text: Any, digits: int, where: str) -> float:
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        return float(text)
    if not isinstance(text, str):
        raise InputError(f"{where}: expected a number or expression, got {text!r}")
    try:
        return float(Decimal(text.strip()))
    except InvalidOperation:
        pass
    return float(eval_float(_parse_entry(text, where), digits + 4).value)


def _vectors(rows: Any, where: str, n: int | None = None) -> list[list[Any]]:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise InputError(f"{where} must be a list of lists")
    for i, r in enumerate(rows):
        if n is not None and len(r) != n:
            raise InputError(f"{where}[{i}] has length {len(r)}, expected {n}")
    return rows


def _job(data: dict) -> tuple[int, list[list[Any]], dict[int, list[int]] | None]:
    n = data.get("ambient_dim")
    if not isinstance(n, int) or n < 1:
        raise InputError("ambient_dim must be a positive integer")
    gens = _vectors(data.get("generators"), "generators", n)
    if not gens:
        raise InputError("generators must be nonempty")
    force = data.get("force_I")
    forced = None
    if force is not None:
        if not isinstance(force, dict):
            raise InputError("force_I must be an object mapping generator index to a list of coordinates")
        forced = {}
        for k, v in force.items():
            try:
                kk = int(k)
            except ValueError as exc:
                raise InputError(f"force_I key {k!r} is not an integer") from exc
            if not 1 <= kk <= len(gens):
                raise InputError(f"force_I key {k} is out of range 1..{len(gens)}")
            if not isinstance(v, list) or any(not isinstance(j, int) or not 1 <= j <= n for j in v):
                raise InputError(f"force_I[{k}] must list coordinates in 1..{n}")
            forced[kk - 1] = [j - 1 for j in v]
    return n, gens, forced


def _exact_spec(data: dict) -> GroupSpec:
    n, gens, forced = _job(data)
    parsed = [[_parse_entry(x, f"generators[{k + 1}][{i + 1}]") for i, x in enumerate(g)] for k, g in enumerate(gens)]
    return GroupSpec(n, tuple(tuple(g) for g in parsed), forced)


def _mode(args: argparse.Namespace, data: dict) -> str:
    mode = args.mode or data.get("mode", "exact")
    if mode not in ("exact", "float"):
        raise InputError(f"mode must be 'exact' or 'float', got {mode!r}")
    return mode


# -- rendering -----------------------------------------------------------------------


def _q(x: Fraction | int) -> str:
    return str(Fraction(x))


def _expr(x: RealElement) -> str:
    return str(x)


def _idx(xs: Sequence[int]) -> list[int]:
    return [i + 1 for i in xs]


def _header(command: str, mode: str = "exact") -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "mode": mode, "heuristic": mode == "float"}


def _mh_report(args: argparse.Namespace, data: dict) -> tuple[MHReport, int, str]:
    mode = _mode(args, data)
    if mode == "exact":
        G = _exact_spec(data)
        return build_MH(G), G.ambient_dim, mode
    n, gens, forced = _job(data)
    if forced:
        raise InputError("force_I is only supported in exact mode")
    digits = args.float_precision
    floats = [[_parse_float_entry(x, digits, f"generators[{k + 1}][{i + 1}]") for i, x in enumerate(g)] for k, g in enumerate(gens)]
    return float_build_mh(floats, digits, args.max_coeff, args.lll_delta), n, mode


def _summary(report: MHReport, n: int) -> dict:
    return {
        "ambient_dim": n,
        "q": report.q,
        "p": report.rank,
        "r": report.q - report.rank,
        "complex_dim": str(report.complex_dim),
        "rank_MH": report.rank,
        "dense_in_span": report.rank == report.q,
        "dense_in_ambient": report.rank == report.q == n,
    }


def _oracle_block(args: argparse.Namespace, data: dict, report: MHReport) -> dict:
    G = _exact_spec(data)
    block: dict[str, Any] = {"bound": args.bound, "epsilon": args.epsilon}
    try:
        verdict = epsilon_net_oracle(G, args.bound, args.epsilon)
    except BudgetExceeded as exc:
        block["status"] = "budget_exceeded"
        block["detail"] = str(exc)
        return block
    block["status"] = "ok"
    block["dense_in_span"] = verdict
    block["agrees"] = verdict == (report.rank == report.q)
    return block


def cmd_dim(args: argparse.Namespace, data: dict) -> dict:
    report, n, mode = _mh_report(args, data)
    out = _header("dim", mode)
    out.update(_summary(report, n))
    out["basis_indices"] = _idx(report.basis_indices)
    out["I"] = {str(k + 1): _idx(v) for k, v in report.I.items()}
    out["MH"] = report.MH
    if args.oracle:
        if mode != "exact":
            raise InputError("--oracle needs exact mode")
        out["oracle"] = _oracle_block(args, data, report)
    return out


def cmd_dense(args: argparse.Namespace, data: dict) -> dict:
    report, n, mode = _mh_report(args, data)
    out = _header("dense", mode)
    s = _summary(report, n)
    out.update({k: s[k] for k in ("ambient_dim", "q", "rank_MH", "dense_in_span", "dense_in_ambient")})
    if args.oracle and mode == "exact":
        out["oracle"] = _oracle_block(args, data, report)
    return out


def cmd_mh(args: argparse.Namespace, data: dict) -> dict:
    report, n, mode = _mh_report(args, data)
    out = _header("mh", mode)
    out.update(_summary(report, n))
    out["basis_indices"] = _idx(report.basis_indices)
    traces = {}
    for k in sorted(report.I):
        traces[str(k + 1)] = {
            "coords": [_expr(a) for a in report.coords[k]],
            "I": _idx(report.I[k]),
            "d": report.d[k],
            "t": {str(i + 1): _q(v) for i, v in sorted(report.t[k].items())},
            "gamma": {f"{i + 1},{j + 1}": _q(v) for (i, j), v in sorted(report.gamma[k].items())},
            "m_coeffs": {f"{i + 1},{j + 1}": v for (i, j), v in sorted(report.m_coeffs[k].items())},
            "p_coeffs": {str(i + 1): v for i, v in sorted(report.p_coeffs[k].items())},
            "u_prime": {str(j + 1): list(col) for j, col in sorted(report.u_prime[k].items())},
        }
    out["generators"] = traces
    out["columns"] = [[k + 1, j + 1] for k, j in report.columns]
    out["MH"] = report.MH
    out["rank"] = report.rank
    return out


def cmd_densify(args: argparse.Namespace, data: dict) -> dict:
    if _mode(args, data) != "exact":
        raise InputError("densify needs exact mode")
    G = _exact_spec(data)
    u, extended = densify(G)
    report = build_MH(extended)
    out = _header("densify")
    out["u"] = [_expr(x) for x in u]
    out["q"] = report.q
    out["verified_dim"] = {"p": report.rank, "r": report.q - report.rank, "complex_dim": str(report.complex_dim)}
    out["generators"] = [[_expr(x) for x in g] for g in extended.generators]
    return out


def cmd_closure(args: argparse.Namespace, data: dict) -> dict:
    if _mode(args, data) != "exact":
        raise InputError("closure needs exact mode")
    G = _exact_spec(data)
    cs = closure_structure(G)
    out = _header("closure")
    out["candidate"] = cs.candidate
    out["complex_dim"] = str(cs.complex_dim)
    out["F_basis"] = [list(v) for v in cs.F_basis]
    out["F_ambient"] = [[_expr(x) for x in v] for v in cs.F_ambient]
    out["discrete_gens"] = [[_q(x) for x in v] for v in cs.discrete_gens]
    out["discrete_ambient"] = [[_expr(x) for x in v] for v in cs.discrete_ambient]
    out["complement_indices"] = _idx(cs.complement_indices)
    if args.oracle:
        block: dict[str, Any] = {"bound": args.bound, "epsilon": args.epsilon}
        try:
            block["F_dense"] = epsilon_net_oracle(G, args.bound, args.epsilon, cs.F_basis or None) if cs.F_basis else True
            block["span_dense"] = epsilon_net_oracle(G, args.bound, args.epsilon)
            block["status"] = "ok"
        except BudgetExceeded as exc:
            block["status"] = "budget_exceeded"
            block["detail"] = str(exc)
        out["oracle"] = block
    return out


def _closed_group(obj: Any, where: str) -> ClosedGroup:
    if not isinstance(obj, dict):
        raise InputError(f"{where} must be an object")
    n = obj.get("ambient_dim")
    if not isinstance(n, int) or n < 1:
        raise InputError(f"{where}.ambient_dim must be a positive integer")
    E = _vectors(obj.get("E_basis", []), f"{where}.E_basis", n)
    D = _vectors(obj.get("D_gens", []), f"{where}.D_gens", n)
    try:
        return ClosedGroup(
            n,
            tuple(tuple(_parse_entry(x, f"{where}.E_basis[{i + 1}]") for x in v) for i, v in enumerate(E)),
            tuple(tuple(_parse_entry(x, f"{where}.D_gens[{i + 1}]") for x in v) for i, v in enumerate(D)),
        )
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from exc


def _group_report(G: ClosedGroup) -> dict:
    return {
        "ambient_dim": G.ambient_dim,
        "E_basis": [[_expr(x) for x in v] for v in G.E_basis],
        "D_gens": [[_expr(x) for x in v] for v in G.D_gens],
        "cdim": {"p": G.cdim().p, "r": G.cdim().r, "modulus_squared": G.cdim().modulus_squared},
    }


def cmd_morphism(args: argparse.Namespace, data: dict) -> dict:
    dom = _closed_group(data.get("domain"), "domain")
    cod = _closed_group(data.get("codomain"), "codomain")
    A = _vectors(data.get("A", []), "A")
    B = _vectors(data.get("B", []), "B")
    A_parsed = [[_parse_entry(x, f"A[{i + 1}]") for x in row] for i, row in enumerate(A)]
    for row in B:
        if any(not isinstance(x, int) or isinstance(x, bool) for x in row):
            raise InputError("B must contain integers")
    try:
        f = ClosedHom(dom, cod, A_parsed, B)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = _header("morphism")
    out["domain"] = _group_report(dom)
    out["codomain"] = _group_report(cod)
    out["injective"] = is_injective(f)
    out["surjective"] = is_surjective(f)
    out["invertible"] = is_invertible(f)
    out["image"] = _group_report(image(f))
    out["kernel"] = _group_report(kernel(f))
    return out


def cmd_relation(args: argparse.Namespace, data: dict | None) -> dict:
    values = list(args.values or [])
    if not values:
        if data is None:
            data = {}
        values = data.get("values", [])
    if len(values) < 2:
        raise InputError("relation needs at least two values")
    xs = []
    for i, v in enumerate(values):
        try:
            xs.append(Decimal(str(v)))
        except InvalidOperation as exc:
            raise InputError(f"values[{i + 1}]: {v!r} is not a decimal number") from exc
    res = find_integer_relation(xs, args.float_precision, args.max_coeff, args.lll_delta)
    out = _header("relation", "float")
    out["values"] = [str(x) for x in xs]
    out["scale_digits"] = args.float_precision
    out["max_coeff"] = args.max_coeff
    out["found"] = res is not None
    if res is not None:
        out["coefficients"] = list(res.coefficients)
        out["residual"] = res.residual
    return out


COMMANDS = {
    "dim": cmd_dim,
    "dense": cmd_dense,
    "mh": cmd_mh,
    "densify": cmd_densify,
    "closure": cmd_closure,
    "morphism": cmd_morphism,
    "relation": cmd_relation,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="JSON job file (default: stdin)")
    common.add_argument("--mode", choices=("exact", "float"), help="overrides the job's mode field")
    common.add_argument("--float-precision", type=int, default=DEFAULT_SCALE_DIGITS, metavar="N")
    common.add_argument("--lll-delta", type=float, default=DEFAULT_DELTA)
    common.add_argument("--max-coeff", type=int, default=DEFAULT_MAX_COEFF)
    common.add_argument("--json", dest="json", action="store_true", default=True)
    common.add_argument("--no-json", dest="json", action="store_false", help="plain key: value output")
    common.add_argument("--oracle", action="store_true", help="cross-check with the epsilon-net oracle")
    common.add_argument("--bound", type=int, default=1000, help="oracle coefficient bound K")
    common.add_argument("--epsilon", type=float, default=0.01, help="oracle grid radius")

    parser = argparse.ArgumentParser(prog="complexdim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "relation":
            p.add_argument("values", nargs="*", help="decimal values (else read from JSON 'values')")
    return parser


def _emit(out: dict, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(out, indent=2, ensure_ascii=False) + "\n")
    else:
        for k, v in out.items():
            sys.stdout.write(f"{k}: {json.dumps(v, ensure_ascii=False) if isinstance(v, (dict, list)) else v}\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "relation" and args.values:
            data = None
        else:
            data = _load(args)
        out = COMMANDS[args.command](args, data)
    except InternalInvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (InputError, PrecisionExhausted) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ComplexDimError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(out, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
