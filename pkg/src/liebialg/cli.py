"""Command-line front end.

    liebialg validate      --algebra F
    liebialg rmatrix-check --algebra F --pi F
    liebialg construct     --algebra F --pi F --x "c1,...,cn"
    liebialg group         --algebra F --pi F --g "row-major entries"
    liebialg classical     --series A --rank 2 (--list-roots | --root SPEC)
    liebialg double        --algebra F --pi F [--subspace F]
    liebialg reproduce     --series X --rank n

Exit status: 0 on success, 1 when a check fails, 2 on bad input. Input
errors go to stderr and name the offending field; reports go to stdout as
JSON (default) or ``--format text`` with one ``key: json-value`` line per
field, so both formats carry the same verdicts.

Report fields (scalars are strings ``"p/q"`` or ``"p/q+r/s*i"``):

    validate       dim, field, jacobi, jacobi_witness, realization_consistent, realization_witness
    rmatrix-check  is_r_matrix, witness
    construct      x, lambda ("any" when [x, pi] = 0, null when no lambda), condi_holds,
                   h_basis (RREF rows), dim, is_subalgebra, is_coisotropic
    group          g, eta ([i, j, c] terms), h_basis, dim, flat, is_subalgebra,
                   is_coisotropic, inversion_property (when h^g is a subalgebra)
    classical      roots (--list-roots) or root, generator plus the construct fields
    double         dim, jacobi, pairing_ad_invariant, subspace, lagrangian, witness
    reproduce      series, rank, rows (root, generator, dim, condi_holds,
                   is_coisotropic, match), all_match

``LIEBIALG_MAX_RANK`` (default 6) caps the rank accepted by the classical verbs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bialgebra import (
    Subspace,
    annihilator,
    drinfeld_double,
    is_lagrangian,
    is_r_matrix,
    pairing_ad_invariant,
)
from .classical import (
    SERIES,
    build_series,
    format_root,
    line_roots,
    parse_root,
    reproduce_families,
    standard_r_matrix,
)
from .construction import OracleContradiction, construct, h_from_group, inversion_property_check
from .io import (
    InputError,
    algebra_from_json,
    load_json,
    multivector_from_json,
    parse_square_matrix,
    parse_vector,
    subspace_from_json,
    subspace_to_json,
)
from .linalg import DimensionError, SingularMatrixError, kernel_basis
from .liealg import NoRealizationError, NotInSpanError, jacobi_check, realization_check

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2
DEFAULT_MAX_RANK = 6


class CheckFailed(Exception):
    def __init__(self, report):
        super().__init__("check failed")
        self.report = report


def _max_rank() -> int:
    raw = os.environ.get("LIEBIALG_MAX_RANK", str(DEFAULT_MAX_RANK))
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"LIEBIALG_MAX_RANK must be an integer, got {raw!r}") from None


def _series(args):
    series = args.series.upper()
    if series not in SERIES:
        raise InputError(f"--series: unknown series {args.series!r} (expected one of {', '.join(SERIES)})")
    cap = _max_rank()
    if args.rank > cap:
        raise InputError(f"--rank: {args.rank} exceeds LIEBIALG_MAX_RANK={cap}")
    try:
        return build_series(series, args.rank)
    except ValueError as exc:
        raise InputError(f"--rank: {exc}") from None


def _algebra(args):
    return algebra_from_json(load_json(args.algebra))


def _pi(args, A):
    pi = multivector_from_json(load_json(args.pi), A.dim, A.field)
    if pi.degree != 2 and pi:
        raise InputError("--pi: bivector must have degree 2")
    return pi


def cmd_validate(args):
    A = _algebra(args)
    jac = jacobi_check(A)
    real = realization_check(A)
    report = {
        "dim": A.dim,
        "field": A.field,
        "jacobi": jac.ok,
        "jacobi_witness": list(jac.witness) if jac.witness else None,
        "realization_consistent": real.ok,
        "realization_witness": list(real.witness) if real.witness else None,
    }
    if not (jac and real):
        raise CheckFailed(report)
    return report


def cmd_rmatrix_check(args):
    A = _algebra(args)
    pi = _pi(args, A)
    v = is_r_matrix(A, pi)
    report = {"is_r_matrix": v.ok, "witness": v.witness}
    if not v:
        raise CheckFailed(report)
    return report


def cmd_construct(args):
    A = _algebra(args)
    pi = _pi(args, A)
    x = parse_vector(args.x, A.dim, A.field, "x")
    return construct(A, pi, x).to_json()


def cmd_group(args):
    A = _algebra(args)
    pi = _pi(args, A)
    g = parse_square_matrix(args.g, A.field, "g")
    if A.realization is None:
        raise InputError("--algebra: group route needs a 'realization'")
    if len(g) != len(A.realization[0]):
        raise InputError(f"--g: expected a {len(A.realization[0])}x{len(A.realization[0])} matrix")
    report = h_from_group(A, pi, g).to_json()
    if report["is_subalgebra"]:
        report["inversion_property"] = inversion_property_check(A, pi, g)
    return report


def cmd_classical(args):
    A, rd = _series(args)
    if args.list_roots:
        return {"series": rd.series, "rank": rd.rank, "roots": [format_root(r) for r in line_roots(rd)]}
    try:
        root = parse_root(args.root, rd)
    except ValueError as exc:
        raise InputError(f"--root: {exc}") from None
    k = rd.gens[root]
    report = construct(A, standard_r_matrix(A, rd), A.basis_vector(k)).to_json()
    report = {"root": format_root(root), "generator": A.basis_names[k], **report}
    return report


def cmd_double(args):
    A = _algebra(args)
    pi = _pi(args, A)
    if not is_r_matrix(A, pi):
        raise CheckFailed({"is_r_matrix": False})
    try:
        d = drinfeld_double(A, pi)
    except ValueError as exc:
        raise CheckFailed({"jacobi": False, "error": str(exc)}) from None
    report = {
        "dim": d.algebra.dim,
        "jacobi": True,
        "pairing_ad_invariant": pairing_ad_invariant(d.algebra, d.pairing).ok,
    }
    if args.subspace:
        s = subspace_from_json(load_json(args.subspace), A.dim, A.field)
        if s.ambient == "g":
            k, kperp = s, annihilator(A, s)
        else:
            kperp = s
            k = Subspace.span(kernel_basis(s.basis, A.dim), A.dim) if s.basis else Subspace.full(A.dim)
        total = d.direct_sum(k, kperp)
        v = is_lagrangian(d, total)
        report["subspace"] = subspace_to_json(k)
        report["lagrangian"] = v.ok
        if not v:
            report["witness"] = v.witness
            raise CheckFailed(report)
    if not report["pairing_ad_invariant"]:
        raise CheckFailed(report)
    return report


def cmd_reproduce(args):
    _series(args)
    rows = reproduce_families(args.series.upper(), args.rank)
    report = {
        "series": args.series.upper(),
        "rank": args.rank,
        "rows": [r.to_json() for r in rows],
        "all_match": all(r.match and r.is_coisotropic for r in rows),
    }
    if not report["all_match"]:
        raise CheckFailed(report)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liebialg", description="Coisotropic subalgebras from r-matrices.")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
        return p

    p = verb("validate", cmd_validate, "check the Jacobi identity of an algebra file")
    p.add_argument("--algebra", required=True)

    p = verb("rmatrix-check", cmd_rmatrix_check, "check that [pi, pi] is ad-invariant")
    p.add_argument("--algebra", required=True)
    p.add_argument("--pi", required=True)

    p = verb("construct", cmd_construct, "build h from an element x")
    p.add_argument("--algebra", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--x", required=True)

    p = verb("group", cmd_group, "build h^g from a group element")
    p.add_argument("--algebra", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--g", required=True)

    p = verb("classical", cmd_classical, "line-condition roots or one construction in a classical series")
    p.add_argument("--series", required=True)
    p.add_argument("--rank", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--list-roots", action="store_true")
    mode.add_argument("--root")

    p = verb("double", cmd_double, "Drinfeld double and lagrangian test")
    p.add_argument("--algebra", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--subspace")

    p = verb("reproduce", cmd_reproduce, "every line-condition root against the golden families")
    p.add_argument("--series", required=True)
    p.add_argument("--rank", type=int, required=True)
    return parser


def format_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "rows":
            for row in value:
                lines.append("row: " + " ".join(f"{k}={json.dumps(v)}" for k, v in row.items()))
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines)


def emit(report: dict, fmt: str, stream) -> None:
    if fmt == "text":
        stream.write(format_text(report) + "\n")
    else:
        stream.write(json.dumps(report, indent=2) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report = args.func(args)
    except CheckFailed as exc:
        emit(exc.report, args.format, stdout)
        return EXIT_CHECK
    except OracleContradiction as exc:
        stderr.write(f"error: oracle contradiction: {exc}\n")
        return EXIT_CHECK
    except (InputError, DimensionError, NoRealizationError, NotInSpanError, SingularMatrixError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    emit(report, args.format, stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
