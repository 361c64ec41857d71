"""JSON encodings for algebras, multivectors, subspaces and argument strings.

Scalars are written as strings: ``"p/q"``, ``"p"`` or ``"p/q+r/s*i"``.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .bialgebra import Subspace
from .field import FIELDS, format_scalar, parse_scalar
from .liealg import LieAlgebra
from .multivector import DegreeError, Multivector

__all__ = [
    "InputError",
    "algebra_from_json",
    "algebra_to_json",
    "multivector_from_json",
    "multivector_to_json",
    "subspace_from_json",
    "subspace_to_json",
    "parse_vector",
    "parse_square_matrix",
    "load_json",
]


class InputError(ValueError):
    """Malformed input; the message names the offending field."""


def _scalar(value, field: str, where: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(f"{where}: expected a scalar string, got {value!r}")
    try:
        return parse_scalar(str(value), field)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def load_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None


def _require(obj, key, kind, where):
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    if key not in obj:
        raise InputError(f"{where}: missing field '{key}'")
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InputError(f"{where}: field '{key}' has the wrong type")
    return value


def algebra_from_json(obj) -> LieAlgebra:
    field = obj.get("field", "Q") if isinstance(obj, dict) else "Q"
    if field not in FIELDS:
        raise InputError(f"algebra: field 'field' must be one of {FIELDS}, got {field!r}")
    dim = _require(obj, "dim", int, "algebra")
    if dim < 0:
        raise InputError("algebra: field 'dim' must be non-negative")
    basis = obj.get("basis")
    if basis is not None and (not isinstance(basis, list) or len(basis) != dim):
        raise InputError(f"algebra: field 'basis' must list {dim} names")
    brackets = _require(obj, "brackets", list, "algebra")
    structure = {}
    for n, entry in enumerate(brackets):
        where = f"algebra: brackets[{n}]"
        if not isinstance(entry, list) or len(entry) < 2:
            raise InputError(f"{where}: expected [i, j, [k, c], ...]")
        i, j = entry[0], entry[1]
        if not all(isinstance(t, int) and 0 <= t < dim for t in (i, j)):
            raise InputError(f"{where}: indices must be integers in 0..{dim - 1}")
        if i >= j:
            raise InputError(f"{where}: brackets require i < j")
        terms = {}
        for term in entry[2:]:
            if not (isinstance(term, list) and len(term) == 2 and isinstance(term[0], int)):
                raise InputError(f"{where}: terms must be [k, \"c\"] pairs")
            k = term[0]
            if not 0 <= k < dim:
                raise InputError(f"{where}: target index {k} out of range")
            terms[k] = terms.get(k, 0) + _scalar(term[1], field, where)
        if (i, j) in structure:
            raise InputError(f"{where}: duplicate bracket ({i}, {j})")
        structure[(i, j)] = terms
    realization = None
    if obj.get("realization") is not None:
        raw = obj["realization"]
        if not isinstance(raw, list) or len(raw) != dim:
            raise InputError(f"algebra: field 'realization' must hold {dim} matrices")
        realization = [
            _matrix(m, field, f"algebra: realization[{n}]") for n, m in enumerate(raw)
        ]
        sizes = {len(m) for m in realization}
        if len(sizes) > 1:
            raise InputError("algebra: realization matrices differ in size")
    try:
        return LieAlgebra(dim, structure, basis, realization=realization, field=field)
    except ValueError as exc:
        raise InputError(f"algebra: {exc}") from None


def _matrix(m, field, where):
    if not isinstance(m, list):
        raise InputError(f"{where}: expected a list")
    if m and all(isinstance(r, list) for r in m):
        rows = [[_scalar(x, field, where) for x in r] for r in m]
        if any(len(r) != len(rows) for r in rows):
            raise InputError(f"{where}: matrix is not square")
        return rows
    flat = [_scalar(x, field, where) for x in m]
    size = math.isqrt(len(flat))
    if size * size != len(flat):
        raise InputError(f"{where}: {len(flat)} entries do not form a square matrix")
    return [flat[r * size:(r + 1) * size] for r in range(size)]


def algebra_to_json(A: LieAlgebra) -> dict:
    out = {
        "field": A.field,
        "dim": A.dim,
        "basis": list(A.basis_names),
        "brackets": [
            [i, j] + [[k, format_scalar(c)] for k, c in sorted(terms.items())]
            for (i, j), terms in sorted(A.structure.items())
        ],
    }
    if A.realization is not None:
        out["realization"] = [[format_scalar(x) for row in m for x in row] for m in A.realization]
    return out


def multivector_from_json(obj, dim: int, field: str = "Q") -> Multivector:
    degree = _require(obj, "degree", int, "multivector")
    terms = _require(obj, "terms", list, "multivector")
    coeffs = {}
    for n, t in enumerate(terms):
        where = f"multivector: terms[{n}]"
        if not isinstance(t, list) or len(t) != degree + 1:
            raise InputError(f"{where}: expected {degree} indices and a coefficient")
        idx = t[:-1]
        if not all(isinstance(i, int) and 0 <= i < dim for i in idx):
            raise InputError(f"{where}: indices must be integers in 0..{dim - 1}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise InputError(f"{where}: indices must be strictly increasing")
        coeffs[tuple(idx)] = coeffs.get(tuple(idx), 0) + _scalar(t[-1], field, where)
    try:
        return Multivector(degree, coeffs)
    except DegreeError as exc:
        raise InputError(f"multivector: {exc}") from None


def multivector_to_json(p: Multivector) -> dict:
    return {
        "degree": p.degree,
        "terms": [list(k) + [format_scalar(c)] for k, c in sorted(p.items())],
    }


def subspace_from_json(obj, dim: int, field: str = "Q") -> Subspace:
    ambient = obj.get("ambient", "g") if isinstance(obj, dict) else None
    if ambient not in ("g", "g*"):
        raise InputError("subspace: field 'ambient' must be 'g' or 'g*'")
    basis = _require(obj, "basis", list, "subspace")
    rows = []
    for n, row in enumerate(basis):
        if not isinstance(row, list) or len(row) != dim:
            raise InputError(f"subspace: basis[{n}] must have {dim} coefficients")
        rows.append([_scalar(x, field, f"subspace: basis[{n}]") for x in row])
    return Subspace.span(rows, dim, ambient)


def subspace_to_json(s: Subspace) -> dict:
    return {"ambient": s.ambient, "basis": [[format_scalar(x) for x in r] for r in s.basis]}


def parse_vector(text: str, dim: int, field: str = "Q", name: str = "x") -> tuple:
    parts = [p for p in text.replace(" ", "").split(",")]
    if len(parts) != dim or any(p == "" for p in parts):
        raise InputError(f"--{name}: expected {dim} comma-separated scalars, got {text!r}")
    return tuple(_scalar(p, field, f"--{name}") for p in parts)


def parse_square_matrix(text: str, field: str = "Q", name: str = "g") -> tuple:
    parts = [p for p in text.replace(" ", "").split(",")]
    if any(p == "" for p in parts):
        raise InputError(f"--{name}: empty entry in {text!r}")
    size = math.isqrt(len(parts))
    if size * size != len(parts):
        raise InputError(f"--{name}: {len(parts)} entries do not form a square matrix")
    vals = [_scalar(p, field, f"--{name}") for p in parts]
    return tuple(tuple(vals[r * size:(r + 1) * size]) for r in range(size))
