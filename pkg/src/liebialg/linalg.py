"""Dense exact linear algebra over Q and Q(i).

Matrices are tuples of row tuples, vectors are tuples. Every function
accepts any nested sequence of ints, Fractions or GaussianRationals and
returns immutable tuples of exact scalars.
"""

from __future__ import annotations

from typing import Sequence

from .field import as_scalar

__all__ = [
    "ZERO_PAIR",
    "DimensionError",
    "SingularMatrixError",
    "vector",
    "matrix",
    "zeros",
    "identity",
    "transpose",
    "matmul",
    "matvec",
    "inverse",
    "rref",
    "row_basis",
    "rank",
    "kernel_basis",
    "solve_proportionality",
    "is_zero",
    "reduce_against",
]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class _ZeroPair:
    """Sentinel: both vectors vanish, so every scalar is a proportionality factor."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO_PAIR"

    def __reduce__(self):
        return (_ZeroPair, ())


ZERO_PAIR = _ZeroPair()


def vector(v: Sequence) -> tuple:
    return tuple(as_scalar(x) for x in v)


def matrix(m: Sequence[Sequence]) -> tuple:
    rows = tuple(vector(r) for r in m)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionError("ragged matrix")
    return rows


def zeros(rows: int, cols: int) -> tuple:
    z = as_scalar(0)
    return tuple((z,) * cols for _ in range(rows))


def identity(n: int) -> tuple:
    one, zero = as_scalar(1), as_scalar(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def is_zero(v) -> bool:
    return not any(v)


def transpose(m) -> tuple:
    return tuple(zip(*m))


def matmul(a, b) -> tuple:
    """Product ``a @ b``, skipping zero entries of ``a``."""
    if not a:
        return ()
    n = len(b)
    if len(a[0]) != n:
        raise DimensionError(f"cannot multiply {len(a)}x{len(a[0])} by {n}x?")
    cols = len(b[0]) if b else 0
    zero = as_scalar(0)
    out = []
    for row in a:
        acc = [zero] * cols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] = acc[j] + x * bk[j]
        out.append(tuple(acc))
    return tuple(out)


def matvec(m, v) -> tuple:
    if m and len(m[0]) != len(v):
        raise DimensionError(f"matrix has {len(m[0])} columns, vector has length {len(v)}")
    zero = as_scalar(0)
    out = []
    for row in m:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def _rref_rows(rows: list[list], ncols: int):
    """In-place Gauss-Jordan; returns the pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m, ncols: int | None = None) -> tuple[tuple, int]:
    """Reduced row echelon form of ``m`` (same shape) and its rank."""
    rows = [list(r) for r in matrix(m)]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = _rref_rows(rows, ncols)
    return tuple(tuple(r) for r in rows), len(pivots)


def row_basis(m, ncols: int | None = None) -> tuple:
    """Nonzero rows of the RREF: the canonical basis of the row space."""
    red, rk = rref(m, ncols)
    return red[:rk]


def rank(m) -> int:
    return rref(m)[1]


def kernel_basis(m, ncols: int | None = None) -> tuple:
    """Canonical null-space basis: one vector per free column, free entry 1."""
    rows = [list(r) for r in matrix(m)]
    if ncols is None:
        if not rows:
            raise DimensionError("column count needed for an empty matrix")
        ncols = len(rows[0])
    pivots = _rref_rows(rows, ncols)
    zero, one = as_scalar(0), as_scalar(1)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(tuple(v))
    return tuple(basis)


def reduce_against(basis_rref, pivots, v) -> tuple:
    """Residual of ``v`` after eliminating the pivot columns of an RREF basis."""
    v = list(v)
    for row, c in zip(basis_rref, pivots):
        f = v[c]
        if f:
            v = [x - f * y if y else x for x, y in zip(v, row)]
    return tuple(v)


def inverse(m) -> tuple:
    m = matrix(m)
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionError("inverse of a non-square matrix")
    one, zero = as_scalar(1), as_scalar(0)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(m)]
    pivots = _rref_rows(aug, n)
    if len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return tuple(tuple(r[n:]) for r in aug)


def solve_proportionality(a, b):
    """Find ``lam`` with ``a == lam * b``.

    Returns the scalar, :data:`ZERO_PAIR` when both vectors are zero, or
    ``None`` when no such scalar exists.
    """
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} != {len(b)}")
    a, b = vector(a), vector(b)
    k = next((i for i, y in enumerate(b) if y), None)
    if k is None:
        return ZERO_PAIR if is_zero(a) else None
    lam = a[k] / b[k]
    if all(x == lam * y for x, y in zip(a, b)):
        return lam
    return None
