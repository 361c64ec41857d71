"""Finite-dimensional Lie algebras given by exact structure constants."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .field import as_scalar
from .linalg import (
    DimensionError,
    SingularMatrixError,
    inverse,
    matmul,
    matrix,
    row_basis,
    vector,
)

__all__ = [
    "Verdict",
    "LieAlgebra",
    "NoRealizationError",
    "NotInSpanError",
    "bracket",
    "jacobi_check",
    "realization_check",
    "ad_matrix",
    "killing_form",
    "adjoint_group_action",
    "sl2",
    "su2",
    "heisenberg",
    "abelian",
]


class Verdict(NamedTuple):
    """Boolean outcome of a check plus the first counterexample found."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


class NoRealizationError(ValueError):
    pass


class NotInSpanError(ValueError):
    pass


class _Coordinates:
    """Solves ``M = sum_i c_i R_i`` for a fixed list of linearly independent matrices."""

    def __init__(self, mats):
        self.size = len(mats[0])
        flat = [tuple(x for row in m for x in row) for m in mats]
        red = row_basis(flat)
        if len(red) != len(mats):
            raise ValueError("realization matrices are linearly dependent")
        self.positions = [next(j for j, x in enumerate(r) if x) for r in red]
        square = [[f[p] for p in self.positions] for f in flat]
        # coordinates c satisfy c @ square == M restricted to pivot positions
        self.solver = inverse(square)
        self.flat = flat

    def __call__(self, m) -> tuple:
        target = [m[p // self.size][p % self.size] for p in self.positions]
        zero = Fraction(0)
        coords = [zero] * len(self.flat)
        for t, row in zip(target, self.solver):
            if t:
                for j, s in enumerate(row):
                    if s:
                        coords[j] = coords[j] + t * s
        recon = [zero] * (self.size * self.size)
        for c, f in zip(coords, self.flat):
            if c:
                for j, x in enumerate(f):
                    if x:
                        recon[j] = recon[j] + c * x
        if any(a != b for a, b in zip(recon, (x for row in m for x in row))):
            raise NotInSpanError("matrix does not lie in the span of the realization")
        return tuple(coords)


class LieAlgebra:
    """Lie algebra with basis ``e_0..e_{dim-1}`` and ``[e_i, e_j] = sum_k c_ij^k e_k``.

    ``structure`` maps pairs ``(i, j)`` with ``i < j`` to ``{k: c}``; pairs
    that are absent bracket to zero. ``realization`` optionally gives one
    square matrix per basis element, used for the adjoint group action.
    """

    def __init__(
        self,
        dim: int,
        structure: dict,
        basis_names: Sequence[str] | None = None,
        realization=None,
        field: str = "Q",
    ):
        self.dim = dim
        self.field = field
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"e{i + 1}" for i in range(dim))
        if len(self.basis_names) != dim:
            raise DimensionError("basis_names length differs from dim")
        clean = {}
        for (i, j), terms in structure.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionError(f"bracket index ({i}, {j}) out of range")
            if i == j:
                if any(as_scalar(c) for c in terms.values()):
                    raise ValueError(f"[e{i}, e{i}] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            row = clean.setdefault((i, j), {})
            for k, c in terms.items():
                if not 0 <= k < dim:
                    raise DimensionError(f"bracket target {k} out of range")
                c = sign * as_scalar(c)
                row[k] = row.get(k, 0) + c
        self.structure = {
            key: {k: c for k, c in row.items() if c} for key, row in clean.items()
        }
        self.structure = {key: row for key, row in self.structure.items() if row}
        table = [[() for _ in range(dim)] for _ in range(dim)]
        for (i, j), row in self.structure.items():
            items = tuple(sorted(row.items()))
            table[i][j] = items
            table[j][i] = tuple((k, -c) for k, c in items)
        self._table = table
        self.realization = None
        if realization is not None:
            mats = tuple(matrix(m) for m in realization)
            if len(mats) != dim:
                raise DimensionError("one realization matrix per basis element is required")
            self.realization = mats
            self._coords = _Coordinates(mats) if dim else None

    @classmethod
    def from_matrices(cls, mats, basis_names=None, field: str = "Q") -> LieAlgebra:
        """Structure constants of the span of ``mats`` under the commutator."""
        mats = tuple(matrix(m) for m in mats)
        coords = _Coordinates(mats)
        structure = {}
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                c = _commutator(mats[i], mats[j])
                try:
                    v = coords(c)
                except NotInSpanError:
                    raise NotInSpanError(f"span not closed: [{i}, {j}] leaves it") from None
                terms = {k: x for k, x in enumerate(v) if x}
                if terms:
                    structure[(i, j)] = terms
        return cls(len(mats), structure, basis_names, realization=mats, field=field)

    def basis_vector(self, i: int) -> tuple:
        zero, one = as_scalar(0), as_scalar(1)
        return tuple(one if k == i else zero for k in range(self.dim))

    def zero(self) -> tuple:
        return (as_scalar(0),) * self.dim

    def bracket_basis(self, i: int, j: int):
        """Nonzero terms ``(k, c)`` of ``[e_i, e_j]``."""
        return self._table[i][j]

    def vector(self, coeffs) -> tuple:
        v = vector(coeffs)
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} in a {self.dim}-dimensional algebra")
        return v

    def matrix_of(self, x) -> tuple:
        """Realization matrix of ``x``."""
        if self.realization is None:
            raise NoRealizationError("algebra has no matrix realization")
        x = self.vector(x)
        size = len(self.realization[0])
        acc = [[as_scalar(0)] * size for _ in range(size)]
        for c, m in zip(x, self.realization):
            if c:
                for r in range(size):
                    for s in range(size):
                        if m[r][s]:
                            acc[r][s] = acc[r][s] + c * m[r][s]
        return tuple(tuple(r) for r in acc)

    def coordinates(self, m) -> tuple:
        if self.realization is None:
            raise NoRealizationError("algebra has no matrix realization")
        return self._coords(matrix(m))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field!r})"


def _commutator(a, b):
    ab, ba = matmul(a, b), matmul(b, a)
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(ab, ba))


def bracket(A: LieAlgebra, x, y) -> tuple:
    x, y = A.vector(x), A.vector(y)
    out = list(A.zero())
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            for k, c in A.bracket_basis(i, j):
                out[k] = out[k] + a * b * c
    return tuple(out)


def jacobi_check(A: LieAlgebra) -> Verdict:
    """Check ``[[e_i,e_j],e_k] + cyclic = 0`` for all ``i < j < k``."""
    n = A.dim
    e = [A.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = [
                    bracket(A, bracket(A, e[a], e[b]), e[c])
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j))
                ]
                if any(p + q + r for p, q, r in zip(*s)):
                    return Verdict(False, (i, j, k))
    return Verdict(True)


def realization_check(A: LieAlgebra) -> Verdict:
    """Commutators of the realization matrices agree with the structure constants."""
    if A.realization is None:
        return Verdict(True)
    R = A.realization
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            if _commutator(R[i], R[j]) != A.matrix_of(bracket(A, A.basis_vector(i), A.basis_vector(j))):
                return Verdict(False, (i, j))
    return Verdict(True)


def ad_matrix(A: LieAlgebra, x) -> tuple:
    """Matrix of ``ad_x``; column ``j`` holds the coordinates of ``[x, e_j]``."""
    x = A.vector(x)
    n = A.dim
    m = [[as_scalar(0)] * n for _ in range(n)]
    for i, a in enumerate(x):
        if not a:
            continue
        for j in range(n):
            for k, c in A.bracket_basis(i, j):
                m[k][j] = m[k][j] + a * c
    return tuple(tuple(r) for r in m)


def killing_form(A: LieAlgebra, x, y):
    """``Tr(ad_x ad_y)``."""
    ax, ay = ad_matrix(A, x), ad_matrix(A, y)
    n = A.dim
    total = as_scalar(0)
    for i in range(n):
        row = ax[i]
        for j in range(n):
            if row[j] and ay[j][i]:
                total = total + row[j] * ay[j][i]
    return total


def adjoint_group_action(A: LieAlgebra, g, x) -> tuple:
    """Coordinates of ``g M_x g^{-1}`` in the basis of ``A``."""
    if A.realization is None:
        raise NoRealizationError("adjoint group action needs a matrix realization")
    g = matrix(g)
    try:
        ginv = inverse(g)
    except SingularMatrixError:
        raise SingularMatrixError("group element is singular") from None
    if len(g) != len(A.realization[0]):
        raise DimensionError("group element size differs from the realization")
    return A.coordinates(matmul(matmul(g, A.matrix_of(x)), ginv))


# -- small algebras used throughout the examples ---------------------------

def _half(m):
    return [[Fraction(x, 2) for x in row] for row in m]


def sl2() -> LieAlgebra:
    """sl(2, R) with e1 = diag(1,-1)/2, e2 = [[0,1],[-1,0]]/2, e3 = [[0,1],[1,0]]/2."""
    mats = [_half([[1, 0], [0, -1]]), _half([[0, 1], [-1, 0]]), _half([[0, 1], [1, 0]])]
    return LieAlgebra.from_matrices(mats, ("e1", "e2", "e3"))


def su2() -> LieAlgebra:
    # [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
    return LieAlgebra(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}}, ("e1", "e2", "e3"))


def heisenberg() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): {2: 1}}, ("x", "y", "z"))


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {})
