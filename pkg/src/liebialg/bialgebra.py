"""Lie bialgebras from r-matrices.

Covers the cobracket ``delta = [pi, .]``, the dual bracket on g*, subspace
predicates (subalgebra, coisotropic) and the Drinfeld double.

Nothing here calls into :mod:`liebialg.construction`. ``is_coisotropic``
re-derives both closure conditions from ``pi`` and the structure
constants, so it works as an independent oracle for constructed subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .field import as_scalar
from .linalg import DimensionError, inverse, is_zero, kernel_basis, matrix, reduce_against, row_basis
from .liealg import LieAlgebra, Verdict, bracket, jacobi_check, killing_form
from .multivector import Multivector, ad_invariant, schouten

__all__ = [
    "Subspace",
    "CoisotropyReport",
    "DoubleAlgebra",
    "is_r_matrix",
    "cobracket",
    "cobracket_table",
    "dual_bracket",
    "annihilator",
    "is_subalgebra",
    "is_dual_subalgebra",
    "is_dual_ideal",
    "is_coisotropic",
    "drinfeld_double",
    "is_lagrangian",
    "pairing_ad_invariant",
    "manin_triple_self_test",
]


@dataclass(frozen=True)
class Subspace:
    """Subspace of g or g*, stored as its RREF basis.

    Two subspaces are equal exactly when their RREF bases coincide.
    """

    ambient: str
    dim: int
    basis: tuple

    def __post_init__(self):
        if self.ambient not in ("g", "g*"):
            raise ValueError(f"ambient must be 'g' or 'g*', not {self.ambient!r}")

    @classmethod
    def span(cls, vectors: Sequence, dim: int, ambient: str = "g") -> Subspace:
        rows = matrix(vectors)
        if rows and len(rows[0]) != dim:
            raise DimensionError(f"vectors of length {len(rows[0])} in dimension {dim}")
        return cls(ambient, dim, row_basis(rows, dim))

    @classmethod
    def zero(cls, dim: int, ambient: str = "g") -> Subspace:
        return cls(ambient, dim, ())

    @classmethod
    def full(cls, dim: int, ambient: str = "g") -> Subspace:
        one, zero = as_scalar(1), as_scalar(0)
        return cls(ambient, dim, tuple(
            tuple(one if i == j else zero for j in range(dim)) for i in range(dim)
        ))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    def contains(self, v) -> bool:
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} in dimension {self.dim}")
        return is_zero(reduce_against(self.basis, self.pivots, v))

    def __contains__(self, v):
        return self.contains(v)

    def issubset(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)


def is_r_matrix(A: LieAlgebra, pi: Multivector) -> Verdict:
    """``[pi, pi]`` is ad-invariant; witness is the first basis index moving it."""
    if pi.is_zero():
        return Verdict(True)
    return ad_invariant(A, schouten(A, pi, pi))


def cobracket(A: LieAlgebra, pi: Multivector, x) -> Multivector:
    return schouten(A, pi, Multivector.from_vector(A.vector(x)))


def cobracket_table(A: LieAlgebra, pi: Multivector) -> tuple:
    """``delta(e_k)`` for every basis index, as term dictionaries."""
    return tuple(cobracket(A, pi, A.basis_vector(k)).terms for k in range(A.dim))


def _dual_bracket_from_table(table, xi, zeta) -> tuple:
    zero = as_scalar(0)
    # sparse coefficients of xi ^ zeta on e^i ^ e^j, i < j
    w = {}
    zs = [(j, b) for j, b in enumerate(zeta) if b]
    for i, a in enumerate(xi):
        if not a:
            continue
        for j, b in zs:
            if i < j:
                w[(i, j)] = w.get((i, j), zero) + a * b
            elif j < i:
                w[(j, i)] = w.get((j, i), zero) - a * b
    w = {k: v for k, v in w.items() if v}
    out = []
    for terms in table:
        acc = zero
        small, large = (terms, w) if len(terms) < len(w) else (w, terms)
        for key in small:
            if key in large:
                acc = acc + terms[key] * w[key]
        out.append(acc)
    return tuple(out)


def dual_bracket(A: LieAlgebra, pi: Multivector, xi, zeta, table=None) -> tuple:
    """``<[xi, zeta], e_k> = <xi ^ zeta, delta(e_k)>`` with ``<xi^zeta, e_i^e_j> = xi_i zeta_j - xi_j zeta_i``."""
    xi, zeta = A.vector(xi), A.vector(zeta)
    if table is None:
        table = cobracket_table(A, pi)
    return _dual_bracket_from_table(table, xi, zeta)


def annihilator(A: LieAlgebra, s: Subspace) -> Subspace:
    """Functionals vanishing on ``s``, as a subspace of g*."""
    if s.ambient != "g":
        raise ValueError("annihilator of a subspace of g* is not supported here")
    if s.dim != A.dim:
        raise DimensionError("subspace dimension differs from the algebra")
    if not s.basis:
        return Subspace.full(A.dim, "g*")
    return Subspace.span(kernel_basis(s.basis, A.dim), A.dim, "g*")


def is_subalgebra(A: LieAlgebra, s: Subspace) -> Verdict:
    """Bracket closure; witness is the first offending pair of basis rows."""
    b = s.basis
    for a in range(len(b)):
        for c in range(a + 1, len(b)):
            if not s.contains(bracket(A, b[a], b[c])):
                return Verdict(False, (a, c))
    return Verdict(True)


def _pairs_closed(table, basis, target: Subspace) -> Verdict:
    for a in range(len(basis)):
        for c in range(a + 1, len(basis)):
            if not target.contains(_dual_bracket_from_table(table, basis[a], basis[c])):
                return Verdict(False, (a, c))
    return Verdict(True)


def is_dual_subalgebra(A: LieAlgebra, pi: Multivector, s: Subspace, table=None) -> Verdict:
    """Closure of a subspace of g* under the dual bracket."""
    if table is None:
        table = cobracket_table(A, pi)
    return _pairs_closed(table, s.basis, s)


def is_dual_ideal(A: LieAlgebra, pi: Multivector, s: Subspace, table=None) -> Verdict:
    """``[g*, s]`` contained in ``s``; witness ``(k, a)`` pairs dual basis ``e^k`` with row ``a``."""
    if table is None:
        table = cobracket_table(A, pi)
    for k in range(A.dim):
        ek = A.basis_vector(k)
        for a, row in enumerate(s.basis):
            if not s.contains(_dual_bracket_from_table(table, ek, row)):
                return Verdict(False, (k, a))
    return Verdict(True)


@dataclass(frozen=True)
class CoisotropyReport:
    subalgebra: Verdict
    annihilator: Subspace
    annihilator_closed: Verdict

    @property
    def ok(self) -> bool:
        return self.subalgebra.ok and self.annihilator_closed.ok

    def __bool__(self):
        return self.ok


def is_coisotropic(A: LieAlgebra, pi: Multivector, s: Subspace) -> CoisotropyReport:
    """``s`` is a subalgebra of g and its annihilator is a subalgebra of g*."""
    ann = annihilator(A, s)
    sub = is_subalgebra(A, s)
    # closure of s° <=> [xi, zeta] vanishes on s for xi, zeta in s°
    table = cobracket_table(A, pi)
    closed = Verdict(True)
    for a in range(len(ann.basis)):
        for c in range(a + 1, len(ann.basis)):
            br = _dual_bracket_from_table(table, ann.basis[a], ann.basis[c])
            if any(sum((x * y for x, y in zip(br, v) if x and y), as_scalar(0)) for v in s.basis):
                closed = Verdict(False, (a, c))
                break
        if not closed:
            break
    return CoisotropyReport(sub, ann, closed)


# -- Drinfeld double -------------------------------------------------------

@dataclass(frozen=True)
class DoubleAlgebra:
    """Lie algebra on g + g* with basis ``e_1..e_n, e^1..e^n``."""

    algebra: LieAlgebra
    n: int
    pairing: tuple

    def embed_g(self, x) -> tuple:
        x = tuple(as_scalar(c) for c in x)
        return x + (as_scalar(0),) * self.n

    def embed_dual(self, xi) -> tuple:
        xi = tuple(as_scalar(c) for c in xi)
        return (as_scalar(0),) * self.n + xi

    def pair(self, u, v):
        acc = as_scalar(0)
        for i, a in enumerate(u):
            if a:
                row = self.pairing[i]
                for j, b in enumerate(v):
                    if b and row[j]:
                        acc = acc + a * b * row[j]
        return acc

    def direct_sum(self, s: Subspace, t: Subspace) -> Subspace:
        """``s + t`` for ``s`` in g and ``t`` in g*."""
        rows = [self.embed_g(v) for v in s.basis] + [self.embed_dual(v) for v in t.basis]
        return Subspace.span(rows, 2 * self.n)


def drinfeld_double(A: LieAlgebra, pi: Multivector, check: bool = True) -> DoubleAlgebra:
    """Double of ``(A, [pi, .])`` with the natural pairing ``<x + xi, y + zeta> = xi(y) + zeta(x)``.

    Mixed brackets are ``[x, xi] = ad*_x xi - ad*_xi x`` with the coadjoint
    actions ``(ad*_x xi)(y) = -xi([x, y])`` and ``zeta(ad*_xi x) = -<[xi, zeta], x>``.
    """
    n = A.dim
    table = cobracket_table(A, pi)
    structure = {}
    for i in range(n):
        for j in range(i + 1, n):
            terms = dict(A.bracket_basis(i, j))
            if terms:
                structure[(i, j)] = terms
    for a in range(n):
        for b in range(a + 1, n):
            # [e^a, e^b]_k = coefficient of e_a ^ e_b in delta(e_k)
            terms = {n + k: t[(a, b)] for k, t in enumerate(table) if (a, b) in t}
            if terms:
                structure[(n + a, n + b)] = terms
    for i in range(n):
        for a in range(n):
            terms = {}
            # ad*_{e_i} e^a = -sum_k c_{ik}^a e^k
            for k in range(n):
                for t, c in A.bracket_basis(i, k):
                    if t == a:
                        terms[n + k] = terms.get(n + k, 0) - c
            # -ad*_{e^a} e_i = sum_b <[e^a, e^b], e_i> e_b
            for b in range(n):
                if b == a:
                    continue
                key, sign = ((a, b), 1) if a < b else ((b, a), -1)
                c = table[i].get(key)
                if c:
                    terms[b] = terms.get(b, 0) + sign * c
            terms = {k: v for k, v in terms.items() if v}
            if terms:
                structure[(i, n + a)] = terms
    names = tuple(A.basis_names) + tuple(f"{nm}*" for nm in A.basis_names)
    D = LieAlgebra(2 * n, structure, names, field=A.field)
    zero, one = as_scalar(0), as_scalar(1)
    pairing = tuple(
        tuple(one if (i < n <= j and j - n == i) or (j < n <= i and i - n == j) else zero for j in range(2 * n))
        for i in range(2 * n)
    )
    if check:
        jac = jacobi_check(D)
        if not jac:
            raise ValueError(f"double fails Jacobi at {jac.witness}; pi is not an r-matrix")
    return DoubleAlgebra(D, n, pairing)


def pairing_ad_invariant(D: LieAlgebra, pairing) -> Verdict:
    """``<[z, u], v> + <u, [z, v]> = 0`` on basis triples."""
    m = D.dim

    def pair(u, v):
        return sum((pairing[i][j] * u[i] * v[j] for i in range(m) if u[i] for j in range(m) if v[j]), as_scalar(0))

    e = [D.basis_vector(i) for i in range(m)]
    for z in range(m):
        for u in range(m):
            zu = bracket(D, e[z], e[u])
            for v in range(u, m):
                if pair(zu, e[v]) + pair(e[u], bracket(D, e[z], e[v])):
                    return Verdict(False, (z, u, v))
    return Verdict(True)


def is_lagrangian(d: DoubleAlgebra, s: Subspace) -> Verdict:
    """Subalgebra of the double, isotropic, of dimension ``dim g``."""
    if s.dim != 2 * d.n:
        raise DimensionError("subspace does not live in the double")
    if s.rank != d.n:
        return Verdict(False, ("dimension", s.rank))
    b = s.basis
    for a in range(len(b)):
        for c in range(a, len(b)):
            if d.pair(b[a], b[c]):
                return Verdict(False, ("isotropy", (a, c)))
    sub = is_subalgebra(d.algebra, s)
    if not sub:
        return Verdict(False, ("bracket", sub.witness))
    return Verdict(True)


def manin_triple_self_test(
    A: LieAlgebra,
    pi: Multivector,
    cartan: Sequence[int],
    positive: Sequence[int],
    negative: Sequence[int],
) -> dict:
    """Check that g + g with the split pairing recovers ``[pi, .]``.

    ``g + g`` carries ``<(x1, y1), (x2, y2)> = B(x1, x2)/2 - B(y1, y2)/2``.
    The diagonal and ``{(h + v, -h + w)}`` (``v`` in the positive root spaces,
    ``w`` in the negative ones) must be lagrangian subalgebras, and the
    cobracket dual to the bracket on the second one, read through the
    pairing with the diagonal, must equal ``delta(x) = [pi, x]``.
    """
    n = A.dim
    half = Fraction(1, 2)
    kill = [[killing_form(A, A.basis_vector(i), A.basis_vector(j)) for j in range(n)] for i in range(n)]
    structure = {}
    for i in range(n):
        for j in range(i + 1, n):
            terms = dict(A.bracket_basis(i, j))
            if terms:
                structure[(i, j)] = terms
                structure[(n + i, n + j)] = {n + k: c for k, c in terms.items()}
    GG = LieAlgebra(2 * n, structure)
    zero = as_scalar(0)
    pairing = tuple(
        tuple(
            half * kill[i][j] if i < n and j < n
            else (-half * kill[i - n][j - n] if i >= n and j >= n else zero)
            for j in range(2 * n)
        )
        for i in range(2 * n)
    )
    dd = DoubleAlgebra(GG, n, pairing)

    e = [A.basis_vector(i) for i in range(n)]
    diag = Subspace.span([v + v for v in e], 2 * n)
    gst_rows = [e[h] + tuple(-x for x in e[h]) for h in cartan]
    gst_rows += [e[v] + A.zero() for v in positive]
    gst_rows += [A.zero() + e[w] for w in negative]
    gst = Subspace.span(gst_rows, 2 * n)

    # identify gst with g*: u -> (x -> <(x, x), u>)
    def functional(u):
        return tuple(dd.pair(e[k] + e[k], u) for k in range(n))

    coords = [functional(u) for u in gst_rows]
    # element of gst representing each dual basis vector e^a
    inv = inverse(coords)  # rows: coefficients of e^a in terms of gst_rows
    lifts = [
        tuple(sum((inv[a][r] * gst_rows[r][c] for r in range(n) if inv[a][r]), zero) for c in range(2 * n))
        for a in range(n)
    ]
    recovered = True
    witness = None
    table = cobracket_table(A, pi)
    for a in range(n):
        for b in range(a + 1, n):
            br = functional(bracket(GG, lifts[a], lifts[b]))
            for k in range(n):
                if br[k] != table[k].get((a, b), zero):
                    recovered = False
                    witness = witness or (k, a, b)
    return {
        "pairing_invariant": bool(pairing_ad_invariant(GG, pairing)),
        "diagonal_lagrangian": bool(is_lagrangian(dd, diag)),
        "gst_lagrangian": bool(is_lagrangian(dd, gst)),
        "recovers_cobracket": recovered,
        "witness": witness,
    }
