"""Antisymmetric multivectors in the exterior algebra of a Lie algebra.

A multivector of degree ``k`` is stored as a map from strictly increasing
index tuples to nonzero coefficients. The Schouten bracket extends the Lie
bracket as a graded derivation::

    [x, y1 ^ ... ^ yk] = sum_i y1 ^ ... ^ [x, yi] ^ ... ^ yk

with ``[P, Q] = -(-1)**((p-1)(q-1)) [Q, P]``.
"""

from __future__ import annotations

from typing import Mapping

from .field import as_scalar
from .linalg import DimensionError
from .liealg import LieAlgebra, Verdict

__all__ = [
    "MAX_DEGREE",
    "DegreeError",
    "Multivector",
    "wedge",
    "schouten",
    "contract",
    "sharp_matrix",
    "ad_invariant",
]

MAX_DEGREE = 4


class DegreeError(ValueError):
    pass


def _sort_sign(seq):
    """Sign of the permutation sorting ``seq`` and the sorted tuple; ``None`` on repeats."""
    if len(set(seq)) != len(seq):
        return None
    s = list(seq)
    sign = 1
    # insertion sort; counts transpositions
    for i in range(1, len(s)):
        j = i
        while j > 0 and s[j - 1] > s[j]:
            s[j - 1], s[j] = s[j], s[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(s)


class Multivector:
    """Element of the degree-``k`` part of the exterior algebra, ``0 <= k <= 4``."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping | None = None):
        if not 0 <= degree <= MAX_DEGREE:
            raise DegreeError(f"degree {degree} outside 0..{MAX_DEGREE}")
        self.degree = degree
        acc = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise DegreeError(f"key {key} does not have degree {degree}")
            sorted_ = _sort_sign(key)
            if sorted_ is None:
                continue
            sign, skey = sorted_
            acc[skey] = acc.get(skey, 0) + sign * as_scalar(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def from_vector(cls, v) -> Multivector:
        return cls(1, {(i,): c for i, c in enumerate(v) if c})

    @classmethod
    def basis(cls, *indices) -> Multivector:
        return cls(len(indices), {tuple(indices): 1})

    @classmethod
    def scalar(cls, c) -> Multivector:
        return cls(0, {(): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, *key):
        sorted_ = _sort_sign(key)
        if sorted_ is None:
            return as_scalar(0)
        sign, skey = sorted_
        return sign * self._terms.get(skey, as_scalar(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def to_vector(self, dim: int) -> tuple:
        if self.degree != 1:
            raise DegreeError("only degree-1 multivectors are vectors")
        zero = as_scalar(0)
        return tuple(self._terms.get((i,), zero) for i in range(dim))

    def _check(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if other.degree != self.degree and self._terms and other._terms:
            raise DegreeError(f"cannot add degrees {self.degree} and {other.degree}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        deg = self.degree if self._terms else other.degree
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return Multivector(deg, acc)

    def __neg__(self):
        return Multivector(self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, Multivector):
            return NotImplemented
        c = as_scalar(c)
        return Multivector(self.degree, {k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"Multivector({self.degree}, 0)"
        parts = [f"{c}*e{'^e'.join(str(i + 1) for i in k)}" for k, c in sorted(self._terms.items())]
        return f"Multivector({self.degree}, {' + '.join(parts)})"


def wedge(p: Multivector, q: Multivector) -> Multivector:
    deg = p.degree + q.degree
    if deg > MAX_DEGREE:
        raise DegreeError(f"wedge of degree {deg} exceeds {MAX_DEGREE}")
    acc = {}
    for I, a in p.items():
        for J, b in q.items():
            s = _sort_sign(I + J)
            if s is None:
                continue
            sign, key = s
            acc[key] = acc.get(key, 0) + sign * a * b
    return Multivector(deg, acc)


def schouten(A: LieAlgebra, p: Multivector, q: Multivector) -> Multivector:
    """Schouten-Nijenhuis bracket of two multivectors on ``A``."""
    deg = p.degree + q.degree - 1
    if deg < 0:
        raise DegreeError("Schouten bracket of two scalars")
    if deg > MAX_DEGREE:
        raise DegreeError(f"Schouten bracket of degree {deg} exceeds {MAX_DEGREE}")
    acc = {}
    for I, a in p.items():
        for J, b in q.items():
            ab = a * b
            for s, i in enumerate(I):
                restI = I[:s] + I[s + 1:]
                for t, j in enumerate(J):
                    terms = A.bracket_basis(i, j)
                    if not terms:
                        continue
                    restJ = J[:t] + J[t + 1:]
                    base = ab if (s + t) % 2 == 0 else -ab
                    for k, c in terms:
                        srt = _sort_sign((k,) + restI + restJ)
                        if srt is None:
                            continue
                        sign, key = srt
                        acc[key] = acc.get(key, 0) + sign * base * c
    return Multivector(deg, acc)


def sharp_matrix(b: Multivector, dim: int) -> tuple:
    """Antisymmetric coefficient matrix ``b^{ij}`` of a bivector."""
    if b.degree != 2 and b:
        raise DegreeError("sharp map needs a bivector")
    zero = as_scalar(0)
    m = [[zero] * dim for _ in range(dim)]
    for (i, j), c in b.items():
        if j >= dim:
            raise DimensionError(f"bivector index {j} outside dimension {dim}")
        m[i][j] = c
        m[j][i] = -c
    return tuple(tuple(r) for r in m)


def contract(b: Multivector, xi, dim: int | None = None) -> tuple:
    """``(b^# xi)^i = sum_j b^{ji} xi_j``, so that ``xi(b^# zeta) = b(zeta, xi)``."""
    if b.degree != 2 and b:
        raise DegreeError("contraction needs a bivector")
    xi = tuple(as_scalar(x) for x in xi)
    if dim is not None and len(xi) != dim:
        raise DimensionError(f"covector of length {len(xi)} in dimension {dim}")
    n = len(xi)
    out = [as_scalar(0)] * n
    for (j, i), c in b.items():
        if i >= n:
            raise DimensionError(f"bivector index {i} outside dimension {n}")
        if xi[j]:
            out[i] = out[i] + c * xi[j]
        if xi[i]:
            out[j] = out[j] - c * xi[i]
    return tuple(out)


def ad_invariant(A: LieAlgebra, t: Multivector) -> Verdict:
    """True iff ``[e_i, t] = 0`` for every basis vector; witness is the first failing ``i``."""
    for i in range(A.dim):
        if schouten(A, Multivector.basis(i), t):
            return Verdict(False, i)
    return Verdict(True)
