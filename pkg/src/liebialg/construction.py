"""Coisotropic subalgebras from an r-matrix.

Infinitesimal route: if ``[X, [X, pi]] = lam [X, pi]`` then the image of
``[X, pi]^#`` is a coisotropic subalgebra. Group route: for a matrix ``g``,
``eta = pi - Ad_g pi`` and ``h^g`` is the image of ``eta^#``; ``[eta, eta] = 0``
forces ``h^g`` to be a subalgebra, and any subalgebra arising this way is
coisotropic.

Every report is certified by :func:`liebialg.bialgebra.is_coisotropic`;
a contradiction with these implications raises :class:`OracleContradiction`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bialgebra import Subspace, is_coisotropic, is_subalgebra
from .field import format_scalar
from .linalg import ZERO_PAIR, inverse, matrix, row_basis, solve_proportionality
from .liealg import LieAlgebra, adjoint_group_action
from .multivector import Multivector, schouten, sharp_matrix, wedge

__all__ = [
    "OracleContradiction",
    "CondiSolution",
    "ConstructionReport",
    "GroupReport",
    "check_condi",
    "build_h",
    "construct",
    "adjoint_bivector",
    "eta_from_group",
    "h_from_group",
    "inversion_property_check",
]


class OracleContradiction(AssertionError):
    """The independent coisotropy check disagrees with a proven implication."""


@dataclass(frozen=True)
class CondiSolution:
    x: tuple
    bracket_x_pi: Multivector
    lam: object  # scalar, ZERO_PAIR, or None
    holds: bool

    @property
    def lambda_text(self):
        if self.lam is ZERO_PAIR:
            return "any"
        if self.lam is None:
            return None
        return format_scalar(self.lam)


@dataclass(frozen=True)
class ConstructionReport:
    condi: CondiSolution
    h: Subspace
    is_subalgebra: bool
    is_coisotropic: bool

    @property
    def dim_h(self) -> int:
        return self.h.rank

    def to_json(self) -> dict:
        return {
            "x": [format_scalar(c) for c in self.condi.x],
            "lambda": self.condi.lambda_text,
            "condi_holds": self.condi.holds,
            "h_basis": [[format_scalar(c) for c in row] for row in self.h.basis],
            "dim": self.dim_h,
            "is_subalgebra": self.is_subalgebra,
            "is_coisotropic": self.is_coisotropic,
        }


@dataclass(frozen=True)
class GroupReport:
    g: tuple
    eta: Multivector
    h: Subspace
    flat: bool
    is_subalgebra: bool
    is_coisotropic: bool

    @property
    def dim_h(self) -> int:
        return self.h.rank

    def to_json(self) -> dict:
        return {
            "g": [[format_scalar(c) for c in row] for row in self.g],
            "eta": [[i, j, format_scalar(c)] for (i, j), c in sorted(self.eta.items())],
            "h_basis": [[format_scalar(c) for c in row] for row in self.h.basis],
            "dim": self.dim_h,
            "flat": self.flat,
            "is_subalgebra": self.is_subalgebra,
            "is_coisotropic": self.is_coisotropic,
        }


def _coefficients(p: Multivector, q: Multivector):
    keys = sorted(set(k for k, _ in p.items()) | set(k for k, _ in q.items()))
    return [p.coefficient(*k) for k in keys], [q.coefficient(*k) for k in keys]


def check_condi(A: LieAlgebra, pi: Multivector, x) -> CondiSolution:
    x = A.vector(x)
    X = Multivector.from_vector(x)
    b = schouten(A, X, pi)
    bb = schouten(A, X, b)
    lam = solve_proportionality(*_coefficients(bb, b))
    return CondiSolution(x, b, lam, lam is not None)


def _image(b: Multivector, dim: int) -> Subspace:
    return Subspace("g", dim, row_basis(sharp_matrix(b, dim), dim))


def build_h(A: LieAlgebra, pi: Multivector, x) -> Subspace:
    """Image of ``[x, pi]^#`` applied to all of g*."""
    return _image(schouten(A, Multivector.from_vector(A.vector(x)), pi), A.dim)


def construct(A: LieAlgebra, pi: Multivector, x) -> ConstructionReport:
    condi = check_condi(A, pi, x)
    h = _image(condi.bracket_x_pi, A.dim)
    report = is_coisotropic(A, pi, h)
    if h.rank % 2:
        raise OracleContradiction(f"odd-dimensional image ({h.rank}) of a bivector")
    if condi.holds and not report.ok:
        raise OracleContradiction(
            f"x={x} satisfies the condition but h is not coisotropic "
            f"(subalgebra={report.subalgebra}, annihilator={report.annihilator_closed})"
        )
    return ConstructionReport(condi, h, report.subalgebra.ok, report.ok)


def adjoint_bivector(A: LieAlgebra, g, p: Multivector) -> Multivector:
    """``Ad_g`` extended to bivectors: ``Ad_g(a ^ b) = Ad_g a ^ Ad_g b``."""
    images = {}
    out = Multivector(2)
    for (i, j), c in p.items():
        for k in (i, j):
            if k not in images:
                images[k] = Multivector.from_vector(adjoint_group_action(A, g, A.basis_vector(k)))
        out = out + c * wedge(images[i], images[j])
    return out


def eta_from_group(A: LieAlgebra, pi: Multivector, g) -> Multivector:
    return pi - adjoint_bivector(A, g, pi)


def h_from_group(A: LieAlgebra, pi: Multivector, g) -> GroupReport:
    g = matrix(g)
    eta = eta_from_group(A, pi, g)
    h = _image(eta, A.dim)
    flat = schouten(A, eta, eta).is_zero()
    report = is_coisotropic(A, pi, h)
    if flat and not report.subalgebra:
        raise OracleContradiction(f"[eta, eta] = 0 but h^g is not a subalgebra (g={g})")
    if report.subalgebra and not report.ok:
        raise OracleContradiction(f"h^g is a subalgebra but not coisotropic (g={g})")
    return GroupReport(g, eta, h, flat, report.subalgebra.ok, report.ok)


def inversion_property_check(A: LieAlgebra, pi: Multivector, g) -> bool:
    """``h^{g^-1} = Ad_{g^-1} h^g`` and it is again a subalgebra."""
    g = matrix(g)
    ginv = inverse(g)
    hg = h_from_group(A, pi, g).h
    moved = Subspace.span([adjoint_group_action(A, ginv, v) for v in hg.basis], A.dim)
    hinv = h_from_group(A, pi, ginv).h
    return hinv == moved and bool(is_subalgebra(A, hinv))
