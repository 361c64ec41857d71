"""Classical series A_n, B_n, C_n, D_n in their split real forms.

Each algebra is realized by matrices in its defining representation with
the diagonal Cartan subalgebra. Roots are integer tuples in the coordinates
``L_1, ..., L_m`` (``m = n + 1`` for A_n, ``m = n`` otherwise).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .bialgebra import Subspace, is_coisotropic
from .construction import construct
from .liealg import LieAlgebra, Verdict, bracket, killing_form
from .multivector import Multivector, schouten, wedge

__all__ = [
    "SERIES",
    "RootDatum",
    "build_series",
    "standard_r_matrix",
    "line_condition",
    "vanish_conditions",
    "boxed_family",
    "reproduce_families",
    "FamilyRow",
    "parse_root",
    "format_root",
    "transpose_map",
    "label_vector",
    "line_roots",
]

SERIES = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 2}


def _E(size, i, j):
    # 1-based matrix unit
    m = [[0] * size for _ in range(size)]
    m[i - 1][j - 1] = 1
    return m


def _lin(size, *terms):
    m = [[0] * size for _ in range(size)]
    for c, (i, j) in terms:
        m[i - 1][j - 1] += c
    return m


@dataclass(frozen=True)
class RootDatum:
    series: str
    rank: int
    size: int  # matrix size of the defining representation
    roots: tuple  # all roots, ordered: each positive root followed by its negative
    positives: tuple
    gens: dict = field(repr=False)  # root -> basis index of its generator
    names: dict = field(repr=False)  # label such as "X12" -> basis index
    cartan: tuple = ()  # basis indices of the Cartan elements
    cartan_diagonals: tuple = field(default=(), repr=False)

    def generator(self, root) -> int:
        return self.gens[tuple(root)]

    def negative(self, root) -> tuple:
        return tuple(-x for x in root)

    def evaluate(self, root, diagonal) -> Fraction:
        """Root evaluated on a diagonal Cartan element given by its diagonal."""
        n = self.rank
        if self.series == "A":
            return sum(Fraction(a) * d for a, d in zip(root, diagonal))
        return sum(Fraction(a) * diagonal[i] for i, a in enumerate(root[:n]))


def _positive_roots(series, n):
    m = n + 1 if series == "A" else n
    roots = []

    def L(*pairs):
        v = [0] * m
        for c, i in pairs:
            v[i - 1] += c
        return tuple(v)

    if series == "A":
        roots = [L((1, i), (-1, j)) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    else:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append(L((1, i), (-1, j)))
                roots.append(L((1, i), (1, j)))
        if series == "B":
            roots += [L((1, i)) for i in range(1, n + 1)]
        elif series == "C":
            roots += [L((2, i)) for i in range(1, n + 1)]
    return sorted(roots, reverse=True)


@lru_cache(maxsize=None)
def build_series(series: str, n: int) -> tuple[LieAlgebra, RootDatum]:
    """Split real form of the classical algebra of type ``series`` and rank ``n``."""
    series = series.upper()
    if series not in SERIES:
        raise ValueError(f"unknown series {series!r}")
    if not isinstance(n, int) or n < MIN_RANK[series]:
        raise ValueError(f"rank {n} out of range for series {series} (minimum {MIN_RANK[series]})")

    mats, labels, root_of = [], [], {}

    def add(label, mat, root=None):
        labels.append(label)
        mats.append(mat)
        if root is not None:
            root_of[tuple(root)] = len(mats) - 1

    positives = _positive_roots(series, n)

    if series == "A":
        size = n + 1
        cartan_diag = []
        for k in range(2, size + 1):
            add(f"H1-H{k}", _lin(size, (1, (1, 1)), (-1, (k, k))))
            cartan_diag.append(tuple(1 if r == 0 else (-1 if r == k - 1 else 0) for r in range(size)))
        for i in range(1, size + 1):
            for j in range(1, size + 1):
                if i != j:
                    root = tuple(1 if r == i - 1 else (-1 if r == j - 1 else 0) for r in range(size))
                    add(f"E{i}{j}", _E(size, i, j), root)
    else:
        size = 2 * n + 1 if series == "B" else 2 * n
        sym = 1 if series == "C" else -1
        cartan_diag = []
        for i in range(1, n + 1):
            add(f"H{i}", _lin(size, (1, (i, i)), (-1, (n + i, n + i))))
            cartan_diag.append(tuple(
                1 if r == i - 1 else (-1 if r == n + i - 1 else 0) for r in range(size)
            ))

        def L(*pairs):
            v = [0] * n
            for c, k in pairs:
                v[k - 1] += c
            return tuple(v)

        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    add(f"X{i}{j}", _lin(size, (1, (i, j)), (-1, (n + j, n + i))), L((1, i), (-1, j)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                add(f"Y{i}{j}", _lin(size, (1, (i, n + j)), (sym, (j, n + i))), L((1, i), (1, j)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                add(f"Z{i}{j}", _lin(size, (1, (n + i, j)), (sym, (n + j, i))), L((-1, i), (-1, j)))
        if series == "B":
            last = 2 * n + 1
            for i in range(1, n + 1):
                add(f"U{i}", _lin(size, (1, (i, last)), (-1, (last, n + i))), L((1, i)))
            for i in range(1, n + 1):
                add(f"V{i}", _lin(size, (1, (n + i, last)), (-1, (last, i))), L((-1, i)))
        elif series == "C":
            for i in range(1, n + 1):
                add(f"U{i}", _E(size, i, n + i), L((2, i)))
            for i in range(1, n + 1):
                add(f"V{i}", _E(size, n + i, i), L((-2, i)))

    A = LieAlgebra.from_matrices(mats, labels)
    roots = []
    for r in positives:
        roots.append(r)
        roots.append(tuple(-x for x in r))
    rd = RootDatum(
        series=series,
        rank=n,
        size=size,
        roots=tuple(roots),
        positives=tuple(positives),
        gens=root_of,
        names={lab: k for k, lab in enumerate(labels)},
        cartan=tuple(range(len(cartan_diag))),
        cartan_diagonals=tuple(cartan_diag),
    )
    return A, rd


# -- roots -----------------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d*)L(\d+)")


def parse_root(spec: str, rd: RootDatum | None = None, width: int | None = None) -> tuple:
    """Parse ``"L1-L3"``, ``"2L1"``, ``"-L1-L2"`` into an L-coordinate tuple."""
    text = spec.replace(" ", "")
    if not text:
        raise ValueError("empty root spec")
    pos, coords = 0, {}
    for m in _TERM.finditer(text):
        if m.start() != pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"malformed root spec {spec!r}")
        c = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            c = -c
        k = int(m.group(3))
        if k < 1:
            raise ValueError(f"malformed root spec {spec!r}")
        coords[k] = coords.get(k, 0) + c
        pos = m.end()
    if pos != len(text):
        raise ValueError(f"malformed root spec {spec!r}")
    if rd is not None:
        width = len(rd.roots[0])
    if width is None:
        width = max(coords)
    if max(coords) > width:
        raise ValueError(f"root spec {spec!r} uses L{max(coords)} beyond L{width}")
    root = tuple(coords.get(k, 0) for k in range(1, width + 1))
    if rd is not None and root not in rd.gens:
        raise ValueError(f"{spec!r} is not a root of {rd.series}{rd.rank}")
    return root


def format_root(root) -> str:
    out = ""
    for k, c in enumerate(root, start=1):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        out += f"{sign}{mag}L{k}"
    return out or "0"


def line_condition(rd: RootDatum, beta) -> bool:
    """No root string ``alpha + Z beta`` contains three consecutive roots."""
    beta = tuple(beta)
    if beta not in rd.gens:
        raise ValueError(f"{format_root(beta)} is not a root of {rd.series}{rd.rank}")
    rootset = set(rd.roots)
    span = 4  # root strings in the classical series have length <= 3
    for alpha in rd.roots:
        ks = [k for k in range(-span, span + 1)
              if tuple(a + k * b for a, b in zip(alpha, beta)) in rootset]
        ks = set(ks)
        if any(k in ks and k + 1 in ks and k + 2 in ks for k in ks):
            return False
    return True


# -- r-matrix --------------------------------------------------------------

def standard_r_matrix(A: LieAlgebra, rd: RootDatum) -> Multivector:
    """``sum over positive roots of e_a ^ f_a / B(e_a, f_a)``."""
    pi = Multivector(2)
    for r in rd.positives:
        e = A.basis_vector(rd.gens[r])
        f = A.basis_vector(rd.gens[rd.negative(r)])
        b = killing_form(A, e, f)
        if not b:
            raise ValueError(f"B(e, f) = 0 for root {format_root(r)}")
        pi = pi + (1 / b) * wedge(Multivector.from_vector(e), Multivector.from_vector(f))
    return pi


def vanish_conditions(A: LieAlgebra, rd: RootDatum, x) -> Verdict:
    """Three wedge conditions over positive roots; they force the condition with ``lam = 0``.

    Witness is ``(root, k)`` with ``k`` in 1..3 naming the failing condition.
    """
    x = A.vector(x)
    for r in rd.positives:
        e = A.basis_vector(rd.gens[r])
        f = A.basis_vector(rd.gens[rd.negative(r)])
        xe, xf = bracket(A, x, e), bracket(A, x, f)
        checks = (
            (bracket(A, x, xe), f),
            (bracket(A, x, xf), e),
            (xe, xf),
        )
        for k, (u, v) in enumerate(checks, start=1):
            if wedge(Multivector.from_vector(u), Multivector.from_vector(v)):
                return Verdict(False, (r, k))
    from .construction import check_condi
    from .linalg import ZERO_PAIR

    sol = check_condi(A, standard_r_matrix(A, rd), x)
    if not (sol.lam == 0 or sol.lam is ZERO_PAIR):
        raise AssertionError(f"vanishing conditions hold but lambda = {sol.lam}")
    return Verdict(True)


# -- golden data: generators listed for each root family -------------------

def _box_labels(series: str, n: int, root: tuple) -> list:
    """Labels spanning the reference family for ``root``; ``"Hi+Hj"`` style for Cartan sums."""
    nz = [(k + 1, c) for k, c in enumerate(root) if c]
    if series == "A":
        (a, ca), (b, cb) = nz
        i, j = (a, b) if a < b else (b, a)
        mids = range(i + 1, j)
        if root[i - 1] == 1:  # e_beta = E_ij
            return [f"E{i}{j}", f"H{i}-H{j}"] + [f"E{k}{j}" for k in mids] + [f"E{i}{k}" for k in mids]
        return [f"E{j}{i}", f"H{i}-H{j}"] + [f"E{k}{i}" for k in mids] + [f"E{j}{k}" for k in mids]
    if series == "C" and len(nz) == 1:
        (i, c), = nz
        later = range(i + 1, n + 1)
        if c > 0:
            return [f"Y{i}{k}" for k in later] + [f"X{i}{k}" for k in later] + [f"U{i}", f"H{i}"]
        return [f"Z{i}{k}" for k in later] + [f"X{k}{i}" for k in later] + [f"V{i}", f"H{i}"]
    (i, ci), (j, cj) = nz
    if ci == -cj:
        lo, hi = (i, j) if ci > 0 else (j, i)
        a, b = min(lo, hi), max(lo, hi)
        mids = range(a + 1, b)
        if lo < hi:  # L_a - L_b, a < b
            return [f"X{a}{k}" for k in mids] + [f"X{k}{b}" for k in mids] + [f"X{a}{b}", f"H{a}-H{b}"]
        return [f"X{k}{a}" for k in mids] + [f"X{b}{k}" for k in mids] + [f"X{b}{a}", f"H{a}-H{b}"]
    # +-(L_i + L_j), i < j; Cartan element is the coroot H_i + H_j
    others = [k for k in range(i + 1, n + 1) if k != j]
    later = range(j + 1, n + 1)
    if ci > 0:
        labels = [f"X{i}{k}" for k in others] + [f"Y{k}{j}" for k in others]
        labels += [f"X{j}{k}" for k in later] + [f"Y{k}{i}" for k in later]
        labels += [f"Y{i}{j}", f"H{i}+H{j}"]
        if series == "B":
            labels += [f"U{i}", f"U{j}"]
    else:
        labels = [f"X{k}{i}" for k in others] + [f"Z{k}{j}" for k in others]
        labels += [f"X{k}{j}" for k in later] + [f"Z{k}{i}" for k in later]
        labels += [f"Z{i}{j}", f"H{i}+H{j}"]
        if series == "B":
            labels += [f"V{i}", f"V{j}"]
    return labels


def label_vector(A: LieAlgebra, rd: RootDatum, label: str) -> tuple:
    """Coordinates of a generator label such as ``"X12"``, ``"Y21"``, ``"H1-H3"``, ``"H1+H2"``."""
    m = re.fullmatch(r"H(\d+)([+-])H(\d+)", label)
    if m:
        i, sign, j = int(m.group(1)), m.group(2), int(m.group(3))
        hi, hj = _cartan_vector(A, rd, i), _cartan_vector(A, rd, j)
        return tuple(a + b if sign == "+" else a - b for a, b in zip(hi, hj))
    if re.fullmatch(r"H\d+", label) and rd.series == "A":
        raise ValueError("single H_i is not traceless in sl(n+1)")
    if label in rd.names:
        return A.basis_vector(rd.names[label])
    m = re.fullmatch(r"([YZ])(\d)(\d)", label)
    if m:
        swapped = f"{m.group(1)}{m.group(3)}{m.group(2)}"
        if swapped in rd.names:
            v = A.basis_vector(rd.names[swapped])
            return v if rd.series == "C" else tuple(-c for c in v)
    raise KeyError(f"no generator {label!r} in {rd.series}{rd.rank}")


def _cartan_vector(A: LieAlgebra, rd: RootDatum, i: int) -> tuple:
    if rd.series != "A":
        return A.basis_vector(rd.names[f"H{i}"])
    # E_ii is not in sl(n+1); only differences are used, so express E_ii - E_11
    if i == 1:
        return A.zero()
    return tuple(-c for c in A.basis_vector(rd.names[f"H1-H{i}"]))


def boxed_family(series: str, n: int, root) -> Subspace:
    """Span of the generators listed for ``root``, independent of the construction."""
    A, rd = build_series(series, n)
    if isinstance(root, str):
        root = parse_root(root, rd)
    root = tuple(root)
    if root not in rd.gens:
        raise ValueError(f"{format_root(root)} is not a root of {rd.series}{n}")
    if not line_condition(rd, root):
        raise ValueError(f"{format_root(root)} fails the line condition")
    labels = _box_labels(rd.series, n, root)
    return Subspace.span([label_vector(A, rd, lab) for lab in labels], A.dim)


def transpose_map(A: LieAlgebra) -> tuple:
    """Matrix (on coordinates) of ``M -> M^T``; column ``j`` is the image of ``e_j``."""
    cols = [A.coordinates(tuple(zip(*m))) for m in A.realization]
    return tuple(zip(*cols))


@dataclass(frozen=True)
class FamilyRow:
    root: tuple
    generator: str
    constructed: Subspace
    boxed: Subspace
    condi_holds: bool
    is_coisotropic: bool

    @property
    def match(self) -> bool:
        return self.constructed == self.boxed

    def to_json(self) -> dict:
        return {
            "root": format_root(self.root),
            "generator": self.generator,
            "dim": self.constructed.rank,
            "condi_holds": self.condi_holds,
            "is_coisotropic": self.is_coisotropic,
            "match": self.match,
        }


def line_roots(rd: RootDatum) -> list:
    return [r for r in rd.roots if line_condition(rd, r)]


def reproduce_families(series: str, n: int) -> list:
    """Construct from every line-condition root vector and compare with the golden families."""
    A, rd = build_series(series, n)
    pi = standard_r_matrix(A, rd)
    rows = []
    for r in line_roots(rd):
        k = rd.gens[r]
        report = construct(A, pi, A.basis_vector(k))
        rows.append(FamilyRow(
            root=r,
            generator=A.basis_names[k],
            constructed=report.h,
            boxed=boxed_family(series, n, r),
            condi_holds=report.condi.holds,
            is_coisotropic=report.is_coisotropic,
        ))
    return rows
