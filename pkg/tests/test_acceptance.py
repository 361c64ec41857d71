"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run ``python3 tests/test_acceptance.py`` for the bare report, or through
pytest where each criterion is its own test.
"""

import random
import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import R_MATRIX_CASES, SMALL_ALGEBRAS  # noqa: E402

from liebialg.bialgebra import (  # noqa: E402
    Subspace,
    annihilator,
    drinfeld_double,
    dual_bracket,
    is_dual_ideal,
    is_dual_subalgebra,
    is_lagrangian,
    is_subalgebra,
    manin_triple_self_test,
    pairing_ad_invariant,
)
from liebialg.classical import (  # noqa: E402
    build_series,
    format_root,
    label_vector,
    line_roots,
    reproduce_families,
    standard_r_matrix,
)
from liebialg.construction import (  # noqa: E402
    build_h,
    construct,
    eta_from_group,
    h_from_group,
    inversion_property_check,
)
from liebialg.liealg import jacobi_check, sl2, su2  # noqa: E402
from liebialg.multivector import Multivector, schouten, wedge  # noqa: E402

F = Fraction
PI = Multivector(2, {(1, 2): 2})
G = ((1, 1), (0, 1))
H = ((1, 0), (-1, 1))


def span3(*rows):
    return Subspace.span(rows, 3)


def fmt(s: Subspace):
    return "{" + ", ".join("(" + ",".join(str(c) for c in r) + ")" for r in s.basis) + "}"


def fmt_g(g):
    return "[" + ";".join(",".join(str(c) for c in row) for row in g) + "]"


# -- criterion 1 -----------------------------------------------------------

def criterion_1():
    A, failures = sl2(), []
    expected = {
        (1, 0, 0): span3(),
        (0, 1, 1): span3((1, 0, 0), (0, 1, 1)),
        (0, 1, -1): span3((1, 0, 0), (0, 1, -1)),
        (1, 1, 1): span3((1, 0, 0), (0, 1, 1)),
        (1, 1, -1): span3((1, 0, 0), (0, 1, -1)),
    }
    for x, h in expected.items():
        rep = construct(A, PI, x)
        if not (rep.condi.holds and rep.h == h and rep.is_coisotropic):
            failures.append(f"X={x}: got {fmt(rep.h)}")
    if construct(A, PI, (0, 1, 0)).condi.holds:
        failures.append("X=e2 satisfies the condition")
    # group route, as stated
    for b in (1, 2, F(-1, 3)):
        for a in (1, 2):
            g = ((a, b), (0, F(1, a)))
            got = h_from_group(A, PI, g).h
            if got != span3((1, 0, 0), (0, 1, -1)):
                failures.append(f"upper g={fmt_g(g)}: expected span{{e1,e2-e3}}, got {fmt(got)}")
    for c in (1, -3, F(1, 2)):
        for a in (1, 2):
            g = ((a, 0), (c, F(1, a)))
            got = h_from_group(A, PI, g).h
            if got != span3((1, 0, 0), (0, 1, 1)):
                failures.append(f"lower g={fmt_g(g)}: expected span{{e1,e2+e3}}, got {fmt(got)}")
    for a in (1, 2, F(-1, 5)):
        got = h_from_group(A, PI, ((a, 0), (0, 1 / F(a)))).h
        if got.rank:
            failures.append(f"diag({a}): got {fmt(got)}")
    return failures


# -- criterion 2 -----------------------------------------------------------

def criterion_2():
    A, failures = su2(), []
    for c in (1, 2, -3):
        rep = construct(A, PI, (c, 0, 0))
        if rep.h.rank or not rep.condi.holds or not rep.is_coisotropic:
            failures.append(f"c={c}: got {fmt(rep.h)}")
    return failures


# -- criterion 3 -----------------------------------------------------------

def criterion_3():
    A, failures = sl2(), []
    gh = tuple(tuple(sum(G[i][k] * H[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    eta = eta_from_group(A, PI, gh)
    e = Multivector.basis
    expected = 2 * (e(0, 1) + 2 * e(1, 2) - e(0, 2))
    if eta != expected:
        failures.append(f"eta^gh = {eta}")
    if is_subalgebra(A, h_from_group(A, PI, gh).h):
        failures.append("h^gh is a subalgebra")
    for name, g in (("g", G), ("h", H)):
        if not inversion_property_check(A, PI, g):
            failures.append(f"inversion property fails for {name}")
    return failures


# -- criterion 4 -----------------------------------------------------------

FAMILY_CASES = [("A", n) for n in range(1, 5)] + [("B", n) for n in range(2, 5)] + \
    [("C", n) for n in range(2, 5)] + [("D", n) for n in range(3, 5)]


def _matrix_family(A, mats):
    return Subspace.span([A.coordinates(m) for m in mats], A.dim)


def _unit(size, *terms):
    m = [[0] * size for _ in range(size)]
    for c, i, j in terms:
        m[i - 1][j - 1] += c
    return m


def criterion_4():
    failures = []
    for series, n in FAMILY_CASES:
        rows = reproduce_families(series, n)
        roots = {r.root for r in rows}
        if any(tuple(-x for x in r) not in roots for r in roots):
            failures.append(f"{series}{n}: e/f coverage incomplete")
        for r in rows:
            if not (r.match and r.is_coisotropic):
                failures.append(f"{series}{n} {format_root(r.root)}: match={r.match} coiso={r.is_coisotropic}")
    # reference matrix families, entered entry by entry
    A, rd = build_series("A", 2)
    pi = standard_r_matrix(A, rd)
    fam = _matrix_family(A, [_unit(3, (1, 1, 1), (-1, 3, 3)), _unit(3, (1, 1, 2)),
                             _unit(3, (1, 1, 3)), _unit(3, (1, 2, 3))])
    if build_h(A, pi, A.basis_vector(rd.names["E13"])) != fam:
        failures.append("sl(3) matrix family")
    C, rc = build_series("C", 2)
    pc = standard_r_matrix(C, rc)
    fam_u2 = _matrix_family(C, [_unit(4, (1, 2, 2), (-1, 4, 4)), _unit(4, (1, 2, 4))])
    fam_u1 = _matrix_family(C, [_unit(4, (1, 1, 1), (-1, 3, 3)), _unit(4, (1, 1, 2), (-1, 4, 3)),
                                _unit(4, (1, 1, 3)), _unit(4, (1, 1, 4), (1, 2, 3))])
    if build_h(C, pc, C.basis_vector(rc.names["U2"])) != fam_u2:
        failures.append("sp(4) family for U2")
    if build_h(C, pc, C.basis_vector(rc.names["U1"])) != fam_u1:
        failures.append("sp(4) family for U1")
    return failures


# -- criterion 5 -----------------------------------------------------------

def criterion_5():
    failures = []
    cases = [("A", n) for n in range(1, 5)] + [(s, n) for s in "BCD" for n in range(2, 5)]
    for series, n in cases:
        _, rd = build_series(series, n)
        got = set(line_roots(rd))
        if series in "AD":
            want = set(rd.roots)
        elif series == "B":
            want = {r for r in rd.roots if sorted(map(abs, r)) == [0] * (n - 2) + [1, 1]}
        else:
            want = {r for r in rd.roots if sorted(map(abs, r)) == [0] * (n - 1) + [2]}
        if got != want:
            failures.append(f"{series}{n}: {sorted(format_root(r) for r in got ^ want)}")
    return failures


# -- criterion 6 -----------------------------------------------------------

def criterion_6():
    A, rd = build_series("A", 2)
    pi = standard_r_matrix(A, rd)
    n = rd.names
    h = build_h(A, pi, A.basis_vector(n["E13"]))
    fam = Subspace.span([label_vector(A, rd, s) for s in ("E12", "E13", "E23", "H1-H3")], A.dim)
    failures = []
    if h != fam:
        failures.append(f"h = {fmt(h)}")
    ann = annihilator(A, h)
    if not is_dual_subalgebra(A, pi, ann):
        failures.append("annihilator not closed")
    if is_dual_ideal(A, pi, ann):
        failures.append("annihilator is an ideal")
    value = dual_bracket(A, pi, A.basis_vector(n["E12"]), A.basis_vector(n["H1-H2"]))[n["E12"]]
    if not value:
        failures.append("pairing <[(E12)*, (H1-H2)*], E12> vanishes")
    return failures


# -- criterion 7 -----------------------------------------------------------

def _sign(k):
    return -1 if k % 2 else 1


def _rand_mv(rng, dim, degree, terms=3):
    keys = list(combinations(range(dim), degree))
    return Multivector(degree, {rng.choice(keys): F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(terms)})


def _rand_vec(rng, dim, lo=-2, hi=2):
    return tuple(F(rng.randint(lo, hi)) for _ in range(dim))


def criterion_7(seed=20240617, counts=None):
    rng = random.Random(seed)
    counts = counts if counts is not None else {}
    failures = []
    names = sorted(SMALL_ALGEBRAS)

    def tick(key):
        counts[key] = counts.get(key, 0) + 1

    for _ in range(250):
        A = SMALL_ALGEBRAS[rng.choice(names)]
        dp, dq, dr = (rng.randint(1, 2) for _ in range(3))
        p, q, r = (_rand_mv(rng, A.dim, d) for d in (dp, dq, dr))
        if schouten(A, p, q) != -_sign((dp - 1) * (dq - 1)) * schouten(A, q, p):
            failures.append(f"antisymmetry {p} {q}")
        tick("antisymmetry")
        if dq + dr <= 3:
            lhs = schouten(A, p, wedge(q, r))
            rhs = wedge(schouten(A, p, q), r) + _sign((dp - 1) * dq) * wedge(q, schouten(A, p, r))
            if lhs != rhs:
                failures.append(f"leibniz {p} {q} {r}")
            tick("leibniz")
        if dp + dq + dr <= 5:
            lhs = schouten(A, p, schouten(A, q, r))
            rhs = schouten(A, schouten(A, p, q), r) + _sign((dp - 1) * (dq - 1)) * schouten(A, q, schouten(A, p, r))
            if lhs != rhs:
                failures.append(f"jacobi {p} {q} {r}")
            tick("jacobi")

    cases = sorted(R_MATRIX_CASES)
    for _ in range(300):
        A, pi = R_MATRIX_CASES[rng.choice(cases)]()
        x = _rand_vec(rng, A.dim, -1, 1)
        rep = construct(A, pi, x)
        if rep.h.rank % 2:
            failures.append(f"odd h for x={x}")
        tick("even")
        if rep.condi.holds:
            b = rep.condi.bracket_x_pi
            if not schouten(A, b, b).is_zero() or not rep.is_coisotropic:
                failures.append(f"condi x={x}")
            tick("condi-flat")
        c = F(rng.choice([-3, -1, 2, 5]), rng.randint(1, 4))
        if build_h(A, c * pi, x) != rep.h:
            failures.append(f"scale {c} x={x}")
        tick("scale")

    A = sl2()
    for _ in range(300):
        a = F(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
        b, c = F(rng.randint(-3, 3), rng.randint(1, 3)), F(rng.randint(-3, 3), rng.randint(1, 3))
        g = ((a, b), (c, (1 + b * c) / a))
        try:
            rep = h_from_group(A, PI, g)
        except AssertionError as exc:
            failures.append(str(exc))
            continue
        if (rep.flat and not rep.is_subalgebra) or (rep.is_subalgebra and not rep.is_coisotropic):
            failures.append(f"chain g={g}")
        tick("sl2-chain")
    if sum(counts.values()) < 1000:
        failures.append(f"only {sum(counts.values())} cases")
    return failures


def test_criterion_7_case_count():
    counts = {}
    criterion_7(counts=counts)
    assert sum(counts.values()) >= 1000
    assert counts.get("condi-flat", 0) > 50


# -- criterion 8 -----------------------------------------------------------

def criterion_8():
    failures = []
    sl3, rd3 = build_series("A", 2)
    for name, A, pi in (("sl2", sl2(), PI), ("sl3", sl3, standard_r_matrix(sl3, rd3))):
        d = drinfeld_double(A, pi, check=False)
        if not jacobi_check(d.algebra):
            failures.append(f"{name} double fails Jacobi")
        if not pairing_ad_invariant(d.algebra, d.pairing):
            failures.append(f"{name} pairing not invariant")
    for series, n in [c for c in FAMILY_CASES if c[1] <= 3]:
        A, rd = build_series(series, n)
        d = drinfeld_double(A, standard_r_matrix(A, rd), check=False)
        for row in reproduce_families(series, n):
            k = row.constructed
            if not is_lagrangian(d, d.direct_sum(k, annihilator(A, k))):
                failures.append(f"{series}{n} {format_root(row.root)} not lagrangian")
    for rank in (1, 2):
        A, rd = build_series("A", rank)
        pos = [rd.gens[r] for r in rd.positives]
        neg = [rd.gens[rd.negative(r)] for r in rd.positives]
        out = manin_triple_self_test(A, standard_r_matrix(A, rd), rd.cartan, pos, neg)
        bad = [k for k in ("pairing_invariant", "diagonal_lagrangian", "gst_lagrangian", "recovers_cobracket")
               if not out[k]]
        if bad:
            failures.append(f"A{rank} Manin triple: {bad}")
    return failures


CRITERIA = {
    1: ("sl(2) suite", criterion_1),
    2: ("su(2) suite", criterion_2),
    3: ("eta^{gh} and inversion property", criterion_3),
    4: ("classical families reproduced", criterion_4),
    5: ("line-condition census", criterion_5),
    6: ("annihilator is a dual subalgebra, not an ideal", criterion_6),
    7: ("randomized property suites", criterion_7),
    8: ("double suite", criterion_8),
}


def report_line(num, failures):
    title = CRITERIA[num][0]
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {num} [{status}] {title}"
    if failures:
        line += ": " + "; ".join(failures[:4]) + (f" (+{len(failures) - 4} more)" if len(failures) > 4 else "")
    return line


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num, capsys):
    failures = CRITERIA[num][1]()
    with capsys.disabled():
        print("\n" + report_line(num, failures))
    assert not failures


if __name__ == "__main__":
    bad = 0
    for num in sorted(CRITERIA):
        failures = CRITERIA[num][1]()
        bad += bool(failures)
        print(report_line(num, failures))
    sys.exit(1 if bad else 0)
