from fractions import Fraction

import pytest
from hypothesis import strategies as st

from liebialg.classical import build_series, standard_r_matrix
from liebialg.field import GaussianRational
from liebialg.liealg import LieAlgebra, abelian, heisenberg, sl2, su2
from liebialg.multivector import Multivector

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_ints = st.integers(-2, 2).map(Fraction)
gaussians = st.builds(GaussianRational, rationals, rationals)


def direct_sum(*algebras) -> LieAlgebra:
    structure, offset = {}, 0
    for A in algebras:
        for (i, j), terms in A.structure.items():
            structure[(offset + i, offset + j)] = {offset + k: c for k, c in terms.items()}
        offset += A.dim
    return LieAlgebra(offset, structure)


def borel_sl3() -> LieAlgebra:
    E = lambda i, j: [[1 if (r, c) == (i, j) else 0 for c in range(3)] for r in range(3)]
    h1 = [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
    h2 = [[0, 0, 0], [0, 1, 0], [0, 0, -1]]
    return LieAlgebra.from_matrices([h1, h2, E(0, 1), E(0, 2), E(1, 2)])


# Lie algebras of dimension <= 6 used by the randomized suites
SMALL_ALGEBRAS = {
    "sl2": sl2(),
    "su2": su2(),
    "heisenberg": heisenberg(),
    "abelian4": abelian(4),
    "borel_sl3": borel_sl3(),
    "sl2+sl2": direct_sum(sl2(), sl2()),
    "sl2+R": direct_sum(sl2(), abelian(1)),
}


def _sl2_pair_pi():
    return Multivector(2, {(1, 2): 2, (4, 5): 2})


# (algebra, r-matrix) pairs for the construction properties
R_MATRIX_CASES = {
    "sl2": lambda: (sl2(), Multivector(2, {(1, 2): 2})),
    "su2": lambda: (su2(), Multivector(2, {(1, 2): 2})),
    "sl2+sl2": lambda: (SMALL_ALGEBRAS["sl2+sl2"], _sl2_pair_pi()),
    "A1": lambda: (build_series("A", 1)[0], standard_r_matrix(*build_series("A", 1))),
}


def vectors(dim, elements=small_ints):
    return st.lists(elements, min_size=dim, max_size=dim).map(tuple)


def multivectors(dim, degree, elements=small_ints, max_terms=4):
    from itertools import combinations

    keys = list(combinations(range(dim), degree))
    if not keys:
        return st.just(Multivector(degree))
    return st.dictionaries(st.sampled_from(keys), elements, max_size=max_terms).map(
        lambda d: Multivector(degree, d)
    )


@pytest.fixture(scope="session")
def sl3():
    return build_series("A", 2)
