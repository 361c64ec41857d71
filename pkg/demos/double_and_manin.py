"""The Drinfeld double of sl(3) and lagrangian subalgebras k + k°.

A subalgebra k is coisotropic exactly when k + k° is a lagrangian
subalgebra of the double. The last block checks that g + g with the split
form recovers the cobracket [pi, .].

    python3 demos/double_and_manin.py
"""

from liebialg import annihilator, build_series, drinfeld_double, is_lagrangian, reproduce_families, standard_r_matrix
from liebialg.bialgebra import Subspace, manin_triple_self_test, pairing_ad_invariant
from liebialg.classical import format_root, label_vector
from liebialg.liealg import jacobi_check

A, rd = build_series("A", 2)
pi = standard_r_matrix(A, rd)
d = drinfeld_double(A, pi)
print(f"double: dim {d.algebra.dim}, Jacobi {jacobi_check(d.algebra).ok}, "
      f"pairing invariant {pairing_ad_invariant(d.algebra, d.pairing).ok}")

for row in reproduce_families("A", 2):
    k = row.constructed
    print(f"  {format_root(row.root):7} k + k° lagrangian: {is_lagrangian(d, d.direct_sum(k, annihilator(A, k))).ok}")

# span{E13} is a subalgebra, but not coisotropic
k = Subspace.span([label_vector(A, rd, "E13")], A.dim)
print("  span{E13}: ", is_lagrangian(d, d.direct_sum(k, annihilator(A, k))))

pos = [rd.gens[r] for r in rd.positives]
neg = [rd.gens[rd.negative(r)] for r in rd.positives]
print("\ng + g:", manin_triple_self_test(A, pi, rd.cartan, pos, neg))
