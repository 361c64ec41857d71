"""sl(2, R) with pi = 2 e2^e3: the infinitesimal route, the group route, and
an element pair whose product leaves the world of subalgebras.

    python3 demos/sl2_walkthrough.py
"""

from fractions import Fraction

from liebialg import construct, eta_from_group, h_from_group, inversion_property_check, sl2
from liebialg.field import format_scalar
from liebialg.multivector import Multivector


def show_subspace(s):
    if not s.basis:
        return "{0}"
    return "span{" + ", ".join("(" + ", ".join(format_scalar(c) for c in r) + ")" for r in s.basis) + "}"


A = sl2()
pi = Multivector(2, {(1, 2): 2})

print("Elements X and the subalgebra spanned by the image of [X, pi]:")
for x in [(1, 0, 0), (0, 1, 1), (0, 1, -1), (1, 1, 1), (1, 1, -1), (0, 1, 0)]:
    rep = construct(A, pi, x)
    lam = rep.condi.lambda_text
    print(f"  X={str(x):11}  lambda={lam!s:5}  h={show_subspace(rep.h):27}  coisotropic={rep.is_coisotropic}")

# X = e2 misses the condition; its image is not closed under the bracket,
# which is why the proportionality assumption is needed.

print("\nGroup elements g and h^g, the image of pi - Ad_g pi:")
for label, g in [("upper", [[1, 1], [0, 1]]), ("lower", [[1, 0], [-1, 1]]), ("diagonal", [[2, 0], [0, "1/2"]])]:
    g = [[Fraction(c) for c in row] for row in g]
    rep = h_from_group(A, pi, g)
    print(f"  {label:8} h^g={show_subspace(rep.h):27} flat={rep.flat}  inversion ok={inversion_property_check(A, pi, g)}")

gh = [[0, 1], [-1, 1]]
eta = eta_from_group(A, pi, gh)
rep = h_from_group(A, pi, gh)
print(f"\nProduct gh: eta = {eta}")
print(f"  h^gh = {show_subspace(rep.h)} is a subalgebra: {rep.is_subalgebra}")
