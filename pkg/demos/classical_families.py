"""Coisotropic subalgebras from root vectors in the classical series.

For each root that passes the line condition the construction is run on the
root vector and compared against the family listed by hand.

    python3 demos/classical_families.py C 3
"""

import sys

from liebialg import build_series, format_root, reproduce_families
from liebialg.classical import line_roots

series = sys.argv[1] if len(sys.argv) > 1 else "B"
rank = int(sys.argv[2]) if len(sys.argv) > 2 else 3

A, rd = build_series(series, rank)
passing = line_roots(rd)
print(f"{series}{rank}: dim {A.dim}, {len(rd.roots)} roots, {len(passing)} pass the line condition")
skipped = [format_root(r) for r in rd.roots if r not in passing]
if skipped:
    print("  no guarantee for:", " ".join(skipped))

print(f"\n{'root':10} {'generator':9} {'dim h':>5}  match  coisotropic")
for row in reproduce_families(series, rank):
    print(f"{format_root(row.root):10} {row.generator:9} {row.constructed.rank:5}  {row.match!s:5}  {row.is_coisotropic}")
