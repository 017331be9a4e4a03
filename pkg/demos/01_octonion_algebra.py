"""Tour of the octonion layer: the multiplication table and algebra laws.

Run:  python demos/01_octonion_algebra.py
"""

import numpy as np

from g2orbits import (
    FANO_LINES,
    basis_element,
    oct_conj,
    oct_inner,
    oct_mul,
    oct_norm,
)
from g2orbits.octonion import INDEX, SIGN

rng = np.random.default_rng(0)
E = [basis_element(i) for i in range(8)]

print("Oriented multiplication triples (e_i e_j = e_k cyclically):")
for line in FANO_LINES:
    print("   ", line)

print("\nFull basis product table (entry = e_i e_j):")
header = "      " + "".join(f"{'e%d' % j:>6}" for j in range(8))
print(header)
for i in range(8):
    cells = []
    for j in range(8):
        s = "-" if SIGN[i, j] < 0 else "+"
        cells.append(f"{s}e{INDEX[i, j]:d}".rjust(6))
    print(f"  e{i}  " + "".join(cells))

print("\nUnit, squares, anticommutativity:")
print("  e0 * e5          =  e5:", np.array_equal(oct_mul(E[0], E[5]), E[5]))
print("  e5 * e5          = -e0:", np.array_equal(oct_mul(E[5], E[5]), -E[0]))
print("  e1 e2 + e2 e1    =  0 :",
      np.abs(oct_mul(E[1], E[2]) + oct_mul(E[2], E[1])).max() == 0.0)

print("\nComposition law |xy| = |x| |y| on a random pair:")
x, y = rng.normal(size=8), rng.normal(size=8)
print(f"  |xy|    = {oct_norm(oct_mul(x, y)):.15f}")
print(f"  |x||y|  = {oct_norm(x) * oct_norm(y):.15f}")

print("\nInner product identities:")
print(f"  (x, y)                         = {oct_inner(x, y):+.12f}")
half = 0.5 * (oct_mul(oct_conj(x), y) + oct_mul(oct_conj(y), x))
print(f"  (conj(x) y + conj(y) x)/2 . e0 = {half[0]:+.12f}")
print(f"  imaginary part residue          {np.abs(half[1:]).max():.2e}")

print("\nNon-associativity witness:")
lhs = oct_mul(oct_mul(E[1], E[2]), E[4])
rhs = oct_mul(E[1], oct_mul(E[2], E[4]))
print("  (e1 e2) e4 =", lhs.astype(int))
print("  e1 (e2 e4) =", rhs.astype(int))
print("  equal?    ", np.array_equal(lhs, rhs))

print("\nAlternativity still holds: x(xy) = (xx)y")
print("  defect:", np.abs(oct_mul(x, oct_mul(x, y)) - oct_mul(oct_mul(x, x), y)).max())
