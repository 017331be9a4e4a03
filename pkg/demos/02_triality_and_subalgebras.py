"""Tour of the triality layer: involutions, fixed subalgebras, spin lifts.

Run:  python demos/02_triality_and_subalgebras.py
"""

import numpy as np

from g2orbits import (
    alpha,
    basis_element,
    beta,
    bracket,
    expm,
    f_basis,
    g_basis,
    gamma,
    is_automorphism,
    named_subalgebra,
    oct_mul,
    spin_lift_exp,
    v_elem,
    zeta,
)
from g2orbits.triality import bracket_closure_defect

rng = np.random.default_rng(1)

print("The second basis F_ij (half-integer combinations of G matrices):")
print("  2 F_23 decomposes as G01 + G23 - G45 - G67:")
target = g_basis(0, 1) + g_basis(2, 3) - g_basis(4, 5) - g_basis(6, 7)
print("  defect:", np.abs(2 * f_basis(2, 3) - target).max())

x = rng.normal(size=(8, 8))
x = x - x.T
print("\nInvolutions and composition on a random skew matrix:")
print("  |alpha(alpha X) - X| =", np.abs(alpha(alpha(x)) - x).max())
print("  |beta(beta X) - X|   =", np.abs(beta(beta(x)) - x).max())
print("  |gamma - beta.alpha| =", np.abs(gamma(x) - beta(alpha(x))).max())

y = rng.normal(size=(8, 8))
y = y - y.T
print("  beta respects brackets:",
      np.abs(beta(bracket(x, y)) - bracket(beta(x), beta(y))).max())

print("\nNamed subalgebras (dimension, bracket closure defect):")
for name in ("g2", "su3", "so4_g2", "u3", "so3_so4", "so7"):
    sub = named_subalgebra(name)
    print(f"  {name:8s} dim {sub.dim:2d}   closure defect {bracket_closure_defect(sub):.1e}")

print("\ng2 exponentials are octonion automorphisms:")
g2 = named_subalgebra("g2")
gen = np.einsum("i,iab->ab", rng.normal(size=14), g2.basis)
print("  is_automorphism(exp gen):", is_automorphism(expm(gen, 1.3), 1e-9))
print("  is_automorphism(exp G01):", is_automorphism(expm(g_basis(0, 1), 1.0), 1e-9))

print("\nSpin lifts move the base point e0 along explicit circles:")
e0 = basis_element(0)
for label, gen, angle in [
    ("V4(1,0,1)  (type III geodesic)", v_elem(4, 1, 0, 1), 1.0),
    ("V4(1,0,0)  (type IV geodesic)", v_elem(4, 1, 0, 0), 0.5),
    ("V4(0,1,1)  (type V geodesic)", v_elem(4, 0, 1, 1), 1.0),
    ("zeta_4     (section curve)", zeta(4), 1.5),
]:
    t = 0.8
    v = spin_lift_exp(gen, t).g2 @ e0
    print(f"  {label}: g2(e0) = cos({angle:.1f} t) e0 + sin({angle:.1f} t) e4,"
          f"  defect {abs(v[0] - np.cos(angle * t)) + abs(v[4] - np.sin(angle * t)):.1e}")

print("\nThe lifted pair multiplies octonions compatibly, (g1 a)(g2 b) = g2(ab):")
el = spin_lift_exp(v_elem(4, 1, 0, 1), 0.9)
a, b = rng.normal(size=8), rng.normal(size=8)
print("  defect:", np.abs(oct_mul(el.g1 @ a, el.g2 @ b) - el.g2 @ oct_mul(a, b)).max())
