"""Triality automorphisms of so(8) and the subalgebras they carve out.

The second basis F_ij of so(8) is given by an explicit table of
half-integer combinations of four G matrices each.  The involutions

    alpha(X) = conj . X . conj        (conjugation of octonion arguments)
    beta(G_ij) = F_ij                 (extended linearly)
    gamma = beta . alpha

satisfy alpha^2 = beta^2 = id, preserve brackets, and cut out so(7) as the
fixed set of alpha and g2 as the joint fixed set of beta and gamma.  The
table is validated globally at import-test time by exactly those
properties rather than entry by entry.

For X in so(7), the pair (exp tX, exp t gamma(X)) multiplies octonions
compatibly: (g1 a)(g2 b) = g2(ab).  :class:`SpinElement` packages such
pairs; the second component realizes the vector action on the unit sphere
and on the projective line space RP7 used by the orbit computations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    Subspace,
    bracket,
    expm,
    g_basis,
    norm_g,
    orthonormalize,
    span_coords,
    v_elem,
)
from .octonion import MUL_TENSOR, SIGN, INDEX

#: F_ij = (1/2) * sum of signed G matrices, one row per index pair.
F_ROWS = {
    (0, 1): ((+1, (0, 1)), (+1, (2, 3)), (+1, (4, 5)), (+1, (6, 7))),
    (2, 3): ((+1, (0, 1)), (+1, (2, 3)), (-1, (4, 5)), (-1, (6, 7))),
    (4, 5): ((+1, (0, 1)), (-1, (2, 3)), (+1, (4, 5)), (-1, (6, 7))),
    (6, 7): ((+1, (0, 1)), (-1, (2, 3)), (-1, (4, 5)), (+1, (6, 7))),
    (0, 2): ((+1, (0, 2)), (-1, (1, 3)), (-1, (4, 6)), (+1, (5, 7))),
    (1, 3): ((-1, (0, 2)), (+1, (1, 3)), (-1, (4, 6)), (+1, (5, 7))),
    (4, 6): ((-1, (0, 2)), (-1, (1, 3)), (+1, (4, 6)), (+1, (5, 7))),
    (5, 7): ((+1, (0, 2)), (+1, (1, 3)), (+1, (4, 6)), (+1, (5, 7))),
    (0, 3): ((+1, (0, 3)), (+1, (1, 2)), (+1, (4, 7)), (+1, (5, 6))),
    (1, 2): ((+1, (0, 3)), (+1, (1, 2)), (-1, (4, 7)), (-1, (5, 6))),
    (4, 7): ((+1, (0, 3)), (-1, (1, 2)), (+1, (4, 7)), (-1, (5, 6))),
    (5, 6): ((+1, (0, 3)), (-1, (1, 2)), (-1, (4, 7)), (+1, (5, 6))),
    (0, 4): ((+1, (0, 4)), (-1, (1, 5)), (+1, (2, 6)), (-1, (3, 7))),
    (1, 5): ((-1, (0, 4)), (+1, (1, 5)), (+1, (2, 6)), (-1, (3, 7))),
    (2, 6): ((+1, (0, 4)), (+1, (1, 5)), (+1, (2, 6)), (+1, (3, 7))),
    (3, 7): ((-1, (0, 4)), (-1, (1, 5)), (+1, (2, 6)), (+1, (3, 7))),
    (0, 5): ((+1, (0, 5)), (+1, (1, 4)), (-1, (2, 7)), (-1, (3, 6))),
    (1, 4): ((+1, (0, 5)), (+1, (1, 4)), (+1, (2, 7)), (+1, (3, 6))),
    (2, 7): ((-1, (0, 5)), (+1, (1, 4)), (+1, (2, 7)), (-1, (3, 6))),
    (3, 6): ((-1, (0, 5)), (+1, (1, 4)), (-1, (2, 7)), (+1, (3, 6))),
    (0, 6): ((+1, (0, 6)), (-1, (1, 7)), (-1, (2, 4)), (+1, (3, 5))),
    (1, 7): ((-1, (0, 6)), (+1, (1, 7)), (-1, (2, 4)), (+1, (3, 5))),
    (2, 4): ((-1, (0, 6)), (-1, (1, 7)), (+1, (2, 4)), (+1, (3, 5))),
    (3, 5): ((+1, (0, 6)), (+1, (1, 7)), (+1, (2, 4)), (+1, (3, 5))),
    (0, 7): ((+1, (0, 7)), (+1, (1, 6)), (+1, (2, 5)), (+1, (3, 4))),
    (1, 6): ((+1, (0, 7)), (+1, (1, 6)), (-1, (2, 5)), (-1, (3, 4))),
    (2, 5): ((+1, (0, 7)), (-1, (1, 6)), (+1, (2, 5)), (-1, (3, 4))),
    (3, 4): ((+1, (0, 7)), (-1, (1, 6)), (-1, (2, 5)), (+1, (3, 4))),
}

G_PAIRS = tuple((i, j) for i in range(8) for j in range(i + 1, 8))
_G_STACK = np.stack([g_basis(i, j) for i, j in G_PAIRS])


def f_basis(i: int, j: int) -> np.ndarray:
    """The so(8) basis matrix F_ij; f_basis(j, i) is its negative."""
    if i == j or not (0 <= i <= 7 and 0 <= j <= 7):
        raise ValueError(f"invalid F basis indices ({i}, {j})")
    if i > j:
        return -f_basis(j, i)
    m = np.zeros((8, 8))
    for sgn, (a, b) in F_ROWS[(i, j)]:
        m += 0.5 * sgn * g_basis(a, b)
    return m


_F_STACK = np.stack([f_basis(i, j) for i, j in G_PAIRS])

_CONJ = np.diag([1.0, -1, -1, -1, -1, -1, -1, -1])


def alpha(x: np.ndarray) -> np.ndarray:
    """Conjugation involution; fixes exactly so(7) inside so(8)."""
    return _CONJ @ x @ _CONJ


def beta(x: np.ndarray) -> np.ndarray:
    """Linear extension of G_ij -> F_ij in the G coordinate expansion."""
    coords = -0.5 * np.einsum("ab,iba->i", x, _G_STACK)
    return np.einsum("i,iab->ab", coords, _F_STACK)


def gamma(x: np.ndarray) -> np.ndarray:
    """gamma = beta . alpha."""
    return beta(alpha(x))


_TRIALITY_MAPS = {"alpha": alpha, "beta": beta, "gamma": gamma}


def apply_triality(name: str, x: np.ndarray) -> np.ndarray:
    """Apply one of the triality maps 'alpha', 'beta' or 'gamma'."""
    try:
        fn = _TRIALITY_MAPS[name]
    except KeyError:
        raise ValueError(f"unknown triality map {name!r}") from None
    return fn(x)


@dataclass(frozen=True)
class NamedSubalgebra:
    """A bracket-closed subalgebra with an orthonormal basis."""

    name: str
    basis: np.ndarray  # shape (dim, 8, 8)
    dim: int

    @property
    def subspace(self) -> Subspace:
        return Subspace(self.basis, self.dim)


SUBALGEBRA_DIMS = {
    "g2": 14,
    "su3": 8,
    "so4_g2": 6,
    "u3": 9,
    "so3_so4": 9,
    "so7": 21,
}


def _subalgebra_generators(name: str) -> list[np.ndarray]:
    traceless = lambda i: [v_elem(i, 1, -1, 0), v_elem(i, 0, 1, -1)]
    if name == "g2":
        return [m for i in range(1, 8) for m in traceless(i)]
    if name == "su3":
        return traceless(1) + [v_elem(i, 0, 1, -1) for i in range(2, 8)]
    if name == "so4_g2":
        return [m for i in (1, 2, 3) for m in traceless(i)]
    if name == "u3":
        full_v1 = [v_elem(1, 1, 0, 0), v_elem(1, 0, 1, 0), v_elem(1, 0, 0, 1)]
        return full_v1 + [v_elem(i, 0, 1, -1) for i in range(2, 8)]
    if name == "so3_so4":
        low = [g_basis(i, j) for i in (1, 2) for j in range(i + 1, 4)]
        high = [g_basis(i, j) for i in (4, 5, 6) for j in range(i + 1, 8)]
        return low + high
    if name == "so7":
        return [g_basis(i, j) for i in range(1, 8) for j in range(i + 1, 8)]
    raise ValueError(f"unknown subalgebra name {name!r}")


def bracket_closure_defect(sub) -> float:
    """Largest residual of a basis bracket outside the spanned subspace."""
    basis = np.asarray(sub.basis, dtype=float)
    if len(basis) == 0:
        return 0.0
    space = Subspace(basis, len(basis))
    worst = 0.0
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            b = bracket(basis[i], basis[j])
            coords = span_coords(b, space)
            resid = b - np.einsum("i,iab->ab", coords, basis)
            worst = max(worst, norm_g(resid))
    return worst


_SUBALGEBRA_CACHE: dict[str, NamedSubalgebra] = {}


def named_subalgebra(name: str) -> NamedSubalgebra:
    """Orthonormalized basis of one of the named subalgebras.

    Valid names: g2, su3, so4_g2, u3, so3_so4, so7.  Closure under the
    bracket and the expected dimension are verified on first construction.
    """
    cached = _SUBALGEBRA_CACHE.get(name)
    if cached is not None:
        return cached
    sub = orthonormalize(_subalgebra_generators(name))
    expected = SUBALGEBRA_DIMS[name]
    if sub.dim != expected:
        raise ArithmeticError(f"{name}: rank {sub.dim}, expected {expected}")
    defect = bracket_closure_defect(sub)
    if defect > 1e-9:
        raise ArithmeticError(f"{name}: bracket closure defect {defect:.3e}")
    out = NamedSubalgebra(name, sub.basis, sub.dim)
    _SUBALGEBRA_CACHE[name] = out
    return out


#: The order-two octonion automorphism fixing e1, e2, e3 and negating
#: e4..e7, extended by sigma(e0) = e0; its commutant in SO(7) has identity
#: component with Lie algebra so3_so4.
SIGMA = np.diag([1.0, 1, 1, 1, -1, -1, -1, -1])


@dataclass(frozen=True)
class SpinElement:
    """A pair (g1, g2) with (g1 a)(g2 b) = g2(ab) for all octonions a, b.

    g1 fixes e0 (it lies in SO(7)); g2 is the compatible action on the
    spinor copy of the octonions.  Pairs compose and invert componentwise.
    """

    g1: np.ndarray
    g2: np.ndarray

    def compose(self, other: "SpinElement") -> "SpinElement":
        return SpinElement(self.g1 @ other.g1, self.g2 @ other.g2)

    def __matmul__(self, other: "SpinElement") -> "SpinElement":
        return self.compose(other)

    def inverse(self) -> "SpinElement":
        return SpinElement(self.g1.T.copy(), self.g2.T.copy())

    @classmethod
    def identity(cls) -> "SpinElement":
        return cls(np.eye(8), np.eye(8))


def spin_lift_exp(x: np.ndarray, t: float) -> SpinElement:
    """Lift of the one-parameter subgroup exp(tX), X in so(7).

    Returns (exp tX, exp t gamma(X)).  Raises when X is not fixed by
    alpha, i.e. not in so(7).
    """
    defect = float(np.abs(alpha(x) - x).max())
    if defect > 1e-10:
        raise ValueError(f"generator is not in so(7) (alpha defect {defect:.3e})")
    return SpinElement(expm(x, t), expm(gamma(x), t))


def is_automorphism(g: np.ndarray, tol: float = 1e-9) -> bool:
    """True when g preserves the octonion product on all basis pairs."""
    g = np.asarray(g, dtype=float)
    ortho_defect = float(np.abs(g.T @ g - np.eye(8)).max())
    if ortho_defect > tol:
        raise ValueError(f"matrix is not orthogonal (defect {ortho_defect:.3e})")
    lhs = np.einsum("abk,ai,bj->ijk", MUL_TENSOR, g, g)
    rhs = np.transpose(g[:, INDEX], (1, 2, 0)) * SIGN[:, :, None]
    return float(np.abs(lhs - rhs).max()) <= tol


def rp7_invariant(p: SpinElement) -> float:
    """|projection of e0 onto the line through g2(e0)| = |<g2 e0, e0>|.

    Constant along products h . g(t) . k of lifted g2 elements around a
    fixed middle factor, where it equals |cos| of the section angle.
    """
    return float(abs(p.g2[0, 0]))
