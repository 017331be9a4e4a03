"""Dense 8x8 skew-symmetric matrix kernel for the rotation Lie algebras.

Provides the standard basis G_ij of so(8) acting on octonion coefficient
vectors, the seven 3-parameter V-elements V_i(lambda, mu, nu) whose
traceless members span the derivation algebra g2, the matrix bracket, the
invariant inner product <X, Y> = -tr(XY)/2, a matrix exponential, pivoted
Gram-Schmidt orthonormalization with numerical rank detection, orthogonal
complements, and a cyclic Jacobi eigensolver with eigenvalue clustering.

Everything operates on plain numpy arrays and is safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_SQRT2 = np.sqrt(2.0)


class NotASubspaceError(ValueError):
    """Raised when a claimed subspace fails its containment check."""


def g_basis(i: int, j: int) -> np.ndarray:
    """The so(8) basis matrix G_ij: sends e_i to e_j, e_j to -e_i, rest to 0.

    ``g_basis(j, i)`` is the negative of ``g_basis(i, j)``.
    """
    if i == j or not (0 <= i <= 7 and 0 <= j <= 7):
        raise ValueError(f"invalid G basis indices ({i}, {j})")
    m = np.zeros((8, 8))
    m[j, i] = 1.0
    m[i, j] = -1.0
    return m


#: Signed index pairs defining V_i(lambda, mu, nu) as a combination of three
#: G matrices: the entry for axis i lists (sign, (a, b)) for the lambda, mu
#: and nu terms in that order.
V_TERMS = {
    1: ((+1, (2, 3)), (+1, (4, 5)), (+1, (6, 7))),
    2: ((-1, (1, 3)), (-1, (4, 6)), (+1, (5, 7))),
    3: ((+1, (1, 2)), (+1, (4, 7)), (+1, (5, 6))),
    4: ((-1, (1, 5)), (+1, (2, 6)), (-1, (3, 7))),
    5: ((+1, (1, 4)), (-1, (2, 7)), (-1, (3, 6))),
    6: ((-1, (1, 7)), (-1, (2, 4)), (+1, (3, 5))),
    7: ((+1, (1, 6)), (+1, (2, 5)), (+1, (3, 4))),
}


def v_elem(axis: int, lam: float, mu: float, nu: float) -> np.ndarray:
    """The so(7) element V_axis(lam, mu, nu).

    Members with lam + mu + nu = 0 lie in g2; V_axis(1, 1, 1) is the
    zeta element orthogonal to g2 inside the span of the axis.
    """
    if axis not in V_TERMS:
        raise ValueError(f"V axis must be 1..7, got {axis}")
    coeffs = (lam, mu, nu)
    m = np.zeros((8, 8))
    for c, (sgn, (a, b)) in zip(coeffs, V_TERMS[axis]):
        m += c * sgn * g_basis(a, b)
    return m


def zeta(axis: int) -> np.ndarray:
    """zeta_axis = V_axis(1, 1, 1)."""
    return v_elem(axis, 1.0, 1.0, 1.0)


#: Bracket composition rules among the V subspaces, [V_i(c), V_j(c')] =
#: V_k(...): each rule is (i, j, k, terms) where terms gives, for each of
#: the three output coefficients, a sum of signed products c[p] * c'[q]
#: encoded as (sign, p, q) with 0 = lambda, 1 = mu, 2 = nu.
V_BRACKET_RULES = (
    (1, 4, 5, (((+1, 1, 0),), ((-1, 0, 2), (-1, 2, 1)), ((-1, 0, 1), (-1, 2, 2)))),
    (1, 5, 4, (((-1, 1, 0),), ((+1, 0, 2), (+1, 2, 1)), ((+1, 0, 1), (+1, 2, 2)))),
    (4, 5, 1, (((-1, 1, 2), (-1, 2, 1)), ((+1, 0, 0),), ((-1, 1, 1), (-1, 2, 2)))),
    (2, 4, 6, (((+1, 0, 2), (+1, 2, 0)), ((-1, 1, 1),), ((+1, 0, 0), (+1, 2, 2)))),
    (2, 6, 4, (((-1, 0, 2), (-1, 2, 0)), ((+1, 1, 1),), ((-1, 0, 0), (-1, 2, 2)))),
    (4, 6, 2, (((+1, 0, 2), (+1, 2, 0)), ((-1, 1, 1),), ((+1, 0, 0), (+1, 2, 2)))),
    (3, 4, 7, (((-1, 0, 1), (-1, 2, 0)), ((-1, 0, 0), (-1, 2, 1)), ((+1, 1, 2),))),
    (3, 7, 4, (((+1, 0, 1), (+1, 2, 0)), ((+1, 0, 0), (+1, 2, 1)), ((-1, 1, 2),))),
    (4, 7, 3, (((-1, 0, 1), (-1, 1, 0)), ((+1, 2, 2),), ((-1, 0, 0), (-1, 1, 1)))),
)

#: Brackets against zeta elements that land on multiples of zeta_4, valid
#: when the free coefficients sum to zero.  ``slot`` says which factor is
#: the zeta element; the multiple of zeta_4 is selector . coefficients.
ZETA_BRACKET_RULES = (
    ("zeta_first", 1, 5, (-1, 0, 0)),
    ("zeta_second", 1, 5, (0, -1, 0)),
    ("zeta_first", 2, 6, (0, +1, 0)),
    ("zeta_second", 2, 6, (0, +1, 0)),
    ("zeta_first", 3, 7, (0, 0, -1)),
    ("zeta_second", 3, 7, (0, -1, 0)),
)


def v_bracket_coeffs(i: int, j: int, ci, cj):
    """Predicted (k, coefficients) for [V_i(ci), V_j(cj)] per V_BRACKET_RULES."""
    for a, b, k, terms in V_BRACKET_RULES:
        if (a, b) == (i, j):
            out = [sum(s * ci[p] * cj[q] for s, p, q in t) for t in terms]
            return k, tuple(out)
    raise ValueError(f"no bracket rule recorded for axes ({i}, {j})")


def bracket(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Matrix commutator [X, Y] = XY - YX."""
    return x @ y - y @ x


def inner_g(x: np.ndarray, y: np.ndarray) -> float:
    """Invariant inner product -tr(XY)/2, positive definite on skew matrices."""
    return -0.5 * float(np.einsum("ab,ba->", x, y))


def norm_g(x: np.ndarray) -> float:
    """Norm induced by :func:`inner_g`."""
    return float(np.sqrt(max(inner_g(x, x), 0.0)))


def expm(x: np.ndarray, t: float = 1.0) -> np.ndarray:
    """exp(tX) by scaling and squaring of a truncated power series.

    Accurate to ~1e-13 for ||tX|| up to a few tens; for skew-symmetric X
    the result is orthogonal with determinant 1.
    """
    a = t * np.asarray(x, dtype=float)
    n = a.shape[0]
    nrm = np.linalg.norm(a)
    squarings = 0
    if nrm > 0.5:
        squarings = int(np.ceil(np.log2(nrm / 0.5)))
        a = a / (2.0 ** squarings)
    out = np.eye(n)
    term = np.eye(n)
    for k in range(1, 40):
        term = term @ a / k
        out = out + term
        if np.linalg.norm(term) < 1e-17:
            break
    for _ in range(squarings):
        out = out @ out
    return out


@dataclass(frozen=True)
class Subspace:
    """An orthonormal basis (under inner_g) together with its dimension."""

    basis: np.ndarray  # shape (dim, 8, 8)
    dim: int


def _to_rows(mats: np.ndarray) -> np.ndarray:
    # Row coordinates in which the Euclidean dot product equals inner_g.
    return mats.reshape(mats.shape[0], -1) / _SQRT2


def _from_rows(rows: np.ndarray) -> np.ndarray:
    return (rows * _SQRT2).reshape(-1, 8, 8)


def orthonormalize(generators, rel_tol: float = 1e-9, abs_tol: float = 0.0) -> Subspace:
    """Pivoted Gram-Schmidt under inner_g with numerical rank detection.

    Residual vectors whose norm falls below ``rel_tol`` times the largest
    generator norm (or below ``abs_tol``) are discarded; ``dim`` is the
    number retained.
    """
    mats = np.asarray(list(generators), dtype=float)
    if mats.size == 0:
        return Subspace(np.zeros((0, 8, 8)), 0)
    rows = _to_rows(mats)
    norms0 = np.linalg.norm(rows, axis=1)
    thresh = max(rel_tol * norms0.max(), abs_tol)
    if norms0.max() == 0.0:
        return Subspace(np.zeros((0, 8, 8)), 0)

    residual = rows.copy()
    accepted: list[np.ndarray] = []
    alive = np.ones(len(rows), dtype=bool)
    while alive.any():
        norms = np.where(alive, np.linalg.norm(residual, axis=1), -1.0)
        p = int(np.argmax(norms))
        if norms[p] <= thresh:
            break
        q = residual[p] / norms[p]
        if accepted:
            # One re-orthogonalization pass keeps the basis clean near the
            # rank threshold.
            qmat = np.array(accepted)
            q = q - qmat.T @ (qmat @ q)
            q = q / np.linalg.norm(q)
        accepted.append(q)
        alive[p] = False
        proj = residual[alive] @ q
        residual[alive] -= np.outer(proj, q)
    if not accepted:
        return Subspace(np.zeros((0, 8, 8)), 0)
    basis = _from_rows(np.array(accepted))
    return Subspace(basis, len(accepted))


def span_coords(x: np.ndarray, sub: Subspace) -> np.ndarray:
    """Coefficients of the projection of ``x`` onto ``sub``."""
    if sub.dim == 0:
        return np.zeros(0)
    return np.einsum("ab,iba->i", x, sub.basis) * -0.5


def span_project(x: np.ndarray, sub: Subspace) -> np.ndarray:
    """Orthogonal projection of ``x`` onto ``sub``."""
    if sub.dim == 0:
        return np.zeros_like(x)
    return np.einsum("i,iab->ab", span_coords(x, sub), sub.basis)


def complement(sub, ambient, tol: float = 1e-9) -> Subspace:
    """Orthogonal complement of ``sub`` inside ``ambient``.

    Both arguments need orthonormal ``basis`` / ``dim`` attributes.  Raises
    :class:`NotASubspaceError` when a basis vector of ``sub`` sticks out of
    ``ambient`` by more than ``tol``.
    """
    arows = _to_rows(np.asarray(ambient.basis, dtype=float))
    if getattr(sub, "dim", 0) == 0:
        return Subspace(np.array(ambient.basis, copy=True), ambient.dim)
    srows = _to_rows(np.asarray(sub.basis, dtype=float))
    overshoot = srows - (srows @ arows.T) @ arows
    worst = float(np.linalg.norm(overshoot, axis=1).max())
    if worst > tol:
        raise NotASubspaceError(
            f"claimed subspace leaves the ambient space (residual {worst:.3e})"
        )
    residual = arows - (arows @ srows.T) @ srows
    out = orthonormalize(_from_rows(residual), rel_tol=0.0, abs_tol=tol)
    expected = ambient.dim - sub.dim
    if out.dim != expected:
        raise ArithmeticError(
            f"complement dimension {out.dim} != {ambient.dim} - {sub.dim}"
        )
    return out


def sym_eigen(s: np.ndarray, cluster_tol: float = 1e-6) -> list[tuple[float, int]]:
    """Eigenvalues of a symmetric matrix, clustered with multiplicities.

    Cyclic Jacobi rotations; convergence when the off-diagonal Frobenius
    norm drops below 1e-12 relative to the input scale.  Eigenvalues are
    sorted ascending and adjacent values within ``cluster_tol`` of each
    other are merged into one (mean value, summed multiplicity).
    """
    a = np.asarray(s, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    defect = float(np.abs(a - a.T).max(initial=0.0))
    if defect > 1e-9:
        raise ValueError(f"matrix is not symmetric (defect {defect:.3e})")
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    if n == 0:
        return []
    scale = max(1.0, float(np.linalg.norm(a)))
    target = 1e-12 * scale

    for _ in range(60):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-30 * scale:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                tval = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if tval == 0.0:
                    tval = 1.0  # theta == 0 means a 45 degree rotation
                c = 1.0 / np.sqrt(tval * tval + 1.0)
                sn = tval * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - sn * col_q
                a[:, q] = sn * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - sn * row_q
                a[q, :] = sn * row_p + c * row_q
    else:
        raise ArithmeticError("Jacobi eigensolver failed to converge")

    values = np.sort(np.diag(a))
    clusters: list[tuple[float, int]] = []
    start = 0
    for idx in range(1, n + 1):
        if idx == n or values[idx] - values[idx - 1] > cluster_tol:
            group = values[start:idx]
            clusters.append((float(group.mean()), len(group)))
            start = idx
    return clusters
