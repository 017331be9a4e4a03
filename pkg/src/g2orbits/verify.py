"""Self-checks of the algebraic layer, grouped for reporting.

Each check returns a :class:`CheckResult`; :func:`run_all` bundles the
groups the command line surface prints.  The identity groups mirror the
load-bearing algebraic facts: the basis multiplication contract, the
composition law, the bracket rules among the V subspaces, the zeta bracket
rules, the triality involutions with their fixed subalgebras, and the
named subalgebra dimensions with bracket closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import linalg as la
from . import octonion as oc
from . import triality as tri


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(name, bool(passed), detail)


def check_cayley_contract() -> CheckResult:
    """All 64 basis products: unit, squares, anticommutativity, line partition."""
    ok = True
    for i in range(8):
        ei = oc.basis_element(i)
        ok &= np.array_equal(oc.oct_mul(oc.basis_element(0), ei), ei)
        ok &= np.array_equal(oc.oct_mul(ei, oc.basis_element(0)), ei)
    for i in range(1, 8):
        ei = oc.basis_element(i)
        ok &= np.array_equal(oc.oct_mul(ei, ei), -oc.basis_element(0))
        for j in range(1, 8):
            if i == j:
                continue
            pij = oc.oct_mul(ei, oc.basis_element(j))
            pji = oc.oct_mul(oc.basis_element(j), ei)
            ok &= np.array_equal(pij, -pji)
            k = int(np.argmax(np.abs(pij)))
            ok &= 1 <= k <= 7 and abs(abs(pij[k]) - 1.0) == 0.0
    pairs = sorted(
        tuple(sorted(p))
        for line in oc.FANO_LINES
        for p in ((line[0], line[1]), (line[1], line[2]), (line[0], line[2]))
    )
    ok &= pairs == sorted(
        (i, j) for i in range(1, 8) for j in range(i + 1, 8)
    )
    return _result("octonion basis product contract", ok, "64 products + line partition")


def check_composition_law(rng, trials: int = 1000, tol: float = 1e-12) -> CheckResult:
    worst = 0.0
    for _ in range(trials):
        a = rng.normal(size=8)
        b = rng.normal(size=8)
        lhs = oc.oct_norm(oc.oct_mul(a, b))
        rhs = oc.oct_norm(a) * oc.oct_norm(b)
        worst = max(worst, abs(lhs - rhs) / rhs)
    return _result(
        "composition law |xy| = |x||y|",
        worst <= tol,
        f"{trials} random pairs, worst relative defect {worst:.2e}",
    )


def _v_stack(axis: int, grid: np.ndarray) -> np.ndarray:
    basis = np.stack(
        [la.v_elem(axis, 1, 0, 0), la.v_elem(axis, 0, 1, 0), la.v_elem(axis, 0, 0, 1)]
    )
    return np.einsum("gp,pab->gab", grid, basis)


def check_v_bracket_rules() -> CheckResult:
    """The nine bracket rules, exact on the full {-2..2}^3 coefficient grid."""
    grid = np.array(list(product((-2.0, -1.0, 0.0, 1.0, 2.0), repeat=3)))
    exact = True
    for i, j, k, terms in la.V_BRACKET_RULES:
        vi = _v_stack(i, grid)
        vj = _v_stack(j, grid)
        lhs = np.einsum("gab,hbc->ghac", vi, vj) - np.einsum(
            "hab,gbc->ghac", vj, vi
        )
        tensor = np.zeros((3, 3, 3))
        for m, term in enumerate(terms):
            for sgn, p, q in term:
                tensor[m, p, q] += sgn
        out_coeffs = np.einsum("gp,hq,mpq->ghm", grid, grid, tensor)
        basis_k = np.stack(
            [la.v_elem(k, 1, 0, 0), la.v_elem(k, 0, 1, 0), la.v_elem(k, 0, 0, 1)]
        )
        rhs = np.einsum("ghm,mab->ghab", out_coeffs, basis_k)
        exact &= np.array_equal(lhs, rhs)
    return _result(
        "V subspace bracket rules",
        exact,
        f"9 rules x {len(grid) ** 2} coefficient pairs, exact equality",
    )


def check_zeta_bracket_rules() -> CheckResult:
    """The six zeta bracket rules on the traceless coefficient sublattice."""
    grid = np.array(
        [c for c in product((-2.0, -1.0, 0.0, 1.0, 2.0), repeat=3) if sum(c) == 0.0]
    )
    z4 = la.zeta(4)
    exact = True
    for slot, i, j, selector in la.ZETA_BRACKET_RULES:
        scalars = grid @ np.asarray(selector, dtype=float)
        if slot == "zeta_first":
            fixed, moving = la.zeta(i), _v_stack(j, grid)
            lhs = np.einsum("ab,gbc->gac", fixed, moving) - np.einsum(
                "gab,bc->gac", moving, fixed
            )
        else:
            fixed, moving = la.zeta(j), _v_stack(i, grid)
            lhs = np.einsum("gab,bc->gac", moving, fixed) - np.einsum(
                "ab,gbc->gac", fixed, moving
            )
        rhs = np.einsum("g,ab->gab", scalars, z4)
        exact &= np.array_equal(lhs, rhs)
    return _result(
        "zeta bracket rules",
        exact,
        f"6 rules x {len(grid)} traceless coefficient triples, exact equality",
    )


def check_triality_involutions(rng, tol: float = 1e-10) -> CheckResult:
    """alpha^2 = beta^2 = id, bracket preservation, fixed-set dimensions."""
    worst = 0.0
    for _ in range(25):
        x = rng.normal(size=(8, 8))
        x = x - x.T
        worst = max(worst, float(np.abs(tri.alpha(tri.alpha(x)) - x).max()))
        worst = max(worst, float(np.abs(tri.beta(tri.beta(x)) - x).max()))
        y = rng.normal(size=(8, 8))
        y = y - y.T
        for phi in (tri.alpha, tri.beta, tri.gamma):
            worst = max(
                worst,
                float(
                    np.abs(
                        phi(la.bracket(x, y)) - la.bracket(phi(x), phi(y))
                    ).max()
                ),
            )
    g_stack = tri._G_STACK
    coords = lambda m: -0.5 * np.einsum("ab,iba->i", m, g_stack)
    beta_mat = np.stack([coords(tri.beta(g)) for g in g_stack], axis=1)
    gamma_mat = np.stack([coords(tri.gamma(g)) for g in g_stack], axis=1)
    alpha_mat = np.stack([coords(tri.alpha(g)) for g in g_stack], axis=1)
    eye = np.eye(28)
    dim_so7 = 28 - np.linalg.matrix_rank(alpha_mat - eye, tol=1e-9)
    dim_g2 = 28 - np.linalg.matrix_rank(
        np.vstack([beta_mat - eye, gamma_mat - eye]), tol=1e-9
    )
    ok = worst <= tol and dim_so7 == 21 and dim_g2 == 14
    return _result(
        "triality involutions and fixed sets",
        ok,
        f"worst identity defect {worst:.2e}, dim Fix(alpha) = {dim_so7}, "
        f"dim Fix(beta) & Fix(gamma) = {dim_g2}",
    )


def check_subalgebras() -> CheckResult:
    """Dimensions and bracket closure of the six named subalgebras."""
    details = []
    ok = True
    for name, expected in sorted(tri.SUBALGEBRA_DIMS.items()):
        sub = tri.named_subalgebra(name)
        defect = tri.bracket_closure_defect(sub)
        ok &= sub.dim == expected and defect < 1e-9
        details.append(f"{name}:{sub.dim} ({defect:.1e})")
    return _result("named subalgebra dimensions and closure", ok, ", ".join(details))


def run_all(seed: int = 0) -> list[CheckResult]:
    """Run every check group with a deterministic seed."""
    rng = np.random.default_rng(seed)
    return [
        check_cayley_contract(),
        check_composition_law(rng),
        check_v_bracket_rules(),
        check_zeta_bracket_rules(),
        check_triality_involutions(rng),
        check_subalgebras(),
    ]
