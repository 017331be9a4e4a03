"""Orbit geometry of the four two-sided actions at points of the geodesic.

Each configured action is a product group H x K acting on an ambient
compact group (G2 or SO(7)) by (h, k) . x = h x k^{-1}.  Along the fixed
one-parameter geodesic g(t), the orbit tangent space translated back to
the identity is Ad(g(t))^{-1} h + k.  A tangent vector u is realized by a
Killing field through a lift, a pair (X, Y) in h x k with

    Ad(g(t))^{-1} X - Y = u,

and the shape operator in a unit normal n comes from the bi-invariant
Levi-Civita connection:

    S_ij = -1/2 < [Ad^{-1} X_i - Y_i, Ad^{-1} X_j + Y_j], n >.

The value is independent of the lift choice (the second fundamental form
is tensorial); lifts are produced by least squares over the h + k
coefficient space and any exact solution is acceptable.

The four action types:

    II   SO(4) x SU(3) on G2,    geodesic generator V4(1,-1,0)
    III  G2 x G2 on SO(7),       geodesic generator V4(1,0,1)
    IV   (SO(3)xSO(4)) x G2 on SO(7), geodesic generator V4(1,0,0)
    V    U(3) x G2 on SO(7),     geodesic generator V4(0,1,1)

with unit normals V4(2,-1,-1)/sqrt(6) for II and V4(1,1,1)/sqrt(3) for
III, IV, V at principal parameters, and section reparameterization
t = section_ratio * s.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import (
    Subspace,
    complement,
    expm,
    inner_g,
    norm_g,
    orthonormalize,
    sym_eigen,
    v_elem,
    zeta,
)
from .triality import (
    SIGMA,
    NamedSubalgebra,
    SpinElement,
    is_automorphism,
    named_subalgebra,
    rp7_invariant,
    spin_lift_exp,
)

ACTION_TYPES = ("II", "III", "IV", "V")


class SingularOrbitError(RuntimeError):
    """The orbit at the requested parameter is not a hypersurface."""

    def __init__(self, message: str, codimension: int):
        super().__init__(message)
        self.codimension = codimension


@dataclass(frozen=True)
class ActionSpec:
    """Static data of one action type."""

    action_type: str
    ambient: NamedSubalgebra
    einstein_constant: float
    h: NamedSubalgebra
    k: NamedSubalgebra
    geodesic_generator: np.ndarray
    section_generator: np.ndarray
    t_range: tuple[float, float]
    section_ratio: float
    singular_ts: tuple[float, ...]


@lru_cache(maxsize=None)
def action_spec(action_type: str) -> ActionSpec:
    """The configuration of one of the action types II, III, IV, V."""
    half_pi = np.pi / 2.0
    if action_type == "II":
        return ActionSpec(
            action_type="II",
            ambient=named_subalgebra("g2"),
            einstein_constant=8.0,
            h=named_subalgebra("so4_g2"),
            k=named_subalgebra("su3"),
            geodesic_generator=v_elem(4, 1, -1, 0),
            section_generator=v_elem(4, 2, -1, -1),
            t_range=(0.0, half_pi),
            section_ratio=2.0,
            singular_ts=(0.0, half_pi),
        )
    if action_type == "III":
        g2 = named_subalgebra("g2")
        return ActionSpec(
            action_type="III",
            ambient=named_subalgebra("so7"),
            einstein_constant=10.0,
            h=g2,
            k=g2,
            geodesic_generator=v_elem(4, 1, 0, 1),
            section_generator=zeta(4),
            t_range=(0.0, half_pi),
            section_ratio=1.5,
            singular_ts=(0.0,),
        )
    if action_type == "IV":
        return ActionSpec(
            action_type="IV",
            ambient=named_subalgebra("so7"),
            einstein_constant=10.0,
            h=named_subalgebra("so3_so4"),
            k=named_subalgebra("g2"),
            geodesic_generator=v_elem(4, 1, 0, 0),
            section_generator=zeta(4),
            t_range=(0.0, np.pi),
            section_ratio=3.0,
            singular_ts=(0.0, np.pi),
        )
    if action_type == "V":
        return ActionSpec(
            action_type="V",
            ambient=named_subalgebra("so7"),
            einstein_constant=10.0,
            h=named_subalgebra("u3"),
            k=named_subalgebra("g2"),
            geodesic_generator=v_elem(4, 0, 1, 1),
            section_generator=zeta(4),
            t_range=(0.0, half_pi),
            section_ratio=1.5,
            singular_ts=(0.0, half_pi),
        )
    raise ValueError(f"unknown action type {action_type!r}")


def group_element(spec: ActionSpec, t: float) -> np.ndarray:
    """The geodesic point g(t) = exp(t * geodesic generator)."""
    return expm(spec.geodesic_generator, t)


def ad_inverse(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Ad(x)^{-1} Y = x^{-1} Y x for orthogonal x."""
    return x.T @ y @ x


@dataclass(frozen=True)
class OrbitFrame:
    """Identity-translated tangent data of the orbit through g(t)."""

    t: float
    x: np.ndarray  # g(t)
    tangent: Subspace
    normal: Subspace
    lift_h: np.ndarray  # (tangent.dim, 8, 8), components in h
    lift_k: np.ndarray  # (tangent.dim, 8, 8), components in k
    lift_residual: float

    @property
    def orbit_dim(self) -> int:
        return self.tangent.dim


def orbit_frame(spec: ActionSpec, t: float) -> OrbitFrame:
    """Tangent space, normal space and Killing-field lifts at g(t).

    The tangent space is the span of { Ad(g(t))^{-1} h_i } together with
    the basis of k; the normal space is its complement in the ambient
    algebra.  Lifts solve Ad^{-1} X - Y = u by least squares and are exact
    up to ``lift_residual``.
    """
    x = group_element(spec, t)
    moved_h = np.einsum("ba,ibc,cd->iad", x, spec.h.basis, x)
    gens = np.concatenate([moved_h, spec.k.basis], axis=0)
    tangent = orthonormalize(gens)
    normal = complement(tangent, spec.ambient.subspace)

    nh, nk = spec.h.dim, spec.k.dim
    columns = np.concatenate(
        [moved_h.reshape(nh, -1), -spec.k.basis.reshape(nk, -1)], axis=0
    ).T
    rhs = tangent.basis.reshape(tangent.dim, -1).T
    sol, *_ = np.linalg.lstsq(columns, rhs, rcond=None)
    residual = float(np.abs(columns @ sol - rhs).max(initial=0.0))
    if residual > 1e-9:
        raise ArithmeticError(
            f"Killing-field lift residual {residual:.3e} at t={t}"
        )
    coeff_h, coeff_k = sol[:nh], sol[nh:]
    lift_h = np.einsum("pi,pab->iab", coeff_h, spec.h.basis)
    lift_k = np.einsum("pi,pab->iab", coeff_k, spec.k.basis)
    return OrbitFrame(t, x, tangent, normal, lift_h, lift_k, residual)


def unit_normal(spec: ActionSpec, t: float, frame: OrbitFrame | None = None) -> np.ndarray:
    """The unit normal at g(t), oriented along the section generator.

    Only defined at principal parameters (orbit codimension one); at a
    singular parameter a :class:`SingularOrbitError` carries the actual
    codimension.
    """
    if frame is None:
        frame = orbit_frame(spec, t)
    if frame.normal.dim != 1:
        raise SingularOrbitError(
            f"type {spec.action_type} orbit at t={t} has codimension "
            f"{frame.normal.dim}",
            codimension=frame.normal.dim,
        )
    n = frame.normal.basis[0]
    if inner_g(n, spec.section_generator) < 0:
        n = -n
    return n


def shape_operator_from_lifts(
    x: np.ndarray,
    vectors: np.ndarray,
    lift_h: np.ndarray,
    lift_k: np.ndarray,
    normal: np.ndarray,
    symmetry_tol: float = 1e-9,
) -> np.ndarray:
    """Shape operator matrix from explicit Killing-field lifts.

    vectors[i] must equal Ad(x)^{-1} lift_h[i] - lift_k[i]; the matrix is
    S_ij = -1/2 < [vectors_i, Ad^{-1} lift_h_j + lift_k_j], normal >,
    checked for symmetry up to ``symmetry_tol`` (relative to the entry
    scale, which grows like cot near singular parameters) and then
    symmetrized.
    """
    plus = np.einsum("ba,jbc,cd->jad", x, lift_h, x) + lift_k
    comm = np.einsum("jab,bc->jac", plus, normal) - np.einsum(
        "ab,jbc->jac", normal, plus
    )
    s = 0.25 * np.einsum("iab,jba->ij", vectors, comm)
    defect = float(np.abs(s - s.T).max(initial=0.0))
    scale = max(1.0, float(np.abs(s).max(initial=0.0)))
    if defect > symmetry_tol * scale:
        raise ArithmeticError(f"shape operator asymmetry defect {defect:.3e}")
    return 0.5 * (s + s.T)


def shape_operator(
    spec: ActionSpec,
    t: float,
    normal: np.ndarray,
    frame: OrbitFrame | None = None,
    tol: float = 1e-9,
) -> np.ndarray:
    """Shape operator of the orbit through g(t) in the direction ``normal``.

    ``normal`` must be a unit vector orthogonal to the tangent space; this
    works at singular parameters too, one normal direction at a time.
    """
    if frame is None:
        frame = orbit_frame(spec, t)
    if abs(inner_g(normal, normal) - 1.0) > tol:
        raise ValueError("normal vector is not unit length")
    tangency = max(
        abs(inner_g(normal, u)) for u in frame.tangent.basis
    ) if frame.tangent.dim else 0.0
    if tangency > tol:
        raise ValueError(f"normal is not orthogonal to the tangent space ({tangency:.3e})")
    return shape_operator_from_lifts(
        frame.x, frame.tangent.basis, frame.lift_h, frame.lift_k, normal
    )


def is_austere(curvatures, tol: float = 1e-6) -> bool:
    """True when the multiset of (value, multiplicity) pairs is symmetric
    under negation of the values, pairing values within ``tol``."""
    expanded: list[float] = []
    for value, mult in curvatures:
        expanded.extend([float(value)] * int(mult))
    expanded.sort()
    n = len(expanded)
    return all(abs(expanded[i] + expanded[n - 1 - i]) <= tol for i in range(n))


@dataclass(frozen=True)
class SpectrumReport:
    """Curvature data of a principal orbit at one parameter."""

    t: float
    s: float
    orbit_dim: int
    shape: np.ndarray
    curvatures: tuple[tuple[float, int], ...]
    mean_curvature: float
    norm_sq: float
    austere: bool
    cluster_ambiguous: bool


def _singular_distance(spec: ActionSpec, t: float) -> float:
    return min(abs(t - s) for s in spec.singular_ts)


def _require_principal_parameter(spec: ActionSpec, t: float, guard: float = 1e-6):
    if _singular_distance(spec, t) < guard:
        raise SingularOrbitError(
            f"type {spec.action_type}: t={t} is within {guard} of a singular parameter",
            codimension=-1,
        )


def _shape_at(spec: ActionSpec, t: float):
    _require_principal_parameter(spec, t)
    frame = orbit_frame(spec, t)
    normal = unit_normal(spec, t, frame=frame)
    s = shape_operator(spec, t, normal, frame=frame)
    return s, frame


def mean_curvature(spec: ActionSpec, t: float) -> float:
    """Trace of the shape operator in the canonical unit normal."""
    s, _ = _shape_at(spec, t)
    return float(np.trace(s))


def shape_norm_sq(spec: ActionSpec, t: float) -> float:
    """Squared Frobenius norm of the shape operator (sum of squared
    principal curvatures)."""
    s, _ = _shape_at(spec, t)
    return float(np.sum(s * s))


def spectrum_report(spec: ActionSpec, t: float, cluster_tol: float = 1e-6) -> SpectrumReport:
    """Full curvature report at a principal parameter.

    Eigenvalues within ``cluster_tol`` are merged; the report is flagged
    cluster-ambiguous when some gap between adjacent eigenvalues lies
    within a decade of the clustering tolerance.
    """
    s, frame = _shape_at(spec, t)
    clusters = sym_eigen(s, cluster_tol=cluster_tol)
    values = np.concatenate([[v] * m for v, m in clusters]) if clusters else np.zeros(0)
    gaps = np.diff(np.sort(values))
    ambiguous = bool(np.any((gaps > cluster_tol) & (gaps < 10.0 * cluster_tol)))
    return SpectrumReport(
        t=float(t),
        s=float(t) / spec.section_ratio,
        orbit_dim=frame.orbit_dim,
        shape=s,
        curvatures=tuple((float(v), int(m)) for v, m in clusters),
        mean_curvature=float(np.trace(s)),
        norm_sq=float(np.sum(s * s)),
        austere=is_austere(clusters, tol=cluster_tol),
        cluster_ambiguous=ambiguous,
    )


def _random_lifted_g2(rng) -> SpinElement:
    g2 = named_subalgebra("g2")
    coeffs = rng.normal(size=g2.dim)
    gen = np.einsum("i,iab->ab", coeffs, g2.basis)
    size = norm_g(gen)
    if size > 0:
        gen = gen / size
    return spin_lift_exp(gen, float(rng.uniform(0.0, np.pi)))


def verify_reflection(spec: ActionSpec, tol: float = 1e-9) -> bool:
    """Check the explicit orbit-reversing isometry of types III and IV.

    Type III uses x -> g(pi) x^{-1}: g(pi) must be an octonion
    automorphism, Ad(g(pi/2)) must fix the section generator (so the
    differential negates the normal), and the RP7 level function must
    certify that the map sends sampled orbit points into the same orbit.
    Type IV uses x -> g(pi/2) sigma g(-pi/2) x sigma: the conjugated
    element must commute with sigma and sigma must negate the section
    generator under conjugation.
    """
    if spec.action_type == "III":
        g_pi = group_element(spec, np.pi)
        if not is_automorphism(g_pi, tol):
            return False
        g_half = group_element(spec, np.pi / 2.0)
        z4 = zeta(4)
        if np.abs(g_half @ z4 @ g_half.T - z4).max() > tol:
            return False
        rng = np.random.default_rng(20240611)
        lifted_g_pi = spin_lift_exp(spec.geodesic_generator, np.pi)
        for t in (0.35, 0.8, 1.25):
            lifted_mid = spin_lift_exp(spec.geodesic_generator, t)
            point = _random_lifted_g2(rng) @ lifted_mid @ _random_lifted_g2(rng)
            image = lifted_g_pi @ point.inverse()
            level = abs(np.cos(t))
            if abs(rp7_invariant(point) - level) > tol:
                return False
            if abs(rp7_invariant(image) - level) > tol:
                return False
        return True
    if spec.action_type == "IV":
        g_half = group_element(spec, np.pi / 2.0)
        conjugated = g_half @ SIGMA @ g_half.T
        if np.abs(conjugated @ SIGMA - SIGMA @ conjugated).max() > tol:
            return False
        z4 = zeta(4)
        return bool(np.abs(SIGMA @ z4 @ SIGMA + z4).max() <= tol)
    raise ValueError(
        f"no reflection isometry is configured for action type {spec.action_type}"
    )
