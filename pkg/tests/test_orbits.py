"""Orbit frames, shape operators, spectra and the reflection isometries."""

import numpy as np
import pytest

from g2orbits.linalg import inner_g, v_elem, zeta
from g2orbits.orbits import (
    SingularOrbitError,
    action_spec,
    is_austere,
    mean_curvature,
    orbit_frame,
    shape_operator,
    shape_operator_from_lifts,
    spectrum_report,
    unit_normal,
    verify_reflection,
)

from util import raw_shape_matrix

ALL_TYPES = ("II", "III", "IV", "V")


class TestActionSpecs:
    def test_einstein_constants(self):
        assert action_spec("II").einstein_constant == 8.0
        for ty in ("III", "IV", "V"):
            assert action_spec(ty).einstein_constant == 10.0

    def test_subgroup_assignments(self):
        assert (action_spec("II").h.name, action_spec("II").k.name) == ("so4_g2", "su3")
        assert (action_spec("III").h.name, action_spec("III").k.name) == ("g2", "g2")
        assert (action_spec("IV").h.name, action_spec("IV").k.name) == ("so3_so4", "g2")
        assert (action_spec("V").h.name, action_spec("V").k.name) == ("u3", "g2")

    def test_section_ratios(self):
        assert [action_spec(ty).section_ratio for ty in ALL_TYPES] == [2.0, 1.5, 3.0, 1.5]

    def test_unknown_type(self):
        with pytest.raises(ValueError):
            action_spec("VI")


class TestOrbitDimensions:
    @pytest.mark.parametrize(
        "ty,samples",
        [
            ("II", [(0.0, 10), (0.35, 13), (0.8, 13), (1.2, 13), (np.pi / 2, 11)]),
            ("III", [(0.0, 14), (0.5, 20), (0.9, 20), (1.4, 20), (np.pi / 2, 20)]),
            ("IV", [(0.0, 17), (0.8, 20), (1.6, 20), (2.4, 20), (np.pi, 17)]),
            ("V", [(0.0, 15), (0.4, 20), (0.8, 20), (1.3, 20), (np.pi / 2, 19)]),
        ],
    )
    def test_dimension_profile(self, ty, samples):
        spec = action_spec(ty)
        for t, dim in samples:
            frame = orbit_frame(spec, t)
            assert frame.orbit_dim == dim
            assert frame.tangent.dim + frame.normal.dim == spec.ambient.dim
            assert frame.lift_residual < 1e-9


class TestUnitNormal:
    def test_type_ii_canonical(self):
        n = unit_normal(action_spec("II"), 0.5)
        expected = v_elem(4, 2, -1, -1) / np.sqrt(6.0)
        assert np.abs(n - expected).max() < 1e-9

    def test_type_iii_canonical(self):
        n = unit_normal(action_spec("III"), 0.7)
        assert np.abs(n - zeta(4) / np.sqrt(3.0)).max() < 1e-9

    def test_singular_orbit_error(self):
        with pytest.raises(SingularOrbitError) as err:
            unit_normal(action_spec("II"), 0.0)
        assert err.value.codimension == 4


class TestShapeOperator:
    def test_raw_symmetry_defect(self, rng):
        # 50 random (type, t) samples away from the blowup endpoints
        for _ in range(50):
            ty = rng.choice(ALL_TYPES)
            spec = action_spec(ty)
            lo, hi = spec.t_range
            t = rng.uniform(lo + 0.15, hi - 0.15)
            frame = orbit_frame(spec, t)
            n = unit_normal(spec, t, frame=frame)
            raw = raw_shape_matrix(frame, n)
            assert np.abs(raw - raw.T).max() < 1e-9

    def test_rejects_bad_normal(self):
        spec = action_spec("III")
        with pytest.raises(ValueError):
            shape_operator(spec, 0.8, zeta(4))  # not unit length
        frame = orbit_frame(spec, 0.8)
        with pytest.raises(ValueError):
            shape_operator(spec, 0.8, frame.tangent.basis[0], frame=frame)

    def test_lift_independence(self, rng):
        # Perturb the least-squares lifts along the solution space's null
        # directions; the shape operator must not move.
        for ty, t in [("II", 0.6), ("III", 1.0), ("V", 0.9)]:
            spec = action_spec(ty)
            frame = orbit_frame(spec, t)
            n = unit_normal(spec, t, frame=frame)
            base = shape_operator(spec, t, n, frame=frame)

            moved_h = np.einsum("ba,ibc,cd->iad", frame.x, spec.h.basis, frame.x)
            columns = np.concatenate(
                [moved_h.reshape(spec.h.dim, -1), -spec.k.basis.reshape(spec.k.dim, -1)],
                axis=0,
            ).T
            _, sv, vt = np.linalg.svd(columns, full_matrices=True)
            null = vt[np.sum(sv > 1e-9 * sv[0]):]
            assert len(null) > 0

            lift_h = frame.lift_h.copy()
            lift_k = frame.lift_k.copy()
            for i in range(frame.tangent.dim):
                z = null.T @ rng.normal(size=len(null))
                lift_h[i] += np.einsum("p,pab->ab", z[: spec.h.dim], spec.h.basis)
                lift_k[i] += np.einsum("p,pab->ab", z[spec.h.dim:], spec.k.basis)
            perturbed = shape_operator_from_lifts(
                frame.x, frame.tangent.basis, lift_h, lift_k, n
            )
            assert np.abs(perturbed - base).max() < 1e-9

    def test_frame_independence(self, rng):
        # Rotating the orthonormal tangent basis must permute nothing but
        # the matrix representation; eigenvalues are invariant.
        spec = action_spec("IV")
        t = 1.1
        frame = orbit_frame(spec, t)
        n = unit_normal(spec, t, frame=frame)
        base = shape_operator(spec, t, n, frame=frame)

        m = frame.tangent.dim
        q, _ = np.linalg.qr(rng.normal(size=(m, m)))
        rotated = np.einsum("ij,jab->iab", q, frame.tangent.basis)
        moved_h = np.einsum("ba,ibc,cd->iad", frame.x, spec.h.basis, frame.x)
        columns = np.concatenate(
            [moved_h.reshape(spec.h.dim, -1), -spec.k.basis.reshape(spec.k.dim, -1)],
            axis=0,
        ).T
        sol, *_ = np.linalg.lstsq(columns, rotated.reshape(m, -1).T, rcond=None)
        lift_h = np.einsum("pi,pab->iab", sol[: spec.h.dim], spec.h.basis)
        lift_k = np.einsum("pi,pab->iab", sol[spec.h.dim:], spec.k.basis)
        rotated_shape = shape_operator_from_lifts(frame.x, rotated, lift_h, lift_k, n)
        ours = np.sort(np.linalg.eigvalsh(rotated_shape))
        ref = np.sort(np.linalg.eigvalsh(base))
        assert np.abs(ours - ref).max() < 1e-9

    def test_type_ii_block_structure(self):
        # The tangent space splits into shape-invariant blocks of
        # dimensions 4, 4, 4, 1.
        spec = action_spec("II")
        t = 0.7
        frame = orbit_frame(spec, t)
        n = unit_normal(spec, t, frame=frame)
        s = shape_operator(spec, t, n, frame=frame)
        blocks = []
        for i in (1, 2, 3):
            blocks.append(
                [
                    v_elem(i, 0, 1, -1),
                    v_elem(i, 2, -1, -1),
                    v_elem(i + 4, 0, 1, -1),
                    v_elem(i + 4, 2, -1, -1),
                ]
            )
        blocks.append([v_elem(4, 0, 1, -1)])
        dims = []
        for block in blocks:
            coords = np.array(
                [[inner_g(mat, u) for u in frame.tangent.basis] for mat in block]
            )
            q, _ = np.linalg.qr(coords.T)
            proj = q @ q.T
            dims.append(q.shape[1])
            assert np.abs(s @ proj - proj @ s).max() < 1e-9
        assert dims == [4, 4, 4, 1]

    def test_type_ii_characteristic_polynomial(self, rng):
        # Restricted to the second block, det(l - 2 sqrt6 S) equals
        # (l^2 + 4 cot t l - 3)(l^2 - 4 tan t l - 3).
        spec = action_spec("II")
        probes = np.array([-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0, 4.0])
        for t in rng.uniform(0.15, np.pi / 2 - 0.15, size=20):
            frame = orbit_frame(spec, t)
            n = unit_normal(spec, t, frame=frame)
            s = shape_operator(spec, t, n, frame=frame)
            block = [
                v_elem(2, 0, 1, -1),
                v_elem(2, 2, -1, -1),
                v_elem(6, 0, 1, -1),
                v_elem(6, 2, -1, -1),
            ]
            coords = np.array(
                [[inner_g(mat, u) for u in frame.tangent.basis] for mat in block]
            )
            q, _ = np.linalg.qr(coords.T)
            restricted = 2 * np.sqrt(6.0) * (q.T @ s @ q)
            cot, tan = np.cos(t) / np.sin(t), np.tan(t)
            for lam in probes:
                det = np.linalg.det(lam * np.eye(4) - restricted)
                expected = (lam**2 + 4 * cot * lam - 3) * (lam**2 - 4 * tan * lam - 3)
                assert abs(det - expected) < 1e-8 * max(1.0, abs(expected))


class TestMeanCurvature:
    def test_closed_forms(self, rng):
        closed = {
            "II": lambda t: (4 * np.tan(t) - 6 / np.tan(t)) / np.sqrt(6.0),
            "III": lambda t: -3 * np.sqrt(3.0) / np.tan(t),
            "IV": lambda t: -3 * np.sqrt(3.0) / np.tan(t),
            "V": lambda t: -np.sqrt(3.0) * (1 / np.tan(2 * t) + 2 / np.tan(t)),
        }
        for ty in ALL_TYPES:
            spec = action_spec(ty)
            lo, hi = spec.t_range
            for t in rng.uniform(lo + 0.1, hi - 0.1, size=20):
                assert abs(mean_curvature(spec, t) - closed[ty](t)) < 1e-8

    def test_type_ii_trig_identity(self, rng):
        for t in rng.uniform(0.1, np.pi / 2 - 0.1, size=20):
            folded = (2 / np.sqrt(6.0)) * (
                -2 / np.tan(t) + np.tan(t) - 2 / np.tan(2 * t)
            )
            flat = (4 * np.tan(t) - 6 / np.tan(t)) / np.sqrt(6.0)
            assert abs(folded - flat) < 1e-12

    def test_type_iv_trace_value(self):
        # trace at t = pi/3 equals -3 sqrt3 cot(pi/3) = -3
        assert mean_curvature(action_spec("IV"), np.pi / 3) == pytest.approx(
            -3.0, abs=1e-10
        )


class TestSpectrumReport:
    def test_type_iii_balanced_spectrum(self):
        rep = spectrum_report(action_spec("III"), np.pi / 2)
        assert [m for _, m in rep.curvatures] == [6, 8, 6]
        values = [v for v, _ in rep.curvatures]
        assert abs(values[0] + 1 / np.sqrt(6.0)) < 1e-10
        assert abs(values[1]) < 1e-10
        assert abs(values[2] - 1 / np.sqrt(6.0)) < 1e-10
        assert rep.austere

    def test_type_ii_contains_half_angle_eigenvalue(self):
        rep = spectrum_report(action_spec("II"), np.pi / 4)
        target = np.tan(np.pi / 8) / np.sqrt(6.0)
        assert any(
            m == 1 and abs(v - target) < 1e-9 for v, m in rep.curvatures
        )

    def test_type_v_minimal_parameter(self):
        rep = spectrum_report(action_spec("V"), np.arctan(np.sqrt(5.0)))
        assert abs(rep.mean_curvature) < 1e-9

    def test_moment_identities(self, rng):
        for ty in ALL_TYPES:
            spec = action_spec(ty)
            lo, hi = spec.t_range
            rep = spectrum_report(spec, rng.uniform(lo + 0.2, hi - 0.2))
            mean = sum(v * m for v, m in rep.curvatures)
            sq = sum(v * v * m for v, m in rep.curvatures)
            assert abs(mean - rep.mean_curvature) < 1e-9
            assert abs(sq - rep.norm_sq) < 1e-9
            assert rep.s == pytest.approx(rep.t / spec.section_ratio)

    def test_near_singular_guard(self):
        with pytest.raises(SingularOrbitError):
            spectrum_report(action_spec("II"), 1e-8)
        with pytest.raises(SingularOrbitError):
            spectrum_report(action_spec("IV"), np.pi - 1e-7)

    def test_endpoint_allowed_for_type_iii(self):
        rep = spectrum_report(action_spec("III"), np.pi / 2)
        assert rep.orbit_dim == 20


class TestAustereTest:
    def test_zero_spectrum(self):
        assert is_austere([(0.0, 5)])

    def test_balanced(self):
        assert is_austere([(-1.0, 2), (0.0, 3), (1.0, 2)])

    def test_multiplicity_mismatch(self):
        assert not is_austere([(-1.0, 1), (0.0, 3), (1.0, 2)])

    def test_unbalanced_value(self):
        assert not is_austere([(-1.0, 1), (2.0, 1)])


class TestReflections:
    def test_type_iii(self):
        assert verify_reflection(action_spec("III"))

    def test_type_iv(self):
        assert verify_reflection(action_spec("IV"))

    def test_unsupported_types(self):
        for ty in ("II", "V"):
            with pytest.raises(ValueError):
                verify_reflection(action_spec(ty))


class TestSingularOrbits:
    def test_type_iii_totally_geodesic(self):
        spec = action_spec("III")
        frame = orbit_frame(spec, 0.0)
        assert frame.normal.dim == 7
        for n in frame.normal.basis:
            s = shape_operator(spec, 0.0, n, frame=frame)
            assert np.abs(s).max() < 1e-9

    @pytest.mark.parametrize("t", [0.0, np.pi / 2])
    def test_type_ii_not_totally_geodesic(self, t):
        spec = action_spec("II")
        frame = orbit_frame(spec, t)
        worst = max(
            np.abs(shape_operator(spec, t, n, frame=frame)).max()
            for n in frame.normal.basis
        )
        assert worst > 1e-3
