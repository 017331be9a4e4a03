"""Shared helpers for the test suite."""

import numpy as np

from g2orbits.linalg import expm, norm_g
from g2orbits.triality import named_subalgebra, spin_lift_exp


def random_skew(rng, scale=1.0):
    m = rng.normal(size=(8, 8)) * scale
    return m - m.T


def random_g2_matrix(rng):
    g2 = named_subalgebra("g2")
    coeffs = rng.normal(size=g2.dim)
    gen = np.einsum("i,iab->ab", coeffs, g2.basis)
    return gen / norm_g(gen)


def random_lifted_g2(rng):
    return spin_lift_exp(random_g2_matrix(rng), rng.uniform(0.0, np.pi))


def random_g2_group_element(rng):
    return expm(random_g2_matrix(rng), rng.uniform(0.0, np.pi))


def raw_shape_matrix(frame, normal):
    """Unsymmetrized shape operator matrix from a frame's lifts."""
    plus = np.einsum("ba,jbc,cd->jad", frame.x, frame.lift_h, frame.x) + frame.lift_k
    comm = np.einsum("jab,bc->jac", plus, normal) - np.einsum(
        "ab,jbc->jac", normal, plus
    )
    return 0.25 * np.einsum("iab,jba->ij", frame.tangent.basis, comm)
