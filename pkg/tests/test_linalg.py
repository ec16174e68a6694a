import numpy as np
import pytest

from qcorr.errors import DimensionMismatch, NonHermitian, NonSquare
from qcorr.linalg import (
    hermitian_eigensystem,
    hermitian_eigenvalues,
    hs_norm,
    kron,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from _oracles import eigenvalues_by_bisection


def random_hermitian(n, rng):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (z + z.conj().T) / 2


def random_state(d_a, d_b, rng):
    n = d_a * d_b
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def test_eigenvalues_match_bisection_oracle():
    # independent oracle: Sylvester inertia counts plus interval bisection
    rng = np.random.default_rng(101)
    for _ in range(6):
        h = random_hermitian(9, rng)
        w = hermitian_eigenvalues(h)
        w_oracle = eigenvalues_by_bisection(h)
        assert np.max(np.abs(w - w_oracle)) < 1e-8


def test_eigensystem_reconstructs_matrix():
    rng = np.random.default_rng(7)
    h = random_hermitian(6, rng)
    w, v = hermitian_eigensystem(h)
    assert np.allclose(v @ np.diag(w) @ v.conj().T, h, atol=1e-12)
    assert np.all(np.diff(w) >= 0)


def test_eigenvalues_reject_non_hermitian():
    with pytest.raises(NonHermitian):
        hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NonSquare):
        hermitian_eigenvalues(np.zeros((2, 3)))


def test_trace_norm_of_bell_partial_transpose():
    psi = np.zeros(4)
    psi[0] = psi[3] = 1 / np.sqrt(2)
    rho = np.outer(psi, psi)
    pt = partial_transpose(rho, 2, 2, side="A")
    w = np.sort(hermitian_eigenvalues(pt))
    assert np.allclose(w, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)
    assert abs(trace_norm(pt) - 2.0) < 1e-12


def test_partial_transpose_is_involutive_and_trace_preserving():
    rng = np.random.default_rng(3)
    for d_a, d_b in [(2, 2), (2, 3), (3, 3)]:
        rho = random_state(d_a, d_b, rng)
        for side in ("A", "B"):
            pt = partial_transpose(rho, d_a, d_b, side=side)
            assert abs(np.trace(pt) - 1.0) < 1e-12
            assert np.allclose(partial_transpose(pt, d_a, d_b, side=side), rho)


def test_hs_norm_invariant_under_partial_transpose():
    rng = np.random.default_rng(17)
    for _ in range(50):
        rho = random_state(2, 2, rng)
        pt = partial_transpose(rho, 2, 2, side="A")
        assert abs(hs_norm(pt) - hs_norm(rho)) < 1e-12


def test_full_transpose_composes_from_both_sides():
    rng = np.random.default_rng(23)
    rho = random_state(2, 3, rng)
    both = partial_transpose(
        partial_transpose(rho, 2, 3, side="A"), 2, 3, side="B"
    )
    assert np.allclose(both, rho.T)


def test_partial_trace_marginals():
    rng = np.random.default_rng(5)
    a = random_state(2, 1, rng)
    b = random_state(3, 1, rng)
    rho = kron(a, b)
    assert np.allclose(partial_trace(rho, 2, 3, keep="A"), a, atol=1e-12)
    assert np.allclose(partial_trace(rho, 2, 3, keep="B"), b, atol=1e-12)
    rho_ab = random_state(2, 3, rng)
    marg = partial_trace(rho_ab, 2, 3, keep="A")
    assert abs(np.trace(marg) - 1.0) < 1e-12


def test_dimension_mismatch_raised():
    rho = np.eye(6) / 6
    with pytest.raises(DimensionMismatch):
        partial_transpose(rho, 2, 2, side="A")
    with pytest.raises(DimensionMismatch):
        partial_trace(rho, 4, 2, keep="A")


def test_trace_norm_equals_abs_eigenvalue_sum():
    rng = np.random.default_rng(29)
    h = random_hermitian(5, rng)
    assert abs(trace_norm(h) - np.sum(np.abs(np.linalg.eigvalsh(h)))) < 1e-12
