import numpy as np
import pytest

from qcorr.errors import (
    BadRank,
    BadSpectrum,
    NotAState,
    NotPure,
    OutOfRange,
    OutsideRegion,
)
from qcorr.linalg import partial_trace
from qcorr.states import (
    BipartiteDensityMatrix,
    FamilyParam,
    SchmidtSpectrum,
    bell_state,
    bloch_compose,
    bloch_decompose,
    from_schmidt,
    isotropic,
    pure_2q_from_negativity,
    random_mixed,
    random_pure,
    random_schmidt,
    region_constraint,
    sample_stream,
    saturating_schmidt,
    saturating_theta_range,
    schmidt_spectrum,
    sep_mixture,
    sep_opt_state,
    swap_operator,
    werner,
    x_boundary_state,
    SEP_OPT_A,
)
from _oracles import haar_marginal_purity_mc


def test_density_matrix_validation():
    with pytest.raises(NotAState):
        BipartiteDensityMatrix(np.eye(4), 2, 2)  # trace 4
    with pytest.raises(NotAState):
        BipartiteDensityMatrix(np.diag([1.5, -0.5, 0.0, 0.0]), 2, 2)
    m = np.eye(4) / 4
    m[0, 1] = 0.2  # not hermitian
    with pytest.raises(NotAState):
        BipartiteDensityMatrix(m, 2, 2)


def test_swapped_exchanges_marginals():
    rng = sample_stream(11, 0)
    rho = random_mixed(2, 3, rng)
    sw = rho.swapped()
    assert (sw.d_a, sw.d_b) == (3, 2)
    assert np.allclose(
        partial_trace(sw.matrix, 3, 2, keep="A"),
        partial_trace(rho.matrix, 2, 3, keep="B"),
        atol=1e-12,
    )


def test_schmidt_spectrum_validation():
    with pytest.raises(BadSpectrum):
        SchmidtSpectrum(np.array([0.2, 0.8]))  # not sorted decreasing
    with pytest.raises(BadSpectrum):
        SchmidtSpectrum(np.array([0.9, 0.2]))  # sum != 1
    ok = SchmidtSpectrum(np.array([0.8, 0.2]))
    assert ok.d == 2


def test_pure_state_roundtrip_through_schmidt():
    alpha = SchmidtSpectrum(np.array([0.6, 0.3, 0.1]))
    rho = from_schmidt(alpha, 3, 3)
    back = schmidt_spectrum(rho)
    assert np.allclose(back.alpha, alpha.alpha, atol=1e-12)


def test_schmidt_spectrum_rejects_mixed_states():
    with pytest.raises(NotPure):
        schmidt_spectrum(BipartiteDensityMatrix(np.eye(4) / 4, 2, 2))


def test_pure_2q_bloch_form():
    # sqrt(a)|00> + sqrt(1-a)|11>: y = (0, 0, 2a-1), t = diag(n, -n, 1)
    n = 0.37
    rho = pure_2q_from_negativity(n)
    b = bloch_decompose(rho)
    a = 0.5 * (1.0 + np.sqrt(1.0 - n * n))
    assert np.allclose(b.y, [0.0, 0.0, 2 * a - 1], atol=1e-12)
    assert np.allclose(b.x, [0.0, 0.0, 2 * a - 1], atol=1e-12)
    assert np.allclose(b.t, np.diag([n, -n, 1.0]), atol=1e-12)


def test_bloch_roundtrip():
    rng = sample_stream(4, 2)
    for _ in range(20):
        rho = random_mixed(2, 2, rng)
        b = bloch_decompose(rho)
        back = bloch_compose(b)
        assert np.allclose(back.matrix, rho.matrix, atol=1e-12)


def test_bloch_compose_rejects_nonstate():
    from qcorr.states import BlochForm

    bad = BlochForm(x=np.zeros(3), y=np.zeros(3), t=np.diag([1.0, 1.0, -1.0]) * 1.2)
    with pytest.raises(NotAState):
        bloch_compose(bad)


def test_swap_operator_action():
    f = swap_operator(3)
    rng = np.random.default_rng(0)
    u = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    uv = np.kron(u, v)
    vu = np.kron(v, u)
    assert np.allclose(f @ uv, vu, atol=1e-12)


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("k", [-1.0, -0.25, 0.0, 0.6, 1.0])
def test_werner_flip_expectation(d, k):
    rho = werner(d, k)
    f = swap_operator(d)
    assert abs(np.trace(rho.matrix @ f).real - (-k)) < 1e-12


def test_werner_anchor_points():
    # d=2, k=1 is the singlet
    rho = werner(2, 1.0)
    psi = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2)
    assert np.allclose(rho.matrix, np.outer(psi, psi), atol=1e-12)
    # k = -1/d is maximally mixed
    rho = werner(3, -1.0 / 3.0)
    assert np.allclose(rho.matrix, np.eye(9) / 9, atol=1e-12)
    # k = -1 is the uniform mixture on the symmetric subspace
    rho = werner(2, -1.0)
    f = swap_operator(2)
    assert np.allclose(rho.matrix, (np.eye(4) + f) / 6, atol=1e-12)


def test_werner_spectrum():
    d, k = 3, 0.4
    rho = werner(d, k)
    w = np.linalg.eigvalsh(rho.matrix)
    anti_w = (1 + k) / (d * (d - 1))  # antisymmetric sector, d(d-1)/2 levels
    sym_w = (1 - k) / (d * (d + 1))  # symmetric sector, d(d+1)/2 levels
    expected = np.sort(
        np.concatenate(
            [np.full(d * (d - 1) // 2, anti_w), np.full(d * (d + 1) // 2, sym_w)]
        )
    )
    assert np.allclose(np.sort(w), expected, atol=1e-12)


def test_isotropic_anchor_points():
    # p = 1 is the maximally entangled state
    rho = isotropic(3, 1.0)
    alpha = SchmidtSpectrum(np.full(3, 1.0 / 3.0))
    assert np.allclose(rho.matrix, from_schmidt(alpha, 3, 3).matrix, atol=1e-12)
    # p = 1/d^2 is maximally mixed
    rho = isotropic(3, 1.0 / 9.0)
    assert np.allclose(rho.matrix, np.eye(9) / 9, atol=1e-12)


def test_family_param_validation():
    with pytest.raises(OutOfRange):
        FamilyParam("werner", 3, 1.5)
    with pytest.raises(OutOfRange):
        FamilyParam("isotropic", 3, -0.1)
    st = FamilyParam("werner", 2, 0.5).state()
    assert st.d_a == 2


def test_x_family_edges_and_region():
    with pytest.raises(OutsideRegion):
        x_boundary_state(0.49, 0.49)  # g < 0 deep inside the corner
    with pytest.raises(OutsideRegion):
        x_boundary_state(0.7, 0.1)  # outside [0, 1/2]^2
    # Bell corner
    rho = x_boundary_state(0.0, 0.5)
    w = np.linalg.eigvalsh(rho.matrix)
    assert abs(w[-1] - 1.0) < 1e-12
    # rank <= 2 everywhere: both 2x2 blocks are singular
    for a, c in [(0.1, 0.3), (0.25, 0.25), (0.0, 0.5), (SEP_OPT_A, SEP_OPT_A)]:
        if region_constraint(a, c) < -1e-12:
            continue
        w = np.linalg.eigvalsh(x_boundary_state(a, c).matrix)
        assert np.sum(w > 1e-10) <= 2


def test_sep_opt_state_structure():
    rho = sep_opt_state()
    m = rho.matrix
    assert abs(m[0, 0] - (2 + np.sqrt(2)) / 8) < 1e-12
    assert abs(m[1, 1] - (2 - np.sqrt(2)) / 8) < 1e-12
    assert abs(m[0, 3] - 1 / (4 * np.sqrt(2))) < 1e-12
    # positive partial transpose: a d = b c
    assert abs(m[0, 0] * m[3, 3] - m[1, 1] * m[2, 2]) < 1e-12


def test_sep_mixture_endpoints():
    assert np.allclose(sep_mixture(0.0).matrix, np.eye(4) / 4, atol=1e-12)
    assert np.allclose(sep_mixture(1.0).matrix, sep_opt_state().matrix, atol=1e-12)
    with pytest.raises(OutOfRange):
        sep_mixture(1.2)


def test_saturating_schmidt_family():
    for d in range(2, 8):
        lo, hi = saturating_theta_range(d)
        for th in np.linspace(lo, hi, 7):
            alpha = saturating_schmidt(th, d)
            a = alpha.alpha
            assert abs(np.sum(a) - 1.0) < 1e-12
            # one distinguished weight, the rest equal
            if a.size > 1:
                assert np.allclose(a[1:], a[1], atol=1e-12)
        # theta at the lower end gives the uniform (maximally entangled) spectrum
        uniform = saturating_schmidt(lo, d).alpha
        assert np.allclose(uniform, 1.0 / d, atol=1e-9)
        # theta at pi/2 is the product state
        prod = saturating_schmidt(hi, d).alpha
        assert abs(prod[0] - 1.0) < 1e-12


def test_sample_stream_is_index_separable():
    a = sample_stream(42, 7).standard_normal(5)
    b = sample_stream(42, 8).standard_normal(5)
    a2 = sample_stream(42, 7).standard_normal(5)
    assert np.allclose(a, a2)
    assert not np.allclose(a, b)


def test_random_pure_and_mixed_are_states():
    rng = sample_stream(1, 0)
    psi = random_pure(2, 3, rng)
    assert abs(psi.purity() - 1.0) < 1e-12
    rho = random_mixed(2, 3, rng)
    assert rho.purity() < 1.0
    low = random_mixed(2, 2, rng, rank=2)
    w = np.linalg.eigvalsh(low.matrix)
    assert np.sum(w > 1e-10) == 2
    with pytest.raises(BadRank):
        random_mixed(2, 2, rng, rank=5)


def test_random_schmidt_is_valid_spectrum():
    rng = sample_stream(2, 0)
    for _ in range(50):
        alpha = random_schmidt(4, rng)
        a = alpha.alpha
        assert abs(np.sum(a) - 1.0) < 1e-12
        assert np.all(np.diff(a) <= 1e-15)


def test_haar_marginal_purity_against_mc_oracle():
    # mean marginal purity of a random 2x2 pure state is
    # (d_a + d_b) / (d_a d_b + 1) = 4/5; the oracle uses the stdlib
    # generator, a different family from the library streams
    oracle = haar_marginal_purity_mc(20000, seed=123)
    rng = sample_stream(9, 0)
    vals = []
    for _ in range(20000):
        psi = random_pure(2, 2, rng)
        marg = partial_trace(psi.matrix, 2, 2, keep="A")
        vals.append(np.trace(marg @ marg).real)
    lib = float(np.mean(vals))
    assert abs(lib - 0.8) < 0.01
    assert abs(oracle - 0.8) < 0.01
    assert abs(lib - oracle) < 0.015


def test_bell_state_is_maximally_entangled():
    rho = bell_state()
    marg = partial_trace(rho.matrix, 2, 2, keep="A")
    assert np.allclose(marg, np.eye(2) / 2, atol=1e-12)
