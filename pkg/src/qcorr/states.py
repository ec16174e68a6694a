"""Bipartite state constructors, Bloch forms, and random ensembles.

States are carried as BipartiteDensityMatrix records so the subsystem
split travels with the matrix. Random sampling is reproducible through
per-sample PCG64 streams keyed by (seed, index), which makes ensembles
independent of how the samples are distributed across workers.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadRank,
    BadSpectrum,
    DimensionMismatch,
    NotAState,
    NotPure,
    OutOfRange,
    OutsideRegion,
)
from .linalg import partial_trace

pauli_x = np.array([[0, 1], [1, 0]], dtype=complex)
pauli_y = np.array([[0, -1j], [1j, 0]], dtype=complex)
pauli_z = np.array([[1, 0], [0, -1]], dtype=complex)
paulis = (pauli_x, pauli_y, pauli_z)

TRACE_TOL = 1e-10
HERMITICITY_TOL = 1e-10
EIGENVALUE_TOL = 1e-9
SPECTRUM_TOL = 1e-12


@dataclass(frozen=True)
class BipartiteDensityMatrix:
    """A density matrix together with its subsystem dimensions."""

    matrix: np.ndarray
    d_a: int
    d_b: int

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NotAState(f"expected a square matrix, got shape {m.shape}")
        if m.shape[0] != self.d_a * self.d_b:
            raise DimensionMismatch(
                f"size {m.shape[0]} does not match {self.d_a}x{self.d_b}"
            )
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise NotAState("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise NotAState("density matrix trace differs from 1")
        if np.linalg.eigvalsh(m)[0] < -EIGENVALUE_TOL:
            raise NotAState("density matrix has a negative eigenvalue")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.d_a * self.d_b

    def purity(self) -> float:
        return float(np.einsum("ij,ji->", self.matrix, self.matrix).real)

    def swapped(self) -> "BipartiteDensityMatrix":
        """The same state with subsystems A and B interchanged."""
        t = self.matrix.reshape(self.d_a, self.d_b, self.d_a, self.d_b)
        m = t.transpose(1, 0, 3, 2).reshape(self.dim, self.dim)
        return BipartiteDensityMatrix(m, self.d_b, self.d_a)


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Squared Schmidt coefficients, sorted decreasing, summing to 1."""

    alpha: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.alpha, dtype=float)
        if a.ndim != 1 or a.size < 1:
            raise BadSpectrum("spectrum must be a nonempty 1-d array")
        if np.any(a < -SPECTRUM_TOL):
            raise BadSpectrum("spectrum has a negative entry")
        if np.any(np.diff(a) > SPECTRUM_TOL):
            raise BadSpectrum("spectrum is not sorted decreasing")
        if abs(float(np.sum(a)) - 1.0) > SPECTRUM_TOL * max(10, a.size):
            raise BadSpectrum("spectrum does not sum to 1")
        object.__setattr__(self, "alpha", np.clip(a, 0.0, None))

    @property
    def d(self) -> int:
        return int(self.alpha.size)


@dataclass(frozen=True)
class BlochForm:
    """Two-qubit local vectors x, y and 3x3 correlation matrix t."""

    x: np.ndarray
    y: np.ndarray
    t: np.ndarray


@dataclass(frozen=True)
class FamilyParam:
    """One point of a one-parameter state family ('werner'/'isotropic')."""

    family: str
    d: int
    value: float

    def __post_init__(self):
        if self.family not in ("werner", "isotropic"):
            raise OutOfRange(f"unknown family {self.family!r}")
        if self.d < 2:
            raise OutOfRange("family dimension must be at least 2")
        lo = -1.0 if self.family == "werner" else 0.0
        if not lo <= self.value <= 1.0:
            raise OutOfRange(f"{self.family} parameter {self.value} outside [{lo}, 1]")

    def state(self) -> BipartiteDensityMatrix:
        if self.family == "werner":
            return werner(self.d, self.value)
        return isotropic(self.d, self.value)


# ---------------------------------------------------------------------------
# pure-state constructors


def from_schmidt(alpha: SchmidtSpectrum, d_a: int, d_b: int) -> BipartiteDensityMatrix:
    """Pure state with the given squared Schmidt coefficients.

    The vector is sum_i sqrt(alpha_i) |ii>, so the spectrum length must
    fit in min(d_a, d_b).
    """
    a = alpha.alpha
    if a.size > min(d_a, d_b):
        raise DimensionMismatch(
            f"spectrum of length {a.size} does not fit in {d_a}x{d_b}"
        )
    psi = np.zeros(d_a * d_b, dtype=complex)
    for i, w in enumerate(a):
        psi[i * d_b + i] = np.sqrt(w)
    return BipartiteDensityMatrix(np.outer(psi, psi.conj()), d_a, d_b)


def pure_2q_from_negativity(n: float) -> BipartiteDensityMatrix:
    """Two-qubit pure state sqrt(a)|00> + sqrt(1-a)|11> with negativity n.

    a = (1 + sqrt(1 - n^2)) / 2, so n = 0 gives |00> and n = 1 the
    maximally entangled state.
    """
    if not 0.0 <= n <= 1.0:
        raise OutOfRange(f"negativity {n} outside [0, 1]")
    a = 0.5 * (1.0 + np.sqrt(1.0 - n * n))
    return from_schmidt(SchmidtSpectrum(np.array([a, 1.0 - a])), 2, 2)


def bell_state() -> BipartiteDensityMatrix:
    """The maximally entangled two-qubit state (|00> + |11>)/sqrt(2)."""
    return pure_2q_from_negativity(1.0)


def schmidt_spectrum(state: BipartiteDensityMatrix, purity_tol: float = 1e-9) -> SchmidtSpectrum:
    """Squared Schmidt coefficients of a pure bipartite state.

    Raises NotPure when Tr(rho^2) < 1 - purity_tol.
    """
    if state.purity() < 1.0 - purity_tol:
        raise NotPure("state purity is below tolerance for a Schmidt split")
    marg = partial_trace(state.matrix, state.d_a, state.d_b, keep="A")
    w = np.linalg.eigvalsh(marg)[::-1]
    w = np.clip(w, 0.0, None)
    return SchmidtSpectrum(w / np.sum(w))


# ---------------------------------------------------------------------------
# two-qubit Bloch forms


def bloch_decompose(state: BipartiteDensityMatrix) -> BlochForm:
    """Local Bloch vectors and correlation matrix of a two-qubit state.

    x_i = Tr[rho (sigma_i x I)], y_j = Tr[rho (I x sigma_j)],
    t_ij = Tr[rho (sigma_i x sigma_j)].
    """
    if (state.d_a, state.d_b) != (2, 2):
        raise DimensionMismatch("Bloch decomposition is defined for 2x2 states")
    r = state.matrix.reshape(2, 2, 2, 2)
    x = np.array([np.einsum("ipjp,ji->", r, s).real for s in paulis])
    y = np.array([np.einsum("pipj,ji->", r, s).real for s in paulis])
    t = np.array(
        [[np.einsum("ipjq,ji,qp->", r, si, sj).real for sj in paulis] for si in paulis]
    )
    return BlochForm(x=x, y=y, t=t)


def bloch_compose(bloch: BlochForm) -> BipartiteDensityMatrix:
    """Rebuild the two-qubit state from its Bloch form.

    rho = (I + sum x_i sigma_i x I + sum y_j I x sigma_j
           + sum t_ij sigma_i x sigma_j) / 4; raises NotAState when the
    coefficients do not describe a positive unit-trace matrix.
    """
    m = np.eye(4, dtype=complex)
    for i, s in enumerate(paulis):
        m += bloch.x[i] * np.kron(s, np.eye(2))
        m += bloch.y[i] * np.kron(np.eye(2), s)
        for j, u in enumerate(paulis):
            m += bloch.t[i, j] * np.kron(s, u)
    return BipartiteDensityMatrix(m / 4.0, 2, 2)


# ---------------------------------------------------------------------------
# named families


def swap_operator(d: int) -> np.ndarray:
    """The flip operator sum_ij |ij><ji| on a d x d system."""
    f = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            f[i * d + j, j * d + i] = 1.0
    return f


def werner(d: int, k: float) -> BipartiteDensityMatrix:
    """Flip-symmetric d x d family [(d+k) I - (dk+1) F] / (d^3 - d).

    F is the swap operator and k = -Tr(rho F) in [-1, 1]; the state is
    entangled exactly for k > 0.
    """
    if d < 2:
        raise OutOfRange("werner family needs d >= 2")
    if not -1.0 <= k <= 1.0:
        raise OutOfRange(f"werner parameter {k} outside [-1, 1]")
    m = ((d + k) * np.eye(d * d) - (d * k + 1.0) * swap_operator(d)) / (d**3 - d)
    return BipartiteDensityMatrix(m, d, d)


def isotropic(d: int, p: float) -> BipartiteDensityMatrix:
    """Isotropic d x d family with maximally entangled fidelity p."""
    if d < 2:
        raise OutOfRange("isotropic family needs d >= 2")
    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"isotropic parameter {p} outside [0, 1]")
    psi = np.zeros(d * d)
    psi[:: d + 1] = 1.0 / np.sqrt(d)
    proj = np.outer(psi, psi)
    m = (1.0 - p) / (d * d - 1.0) * (np.eye(d * d) - proj) + p * proj
    return BipartiteDensityMatrix(m, d, d)


def region_constraint(a: float, c: float) -> float:
    """Admissibility indicator of the extremal rank-two X family.

    The family below is defined where this expression is >= 0 (the
    square root inside its b coefficient stays real).
    """
    return (
        -1.0
        + 6.0 * a
        - 7.0 * a * a
        + 6.0 * c
        - 18.0 * a * c
        - 7.0 * c * c
        + 4.0 * np.sqrt(2.0) * np.sqrt(a * c) * abs(2.0 * a + 2.0 * c - 1.0)
    )


def x_boundary_state(a: float, c: float) -> BipartiteDensityMatrix:
    """Rank-two X state tracing the upper edge of the (N^2, D_G) region.

    Diagonal (a, b, c, d) with d = 1 - a - b - c, anti-diagonal entries
    sqrt(ad) and sqrt(bc) (each 2x2 block singular, so rank <= 2), and b
    the closed-form root that places the state on the extremal surface.
    Requires 0 <= a, c <= 1/2 inside the admissible region; the state is
    entangled exactly where ad != bc.
    """
    if not (0.0 <= a <= 0.5 and 0.0 <= c <= 0.5):
        raise OutsideRegion(f"(a, c) = ({a}, {c}) outside [0, 1/2]^2")
    g = region_constraint(a, c)
    # rounding tolerance so the exact boundary (g = 0 analytically) passes
    if g < -1e-12:
        raise OutsideRegion(f"(a, c) = ({a}, {c}) violates the region constraint")
    b = (2.0 - 2.0 * a - 2.0 * c + 2.0 * np.sqrt(max(g, 0.0))) / 4.0
    d = 1.0 - a - b - c
    d = max(d, 0.0) if d > -1e-12 else d
    e = np.sqrt(max(a * d, 0.0))
    f = np.sqrt(max(b * c, 0.0))
    m = np.array(
        [
            [a, 0.0, 0.0, e],
            [0.0, b, f, 0.0],
            [0.0, f, c, 0.0],
            [e, 0.0, 0.0, d],
        ]
    )
    return BipartiteDensityMatrix(m, 2, 2)


SEP_OPT_A = (2.0 + np.sqrt(2.0)) / 8.0


def sep_opt_state() -> BipartiteDensityMatrix:
    """The separable two-qubit state of maximal geometric discord (1/4).

    The a = c = (2 + sqrt 2)/8 point of the X family: diagonal entries
    alternate (2 +/- sqrt 2)/8 and both anti-diagonal entries are
    1/(4 sqrt 2). Its partial transpose is positive (ad = bc), and the
    subsystem-swapped state is classical-quantum with zero discord.
    """
    return x_boundary_state(SEP_OPT_A, SEP_OPT_A)


def sep_mixture(p: float) -> BipartiteDensityMatrix:
    """Segment p * sep_opt + (1 - p) * I/4 of separable states.

    Realizes every discord value in [0, 1/4] at zero negativity:
    D_G = p^2 / 4.
    """
    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"mixing weight {p} outside [0, 1]")
    m = p * sep_opt_state().matrix + (1.0 - p) * np.eye(4) / 4.0
    return BipartiteDensityMatrix(m, 2, 2)


def saturating_theta_range(d: int) -> tuple[float, float]:
    """Angle interval of the discord-bound-saturating spectra."""
    if d < 2:
        raise OutOfRange("need d >= 2")
    return float(np.arccos(np.sqrt((d - 1.0) / d))), float(np.pi / 2.0)


def saturating_schmidt(theta: float, d: int) -> SchmidtSpectrum:
    """Spectrum (sin^2 t, cos^2 t/(d-1), ..., cos^2 t/(d-1)).

    Over the angle range from saturating_theta_range these pure states
    sit exactly on the discord-vs-negativity lower-bound curve, from the
    uniform spectrum down to a product state.
    """
    lo, hi = saturating_theta_range(d)
    if not lo - 1e-12 <= theta <= hi + 1e-12:
        raise OutOfRange(f"theta {theta} outside [{lo}, {hi}]")
    head = np.sin(theta) ** 2
    tail = np.full(d - 1, np.cos(theta) ** 2 / (d - 1.0))
    alpha = np.concatenate(([head], tail))
    return SchmidtSpectrum(alpha / np.sum(alpha))


# ---------------------------------------------------------------------------
# random ensembles


def sample_stream(seed: int, index: int) -> np.random.Generator:
    """Independent PCG64 stream for sample #index of a seeded run.

    Keyed by (seed, index) so any worker layout draws identical samples.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, index))))


def random_pure(d_a: int, d_b: int, rng: np.random.Generator) -> BipartiteDensityMatrix:
    """Haar-random pure state: normalized complex Gaussian vector."""
    dim = d_a * d_b
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    z /= np.linalg.norm(z)
    return BipartiteDensityMatrix(np.outer(z, z.conj()), d_a, d_b)


def random_mixed(
    d_a: int, d_b: int, rng: np.random.Generator, rank: int | None = None
) -> BipartiteDensityMatrix:
    """Hilbert-Schmidt-random mixed state rho = G G^dag / Tr(G G^dag).

    G is a (d_a*d_b) x rank complex Gaussian matrix; rank defaults to
    full.
    """
    dim = d_a * d_b
    r = dim if rank is None else rank
    if not 1 <= r <= dim:
        raise BadRank(f"rank {r} impossible for dimension {dim}")
    g = rng.standard_normal((dim, r)) + 1j * rng.standard_normal((dim, r))
    m = g @ g.conj().T
    m /= np.trace(m).real
    return BipartiteDensityMatrix(m, d_a, d_b)


def random_schmidt(d: int, rng: np.random.Generator) -> SchmidtSpectrum:
    """Flat (Dirichlet) random squared Schmidt spectrum, sorted."""
    if d < 1:
        raise OutOfRange("need d >= 1")
    a = np.sort(rng.dirichlet(np.ones(d)))[::-1]
    return SchmidtSpectrum(a)
