"""Reproducible experiments over random ensembles and state families.

Every experiment writes a UTF-8 CSV with a header row, float cells
printed at 17 significant digits (round-trip exact for doubles), and
summary footer lines prefixed with '#'. Sampling is embarrassingly
parallel: each sample index owns an RNG stream derived from
(seed, index), so the output is byte-identical for a fixed config no
matter how many worker threads run (QCORR_THREADS bounds the pool;
default is the hardware thread count).
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .errors import OutOfRange
from .measures import (
    OptimizerConfig,
    batch_negativity,
    batch_two_qubit_measures,
    dg_lower_bound_curve,
    discord_negativity_relation,
    geometric_discord_2q,
    geometric_discord_2q_variational,
    geometric_discord_numeric,
    geometric_discord_pure,
    isotropic_closed,
    negativity,
    negativity_pure,
    werner_closed,
    werner_discord_definitional,
    werner_negativity_definitional,
)
from .states import (
    isotropic,
    random_mixed,
    random_schmidt,
    region_constraint,
    sample_stream,
    saturating_schmidt,
    saturating_theta_range,
    sep_mixture,
    werner,
    x_boundary_state,
)

EXPERIMENTS = (
    "scatter-2q",
    "scatter-2x3",
    "pure-qudit",
    "family-sweep",
    "boundary-2q",
    "verify",
    "oracle-check",
)
SUITES = ("hierarchy2q", "chain2q", "pure-qudit", "families", "2x3", "oracle")

ANALYTIC_TOL = 1e-10
OPTIMIZER_TOL = 1e-6
CHAIN_Q_TOL = 1e-9
NOCONV_FRACTION_LIMIT = 1e-3
ENVELOPE_BINS = 200
SATURATING_POINTS = 50


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment run: what to compute, how much, and where to."""

    experiment: str
    samples: int | None = None
    seed: int = 0
    d: int | None = None
    grid: int | None = None
    family: str = "werner"
    measured_side: str = "A"
    rank: int | None = None
    optimizer: OptimizerConfig | None = None
    output_path: str | None = None
    suite: str | None = None

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise OutOfRange(f"unknown experiment {self.experiment!r}")
        if self.samples is not None and self.samples < 1:
            raise OutOfRange("samples must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise OutOfRange("seed must fit in 64 bits")
        if self.family not in ("werner", "isotropic"):
            raise OutOfRange(f"unknown family {self.family!r}")
        if self.suite is not None and self.suite not in SUITES:
            raise OutOfRange(f"unknown suite {self.suite!r}")


def resolve_threads() -> int:
    """Worker count: QCORR_THREADS when set, else hardware threads."""
    raw = os.environ.get("QCORR_THREADS", "").strip()
    if raw:
        n = int(raw)
        if n < 1:
            raise OutOfRange("QCORR_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# parallel block mapping (deterministic reassembly by block position)


def _map_blocks(n: int, block: int, fn, threads: int) -> list:
    starts = list(range(0, n, block))
    if threads <= 1 or len(starts) == 1:
        return [fn(s, min(block, n - s)) for s in starts]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(fn, s, min(block, n - s)) for s in starts]
        return [f.result() for f in futures]


def _mixed_blocks(seed: int, d_a: int, d_b: int, rank: int | None):
    dim = d_a * d_b

    def fn(start: int, count: int) -> np.ndarray:
        out = np.empty((count, dim, dim), dtype=complex)
        for j in range(count):
            rng = sample_stream(seed, start + j)
            out[j] = random_mixed(d_a, d_b, rng, rank=rank).matrix
        return out

    return fn


def two_qubit_cloud(
    samples: int,
    seed: int,
    rank: int | None = None,
    threads: int | None = None,
    dg_fn=None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(negativity, discord, q) over random two-qubit mixed states.

    dg_fn, when given, replaces the closed-form discord route with a
    callable mapping a stack of density matrices to discord values; the
    verifier uses this hook to prove it catches a broken measure.
    """
    threads = threads or resolve_threads()
    gen = _mixed_blocks(seed, 2, 2, rank)

    def fn(start: int, count: int):
        rhos = gen(start, count)
        neg, dg, q = batch_two_qubit_measures(rhos)
        if dg_fn is not None:
            dg = np.asarray(dg_fn(rhos), dtype=float)
        return neg, dg, q

    parts = _map_blocks(samples, 4096, fn, threads)
    neg = np.concatenate([p[0] for p in parts])
    dg = np.concatenate([p[1] for p in parts])
    q = np.concatenate([p[2] for p in parts])
    return neg, dg, q


def _optimizer_rows(
    samples: int,
    seed: int,
    d_a: int,
    d_b: int,
    measured_side: str,
    opt: OptimizerConfig,
    rank: int | None,
    threads: int,
):
    def fn(start: int, count: int):
        neg = np.empty(count)
        dg = np.empty(count)
        res = np.empty(count)
        conv = np.empty(count, dtype=bool)
        for j in range(count):
            rng = sample_stream(seed, start + j)
            rho = random_mixed(d_a, d_b, rng, rank=rank)
            neg[j] = negativity(rho).value
            mv = geometric_discord_numeric(rho, measured_side, opt, rng=rng)
            dg[j], res[j], conv[j] = mv.value, mv.residual, mv.converged
        return neg, dg, res, conv

    parts = _map_blocks(samples, 32, fn, threads)
    return tuple(np.concatenate([p[i] for p in parts]) for i in range(4))


def pure_qudit_cloud(samples: int, seed: int, d: int, threads: int | None = None):
    """(negativity, discord) over random squared Schmidt spectra in d x d."""
    threads = threads or resolve_threads()

    def fn(start: int, count: int):
        neg = np.empty(count)
        dg = np.empty(count)
        for j in range(count):
            alpha = random_schmidt(d, sample_stream(seed, start + j))
            neg[j] = negativity_pure(alpha, d)
            dg[j] = geometric_discord_pure(alpha, d)
        return neg, dg

    parts = _map_blocks(samples, 4096, fn, threads)
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


# ---------------------------------------------------------------------------
# CSV plumbing

SCATTER_HEADER = (
    "index,d_a,d_b,rank,negativity,negativity_sq,d_g,q,"
    "d_g_method,optimizer_residual,converged"
)


def _f(x: float) -> str:
    return "%.17g" % float(x)


def _write_csv(path: str, header: str, rows: list[str], footers: list[str]) -> str:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(row + "\n")
        for line in footers:
            fh.write("# " + line + "\n")
    return path


def _require_out(cfg: ExperimentConfig) -> str:
    if not cfg.output_path:
        raise OutOfRange("experiment needs an output_path")
    return cfg.output_path


# ---------------------------------------------------------------------------
# experiments


def scatter_2q(cfg: ExperimentConfig) -> str:
    """Random two-qubit mixed states: closed-form N, D_G, Q per row."""
    samples = cfg.samples or 100000
    neg, dg, q = two_qubit_cloud(samples, cfg.seed, rank=cfg.rank, threads=resolve_threads())
    rank = cfg.rank or 4
    rows = [
        f"{i},2,2,{rank},{_f(neg[i])},{_f(neg[i] ** 2)},{_f(dg[i])},{_f(q[i])},closed-form,0,1"
        for i in range(samples)
    ]
    footers = [
        f"min_dg_minus_nsq = {_f(np.min(dg - neg**2))}",
        f"min_dg_minus_q = {_f(np.min(dg - q))}",
        f"min_q_minus_nsq = {_f(np.min(q - neg**2))}",
        f"samples = {samples}, seed = {cfg.seed}",
    ]
    return _write_csv(_require_out(cfg), SCATTER_HEADER, rows, footers)


def scatter_2x3(cfg: ExperimentConfig) -> str:
    """Random 2x3 mixed states: negativity vs optimizer discord.

    Measurement runs on the qubit side by default; rows that fail the
    optimizer tolerance are flagged converged=0 but kept.
    """
    samples = cfg.samples or 1000
    opt = cfg.optimizer or OptimizerConfig(restarts=8)
    neg, dg, res, conv = _optimizer_rows(
        samples, cfg.seed, 2, 3, cfg.measured_side, opt, cfg.rank, resolve_threads()
    )
    rank = cfg.rank or 6
    rows = [
        f"{i},2,3,{rank},{_f(neg[i])},{_f(neg[i] ** 2)},{_f(dg[i])},,optimizer,"
        f"{_f(res[i])},{1 if conv[i] else 0}"
        for i in range(samples)
    ]
    footers = [
        f"min_dg_minus_nsq = {_f(np.min(dg - neg**2))}",
        f"max_optimizer_residual = {_f(np.max(res))}",
        f"unconverged = {int(np.sum(~conv))}",
        f"samples = {samples}, seed = {cfg.seed}, restarts = {opt.restarts}, "
        f"measured_side = {cfg.measured_side}",
    ]
    return _write_csv(_require_out(cfg), SCATTER_HEADER, rows, footers)


PURE_HEADER = "index,kind,d,parameter,negativity,negativity_sq,d_g"


def pure_qudit_scan(cfg: ExperimentConfig) -> str:
    """Pure d x d states: random spectra, the bound curve, saturators."""
    d = cfg.d or 3
    if not 2 <= d <= 7:
        raise OutOfRange(f"pure-qudit scan supports d in 2..7, got {d}")
    samples = cfg.samples or 3000
    grid = cfg.grid or 200
    neg, dg = pure_qudit_cloud(samples, cfg.seed, d)

    rows = [
        f"{i},sample,{d},,{_f(neg[i])},{_f(neg[i] ** 2)},{_f(dg[i])}"
        for i in range(samples)
    ]
    idx = samples
    curve_n = np.linspace(0.0, 1.0, grid)
    curve = dg_lower_bound_curve(curve_n, d)
    for n_val, c_val in zip(curve_n, curve):
        rows.append(f"{idx},curve,{d},{_f(n_val)},{_f(n_val)},{_f(n_val ** 2)},{_f(c_val)}")
        idx += 1
    lo, hi = saturating_theta_range(d)
    thetas = np.linspace(lo, hi, SATURATING_POINTS)
    sat_gap = 0.0
    for th in thetas:
        alpha = saturating_schmidt(th, d)
        n_val = negativity_pure(alpha, d)
        dg_val = geometric_discord_pure(alpha, d)
        sat_gap = max(sat_gap, abs(dg_val - dg_lower_bound_curve(n_val, d)))
        rows.append(f"{idx},saturating,{d},{_f(th)},{_f(n_val)},{_f(n_val ** 2)},{_f(dg_val)}")
        idx += 1

    footers = [
        f"min_dg_minus_nsq = {_f(np.min(dg - neg**2))}",
        f"min_dg_minus_curve = {_f(np.min(dg - dg_lower_bound_curve(neg, d)))}",
        f"max_saturating_curve_gap = {_f(sat_gap)}",
        f"samples = {samples}, seed = {cfg.seed}, d = {d}",
    ]
    return _write_csv(_require_out(cfg), PURE_HEADER, rows, footers)


FAMILY_HEADER = (
    "index,family,d,parameter,negativity_paper,negativity_definitional,"
    "d_g_closed,d_g_definitional,d_g_numeric,optimizer_residual,converged"
)


def family_sweep(cfg: ExperimentConfig) -> str:
    """Parameter sweep of the flip-symmetric or isotropic family.

    Emits both negativity normalizations and both discord
    normalizations (they differ for the flip family when d > 2); for
    d <= 4 each row also carries the optimizer value, which converges
    to the definitional column.
    """
    d = cfg.d or 2
    if d < 2:
        raise OutOfRange("family sweep needs d >= 2")
    steps = cfg.grid or 101
    if steps < 2:
        raise OutOfRange("family sweep needs at least 2 steps")
    opt = cfg.optimizer or OptimizerConfig(restarts=8)
    lo = -1.0 if cfg.family == "werner" else 0.0
    params = np.linspace(lo, 1.0, steps)

    rows = []
    rel_gap = 0.0
    num_gap = 0.0
    for i, p in enumerate(params):
        if cfg.family == "werner":
            dg_closed, n_paper = werner_closed(d, p)
            dg_def = werner_discord_definitional(d, p)
            n_def = werner_negativity_definitional(d, p)
            state = werner(d, p) if d <= 4 else None
        else:
            dg_closed, n_paper = isotropic_closed(d, p)
            dg_def = dg_closed
            n_def = n_paper
            state = isotropic(d, p) if d <= 4 else None
        if n_paper > 0.0:
            rel_gap = max(rel_gap, abs(dg_closed - discord_negativity_relation(n_paper, d)))
        if state is not None:
            mv = geometric_discord_numeric(state, "B", opt, rng=sample_stream(cfg.seed, i))
            num_gap = max(num_gap, abs(mv.value - dg_def))
            numeric = f"{_f(mv.value)},{_f(mv.residual)},{1 if mv.converged else 0}"
        else:
            numeric = ",,"
        rows.append(
            f"{i},{cfg.family},{d},{_f(p)},{_f(n_paper)},{_f(n_def)},"
            f"{_f(dg_closed)},{_f(dg_def)},{numeric}"
        )

    footers = [f"max_relation_residual = {_f(rel_gap)}"]
    if d <= 4:
        footers.append(f"max_numeric_vs_definitional = {_f(num_gap)}")
    footers.append(
        f"family = {cfg.family}, d = {d}, steps = {steps}, seed = {cfg.seed}"
    )
    return _write_csv(_require_out(cfg), FAMILY_HEADER, rows, footers)


BOUNDARY_HEADER = "index,kind,negativity_sq,d_g"


def boundary_2q(cfg: ExperimentConfig) -> str:
    """Upper envelope of the two-qubit (N^2, D_G) region.

    Sweeps the admissible (a, c) square of the extremal rank-two
    family plus the separable mixing segment, bins rows by N^2
    (one dedicated bin for exactly-separable rows, then uniform bins
    over (0, 1]), and emits the attained maximum per bin together with
    the pure-state floor D_G = N^2.
    """
    grid = cfg.grid or 120
    if grid < 10:
        raise OutOfRange("boundary sweep needs grid >= 10")

    nsq_vals: list[float] = []
    dg_vals: list[float] = []
    axis = np.linspace(0.0, 0.5, grid)
    for a in axis:
        for c in axis:
            if region_constraint(a, c) < -1e-12:
                continue
            state = x_boundary_state(a, c)
            n = negativity(state).value
            nsq_vals.append(n * n)
            dg_vals.append(geometric_discord_2q(state).value)
    for p in np.linspace(0.0, 1.0, grid):
        state = sep_mixture(p)
        n = negativity(state).value
        nsq_vals.append(n * n)
        dg_vals.append(geometric_discord_2q(state).value)

    nsq = np.array(nsq_vals)
    dg = np.array(dg_vals)
    sep = nsq <= 1e-12

    envelope: list[tuple[float, float]] = []
    if np.any(sep):
        j = int(np.argmax(np.where(sep, dg, -np.inf)))
        envelope.append((nsq[j], dg[j]))
    edges = np.linspace(0.0, 1.0, ENVELOPE_BINS + 1)
    bins = np.clip(np.searchsorted(edges, nsq, side="left"), 1, ENVELOPE_BINS)
    for b in range(1, ENVELOPE_BINS + 1):
        mask = (~sep) & (bins == b)
        if not np.any(mask):
            continue
        j = int(np.argmax(np.where(mask, dg, -np.inf)))
        envelope.append((nsq[j], dg[j]))

    rows = [
        f"{i},envelope,{_f(x)},{_f(y)}" for i, (x, y) in enumerate(envelope)
    ]
    idx = len(rows)
    for x in np.linspace(0.0, 1.0, grid):
        rows.append(f"{idx},pure,{_f(x)},{_f(x)}")
        idx += 1

    env = np.array(envelope)
    footers = [
        f"envelope_at_zero = {_f(env[0, 1]) if np.any(sep) else 'nan'}",
        f"envelope_at_one = {_f(env[-1, 1])}",
        f"min_envelope_minus_nsq = {_f(np.min(env[:, 1] - env[:, 0]))}",
        f"grid = {grid}, bins = {ENVELOPE_BINS}",
    ]
    return _write_csv(_require_out(cfg), BOUNDARY_HEADER, rows, footers)


# ---------------------------------------------------------------------------
# verification suites


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of one invariant suite run."""

    suite: str
    samples: int
    seed: int
    violations: int
    noconv_fraction: float
    report: str

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.noconv_fraction <= NOCONV_FRACTION_LIMIT


def _suite_default_samples(suite: str) -> int:
    return {
        "hierarchy2q": 100000,
        "chain2q": 100000,
        "pure-qudit": 3000,
        "families": 101,
        "2x3": 500,
        "oracle": 1000,
    }[suite]


def verify(cfg: ExperimentConfig, dg_override=None) -> VerifyResult:
    """Run one invariant suite; ok iff zero violations and convergence.

    dg_override (batch density matrices -> discord array) replaces the
    closed-form two-qubit discord in the hierarchy2q/chain2q suites;
    injecting a corrupted measure must flip the result to failing.
    """
    if cfg.suite is None:
        raise OutOfRange("verify needs a suite")
    samples = cfg.samples or _suite_default_samples(cfg.suite)
    seed = cfg.seed
    lines = [f"suite = {cfg.suite}, samples = {samples}, seed = {seed}"]
    violations = 0
    noconv_fraction = 0.0

    def check(name: str, margin: float, tol: float, count: int) -> int:
        status = "ok" if count == 0 else f"VIOLATED x{count}"
        lines.append(f"  {name}: worst margin {margin:.3e} (tol {tol:.0e}) {status}")
        return count

    if cfg.suite in ("hierarchy2q", "chain2q"):
        neg, dg, q = two_qubit_cloud(samples, seed, dg_fn=dg_override)
        nsq = neg * neg
        m1 = dg - nsq
        violations += check("d_g >= negativity^2", float(m1.min()), ANALYTIC_TOL,
                            int(np.sum(m1 < -ANALYTIC_TOL)))
        if cfg.suite == "chain2q":
            m2 = dg - q
            m3 = q - nsq
            violations += check("d_g >= q", float(m2.min()), ANALYTIC_TOL,
                                int(np.sum(m2 < -ANALYTIC_TOL)))
            violations += check("q >= negativity^2", float(m3.min()), CHAIN_Q_TOL,
                                int(np.sum(m3 < -CHAIN_Q_TOL)))

    elif cfg.suite == "pure-qudit":
        for d in range(2, 8):
            neg, dg = pure_qudit_cloud(samples, seed + d, d)
            m1 = dg - neg * neg
            violations += check(f"d={d} d_g >= negativity^2", float(m1.min()), 1e-12,
                                int(np.sum(m1 < -1e-12)))
            m2 = dg - dg_lower_bound_curve(neg, d)
            violations += check(f"d={d} d_g >= curve", float(m2.min()), 1e-9,
                                int(np.sum(m2 < -1e-9)))
            lo, hi = saturating_theta_range(d)
            gaps = []
            for th in np.linspace(lo, hi, SATURATING_POINTS):
                alpha = saturating_schmidt(th, d)
                gaps.append(abs(geometric_discord_pure(alpha, d)
                                - dg_lower_bound_curve(negativity_pure(alpha, d), d)))
            worst = float(np.max(gaps))
            violations += check(f"d={d} saturators on curve", worst, 1e-9,
                                int(np.sum(np.array(gaps) > 1e-9)))

    elif cfg.suite == "families":
        opt = cfg.optimizer or OptimizerConfig()
        for d in (2, 3, 10, 99):
            for family in ("werner", "isotropic"):
                lo = -1.0 if family == "werner" else 0.0
                params = np.linspace(lo, 1.0, samples)
                gaps = []
                for p in params:
                    if family == "werner":
                        dg_c, n_p = werner_closed(d, p)
                    else:
                        dg_c, n_p = isotropic_closed(d, p)
                    if n_p > 0.0:
                        gaps.append(abs(dg_c - discord_negativity_relation(n_p, d)))
                worst = float(np.max(gaps)) if gaps else 0.0
                violations += check(f"{family} d={d} relation", worst, 1e-12,
                                    int(np.sum(np.array(gaps) > 1e-12)))
        zero_k = [k for k in np.linspace(-1.0, 0.0, samples)
                  if abs(k + 1.0 / 2) > 1e-9 and werner_discord_definitional(2, k) <= 0.0]
        violations += check("werner k<=0 discord > 0 (d=2)", 0.0, 0.0, len(zero_k))
        for d in (2, 3):
            for family in ("werner", "isotropic"):
                lo = -1.0 if family == "werner" else 0.0
                gaps = []
                for i, p in enumerate(np.linspace(lo, 1.0, 5)):
                    if family == "werner":
                        state, target = werner(d, p), werner_discord_definitional(d, p)
                    else:
                        state, target = isotropic(d, p), isotropic_closed(d, p)[0]
                    mv = geometric_discord_numeric(state, "B", opt,
                                                   rng=sample_stream(seed, 1000 * d + i))
                    gaps.append(abs(mv.value - target))
                worst = float(np.max(gaps))
                violations += check(f"{family} d={d} optimizer vs closed", worst,
                                    OPTIMIZER_TOL,
                                    int(np.sum(np.array(gaps) > OPTIMIZER_TOL)))

    elif cfg.suite == "2x3":
        opt = cfg.optimizer or OptimizerConfig(restarts=8)
        neg, dg, res, conv = _optimizer_rows(
            samples, seed, 2, 3, cfg.measured_side, opt, cfg.rank, resolve_threads()
        )
        m = dg - neg * neg
        violations += check("d_g >= negativity^2 (optimizer)", float(m.min()),
                            OPTIMIZER_TOL, int(np.sum(m < -OPTIMIZER_TOL)))
        noconv_fraction = float(np.mean(~conv))
        lines.append(f"  unconverged fraction {noconv_fraction:.2e} "
                     f"(limit {NOCONV_FRACTION_LIMIT:.0e})")

    elif cfg.suite == "oracle":
        opt = cfg.optimizer or OptimizerConfig()
        gaps_num = np.empty(samples)
        gaps_var = np.empty(samples)
        conv = np.empty(samples, dtype=bool)

        def fn(start: int, count: int):
            for j in range(count):
                i = start + j
                rng = sample_stream(seed, i)
                rho = random_mixed(2, 2, rng)
                closed = geometric_discord_2q(rho).value
                mv = geometric_discord_numeric(rho, "B", opt, rng=rng)
                gaps_num[i] = abs(mv.value - closed)
                gaps_var[i] = abs(geometric_discord_2q_variational(rho).value - closed)
                conv[i] = mv.converged
            return None

        _map_blocks(samples, 32, fn, resolve_threads())
        violations += check("optimizer vs closed form", float(gaps_num.max()),
                            OPTIMIZER_TOL, int(np.sum(gaps_num > OPTIMIZER_TOL)))
        violations += check("variational vs closed form", float(gaps_var.max()),
                            ANALYTIC_TOL, int(np.sum(gaps_var > ANALYTIC_TOL)))
        noconv_fraction = float(np.mean(~conv))
        lines.append(f"  unconverged fraction {noconv_fraction:.2e} "
                     f"(limit {NOCONV_FRACTION_LIMIT:.0e})")

    result = VerifyResult(
        suite=cfg.suite,
        samples=samples,
        seed=seed,
        violations=violations,
        noconv_fraction=noconv_fraction,
        report="",
    )
    lines.append("PASS" if result.ok else "FAIL")
    return replace(result, report="\n".join(lines))


def run_experiment(cfg: ExperimentConfig) -> str | VerifyResult:
    """Dispatch a config to its experiment; returns CSV path or result."""
    ops = {
        "scatter-2q": scatter_2q,
        "scatter-2x3": scatter_2x3,
        "pure-qudit": pure_qudit_scan,
        "family-sweep": family_sweep,
        "boundary-2q": boundary_2q,
    }
    if cfg.experiment in ops:
        return ops[cfg.experiment](cfg)
    if cfg.experiment == "oracle-check":
        return verify(replace(cfg, suite="oracle"))
    return verify(cfg)
