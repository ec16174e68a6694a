"""Command-line entry point.

    qcorr scatter-2q    --samples N --seed S [--rank R] --out PATH [--svg PATH]
    qcorr scatter-2x3   --samples N --seed S --restarts R --tol T \
                        --measured-side A|B --out PATH [--svg PATH]
    qcorr pure-qudit    --samples N --seed S --d D --grid G --out PATH [--svg PATH]
    qcorr family-sweep  --family werner|isotropic --d D --grid G --out PATH [--svg PATH]
    qcorr boundary-2q   --grid G --out PATH [--svg PATH]
    qcorr verify        --suite NAME --samples N --seed S [--restarts R --tol T]

Exit status of `verify` is 0 iff the suite reports zero violations and
the unconverged fraction stays under its limit. QCORR_THREADS bounds
worker parallelism (default: hardware threads).
"""
from __future__ import annotations

import argparse
import sys

from .harness import (
    SUITES,
    ExperimentConfig,
    boundary_2q,
    family_sweep,
    pure_qudit_scan,
    scatter_2q,
    scatter_2x3,
    verify,
)
from .measures import OptimizerConfig
from .svg import emit_svg_scatter

_SVG_AXES = {
    "scatter-2q": dict(x="negativity_sq", y=("d_g", "q")),
    "scatter-2x3": dict(x="negativity_sq", y=("d_g",)),
    "pure-qudit": dict(x="negativity_sq", y=("d_g",), group_by="kind"),
    "family-sweep": dict(
        x="parameter",
        y=("d_g_closed", "d_g_definitional", "d_g_numeric",
           "negativity_paper", "negativity_definitional"),
    ),
    "boundary-2q": dict(x="negativity_sq", y=("d_g",), group_by="kind"),
}


def _add_common(p: argparse.ArgumentParser, samples: int | None) -> None:
    p.add_argument("--samples", type=int, default=samples, help="sample count")
    p.add_argument("--seed", type=int, default=0, help="64-bit base seed")


def _add_optimizer(p: argparse.ArgumentParser, restarts: int) -> None:
    p.add_argument("--restarts", type=int, default=restarts,
                   help="optimizer restarts (first from the identity basis)")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="optimizer simplex convergence tolerance")


def _add_out(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--out", default=default, help="output CSV path")
    p.add_argument("--svg", default=None, help="also render an SVG plot here")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qcorr",
        description="negativity / geometric-discord experiments and verifiers",
    )
    sub = top.add_subparsers(dest="experiment", required=True)

    p = sub.add_parser("scatter-2q", help="random two-qubit cloud, closed forms")
    _add_common(p, 100000)
    p.add_argument("--rank", type=int, default=None, help="mixed-state rank (default full)")
    _add_out(p, "scatter-2q.csv")

    p = sub.add_parser("scatter-2x3", help="random 2x3 cloud, optimizer discord")
    _add_common(p, 1000)
    p.add_argument("--rank", type=int, default=None, help="mixed-state rank (default full)")
    p.add_argument("--measured-side", choices=("A", "B"), default="A",
                   help="side carrying the measurement (default: the qubit)")
    _add_optimizer(p, 8)
    _add_out(p, "scatter-2x3.csv")

    p = sub.add_parser("pure-qudit", help="random pure d x d spectra plus bound curve")
    _add_common(p, 3000)
    p.add_argument("--d", type=int, default=3, help="subsystem dimension, 2..7")
    p.add_argument("--grid", type=int, default=200, help="curve grid points")
    _add_out(p, "pure-qudit.csv")

    p = sub.add_parser("family-sweep", help="flip-symmetric / isotropic family sweep")
    p.add_argument("--family", choices=("werner", "isotropic"), default="werner")
    p.add_argument("--d", type=int, default=2, help="subsystem dimension")
    p.add_argument("--grid", type=int, default=101, help="parameter steps")
    p.add_argument("--seed", type=int, default=0, help="64-bit base seed")
    _add_optimizer(p, 8)
    _add_out(p, "family-sweep.csv")

    p = sub.add_parser("boundary-2q", help="upper envelope of the (N^2, D_G) region")
    p.add_argument("--grid", type=int, default=120, help="lattice resolution (>= 10)")
    _add_out(p, "boundary-2q.csv")

    p = sub.add_parser("verify", help="run an invariant suite; exit 0 iff clean")
    p.add_argument("--suite", choices=SUITES, required=True)
    _add_common(p, None)
    p.add_argument("--measured-side", choices=("A", "B"), default="A")
    _add_optimizer(p, 24)

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    opt = None
    if hasattr(args, "restarts"):
        opt = OptimizerConfig(restarts=args.restarts, convergence_tol=args.tol)
    cfg = ExperimentConfig(
        experiment=args.experiment,
        samples=getattr(args, "samples", None),
        seed=getattr(args, "seed", 0),
        d=getattr(args, "d", None),
        grid=getattr(args, "grid", None),
        family=getattr(args, "family", "werner"),
        measured_side=getattr(args, "measured_side", "A"),
        rank=getattr(args, "rank", None),
        optimizer=opt,
        output_path=getattr(args, "out", None),
        suite=getattr(args, "suite", None),
    )

    if args.experiment == "verify":
        result = verify(cfg)
        print(result.report)
        return 0 if result.ok else 1

    op = {
        "scatter-2q": scatter_2q,
        "scatter-2x3": scatter_2x3,
        "pure-qudit": pure_qudit_scan,
        "family-sweep": family_sweep,
        "boundary-2q": boundary_2q,
    }[args.experiment]
    path = op(cfg)
    print(f"wrote {path}")
    if args.svg:
        svg_path = emit_svg_scatter(path, args.svg, **_SVG_AXES[args.experiment])
        print(f"wrote {svg_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
