"""Walk through the two-qubit correlation hierarchy D_G >= Q >= N^2.

Samples a random cloud of mixed two-qubit states, evaluates all three
quantities in closed form, checks the chain sample by sample, and
renders the cloud next to its analytic boundaries.
"""
import numpy as np

from qcorr import (
    ExperimentConfig,
    boundary_2q,
    emit_svg_scatter,
    geometric_discord_2q,
    negativity,
    q_lower_bound,
    scatter_2q,
    sep_mixture,
    sep_opt_state,
    two_qubit_cloud,
)

# --- a cloud of random states, closed forms only ---
neg, dg, q = two_qubit_cloud(samples=20000, seed=1)
nsq = neg**2
print(f"sampled {neg.size} states")
print(f"  min(D_G - N^2) = {np.min(dg - nsq):.3e}   (Theorem: >= 0)")
print(f"  min(D_G - Q)   = {np.min(dg - q):.3e}   (Q is a lower bound on D_G)")
print(f"  min(Q - N^2)   = {np.min(q - nsq):.3e}   (and still above N^2)")

# --- the separable state with the largest possible discord ---
rho = sep_opt_state()
print(f"\nmaximal-discord separable state: N = {negativity(rho).value}, "
      f"D_G = {geometric_discord_2q(rho).value:.6f} (= 1/4)")
print(f"  its Q value: {q_lower_bound(rho).value:.6f}")

# mixing it towards the identity traces D_G = p^2/4 at zero negativity
for p in (1.0, 0.5, 0.25):
    print(f"  sep_mixture({p}): D_G = {geometric_discord_2q(sep_mixture(p)).value:.6f}"
          f" vs p^2/4 = {p * p / 4:.6f}")

# --- figure: cloud and the attainable region's edges ---
scatter_2q(ExperimentConfig("scatter-2q", samples=20000, seed=1,
                            output_path="demo_scatter_2q.csv"))
emit_svg_scatter("demo_scatter_2q.csv", "demo_scatter_2q.svg",
                 x="negativity_sq", y=("d_g",), title="random two-qubit states")
boundary_2q(ExperimentConfig("boundary-2q", grid=120,
                             output_path="demo_boundary_2q.csv"))
emit_svg_scatter("demo_boundary_2q.csv", "demo_boundary_2q.svg",
                 x="negativity_sq", y=("d_g",), group_by="kind",
                 title="upper envelope and pure-state floor")
print("\nwrote demo_scatter_2q.{csv,svg} and demo_boundary_2q.{csv,svg}")
