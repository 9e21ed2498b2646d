"""Polariton branches and Hopfield weights versus in-plane k (Fig. 2 setup).

Exciton at the k = 0 band bottom, cavity tuned to it, |hbar f| either
computed or pinned with --f.
"""
import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from polarlattice import SystemParams
from polarlattice.polariton import polariton_at_k, resolve_system

parser = argparse.ArgumentParser()
parser.add_argument("--f", type=float, default=1.5e-4, help="pinned |hbar f| in eV (<= 0: computed)")
parser.add_argument("--kmax", type=float, default=2e-4, help="1/Angstrom")
parser.add_argument("--out", default="results/fig2_dispersion.svg")
args = parser.parse_args()

params = SystemParams(f_s=args.f if args.f > 0 else None)
system = resolve_system(params)
ks = np.linspace(0, args.kmax, 400)
rows = [polariton_at_k(system, (k, 0.0)) for k in ks]
up = np.array([r.solution.omega_upper for r in rows])
lo = np.array([r.solution.omega_lower for r in rows])

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
ax1.plot(ks, up, label="upper")
ax1.plot(ks, lo, label="lower")
ax1.plot(ks, [r.omega_c for r in rows], "k:", lw=0.8, label="photon")
ax1.axhline(rows[0].omega_s, color="k", ls="--", lw=0.8, label="symmetric exciton")
ax1.set_ylim(lo.min() - 5e-4, rows[0].omega_s + 3e-3)
ax1.set_xlabel("k (1/A)")
ax1.set_ylabel("energy (eV)")
ax1.legend(fontsize=7)
ax2.plot(ks, [r.solution.X2_lower for r in rows], "b-", label="lower, exciton")
ax2.plot(ks, [r.solution.Y2_lower for r in rows], "b--", label="lower, photon")
ax2.plot(ks, [r.solution.X2_upper for r in rows], "r-", label="upper, exciton")
ax2.plot(ks, [r.solution.Y2_upper for r in rows], "r--", label="upper, photon")
ax2.set_xlabel("k (1/A)")
ax2.legend(fontsize=7)
fig.tight_layout()
Path(args.out).parent.mkdir(parents=True, exist_ok=True)
fig.savefig(args.out)
print(f"f = {system.coupling.f_s:.4e} eV, Rabi splitting = {rows[0].solution.splitting:.4e} eV -> {args.out}")
