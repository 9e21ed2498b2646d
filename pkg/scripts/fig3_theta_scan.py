"""Bright/dark levels and polaritons versus polarization angle at k = 0 (Fig. 3 setup)."""
import argparse
import math
from pathlib import Path

import numpy as np

from polarlattice import SystemParams
from polarlattice.couplings import magic_angle
from polarlattice.plotting import plot_theta_scan
from polarlattice.polariton import theta_scan

parser = argparse.ArgumentParser()
parser.add_argument("--out", default="results/fig3_theta_scan.svg")
args = parser.parse_args()

deg = np.linspace(0, 90, 181)
rows = theta_scan(SystemParams(), [math.radians(d) for d in deg])
table = {"columns": {
    "theta_deg": deg,
    "omega_s": [r.omega_s for r in rows],
    "omega_a": [r.omega_a for r in rows],
    "Omega_plus": [r.solution.omega_upper for r in rows],
    "Omega_minus": [r.solution.omega_lower for r in rows],
    "X2_lower": [r.solution.X2_lower for r in rows],
    "Y2_lower": [r.solution.Y2_lower for r in rows],
    "X2_upper": [r.solution.X2_upper for r in rows],
    "Y2_upper": [r.solution.Y2_upper for r in rows],
}}
Path(args.out).parent.mkdir(parents=True, exist_ok=True)
plot_theta_scan(table, args.out)
print(f"bright/dark crossing at {math.degrees(magic_angle()):.4f} deg -> {args.out}")
