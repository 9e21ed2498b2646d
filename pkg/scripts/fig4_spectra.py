"""Transmission and reflection at k = 0 for several polarization angles (Fig. 4 setup)."""
import argparse
import math
from pathlib import Path

import numpy as np

from polarlattice import SystemParams
from polarlattice.plotting import plot_spectra
from polarlattice.polariton import resolve_system
from polarlattice.spectra import peak_visibility, spectrum_at_theta

parser = argparse.ArgumentParser()
parser.add_argument("--thetas", default="0,30,54.7356,70,90")
parser.add_argument("--tune", choices=("symmetric", "antisymmetric"), default="symmetric")
parser.add_argument("--out", default="results/fig4_spectra.svg")
args = parser.parse_args()

system = resolve_system(SystemParams(), tune_to=args.tune)
grid = np.arange(system.omega_c0 - 3e-3, system.omega_c0 + 3e-3, 2e-7)
curves = []
for d in (float(x) for x in args.thetas.split(",")):
    curve = spectrum_at_theta(system, math.radians(d), grid)
    curves.append((d, curve))
    try:
        contrast = f"{peak_visibility(curve):.3g}"
    except ValueError:
        contrast = "n/a"
    print(f"theta={d:8.4f} deg  T peaks {np.round(curve.peaks_T, 6)}  contrast {contrast}")
Path(args.out).parent.mkdir(parents=True, exist_ok=True)
plot_spectra(curves, args.out)
print(f"-> {args.out}")
