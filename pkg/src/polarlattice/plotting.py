"""SVG figures for the sweep subcommands (rendered in-process)."""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "polarlattice"


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def plot_dispersion(table, path):
    cols = table["columns"]
    x = cols["k_index"]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.plot(x, cols["Omega_plus"], label="upper polariton")
    ax1.plot(x, cols["Omega_minus"], label="lower polariton")
    ax1.plot(x, cols["omega_c"], "k:", lw=0.8, label="cavity photon")
    ax1.plot(x, cols["omega_s"], "k--", lw=0.8, label="symmetric exciton")
    ax1.plot(x, cols["omega_a"], "g-.", lw=0.8, label="antisymmetric exciton")
    lo = min(cols["Omega_minus"])
    ax1.set_ylim(lo - 1e-3, max(cols["omega_a"]) + 2e-3)
    ax1.set_xlabel("k index along path")
    ax1.set_ylabel("energy (eV)")
    ax1.legend(fontsize=7)
    ax2.plot(x, cols["X2_lower"], "b-", label="|X-|^2")
    ax2.plot(x, cols["Y2_lower"], "b--", label="|Y-|^2")
    ax2.plot(x, cols["X2_upper"], "r-", label="|X+|^2")
    ax2.plot(x, cols["Y2_upper"], "r--", label="|Y+|^2")
    ax2.set_xlabel("k index along path")
    ax2.set_ylabel("weight")
    ax2.legend(fontsize=7)
    _save(fig, path)


def plot_theta_scan(table, path):
    cols = table["columns"]
    x = cols["theta_deg"]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.plot(x, cols["omega_s"], "k--", label="symmetric")
    ax1.plot(x, cols["omega_a"], "g-.", label="antisymmetric")
    ax1.plot(x, cols["Omega_plus"], label="upper polariton")
    ax1.plot(x, cols["Omega_minus"], label="lower polariton")
    ax1.set_xlabel("theta (deg)")
    ax1.set_ylabel("energy (eV)")
    ax1.legend(fontsize=7)
    ax2.plot(x, cols["X2_lower"], "b-", label="|X-|^2")
    ax2.plot(x, cols["Y2_lower"], "b--", label="|Y-|^2")
    ax2.plot(x, cols["X2_upper"], "r-", label="|X+|^2")
    ax2.plot(x, cols["Y2_upper"], "r--", label="|Y+|^2")
    ax2.set_xlabel("theta (deg)")
    ax2.set_ylabel("weight")
    ax2.legend(fontsize=7)
    _save(fig, path)


def plot_spectra(curves, path):
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    for theta_deg, curve in curves:
        ax1.plot(curve.omega_grid, curve.T, lw=0.9, label=f"{theta_deg:g} deg")
        ax2.plot(curve.omega_grid, curve.R, lw=0.9, label=f"{theta_deg:g} deg")
    ax1.set_title("transmission")
    ax2.set_title("reflection")
    for ax in (ax1, ax2):
        ax.set_xlabel("probe energy (eV)")
        ax.legend(fontsize=7)
    _save(fig, path)
