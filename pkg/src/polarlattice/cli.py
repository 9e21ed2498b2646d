"""Command-line front end.

    polarlattice couplings   [--config F] [--set k=v ...]
    polarlattice dispersion  [--path G,X,M,G --samples N | --grid kx0:kx1:n]
    polarlattice theta-scan  [--grid deg0:deg1:n]
    polarlattice spectra     [--grid w0:w1:n] [--thetas 0,30,60,90]
    polarlattice manifest replay MANIFEST.json

Exit codes: 0 ok, 1 replay mismatch, 2 config parse error, 3 domain or
constraint error, 4 I/O error.
"""
import argparse
from datetime import datetime, timezone
import hashlib
import json
import math
from pathlib import Path
import sys
import warnings

import numpy as np

from . import __version__, couplings, exciton, spectra
from ._parallel import parallel_map
from .config import config_hash, load_config, params_from_mapping, parse_overrides
from .errors import ConfigError, DomainError
from .exciton import Branch
from .polariton import polariton_at_k, resolve_system, theta_scan

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4

UNITS = "units: energy=eV length=Angstrom wavevector=1/Angstrom angle=deg"


def fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def parse_grid(text):
    try:
        start, stop, count = text.split(":")
        start, stop, count = float(start), float(stop), int(count)
    except ValueError:
        raise ConfigError(f"grid must be start:stop:count, got {text!r}") from None
    if count < 1:
        raise DomainError("grid count must be >= 1")
    return np.linspace(start, stop, count)


def parse_path(text, a):
    named = {"G": (0.0, 0.0), "Γ": (0.0, 0.0), "X": (math.pi / a, 0.0), "M": (math.pi / a, math.pi / a)}
    points = []
    for token in text.split(","):
        token = token.strip()
        if token in named:
            points.append(named[token])
            continue
        try:
            kx, ky = (float(s) for s in token.split(":"))
        except ValueError:
            raise ConfigError(f"path waypoint {token!r} is neither G, X, M nor kx:ky") from None
        if not exciton.in_brillouin_zone((kx, ky), a):
            raise DomainError(f"path waypoint {token!r} lies outside the first Brillouin zone")
        points.append((kx, ky))
    if len(points) < 2:
        raise ConfigError("path needs at least two waypoints")
    return points


def path_samples(waypoints, samples):
    if samples < 1:
        raise DomainError("samples per segment must be >= 1")
    ks = []
    for (x0, y0), (x1, y1) in zip(waypoints, waypoints[1:]):
        for i in range(samples):
            t = i / samples
            ks.append((x0 + t * (x1 - x0), y0 + t * (y1 - y0)))
    ks.append(tuple(waypoints[-1]))
    return ks


def _table(columns, summary=(), derived=None, extra=None):
    return {"columns": columns, "summary": list(summary), "derived": derived or {}, "extra": extra}


def cmd_couplings(params, args=None):
    system = resolve_system(params)
    lc = system.lattice
    J_nn = couplings.collinear_transfer(params.mu, params.a, system.q)
    omega_s, omega_a = exciton.site_energies(params.omega_A, system.J_on)
    rows = [
        ("q", system.q, "1/Angstrom"),
        ("J_on_static", couplings.static_onsite(params.mu, params.R_onsite), "eV"),
        ("theta_deg", math.degrees(params.theta), "deg"),
        ("J_on_theta", system.J_on, "eV"),
        ("J_nn_signed", J_nn, "eV"),
        ("J1", system.J1, "eV"),
        ("J1p", lc.J1p, "eV"),
        ("omega_s_site", omega_s, "eV"),
        ("omega_a_site", omega_a, "eV"),
        ("omega_s_k0", exciton.dispersion(Branch.SYMMETRIC, (0.0, 0.0), lc), "eV"),
        ("bandwidth_symmetric", exciton.axis_bandwidth(lc, Branch.SYMMETRIC), "eV"),
        ("effective_mass_c2", exciton.effective_mass(lc), "eV*Angstrom^2"),
        ("L_resolved", system.mode.L, "Angstrom"),
        ("omega_c0", system.omega_c0, "eV"),
        ("f", system.coupling.f_s, "eV"),
        ("Gamma_s", params.Gamma_s, "eV"),
        ("observable_8J1_gt_Gamma_s", exciton.is_observable(lc, params.Gamma_s), "bool"),
    ]
    columns = {
        "quantity": [r[0] for r in rows],
        "value": [r[1] for r in rows],
        "unit": [r[2] for r in rows],
    }
    return _table(columns, derived=system.derived())


def cmd_dispersion(params, args):
    system = resolve_system(params)
    if args.get("grid"):
        ks = [(float(kx), 0.0) for kx in parse_grid(args["grid"])]
        for k in ks:
            if not exciton.in_brillouin_zone(k, params.a):
                raise DomainError(f"k={k} lies outside the first Brillouin zone")
    else:
        ks = path_samples(parse_path(args.get("path") or "G,X,M,G", params.a), int(args.get("samples", 40)))
    results = parallel_map(lambda k: polariton_at_k(system, k), ks)
    names = ["k_index", "kx", "ky", "omega_s", "omega_a", "omega_c", "Omega_plus", "Omega_minus",
             "X2_lower", "Y2_lower", "X2_upper", "Y2_upper"]
    if params.three_mode:
        names += ["Omega3_1", "Omega3_2", "Omega3_3", "dark_w_1", "dark_w_2", "dark_w_3"]
    columns = {n: [] for n in names}
    for i, row in enumerate(results):
        sol = row.solution
        vals = [i, row.k[0], row.k[1], row.omega_s, row.omega_a, row.omega_c, sol.omega_upper,
                sol.omega_lower, sol.X2_lower, sol.Y2_lower, sol.X2_upper, sol.Y2_upper]
        if params.three_mode:
            vals += list(row.three_mode.energies) + [float(w) for w in row.three_mode.weights[:, 2]]
        for n, v in zip(names, vals):
            columns[n].append(v)
    return _table(columns, derived=system.derived())


def cmd_theta_scan(params, args):
    thetas_deg = parse_grid(args.get("grid") or "0:90:91")
    rows = theta_scan(params, [math.radians(t) for t in thetas_deg], map_fn=parallel_map)
    names = ["theta_deg", "J_on", "omega_s", "omega_a", "omega_c", "Omega_plus", "Omega_minus",
             "X2_lower", "Y2_lower", "X2_upper", "Y2_upper"]
    columns = {n: [] for n in names}
    for deg, row in zip(thetas_deg, rows):
        sol = row.solution
        vals = [float(deg), row.J_on, row.omega_s, row.omega_a, row.omega_c, sol.omega_upper,
                sol.omega_lower, sol.X2_lower, sol.Y2_lower, sol.X2_upper, sol.Y2_upper]
        for n, v in zip(names, vals):
            columns[n].append(v)
    derived = resolve_system(params, tune_to="antisymmetric").derived()
    return _table(columns, derived=derived)


def default_spectrum_grid(system, thetas):
    p = system.params
    f = system.coupling.f_s
    span = 20 * p.gamma_mirror + 4 * f
    for theta in thetas:
        omega_s = exciton.site_energies(p.omega_A, couplings.onsite_angle(p.mu, p.R_onsite, theta))[0]
        omega_s -= exciton.axis_bandwidth(system.lattice)
        span = max(span, abs(omega_s - system.omega_c0) + 4 * f + 20 * p.gamma_mirror)
    step = 2 * f / 500 if f > 0 else p.gamma_mirror / 50
    count = int(math.ceil(2 * span / step)) + 1
    return np.linspace(system.omega_c0 - span, system.omega_c0 + span, count)


def cmd_spectra(params, args):
    system = resolve_system(params, tune_to=args.get("tune") or "symmetric")
    thetas_deg = [float(t) for t in (args.get("thetas") or "0,30,60,90").split(",")]
    thetas = [math.radians(t) for t in thetas_deg]
    if args.get("grid"):
        grid = parse_grid(args["grid"])
    else:
        grid = default_spectrum_grid(system, thetas)
    curves = parallel_map(lambda th: spectra.spectrum_at_theta(system, th, grid), thetas)
    columns = {n: [] for n in ("theta_deg", "omega", "T", "R", "A")}
    summary = [spectra.MODEL_NOTE]
    for deg, curve in zip(thetas_deg, curves):
        columns["theta_deg"] += [deg] * curve.omega_grid.size
        columns["omega"] += curve.omega_grid.tolist()
        columns["T"] += curve.T.tolist()
        columns["R"] += curve.R.tolist()
        columns["A"] += curve.A.tolist()
        summary.append(
            f"peaks theta_deg={fmt(deg)} T_peaks={';'.join(fmt(x) for x in curve.peaks_T)} "
            f"R_dips={';'.join(fmt(x) for x in curve.dips_R)}"
        )
    return _table(columns, summary, system.derived(), extra=list(zip(thetas_deg, curves)))


COMMANDS = {
    "couplings": cmd_couplings,
    "dispersion": cmd_dispersion,
    "theta-scan": cmd_theta_scan,
    "spectra": cmd_spectra,
}


def render(table, subcommand, chash, output_format="csv"):
    columns = table["columns"]
    if output_format == "json":
        doc = {
            "subcommand": subcommand,
            "config_hash": chash,
            "units": UNITS,
            "columns": {k: [v if isinstance(v, (str, bool, int)) else float(v) for v in vals]
                        for k, vals in columns.items()},
            "summary": table["summary"],
        }
        return json.dumps(doc, indent=1) + "\n"
    lines = [f"# polarlattice {subcommand} config_hash={chash}", f"# {UNITS}", ",".join(columns)]
    for row in zip(*columns.values()):
        lines.append(",".join(fmt(v) for v in row))
    lines += [f"# {s}" for s in table["summary"]]
    return "\n".join(lines) + "\n"


def execute(subcommand, params, args):
    """Run one subcommand; returns (rendered text, table, config hash)."""
    table = COMMANDS[subcommand](params, args)
    chash = config_hash(subcommand, params, args)
    return render(table, subcommand, chash, args.get("format", "csv")), table, chash


def write_manifest(path, subcommand, params, args, table, chash, text):
    manifest = {
        "subcommand": subcommand,
        "config_hash": chash,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "params": params.to_dict(),
        "args": args,
        "derived": table["derived"],
        "output_sha256": hashlib.sha256(text.encode()).hexdigest(),
    }
    Path(path).write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")


def replay_manifest(path, out=None):
    """Re-run a manifest; returns (matches, recomputed hash, expected hash)."""
    try:
        manifest = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid manifest: {exc}") from None
    params = params_from_mapping(manifest["params"])
    text, _, _ = execute(manifest["subcommand"], params, manifest["args"])
    digest = hashlib.sha256(text.encode()).hexdigest()
    if out:
        Path(out).write_text(text)
    return digest == manifest["output_sha256"], digest, manifest["output_sha256"]


def _common(p, grid_help):
    p.add_argument("--config", help="key=value or JSON config file")
    p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE", help="override a config key")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--plot", help="write an SVG figure here")
    p.add_argument("--manifest", help="manifest sidecar path (default OUT.manifest.json)")
    p.add_argument("--grid", help=grid_help)


def build_parser():
    parser = argparse.ArgumentParser(prog="polarlattice", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("couplings", help="dipole-dipole couplings and derived scales"), "unused")
    p = sub.add_parser("dispersion", help="exciton and polariton bands along a k path")
    _common(p, "kx line start:stop:count in 1/Angstrom (replaces --path)")
    p.add_argument("--path", default="G,X,M,G", help="waypoints: G, X, M or kx:ky")
    p.add_argument("--samples", type=int, default=40, help="samples per path segment")
    p = sub.add_parser("theta-scan", help="k=0 levels versus polarization angle")
    _common(p, "theta grid start:stop:count in degrees (default 0:90:91)")
    p = sub.add_parser("spectra", help="transmission/reflection spectra")
    _common(p, "probe energy grid start:stop:count in eV")
    p.add_argument("--thetas", default="0,30,60,90", help="comma separated angles in degrees")
    p.add_argument("--tune", choices=("symmetric", "antisymmetric"), default="symmetric",
                   help="zero-detuning reference when L is auto")
    p = sub.add_parser("manifest", help="manifest tools")
    msub = p.add_subparsers(dest="action", required=True)
    r = msub.add_parser("replay", help="re-run a manifest and verify its output hash")
    r.add_argument("manifest_path")
    r.add_argument("--out")
    return parser


def _command_args(ns):
    args = {"format": ns.format, "grid": ns.grid}
    if ns.command == "dispersion":
        args.update(path=ns.path, samples=ns.samples)
    elif ns.command == "spectra":
        args.update(thetas=ns.thetas, tune=ns.tune)
    return args


def _run(ns):
    if ns.command == "manifest":
        ok, digest, expected = replay_manifest(ns.manifest_path, ns.out)
        print(f"replay {'ok' if ok else 'MISMATCH'} sha256={digest} expected={expected}")
        return EXIT_OK if ok else EXIT_MISMATCH
    overrides = parse_overrides(ns.set)
    params = load_config(ns.config, overrides) if ns.config else params_from_mapping({}, overrides)
    args = _command_args(ns)
    text, table, chash = execute(ns.command, params, args)
    if ns.out:
        Path(ns.out).write_text(text)
    else:
        sys.stdout.write(text)
    manifest_path = ns.manifest or (f"{ns.out}.manifest.json" if ns.out else None)
    if manifest_path:
        write_manifest(manifest_path, ns.command, params, args, table, chash, text)
    if ns.plot:
        from . import plotting

        if ns.command == "spectra":
            plotting.plot_spectra(table["extra"], ns.plot)
        elif ns.command == "dispersion":
            plotting.plot_dispersion(table, ns.plot)
        elif ns.command == "theta-scan":
            plotting.plot_theta_scan(table, ns.plot)
    return EXIT_OK


def main(argv=None):
    ns = build_parser().parse_args(argv)
    with warnings.catch_warnings():
        warnings.simplefilter("default")
        warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
        try:
            return _run(ns)
        except ConfigError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        except DomainError as exc:
            print(f"domain error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        except OSError as exc:
            print(f"I/O error: {exc}", file=sys.stderr)
            return EXIT_IO
        except KeyError as exc:
            print(f"config error: missing field {exc}", file=sys.stderr)
            return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
