#!/usr/bin/env python3
"""Reproduce the four comparison figures end to end.

Writes run configs, drives the CLI to produce CSVs, and (if the oscplots
package is installed) renders PNGs.  Everything lands under out/.

Usage: python3 scripts/make_figures.py [--outdir out]
"""

import argparse
import shutil
import subprocess
import sys
from pathlib import Path

EVOLVE_BASE = """\
omega = 1.0
gamma_a = 0.01
gamma_b = 0.01
model = both
t_max = 100.0
dt_out = 0.2
"""

RUNS = {
    # weak symmetric coupling: excitations and negativity vs time
    "fig1a_fig2a": EVOLVE_BASE + "kappa = 0.05\nlambda = 0.05\noutputs = n_a, n_b, logneg\n",
    # strong squeezing coupling
    "fig1b_fig2b": EVOLVE_BASE + "kappa = 0.0\nlambda = 0.3333333333333333\noutputs = n_a, n_b, logneg\n",
    # fidelity vs time at fixed kappa, three squeezing strengths
    "fig3_lam0125": EVOLVE_BASE.replace("t_max = 100.0", "t_max = 50.0")
    + "kappa = 0.05\nlambda = 0.125\noutputs = fidelity_a\n",
    "fig3_lam025": EVOLVE_BASE.replace("t_max = 100.0", "t_max = 50.0")
    + "kappa = 0.05\nlambda = 0.25\noutputs = fidelity_a\n",
}

SWEEP = """\
omega = 1.0
kappa = 0.0
lambda = 0.3333333333333333
gamma_a = 0.01
gamma_b = 0.01
nbar_grid = {grid}
"""

FIGSPECS = {
    "fig1": "kind = excitation\ncsv = {d}/fig1a_fig2a.csv\nout = {d}/fig1.png\n",
    "fig2": "kind = negativity\ncsv = {d}/fig1b_fig2b.csv\nout = {d}/fig2.png\n",
    "fig3": "kind = fidelity\ncsv = {d}/fig3_lam0125.csv, {d}/fig3_lam025.csv\nout = {d}/fig3.png\n",
    "fig4": "kind = steady\ncsv = {d}/fig4_sweep.csv\nout = {d}/fig4.png\n",
}


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for name, text in RUNS.items():
        cfg = outdir / f"{name}.cfg"
        cfg.write_text(text)
        csv = outdir / f"{name}.csv"
        subprocess.run(
            [sys.executable, "-m", "coupledosc.cli", "evolve",
             "--config", str(cfg), "--out", str(csv)],
            check=True,
        )
        print(f"wrote {csv}")

    grid = ", ".join(f"{0.01 * i:.2f}" for i in range(31))
    sweep_cfg = outdir / "fig4_sweep.cfg"
    sweep_cfg.write_text(SWEEP.format(grid=grid))
    sweep_csv = outdir / "fig4_sweep.csv"
    subprocess.run(
        [sys.executable, "-m", "coupledosc.cli", "steady-sweep",
         "--config", str(sweep_cfg), "--out", str(sweep_csv)],
        check=True,
    )
    print(f"wrote {sweep_csv}")

    if shutil.which("render") is None:
        print("oscplots not installed; skipping figure rendering")
        return 0
    for name, spec in FIGSPECS.items():
        spec_path = outdir / f"{name}.spec"
        spec_path.write_text(spec.format(d=outdir))
        subprocess.run(["render", "--spec", str(spec_path)], check=True)
        print(f"rendered {outdir}/{name}.png")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
