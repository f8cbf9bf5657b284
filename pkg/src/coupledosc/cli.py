"""Command-line interface: config-driven evolutions, steady sweeps, CSV output.

Config files are flat key = value text ('#' starts a comment).  CSV output
is deterministic: comma separated, '.' decimal, Unix newlines, 12
significant digits.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import fock_oracle
from .dynamics import (
    initial_exponent,
    evolve,
    moments,
    moments_to_covariance,
    to_covariance,
)
from .errors import (
    AsymmetricBath,
    AsymmetricDamping,
    ConfigError,
    CoupledOscError,
    CutoffTooSmall,
    NegativeParameter,
    NonzeroMean,
    NotHurwitz,
    PhysicalityLoss,
    StabilityViolation,
    StepSizeUnderflow,
    UnphysicalCovariance,
)
from .generators import build_local, build_nonlocal, build_nonlocal_thermal
from .measures import fidelity, log_negativity, one_mode_reduce
from .model import InitialState, ModelParams, ModeState, validate, validate_initial
from .steady import nbar_sweep

__all__ = ["RunConfig", "parse_config", "load_run_config", "run_evolve", "run_steady_sweep", "main"]

_OUTPUT_ORDER = ("n_a", "n_b", "logneg", "fidelity_a", "fidelity_b", "covariance")
_MODELS = ("local", "nonlocal")
_QUAD_NAMES = ("qa", "pa", "qb", "pb")
_COV_PAIRS = [(i, j) for i in range(4) for j in range(i, 4)]

_FLOAT_KEYS = {
    "omega", "kappa", "lambda", "gamma_a", "gamma_b", "nbar_a", "nbar_b",
    "t_max", "dt_out",
    "init_a_n0", "init_a_r", "init_a_theta", "init_a_disp_re", "init_a_disp_im",
    "init_b_n0", "init_b_r", "init_b_theta", "init_b_disp_re", "init_b_disp_im",
}
_OTHER_KEYS = {"model", "outputs", "nbar_grid", "oracle_cutoff"}


@dataclass(frozen=True)
class RunConfig:
    """Validated run description shared by the evolve and sweep commands."""

    params: ModelParams
    initial: InitialState
    model: str  # local | nonlocal | both
    t_max: float | None
    dt_out: float | None
    outputs: tuple[str, ...]
    nbar_grid: tuple[float, ...] | None
    oracle_cutoff: int


def parse_config(text: str) -> dict[str, tuple[str, int]]:
    """Parse key = value lines into {key: (raw value, line number)}."""
    entries: dict[str, tuple[str, int]] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value'", line=lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError("empty key", line=lineno)
        if key not in _FLOAT_KEYS and key not in _OTHER_KEYS:
            raise ConfigError(f"unknown key '{key}'", line=lineno)
        if key in entries:
            raise ConfigError(f"duplicate key '{key}'", line=lineno)
        entries[key] = (value, lineno)
    return entries


def _get_float(entries, key: str, default: float) -> float:
    if key not in entries:
        return default
    value, lineno = entries[key]
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"cannot parse '{value}' as a number", line=lineno, field=key)


def _get_float_list(entries, key: str) -> tuple[float, ...] | None:
    if key not in entries:
        return None
    value, lineno = entries[key]
    items = [tok.strip() for tok in value.split(",") if tok.strip()]
    if not items:
        raise ConfigError("empty list", line=lineno, field=key)
    try:
        return tuple(float(tok) for tok in items)
    except ValueError:
        raise ConfigError(f"cannot parse '{value}' as a number list", line=lineno, field=key)


def load_run_config(text: str, *, need: str) -> RunConfig:
    """Build and validate a RunConfig; `need` is 'evolve', 'sweep', or 'any'."""
    entries = parse_config(text)

    params = ModelParams(
        omega=_get_float(entries, "omega", 1.0),
        kappa=_get_float(entries, "kappa", 0.0),
        lambda_=_get_float(entries, "lambda", 0.0),
        gamma_a=_get_float(entries, "gamma_a", 0.0),
        gamma_b=_get_float(entries, "gamma_b", 0.0),
        nbar_a=_get_float(entries, "nbar_a", 0.0),
        nbar_b=_get_float(entries, "nbar_b", 0.0),
    )

    def mode(prefix: str) -> ModeState:
        return ModeState(
            n0=_get_float(entries, f"{prefix}_n0", 0.0),
            r=_get_float(entries, f"{prefix}_r", 0.0),
            theta=_get_float(entries, f"{prefix}_theta", 0.0),
            displacement=complex(
                _get_float(entries, f"{prefix}_disp_re", 0.0),
                _get_float(entries, f"{prefix}_disp_im", 0.0),
            ),
        )

    initial = InitialState(mode_a=mode("init_a"), mode_b=mode("init_b"))

    model = "both"
    if "model" in entries:
        model, lineno = entries["model"]
        if model not in ("local", "nonlocal", "both"):
            raise ConfigError(
                f"model must be local, nonlocal, or both, got '{model}'",
                line=lineno, field="model",
            )

    outputs: tuple[str, ...] = ("n_a", "n_b", "logneg")
    if "outputs" in entries:
        value, lineno = entries["outputs"]
        toks = tuple(tok.strip() for tok in value.split(",") if tok.strip())
        if not toks:
            raise ConfigError("empty outputs list", line=lineno, field="outputs")
        for tok in toks:
            if tok not in _OUTPUT_ORDER:
                raise ConfigError(f"unknown output '{tok}'", line=lineno, field="outputs")
        outputs = toks
    if model != "both" and any(o.startswith("fidelity") for o in outputs):
        raise ConfigError(
            "fidelity outputs compare the two models and require model = both",
            field="outputs",
        )

    t_max = _get_float(entries, "t_max", 0.0) if "t_max" in entries else None
    dt_out = _get_float(entries, "dt_out", 0.0) if "dt_out" in entries else None
    if need == "evolve":
        if t_max is None or dt_out is None:
            raise ConfigError("evolve requires t_max and dt_out")
        if t_max <= 0 or dt_out <= 0:
            raise ConfigError("t_max and dt_out must be > 0")

    nbar_grid = _get_float_list(entries, "nbar_grid")
    if need == "sweep":
        if nbar_grid is None:
            raise ConfigError("steady-sweep requires nbar_grid")
        if any(n < 0 for n in nbar_grid):
            raise ConfigError("nbar_grid values must be >= 0", field="nbar_grid")
        if any(b < a for a, b in zip(nbar_grid, nbar_grid[1:])):
            raise ConfigError("nbar_grid must be nondecreasing", field="nbar_grid")

    cutoff = 10
    if "oracle_cutoff" in entries:
        value, lineno = entries["oracle_cutoff"]
        try:
            cutoff = int(value)
        except ValueError:
            raise ConfigError(f"cannot parse '{value}' as an integer",
                              line=lineno, field="oracle_cutoff")

    validate(params)
    validate_initial(initial)
    return RunConfig(
        params=params,
        initial=initial,
        model=model,
        t_max=t_max,
        dt_out=dt_out,
        outputs=outputs,
        nbar_grid=nbar_grid,
        oracle_cutoff=cutoff,
    )


def _fmt(x: float) -> str:
    if x == 0:
        x = 0.0  # normalize -0.0 for byte-stable output
    return f"{x:.12g}"


def _generator_for(params: ModelParams, model: str):
    if model == "local":
        return build_local(params)
    if params.nbar_a == 0 and params.nbar_b == 0:
        return build_nonlocal(params)
    return build_nonlocal_thermal(params)


def _records_gaussian(config: RunConfig, model: str):
    gen = _generator_for(config.params, model)
    traj = evolve(initial_exponent(config.initial), gen, config.t_max, config.dt_out)
    return [(s.t, moments(s), to_covariance(s)) for s in traj]


def _records_oracle(config: RunConfig, model: str):
    cutoff = config.oracle_cutoff
    if model == "local":
        system = fock_oracle.build_local_superop(config.params, cutoff)
    else:
        system = fock_oracle.build_nonlocal_superop(config.params, cutoff)
    rho0 = fock_oracle.initial_density(config.initial, cutoff)
    traj = fock_oracle.integrate(system, rho0, config.t_max, config.dt_out)
    records = []
    for t, dm in traj:
        m = fock_oracle.expectations(system, dm)
        records.append((t, m, moments_to_covariance(m)))
    return records


def run_evolve(config: RunConfig, *, oracle: bool = False) -> str:
    """Time evolution under one or both models, rendered as a CSV document."""
    models = list(_MODELS) if config.model == "both" else [config.model]
    make = _records_oracle if oracle else _records_gaussian
    records = {m: make(config, m) for m in models}

    times = [rec[0] for rec in records[models[0]]]
    header = ["t"]
    columns = [times]

    for out in _OUTPUT_ORDER:
        if out not in config.outputs:
            continue
        if out in ("n_a", "n_b"):
            for m in models:
                header.append(f"{out}_{m}")
                columns.append([getattr(mom, out) for _, mom, _ in records[m]])
        elif out == "logneg":
            for m in models:
                header.append(f"logneg_{m}")
                columns.append([log_negativity(cov) for _, _, cov in records[m]])
        elif out in ("fidelity_a", "fidelity_b"):
            which = out[-1]
            header.append(out)
            columns.append(
                [
                    fidelity(
                        one_mode_reduce(cov_l, which), one_mode_reduce(cov_n, which)
                    )
                    for (_, _, cov_l), (_, _, cov_n) in zip(
                        records["local"], records["nonlocal"]
                    )
                ]
            )
        elif out == "covariance":
            for m in models:
                covs = [cov for _, _, cov in records[m]]
                for i, j in _COV_PAIRS:
                    header.append(f"cov_{_QUAD_NAMES[i]}_{_QUAD_NAMES[j]}_{m}")
                    columns.append([cov.V[i, j] for cov in covs])

    lines = [",".join(header)]
    for row_idx in range(len(times)):
        lines.append(",".join(_fmt(col[row_idx]) for col in columns))
    return "\n".join(lines) + "\n"


def run_steady_sweep(config: RunConfig) -> str:
    """Steady-state quantities over the configured nbar grid, as CSV."""
    rows = nbar_sweep(config.params, list(config.nbar_grid))
    lines = ["nbar,logneg_local,logneg_nonlocal,fidelity_onemode"]
    for row in rows:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (row.nbar, row.logneg_local, row.logneg_nonlocal, row.fidelity_onemode)
            )
        )
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)


_CONFIG_ERRORS = (ConfigError, CutoffTooSmall)
_STABILITY_ERRORS = (NegativeParameter, StabilityViolation, AsymmetricDamping, AsymmetricBath)
_NUMERICAL_ERRORS = (
    NotHurwitz,
    PhysicalityLoss,
    UnphysicalCovariance,
    NonzeroMean,
    StepSizeUnderflow,
)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="coupledosc",
        description="Evolve two coupled oscillators under local vs eigenmode damping.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_evolve = sub.add_parser("evolve", help="time evolution, CSV per output time")
    p_evolve.add_argument("--config", required=True)
    p_evolve.add_argument("--out", default=None)
    p_evolve.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    p_sweep = sub.add_parser("steady-sweep", help="steady-state quantities vs nbar")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--out", default=None)

    p_check = sub.add_parser("validate", help="check a config file and exit")
    p_check.add_argument("--config", required=True)

    args = parser.parse_args(argv)

    try:
        try:
            with open(args.config) as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}")

        if args.command == "evolve":
            config = load_run_config(text, need="evolve")
            _emit(run_evolve(config, oracle=args.oracle), args.out)
        elif args.command == "steady-sweep":
            config = load_run_config(text, need="sweep")
            _emit(run_steady_sweep(config), args.out)
        else:
            load_run_config(text, need="any")
            print("config ok")
    except _CONFIG_ERRORS as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except _STABILITY_ERRORS as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 3
    except _NUMERICAL_ERRORS as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 4
    except CoupledOscError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
