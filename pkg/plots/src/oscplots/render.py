"""Turn a figure spec plus simulator CSV output into a PNG."""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .spec import DEFAULT_COLUMNS, DEFAULT_LABELS, X_COLUMN, FigureSpec, RenderError, parse_figure_spec

DPI = 150
FIGSIZE = (6.4, 4.8)


def _read_csv(path: Path) -> dict[str, list[float]]:
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if not header:
                raise RenderError(f"{path}: empty CSV")
            data: dict[str, list[float]] = {name: [] for name in header}
            for lineno, row in enumerate(reader, start=2):
                if len(row) != len(header):
                    raise RenderError(f"{path}:{lineno}: ragged row")
                for name, tok in zip(header, row):
                    try:
                        data[name].append(float(tok))
                    except ValueError:
                        raise RenderError(
                            f"{path}:{lineno}: column '{name}' is not numeric: '{tok}'"
                        )
    except OSError as exc:
        raise RenderError(f"cannot read CSV: {exc}")
    if not next(iter(data.values()), []):
        raise RenderError(f"{path}: no data rows")
    return data


def _style_for(column: str):
    # the two damping models get distinct line styles
    if column.endswith("_local"):
        return {"linestyle": "-"}
    if column.endswith("_nonlocal"):
        return {"linestyle": "--"}
    return {"linestyle": ":"}


def render(spec: FigureSpec) -> Path:
    """Render one figure; returns the written image path."""
    x_name = X_COLUMN[spec.kind]
    wanted = list(spec.columns) if spec.columns else None

    fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI)
    try:
        for path in spec.csv_paths:
            data = _read_csv(path)
            if x_name not in data:
                raise RenderError(f"{path}: missing x column '{x_name}'")
            if wanted is not None:
                columns = wanted
                missing = [c for c in columns if c not in data]
                if missing:
                    raise RenderError(f"{path}: missing columns {missing}")
            else:
                columns = [c for c in DEFAULT_COLUMNS[spec.kind] if c in data]
                if not columns:
                    raise RenderError(
                        f"{path}: none of {DEFAULT_COLUMNS[spec.kind]} present"
                    )
            prefix = f"{path.stem}: " if len(spec.csv_paths) > 1 else ""
            for col in columns:
                ax.plot(data[x_name], data[col], label=prefix + col, **_style_for(col))

        xlabel, ylabel = DEFAULT_LABELS[spec.kind]
        ax.set_xlabel(spec.xlabel or xlabel)
        ax.set_ylabel(spec.ylabel or ylabel)
        if spec.title:
            ax.set_title(spec.title)
        ax.legend(fontsize=8)
        spec.out_path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(spec.out_path, dpi=DPI)
    finally:
        plt.close(fig)
    return spec.out_path


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="render", description="Render a comparison figure from simulator CSVs."
    )
    parser.add_argument("--spec", required=True, help="figure spec file (key = value)")
    args = parser.parse_args(argv)
    try:
        out = render(parse_figure_spec(args.spec))
    except RenderError as exc:
        print(f"render error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
