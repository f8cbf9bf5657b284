"""Figure specifications: flat key = value files, like the simulator configs."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


class RenderError(Exception):
    """Anything that prevents producing the requested image."""


KINDS = ("excitation", "negativity", "fidelity", "steady")

# default y-columns per kind; any subset present in the CSV is plotted, but
# at least one must exist
DEFAULT_COLUMNS = {
    "excitation": ["n_a_local", "n_a_nonlocal", "n_b_local", "n_b_nonlocal"],
    "negativity": ["logneg_local", "logneg_nonlocal"],
    "fidelity": ["fidelity_a", "fidelity_b"],
    "steady": ["logneg_local", "logneg_nonlocal", "fidelity_onemode"],
}

X_COLUMN = {"excitation": "t", "negativity": "t", "fidelity": "t", "steady": "nbar"}

DEFAULT_LABELS = {
    "excitation": ("time", "mean excitation number"),
    "negativity": ("time", "logarithmic negativity"),
    "fidelity": ("time", "one-mode fidelity"),
    "steady": ("bath occupancy", "steady-state value"),
}

_KEYS = {"kind", "csv", "out", "columns", "title", "xlabel", "ylabel"}


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    csv_paths: tuple[Path, ...]
    out_path: Path
    columns: tuple[str, ...] | None = None
    title: str | None = None
    xlabel: str | None = None
    ylabel: str | None = None


def parse_figure_spec(path: str | Path) -> FigureSpec:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise RenderError(f"cannot read spec file: {exc}")

    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise RenderError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _KEYS:
            raise RenderError(f"line {lineno}: unknown key '{key}'")
        if key in entries:
            raise RenderError(f"line {lineno}: duplicate key '{key}'")
        entries[key] = value

    for required in ("kind", "csv", "out"):
        if required not in entries:
            raise RenderError(f"missing required key '{required}'")
    kind = entries["kind"]
    if kind not in KINDS:
        raise RenderError(f"kind must be one of {KINDS}, got '{kind}'")

    csv_paths = tuple(Path(tok.strip()) for tok in entries["csv"].split(",") if tok.strip())
    if not csv_paths:
        raise RenderError("csv lists no paths")
    columns = None
    if "columns" in entries:
        columns = tuple(tok.strip() for tok in entries["columns"].split(",") if tok.strip())
        if not columns:
            raise RenderError("columns lists no names")

    return FigureSpec(
        kind=kind,
        csv_paths=csv_paths,
        out_path=Path(entries["out"]),
        columns=columns,
        title=entries.get("title"),
        xlabel=entries.get("xlabel"),
        ylabel=entries.get("ylabel"),
    )
