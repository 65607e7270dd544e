"""Render publication-style figures from casimircavity CSV files.

The CSV column schema is the entire contract: nothing here recomputes a
physical quantity, so the numerics package stays the single source of
truth.  Curves, fills, and markers are drawn purely from file contents.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


class SchemaError(ValueError):
    """CSV does not match the documented figure schema."""


SCHEMAS: dict[int, list[str]] = {
    1: ["m_L", "pressure_exact", "pressure_massless"],
    2: ["xi", "g"],
    3: ["L", "pressure_T0p1", "pressure_T1p0", "pressure_T1p3"],
    4: ["L", "T", "pressure", "attractive"],
    5: ["xi", "g"],
    6: ["L", "T", "pressure", "attractive"],
}


@dataclass(frozen=True)
class FigureSpec:
    """One rendering job: which figure, which CSV, where the image goes."""

    figure_id: int
    csv_path: Path
    output_path: Path
    style: str = "paper-like"

    def __post_init__(self):
        if self.figure_id not in SCHEMAS:
            raise SchemaError(f"unknown figure id {self.figure_id}")
        if self.style not in ("paper-like", "plain"):
            raise SchemaError(f"unknown style {self.style!r}")


def load_columns(csv_path: Path, figure_id: int) -> dict[str, np.ndarray]:
    """Read a figure CSV and validate it against the figure's schema."""
    expected = SCHEMAS[figure_id]
    lines = [
        line
        for line in Path(csv_path).read_text(encoding="utf-8").splitlines()
        if line and not line.startswith("#")
    ]
    if not lines:
        raise SchemaError(f"{csv_path}: no header row found")
    names = lines[0].split(",")
    for column in expected:
        if column not in names:
            raise SchemaError(f"{csv_path}: missing column {column!r}")
    for column in names:
        if column not in expected:
            raise SchemaError(f"{csv_path}: unexpected column {column!r}")
    if len(lines) == 1:
        raise SchemaError(f"{csv_path}: no data rows")
    try:
        data = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    except ValueError as exc:
        raise SchemaError(f"{csv_path}: non-numeric cell ({exc})") from exc
    if data.shape[1] != len(names):
        raise SchemaError(f"{csv_path}: ragged rows")
    return {name: data[:, k] for k, name in enumerate(names)}


def _grid_reshape(cols: dict[str, np.ndarray], csv_path: Path):
    L_vals = np.unique(cols["L"])
    T_vals = np.unique(cols["T"])
    if L_vals.size * T_vals.size != cols["L"].size:
        raise SchemaError(f"{csv_path}: incomplete (L, T) grid")
    order = np.lexsort((cols["T"], cols["L"]))
    pressure = cols["pressure"][order].reshape(L_vals.size, T_vals.size)
    attractive = cols["attractive"][order].reshape(L_vals.size, T_vals.size)
    return L_vals, T_vals, pressure, attractive


def _new_axes(spec: FigureSpec):
    fig, ax = plt.subplots(figsize=(4.8, 3.4), dpi=150)
    if spec.style == "paper-like":
        ax.grid(True, alpha=0.25, linestyle=":")
    return fig, ax


def _render_mass_curve(spec: FigureSpec, cols) -> None:
    fig, ax = _new_axes(spec)
    gray = "0.55" if spec.style == "paper-like" else "C0"
    ax.plot(cols["m_L"], cols["pressure_exact"], color=gray, lw=2.4, label="exact")
    ax.plot(
        cols["m_L"],
        cols["pressure_massless"],
        color="k",
        ls=":",
        lw=1.4,
        label="small-mass asymptote",
    )
    ax.set_xlabel(r"$mL$")
    ax.set_ylabel(r"pressure $\times L^4$")
    ax.legend(frameon=False)
    fig.savefig(spec.output_path, bbox_inches="tight")
    plt.close(fig)


def _render_profile(spec: FigureSpec, cols) -> None:
    fig, ax = _new_axes(spec)
    ax.plot(cols["xi"], cols["g"], color="k", lw=1.6)
    ax.axhline(0.0, color="0.4", lw=0.8)
    sign = np.sign(cols["g"])
    flips = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    for k in flips:  # mark sign changes present in the data
        x0, x1 = cols["xi"][k], cols["xi"][k + 1]
        y0, y1 = cols["g"][k], cols["g"][k + 1]
        ax.plot([x0 - y0 * (x1 - x0) / (y1 - y0)], [0.0], "ko", ms=4)
    ax.set_xlabel(r"$\xi = LT$")
    ax.set_ylabel(r"$g(\xi)$")
    fig.savefig(spec.output_path, bbox_inches="tight")
    plt.close(fig)


def _render_force_curves(spec: FigureSpec, cols) -> None:
    fig, ax = _new_axes(spec)
    labels = {"pressure_T0p1": "T = 0.1", "pressure_T1p0": "T = 1.0", "pressure_T1p3": "T = 1.3"}
    for key, label in labels.items():
        ax.plot(cols["L"], cols[key], lw=1.4, label=label)
    ax.axhline(0.0, color="0.4", lw=0.8)
    ax.set_yscale("symlog", linthresh=1e-3)
    ax.set_xlabel(r"$L$")
    ax.set_ylabel("total pressure")
    ax.legend(frameon=False)
    fig.savefig(spec.output_path, bbox_inches="tight")
    plt.close(fig)


def _render_phase_diagram(spec: FigureSpec, cols, csv_path: Path) -> None:
    L_vals, T_vals, _pressure, attractive = _grid_reshape(cols, csv_path)
    fig, ax = _new_axes(spec)
    fill = "0.7" if spec.style == "paper-like" else "C0"
    ax.pcolormesh(
        L_vals,
        T_vals,
        attractive.T,
        cmap=matplotlib.colors.ListedColormap(["white", fill]),
        vmin=0.0,
        vmax=1.0,
        shading="nearest",
    )
    ax.set_xlabel(r"$L$")
    ax.set_ylabel(r"$T$")
    ax.set_title("filled: attractive", fontsize=9)
    fig.savefig(spec.output_path, bbox_inches="tight")
    plt.close(fig)


def render(spec: FigureSpec) -> Path:
    """Render one figure; raises SchemaError (writing nothing) on any
    mismatch between the CSV and the documented schema."""
    cols = load_columns(spec.csv_path, spec.figure_id)
    spec.output_path.parent.mkdir(parents=True, exist_ok=True)
    if spec.figure_id == 1:
        _render_mass_curve(spec, cols)
    elif spec.figure_id in (2, 5):
        _render_profile(spec, cols)
    elif spec.figure_id == 3:
        _render_force_curves(spec, cols)
    else:
        _render_phase_diagram(spec, cols, spec.csv_path)
    return spec.output_path


def render_all(csv_dir: Path, out_dir: Path, style: str = "paper-like") -> list[Path]:
    """Render figures 1-6 from a directory of figureN.csv files."""
    written = []
    for fid in sorted(SCHEMAS):
        spec = FigureSpec(
            figure_id=fid,
            csv_path=Path(csv_dir) / f"figure{fid}.csv",
            output_path=Path(out_dir) / f"figure{fid}.png",
            style=style,
        )
        written.append(render(spec))
    return written
