"""Command-line interface: single-point pressures, figure-data CSVs,
crossover roots, phase diagrams, and oracle certification runs.

All numeric output uses 17 significant digits so CSV/JSON round-trips
are lossless, and identical inputs produce byte-identical files.
Exit codes: 0 success, 2 invalid arguments, 3 series non-convergence.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import oracle
from .crossover import (
    CrossoverResult,
    find_crossover,
    force_vs_length,
    phase_diagram,
)
from .pressure import (
    CavityConfig,
    FieldKind,
    InvalidConfigError,
    PressureBreakdown,
    g_function,
    massless_prefactor,
    massless_pressure_breakdown,
    massless_vacuum_pressure,
    thermal_pressure,
    vacuum_pressure,
)
from .series import NonConvergenceError, SeriesControl
from .zeta import ZetaParams, zeta_continued, zeta_continued_da2

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3


@dataclass(frozen=True)
class RunConfig:
    """Parsed single-point run: physics inputs plus output routing."""

    field: FieldKind
    cavity: CavityConfig
    massless: bool
    output: str
    out_path: str | None
    series: SeriesControl


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _write_csv(path, header_lines, columns, rows) -> None:
    lines = [f"# {h}" for h in header_lines]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# config file support: flat key=value lines mirroring the flag names;
# command-line flags override file entries.
# ---------------------------------------------------------------------------

def _config_to_argv(path: str) -> list[str]:
    extra: list[str] = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        flag = "--" + key.replace("_", "-")
        if value.lower() in ("true", "yes", "on"):
            extra.append(flag)
        elif value.lower() in ("false", "no", "off"):
            continue
        else:
            extra.extend([flag, value])
    return extra


def _apply_config(argv: list[str]) -> list[str]:
    if not argv:
        return argv
    out = list(argv)
    path = None
    i = 0
    while i < len(out):
        if out[i] == "--config":
            if i + 1 >= len(out):
                raise InvalidConfigError("--config needs a file path")
            path = out[i + 1]
            del out[i : i + 2]
            continue
        if out[i].startswith("--config="):
            path = out[i].split("=", 1)[1]
            del out[i]
            continue
        i += 1
    if path is None:
        return out
    # file entries go right after the subcommand so explicit flags win
    return out[:1] + _config_to_argv(path) + out[1:]


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_series_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rel-tol", type=float, default=1e-10, help="relative series tolerance")
    p.add_argument("--max-terms", type=int, default=10_000_000, help="term budget per sum")
    p.add_argument("--config", help="key=value file mirroring flag names; flags override")


def _add_output_flags(p: argparse.ArgumentParser, formats=("pretty", "json", "csv")) -> None:
    p.add_argument("--output", choices=formats, default=formats[0], help="output format")
    p.add_argument("--out", default=None, help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimircavity",
        description="Quantum vacuum and thermal pressure in a compactified cavity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pressure", help="pressure breakdown at a single parameter point")
    p.add_argument("--field", choices=["scalar", "fermion"], default="scalar")
    p.add_argument("--D", type=int, default=4, help="Euclidean dimension")
    p.add_argument("--L", type=float, default=1.0, help="cavity length (natural units)")
    p.add_argument("--beta", type=float, default=math.inf, help="inverse temperature 1/T")
    p.add_argument("--T", type=float, default=None, help="temperature (overrides --beta)")
    p.add_argument("--m", type=float, default=0.0, help="field mass")
    p.add_argument("--massless", action="store_true", help="use the m = 0 closed forms")
    p.add_argument("--theta", type=float, default=0.0, help="spatial twist in [0, 1]")
    _add_series_flags(p)
    _add_output_flags(p)

    f = sub.add_parser("figure", help="regenerate figure-data CSV files")
    f.add_argument("--id", dest="figure_id", default="all",
                   choices=[str(k) for k in range(1, 7)] + ["all"])
    f.add_argument("--out-dir", default="figures", help="directory for the CSV files")
    _add_series_flags(f)

    c = sub.add_parser("crossover", help="locate the attractive/repulsive crossover")
    c.add_argument("--field", choices=["scalar", "fermion"], default="scalar")
    c.add_argument("--theta", type=int, choices=[0, 1], default=0)
    c.add_argument("--xi-max", type=float, default=10.0, help="scan limit in xi = L*T")
    _add_series_flags(c)
    _add_output_flags(c, formats=("pretty", "json"))

    d = sub.add_parser("phase-diagram", help="sign/magnitude grid over (L, T)")
    d.add_argument("--field", choices=["scalar", "fermion"], default="scalar")
    d.add_argument("--theta", type=int, choices=[0, 1], default=0)
    d.add_argument("--L-min", type=float, default=0.2)
    d.add_argument("--L-max", type=float, default=3.2)
    d.add_argument("--L-steps", type=int, default=61)
    d.add_argument("--T-min", type=float, default=0.2)
    d.add_argument("--T-max", type=float, default=3.2)
    d.add_argument("--T-steps", type=int, default=61)
    _add_series_flags(d)
    d.add_argument("--out", default=None, help="CSV output path (default stdout)")

    o = sub.add_parser("oracle", help="run independent-reference certifications")
    o.add_argument("--all", action="store_true", help="run the full suite")
    o.add_argument("--target", default=None, help="run one named target")
    _add_series_flags(o)
    o.add_argument("--out", default=None, help="write JSON lines here instead of stdout")

    return parser


def _series_control(args) -> SeriesControl:
    return SeriesControl(rel_tol=args.rel_tol, max_terms=args.max_terms)


# ---------------------------------------------------------------------------
# pressure
# ---------------------------------------------------------------------------

def _run_config(args) -> RunConfig:
    beta = args.beta
    if args.T is not None:
        if args.T < 0.0:
            raise InvalidConfigError("temperature must be non-negative")
        beta = math.inf if args.T == 0.0 else 1.0 / args.T
    m = 0.0 if args.massless else args.m
    if not args.massless and m == 0.0:
        raise InvalidConfigError("specify a positive --m or pass --massless")
    cavity = CavityConfig(D=args.D, L=args.L, beta=beta, m=m, theta=args.theta)
    return RunConfig(
        field=FieldKind(args.field),
        cavity=cavity,
        massless=args.massless,
        output=args.output,
        out_path=args.out,
        series=_series_control(args),
    )


def _pressure_breakdown(run: RunConfig) -> PressureBreakdown:
    if run.massless:
        return massless_pressure_breakdown(run.field, run.cavity, run.series)
    return thermal_pressure(run.field, run.cavity, run.series)


def cmd_pressure(args) -> int:
    run = _run_config(args)
    breakdown = _pressure_breakdown(run)
    cavity = run.cavity
    meta = {
        "field": run.field.value,
        "D": cavity.D,
        "L": cavity.L,
        "beta": None if math.isinf(cavity.beta) else cavity.beta,
        "m": cavity.m,
        "theta": cavity.theta,
        "rel_tol": run.series.rel_tol,
    }
    if run.output == "json":
        payload = dataclasses.asdict(breakdown)
        payload["config"] = meta
        _emit(_json_dump(payload), run.out_path)
    elif run.output == "csv":
        _write_csv(
            run.out_path,
            [
                "single-point pressure breakdown (vacuum + thermal + cross = total)",
                "config: " + ", ".join(f"{k}={v}" for k, v in meta.items()),
                f"units: {breakdown.units}",
            ],
            ["vacuum", "thermal", "cross", "total"],
            [(breakdown.vacuum, breakdown.thermal, breakdown.cross, breakdown.total)],
        )
    else:
        beta_txt = "inf (zero temperature)" if math.isinf(cavity.beta) else _fmt(cavity.beta)
        lines = [
            f"field       : {run.field.value} (D={cavity.D})",
            f"L / beta    : {_fmt(cavity.L)} / {beta_txt}",
            f"m / theta   : {_fmt(cavity.m)} / {_fmt(cavity.theta)}",
            f"vacuum      : {_fmt(breakdown.vacuum)}",
            f"thermal     : {_fmt(breakdown.thermal)}",
            f"cross       : {_fmt(breakdown.cross)}",
            f"total       : {_fmt(breakdown.total)}",
            f"units       : {breakdown.units}",
            f"series      : rel_tol={run.series.rel_tol:g}, converged",
        ]
        _emit("\n".join(lines) + "\n", run.out_path)
    return EXIT_OK


# ---------------------------------------------------------------------------
# figures
# ---------------------------------------------------------------------------

def _grid(lo: float, step: float, count: int) -> list[float]:
    return [lo + step * k for k in range(count)]


def _figure1(out_dir: Path, ctrl: SeriesControl) -> Path:
    rows = []
    const = massless_prefactor(FieldKind.SCALAR, 0)
    for mL in _grid(0.02, 0.02, 250):
        cfg = CavityConfig(D=4, L=1.0, beta=math.inf, m=mL, theta=0.0)
        exact = vacuum_pressure(FieldKind.SCALAR, cfg, ctrl)
        rows.append((mL, exact, const))
    path = out_dir / "figure1.csv"
    _write_csv(
        path,
        [
            "figure 1: vacuum pressure vs dimensionless mass m*L (scalar, D=4, periodic, L=1)",
            "pressure_exact: full modified-Bessel sum for the massive field",
            "pressure_massless: small-mass closed form -pi^2/(30 L^4), the mL << 1 asymptote",
        ],
        ["m_L", "pressure_exact", "pressure_massless"],
        rows,
    )
    return path


def _figure_g(figure_id: int, out_dir: Path, ctrl: SeriesControl) -> Path:
    field = FieldKind.SCALAR if figure_id == 2 else FieldKind.FERMION
    theta = 0 if figure_id == 2 else 1
    rows = [(xi, g_function(field, theta, xi, ctrl)) for xi in _grid(0.02, 0.02, 150)]
    path = out_dir / f"figure{figure_id}.csv"
    _write_csv(
        path,
        [
            f"figure {figure_id}: dimensionless pressure profile g(xi), xi = L*T "
            f"({field.value}, {'periodic' if theta == 0 else 'antiperiodic'} spatial twist)",
            "total massless pressure = prefactor * g(xi) / L^4 with prefactor "
            f"{_fmt(massless_prefactor(field, theta))}",
            "a sign change of g marks the attractive/repulsive crossover",
        ],
        ["xi", "g"],
        rows,
    )
    return path


def _figure3(out_dir: Path, ctrl: SeriesControl) -> Path:
    temperatures = (0.1, 1.0, 1.3)
    L_values = _grid(0.2, 0.05, 197)
    curves = force_vs_length(FieldKind.SCALAR, 0, temperatures, L_values, ctrl)
    rows = [
        (L, *curves.pressure[:, j]) for j, L in enumerate(curves.L_values)
    ]
    path = out_dir / "figure3.csv"
    _write_csv(
        path,
        [
            "figure 3: massless total pressure vs cavity size at fixed heat-bath "
            "temperatures (scalar, periodic)",
            "columns pressure_T*: total pressure at T = 0.1, 1.0, 1.3 (natural units)",
        ],
        ["L", "pressure_T0p1", "pressure_T1p0", "pressure_T1p3"],
        rows,
    )
    return path


def _figure_phase(figure_id: int, out_dir: Path, ctrl: SeriesControl) -> Path:
    field = FieldKind.SCALAR if figure_id == 4 else FieldKind.FERMION
    theta = 0 if figure_id == 4 else 1
    L_grid = np.array(_grid(0.2, 0.05, 61))
    T_grid = np.array(_grid(0.2, 0.05, 61))
    diagram = phase_diagram(field, theta, L_grid, T_grid, ctrl)
    rows = []
    for i, L in enumerate(diagram.L_grid):
        for j, T in enumerate(diagram.T_grid):
            rows.append((L, T, diagram.pressure[i, j], float(diagram.pressure[i, j] < 0.0)))
    path = out_dir / f"figure{figure_id}.csv"
    _write_csv(
        path,
        [
            f"figure {figure_id}: attractive/repulsive phase diagram over (L, T) "
            f"({field.value}, {'periodic' if theta == 0 else 'antiperiodic'} spatial twist)",
            "attractive = 1 where the massless total pressure is negative",
            "the sign boundary follows the hyperbola L*T = xi_star",
        ],
        ["L", "T", "pressure", "attractive"],
        rows,
    )
    return path


_FIGURES = {
    1: _figure1,
    2: lambda out, ctrl: _figure_g(2, out, ctrl),
    3: _figure3,
    4: lambda out, ctrl: _figure_phase(4, out, ctrl),
    5: lambda out, ctrl: _figure_g(5, out, ctrl),
    6: lambda out, ctrl: _figure_phase(6, out, ctrl),
}


def cmd_figure(args) -> int:
    ctrl = _series_control(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ids = range(1, 7) if args.figure_id == "all" else [int(args.figure_id)]
    for fid in ids:
        path = _FIGURES[fid](out_dir, ctrl)
        print(f"wrote {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# crossover and phase diagram
# ---------------------------------------------------------------------------

def cmd_crossover(args) -> int:
    field = FieldKind(args.field)
    ctrl = _series_control(args)
    result = find_crossover(field, args.theta, ctrl, xi_max=args.xi_max)
    if result is None:
        sign = massless_prefactor(field, args.theta)
        kind = "repulsive" if sign > 0 else "attractive"
        payload = {"root": None, "message": f"no root: always {kind} on the scanned range"}
        if args.output == "json":
            _emit(_json_dump(payload), args.out)
        else:
            _emit(payload["message"] + "\n", args.out)
        return EXIT_OK
    if args.output == "json":
        _emit(_json_dump(dataclasses.asdict(result)), args.out)
    else:
        lines = [
            f"xi* = {_fmt(result.xi_star)}  (bracket [{_fmt(result.bracket[0])}, "
            f"{_fmt(result.bracket[1])}], residual {result.residual:.2e}, "
            f"{result.iterations} iterations)",
            f"L*T = {result.si_mev_fm:.6g} MeV.fm / hbar*c = {result.si_mm_k:.6g} mm.K",
            f"equilibrium: {'stable' if result.stable else 'unstable'}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_phase_diagram(args) -> int:
    field = FieldKind(args.field)
    ctrl = _series_control(args)
    L_grid = np.linspace(args.L_min, args.L_max, args.L_steps)
    T_grid = np.linspace(args.T_min, args.T_max, args.T_steps)
    diagram = phase_diagram(field, args.theta, L_grid, T_grid, ctrl)
    rows = []
    for i, L in enumerate(diagram.L_grid):
        for j, T in enumerate(diagram.T_grid):
            rows.append((L, T, diagram.pressure[i, j], float(diagram.pressure[i, j] < 0.0)))
    _write_csv(
        args.out,
        [
            f"phase diagram: massless total pressure over (L, T) ({field.value}, "
            f"theta={args.theta})",
            "attractive = 1 where the pressure is negative",
        ],
        ["L", "T", "pressure", "attractive"],
        rows,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# oracle suite
# ---------------------------------------------------------------------------

def _oracle_suite(ctrl: SeriesControl) -> list[oracle.OracleReport]:
    from .specfun import BesselOrder, bessel_k

    reports: list[oracle.OracleReport] = []
    for nu, z in ((0.5, 1.0), (2.0, 1.0), (2.0, 0.01), (3.0, 10.0), (1.5, 5.0)):
        reports.append(
            oracle.make_report(
                f"bessel_k(nu={nu}, z={z})",
                oracle.bessel_quadrature(nu, z),
                bessel_k(BesselOrder.from_nu(nu), z),
                "integral representation, adaptive quadrature",
            )
        )

    grid = [
        ZetaParams(1, 2.0, 1.0, (1.0,), (0.0,)),
        ZetaParams(1, 2.0, 1.0, (1.0,), (1.0,)),
        ZetaParams(2, 3.0, 1.0, (1.0, 1.0), (0.0, 0.0)),
        ZetaParams(2, 3.0, 0.5, (1.0, 2.0), (1.0, 0.5)),
    ]
    for p in grid:
        n_max = 200_000 if p.d == 1 else 700
        reports.append(
            oracle.make_report(
                f"zeta_continued(d={p.d}, nu={p.nu}, c={p.c}, theta={p.theta})",
                oracle.zeta_bruteforce(p, n_max),
                zeta_continued(p, ctrl),
                f"box sum with Richardson tail removal, n_max={n_max}",
            )
        )

    for theta2 in (0.0, 1.0):
        p = ZetaParams(2, 3.0, 1.0, (1.0, 1.0), (0.0, theta2))
        h = 1e-5 * p.a[1]
        fd = oracle.central_difference(
            lambda a2: zeta_continued(
                ZetaParams(2, 3.0, 1.0, (1.0, a2), (0.0, theta2)), ctrl
            ),
            p.a[1],
            h,
        )
        reports.append(
            oracle.make_report(
                f"zeta_continued_da2(theta2={theta2})",
                fd,
                zeta_continued_da2(p, ctrl),
                f"central finite difference, h={h:g}",
            )
        )

    reports.append(oracle.lattice_identity_check(n_max=4000))

    from .pressure import _lattice_profile_sum  # certified quantity

    reports.append(
        oracle.make_report(
            "massless_profile_sum(xi=1, scalar periodic)",
            oracle.lattice_profile_reference(1.0, False, False, n_max=3000),
            _lattice_profile_sum(1.0, False, False, ctrl),
            "brute-force double sum with Richardson tail removal",
        )
    )

    cfg = CavityConfig(D=4, L=1.0, beta=1.0, m=1.0, theta=0.0)
    breakdown = thermal_pressure(FieldKind.SCALAR, cfg, ctrl)
    ref = oracle.thermal_reference(4, 1.0, 1.0, 1.0, 0.0, False, 1, n_max=200)
    reports.append(
        oracle.make_report(
            "thermal_pressure_total(scalar, m=1, L=1, beta=1)",
            sum(ref),
            breakdown.total,
            "high-resolution component sums, n_max=200",
        )
    )
    return reports


def cmd_oracle(args) -> int:
    ctrl = _series_control(args)
    reports = _oracle_suite(ctrl)
    if args.target is not None:
        reports = [r for r in reports if args.target in r.target]
        if not reports:
            raise InvalidConfigError(f"no oracle target matches {args.target!r}")
    elif not getattr(args, "all", False):
        raise InvalidConfigError("pass --all or --target NAME")
    text = "".join(
        json.dumps(dataclasses.asdict(r), sort_keys=True) + "\n" for r in reports
    )
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------

_HANDLERS = {
    "pressure": cmd_pressure,
    "figure": cmd_figure,
    "crossover": cmd_crossover,
    "phase-diagram": cmd_phase_diagram,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(argv)
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (InvalidConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
