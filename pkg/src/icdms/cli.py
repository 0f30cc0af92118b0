"""Command-line surface: region sweeps, discrete region reports, figure
presets, the dirty-paper coefficient, and oracle self-checks.

Subcommands
-----------
region        sweep one or more Gaussian region families, write frontier.csv
discrete      evaluate a factored distribution file under one coding scheme
figure        run a figure preset (fig4..fig7): CSV plus an SVG overlay plot
dpc-lambda    closed-form bin coefficient and gain, optionally grid-checked
oracle-check  run the Monte Carlo / brute-force self-checks

Exit codes: 0 ok, 2 configuration or input-file error, 3 empty union.

Config and distribution files are JSON; schemas are documented in the
project README.  Identical config and seed produce byte-identical CSV.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .discrete import (
    AlphabetSpec,
    NormalizationError,
    distribution_from_dict,
    random_star,
    region_full,
    region_sim,
    region_suc,
)
from .gaussian import (
    ChannelParams,
    GaussianCoding,
    dpc_gain_objective,
    dpc_lambda_star,
    entropy_terms,
    eta_coefficients,
)
from .geometry import (
    DEFAULT_R1_STEP,
    AxisGrid,
    EmptyUnionError,
    Frontier,
    REGION_FAMILIES,
    SweepGrid,
    default_grid,
    sweep_gaussian,
    time_sharing_hull,
)
from .oracle import brute_joint_mi, grid_maximize, mc_gaussian_entropy
from .discrete import assemble_joint, conditional_mi

EXIT_CONFIG = 2
EXIT_EMPTY = 3

#: Figure presets: channel parameters and the region families plotted.
FIGURE_PRESETS = {
    "fig4": (ChannelParams(p1=6.0, p2=6.0, c12=0.0, c21=0.3), ("g_sp1",)),
    "fig5": (ChannelParams(p1=0.0, p2=6.0, c12=0.0, c21=0.5), ("g_sp1",)),
    "fig6": (ChannelParams(p1=6.0, p2=6.0, c12=0.3, c21=2.0), ("g_sp1", "g_sp2", "g")),
    "fig7": (ChannelParams(p1=6.0, p2=6.0, c12=0.3, c21=6.0), ("g_sp1", "g_sp2", "g")),
}


class ConfigError(ValueError):
    """Bad configuration; carries a best-effort line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line else ""
        super().__init__(f"{where}{message}")


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Everything a ``region`` run needs; reproducible from the sidecar."""

    channel: ChannelParams
    regions: tuple[str, ...]
    grids: dict[str, SweepGrid]
    r1_step: float = DEFAULT_R1_STEP
    convex_hull: bool = False
    paper_literal: bool = False
    seed: int = 0


def _line_of(raw: str, key: str) -> int | None:
    match = re.search(r'"%s"' % re.escape(key), raw)
    if match is None:
        return None
    return raw.count("\n", 0, match.start()) + 1


def _axis_from_doc(doc, raw: str, key: str, fallback: AxisGrid) -> AxisGrid:
    if doc is None:
        return fallback
    if not isinstance(doc, dict):
        raise ConfigError(f"grid.{key} must be an object", _line_of(raw, key))
    try:
        return AxisGrid(
            lo=float(doc.get("lo", fallback.lo)),
            hi=None if doc.get("hi", fallback.hi) is None else float(doc["hi"]),
            count=int(doc.get("count", fallback.count)),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"grid.{key}: {exc}", _line_of(raw, key)) from exc


def load_config(path: Path, overrides: argparse.Namespace) -> RunConfig:
    raw = path.read_text()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    if not isinstance(doc, dict):
        raise ConfigError("top level must be a JSON object")

    ch_doc = doc.get("channel")
    if not isinstance(ch_doc, dict):
        raise ConfigError("missing 'channel' object", _line_of(raw, "channel"))
    try:
        channel = ChannelParams(
            p1=float(ch_doc.get("p1", 0.0)),
            p2=float(ch_doc.get("p2", 0.0)),
            c12=float(ch_doc.get("c12", 0.0)),
            c21=float(ch_doc.get("c21", 0.0)),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"channel: {exc}", _line_of(raw, "channel")) from exc

    regions = doc.get("regions", doc.get("region", []))
    if isinstance(regions, str):
        regions = [regions]
    if getattr(overrides, "region", None):
        regions = list(overrides.region)
    if not regions:
        raise ConfigError("no region selectors given", _line_of(raw, "regions"))
    for name in regions:
        if name not in REGION_FAMILIES:
            raise ConfigError(
                f"unknown region selector {name!r} (choose from {', '.join(REGION_FAMILIES)})",
                _line_of(raw, name),
            )

    grid_doc = doc.get("grid", {})
    if not isinstance(grid_doc, dict):
        raise ConfigError("'grid' must be an object", _line_of(raw, "grid"))
    grids: dict[str, SweepGrid] = {}
    steps_override = getattr(overrides, "grid_steps", None)
    for name in regions:
        base = default_grid(name)
        if steps_override:
            base = _apply_steps(base, name, steps_override)
        grids[name] = SweepGrid(
            alpha=_axis_from_doc(grid_doc.get("alpha"), raw, "alpha", base.alpha),
            beta=_axis_from_doc(grid_doc.get("beta"), raw, "beta", base.beta),
            lambda1=_axis_from_doc(grid_doc.get("lambda1"), raw, "lambda1", base.lambda1),
            lambda2=_axis_from_doc(grid_doc.get("lambda2"), raw, "lambda2", base.lambda2),
            edge_alpha=_axis_from_doc(
                grid_doc.get("edge_alpha"), raw, "edge_alpha", base.edge_alpha
            ),
        )

    try:
        r1_step = float(doc.get("r1_step", DEFAULT_R1_STEP))
        if not 0.0 < r1_step < 1.0:
            raise ValueError("r1_step must be in (0, 1)")
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"r1_step: {exc}", _line_of(raw, "r1_step")) from exc

    return RunConfig(
        channel=channel,
        regions=tuple(regions),
        grids=grids,
        r1_step=r1_step,
        convex_hull=bool(doc.get("convex_hull", False)) or overrides.convex_hull,
        paper_literal=bool(doc.get("paper_literal", False)) or overrides.paper_literal,
        seed=overrides.seed if overrides.seed is not None else int(doc.get("seed", 0)),
    )


def _apply_steps(grid: SweepGrid, which: str, steps: int) -> SweepGrid:
    """Uniform per-parameter point count override (--grid-steps)."""
    def sized(axis: AxisGrid, count: int) -> AxisGrid:
        return AxisGrid(axis.lo, axis.hi, count)

    if which == "g":
        return SweepGrid(
            alpha=sized(grid.alpha, min(steps, grid.alpha.count)),
            beta=sized(grid.beta, min(steps, grid.beta.count)),
            lambda1=sized(grid.lambda1, min(steps, grid.lambda1.count)),
            lambda2=sized(grid.lambda2, min(steps, grid.lambda2.count)),
            edge_alpha=sized(grid.edge_alpha, steps),
        )
    return SweepGrid(
        alpha=sized(grid.alpha, steps),
        beta=sized(grid.beta, steps),
        lambda1=grid.lambda1,
        lambda2=grid.lambda2,
        edge_alpha=sized(grid.edge_alpha, steps),
    )


def _frontier_rows(frontier: Frontier, label: str):
    rows = [(float(r1), float(r2), label) for r1, r2 in zip(frontier.r1, frontier.r2)]
    if frontier.reach > float(frontier.r1[-1]) + 1e-12:
        rows.append((frontier.reach, frontier.reach_r2, label))
    return rows


def _write_csv(path: Path, rows) -> None:
    lines = ["r1_bits,r2_bits,region"]
    lines += [f"{repr(r1)},{repr(r2)},{label}" for r1, r2, label in rows]
    path.write_text("\n".join(lines) + "\n")


def _grid_meta(grid: SweepGrid) -> dict:
    return {
        name: dataclasses.asdict(getattr(grid, name))
        for name in ("alpha", "beta", "lambda1", "lambda2", "edge_alpha")
    }


def _write_meta(path: Path, config: RunConfig, extra: dict) -> None:
    meta = {
        "tool": "icdms",
        "version": __version__,
        "channel": dataclasses.asdict(config.channel),
        "regions": list(config.regions),
        "grids": {name: _grid_meta(g) for name, g in config.grids.items()},
        "r1_step": config.r1_step,
        "convex_hull": config.convex_hull,
        "paper_literal": config.paper_literal,
        "seed": config.seed,
    }
    meta.update(extra)
    path.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")


def _sweep_all(config: RunConfig) -> dict[str, Frontier]:
    frontiers: dict[str, Frontier] = {}
    for name in config.regions:
        frontier = sweep_gaussian(
            config.channel, config.grids[name], name, config.r1_step
        )
        if config.convex_hull:
            frontier = time_sharing_hull(frontier)
        frontiers[name] = frontier
    return frontiers


def cmd_region(args: argparse.Namespace) -> int:
    config = load_config(Path(args.config), args)
    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        frontiers = _sweep_all(config)
    except EmptyUnionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    rows = []
    for name, frontier in frontiers.items():
        rows.extend(_frontier_rows(frontier, name))
    _write_csv(out_dir / "frontier.csv", rows)
    _write_meta(out_dir / "frontier.meta.json", config, {"command": "region"})
    for name, frontier in frontiers.items():
        print(
            f"{name}: {frontier.r2.size} samples, reach {frontier.reach:.6f} bits, "
            f"max r2 {float(frontier.r2.max()):.6f} bits"
        )
    print(f"wrote {out_dir / 'frontier.csv'}")
    return 0


def _format_report(region) -> list[str]:
    lines = [f"scheme: {region.scheme}"]
    lines.append(f"r1_bound_bits  = {region.r1_bound:.12g}")
    lines.append(f"r2_bound_bits  = {region.r2_bound:.12g}")
    if region.sum_bound is not None:
        lines.append(f"sum_bound_bits = {region.sum_bound:.12g}")
    for name, value in region.constraints.items():
        lines.append(f"residual {name} = {value:.12g}")
    lines.append(f"feasible: {region.feasible}")
    return lines


def cmd_discrete(args: argparse.Namespace) -> int:
    path = Path(args.distribution)
    try:
        doc = json.loads(path.read_text())
        fd = distribution_from_dict(doc)
    except json.JSONDecodeError as exc:
        print(f"error: line {exc.lineno}: invalid JSON: {exc.msg}", file=sys.stderr)
        return EXIT_CONFIG
    except NormalizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    evaluators = {"full": region_full, "sim": region_sim, "suc": region_suc}
    evaluate = evaluators[args.scheme]
    try:
        if args.scheme == "full":
            region = evaluate(fd)
        else:
            region = evaluate(fd, paper_literal=args.paper_literal)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    lines = _format_report(region)
    if args.scheme in ("sim", "suc"):
        active = "v_margin_y1" if args.paper_literal else "v_margin_y2"
        lines.append(f"active sign constraint: {active}")
    report = "\n".join(lines)
    print(report)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        payload = {
            "scheme": region.scheme,
            "r1_bound_bits": region.r1_bound,
            "r2_bound_bits": region.r2_bound,
            "sum_bound_bits": region.sum_bound,
            "constraints": region.constraints,
            "feasible": region.feasible,
            "paper_literal": args.paper_literal,
            "tool": "icdms",
            "version": __version__,
        }
        (out_dir / "discrete_report.json").write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n"
        )
    return 0


_SVG_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")


def _svg_plot(frontiers: dict[str, Frontier], title: str) -> str:
    """Fixed 800x600 SVG overlay of frontier polylines, axes in bits."""
    width, height = 800, 600
    left, right, top, bottom = 70, 20, 40, 55
    plot_w = width - left - right
    plot_h = height - top - bottom
    x_max = max(f.reach for f in frontiers.values()) * 1.05 or 1.0
    y_max = max(float(f.r2.max()) for f in frontiers.values()) * 1.05 or 1.0

    def sx(x: float) -> float:
        return left + plot_w * x / x_max

    def sy(y: float) -> float:
        return top + plot_h * (1.0 - y / y_max)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{title}</text>',
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="black"/>',
    ]
    n_ticks = 6
    for i in range(n_ticks):
        xv = x_max * i / (n_ticks - 1)
        yv = y_max * i / (n_ticks - 1)
        parts.append(
            f'<line x1="{sx(xv):.2f}" y1="{top + plot_h}" x2="{sx(xv):.2f}" '
            f'y2="{top + plot_h + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{sx(xv):.2f}" y="{top + plot_h + 20}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{xv:.2f}</text>'
        )
        parts.append(
            f'<line x1="{left - 5}" y1="{sy(yv):.2f}" x2="{left}" y2="{sy(yv):.2f}" '
            f'stroke="black"/>'
        )
        parts.append(
            f'<text x="{left - 9}" y="{sy(yv) + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{yv:.2f}</text>'
        )
    parts.append(
        f'<text x="{left + plot_w / 2:.1f}" y="{height - 12}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">R1 (bits)</text>'
    )
    parts.append(
        f'<text x="18" y="{top + plot_h / 2:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 18 {top + plot_h / 2:.1f})">R2 (bits)</text>'
    )
    for k, (name, f) in enumerate(frontiers.items()):
        color = _SVG_COLORS[k % len(_SVG_COLORS)]
        points = list(zip(f.r1, f.r2))
        if f.reach > points[-1][0] + 1e-12:
            points.append((f.reach, f.reach_r2))
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in points)
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.6" '
            f'points="{coords}"/>'
        )
        ly = top + 16 + 18 * k
        parts.append(
            f'<line x1="{left + plot_w - 130}" y1="{ly}" x2="{left + plot_w - 104}" '
            f'y2="{ly}" stroke="{color}" stroke-width="1.6"/>'
        )
        parts.append(
            f'<text x="{left + plot_w - 98}" y="{ly + 4}" font-family="sans-serif" '
            f'font-size="12">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_figure(args: argparse.Namespace) -> int:
    channel, regions = FIGURE_PRESETS[args.preset]
    grids = {}
    for name in regions:
        grid = default_grid(name)
        if args.grid_steps:
            grid = _apply_steps(grid, name, args.grid_steps)
        grids[name] = grid
    config = RunConfig(
        channel=channel,
        regions=regions,
        grids=grids,
        r1_step=DEFAULT_R1_STEP,
        convex_hull=args.convex_hull,
        paper_literal=args.paper_literal,
        seed=args.seed if args.seed is not None else 0,
    )
    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        frontiers = _sweep_all(config)
    except EmptyUnionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    rows = []
    for name, frontier in frontiers.items():
        rows.extend(_frontier_rows(frontier, name))
    _write_csv(out_dir / f"{args.preset}.csv", rows)
    (out_dir / f"{args.preset}.svg").write_text(
        _svg_plot(frontiers, f"{args.preset}: achievable rate regions")
    )
    _write_meta(
        out_dir / f"{args.preset}.meta.json",
        config,
        {"command": "figure", "preset": args.preset},
    )
    print(f"wrote {out_dir / (args.preset + '.csv')} and .svg")
    return 0


def cmd_dpc_lambda(args: argparse.Namespace) -> int:
    channel = ChannelParams(p1=args.p1, p2=args.p2, c12=args.c12, c21=args.c21)
    lam, gain = dpc_lambda_star(channel, args.alpha, args.beta)
    print(f"lambda_star = {lam:.12g}")
    print(f"gain_bits   = {gain:.12g}")
    if args.check:
        s = args.alpha * (1.0 - args.beta) * channel.p2
        if s == 0.0:
            print("check: zero stream power, objective identically 0")
            return 0
        objective = dpc_gain_objective(channel, args.alpha, args.beta)
        _, eta2 = eta_coefficients(channel, args.alpha)
        arg, value = grid_maximize(objective, 0.0, 3.0 * (eta2 + 1.0), args.check)
        print(f"grid argmax = {arg:.12g}, value = {value:.12g}")
        print(f"closed-form minus grid value = {gain - value:.3g}")
    return 0


def cmd_oracle_check(args: argparse.Namespace) -> int:
    rng = np.random.default_rng(args.seed)
    failures = 0

    print("entropy terms vs Monte Carlo:")
    for draw in range(args.draws):
        channel = ChannelParams(
            p1=float(rng.uniform(0.5, 8.0)),
            p2=float(rng.uniform(0.5, 8.0)),
            c12=float(rng.uniform(0.0, 2.0)),
            c21=float(rng.uniform(0.0, 2.0)),
        )
        coding = GaussianCoding(
            alpha=float(rng.uniform(0.2, 0.9)),
            beta=float(rng.uniform(0.2, 0.8)),
            lambda1=float(rng.uniform(0.0, 1.0)),
            lambda2=float(rng.uniform(0.0, 1.0)),
        )
        worst = _entropy_worst_z(channel, coding, args.samples, args.seed + 1000 * draw)
        status = "ok" if worst <= 3.0 else "FAIL"
        if worst > 3.0:
            failures += 1
        print(f"  draw {draw}: max |z| = {worst:.2f} {status}")

    print("discrete mutual information, vectorized vs brute force:")
    worst_diff = 0.0
    sizes = AlphabetSpec()
    for _ in range(args.draws):
        fd = random_star(sizes, rng)
        j = assemble_joint(fd)
        for left, right, given in (
            (("w",), ("y1",), ("u", "q")),
            (("u", "v"), ("y2",), ("q",)),
            (("v",), ("w",), ("q",)),
        ):
            a = conditional_mi(j, left, right, given)
            b = brute_joint_mi(j, left, right, given)
            worst_diff = max(worst_diff, abs(a - b))
    status = "ok" if worst_diff <= 1e-12 else "FAIL"
    if worst_diff > 1e-12:
        failures += 1
    print(f"  max |difference| over {args.draws} draws = {worst_diff:.3g} {status}")
    return 1 if failures else 0


def _entropy_worst_z(channel, coding, samples, seed_base) -> float:
    from .gaussian import build_covariances

    h = entropy_terms(channel, coding)
    mu, nu = build_covariances(channel, coding)
    blocks = {
        "h_a": (mu, (0,)),
        "h_b": (mu, (1, 2)),
        "h_c": (mu, (0, 1, 2)),
        "h_d": (nu, (0, 1)),
        "h_e": (nu, (2,)),
        "h_f": (nu, (0, 1, 2)),
        "h_g": (mu, (0, 1)),
        "h_h": (mu, (2,)),
        "h_i": (nu, (1,)),
        "h_j": (nu, (0, 2)),
        "h_k": (nu, (0,)),
        "h_l": (nu, (1, 2)),
    }
    worst = 0.0
    for term_index, (name, (matrix, rows)) in enumerate(blocks.items()):
        sub = matrix[np.ix_(rows, rows)]
        estimate = mc_gaussian_entropy(sub, samples, seed_base + term_index)
        z = abs(estimate.value_bits - getattr(h, name)) / estimate.std_error_bits
        worst = max(worst, z)
    return worst


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=None, help="output directory")
    parser.add_argument("--seed", type=int, default=None, help="random seed")
    parser.add_argument(
        "--convex-hull",
        action="store_true",
        help="apply the time-sharing (concave envelope) closure to frontiers",
    )
    parser.add_argument(
        "--paper-literal",
        action="store_true",
        help="use the as-printed receiver-1 sign constraint instead of the "
        "derivation-consistent receiver-2 form",
    )
    parser.add_argument(
        "--grid-steps",
        type=int,
        default=None,
        help="override the per-parameter grid point count",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icdms",
        description="Achievable rate regions for interference channels with "
        "degraded message sets",
    )
    parser.add_argument("--version", action="version", version=f"icdms {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_region = sub.add_parser("region", help="sweep Gaussian region families")
    p_region.add_argument("--config", required=True, help="JSON run configuration")
    p_region.add_argument(
        "--region",
        action="append",
        choices=REGION_FAMILIES,
        help="region selector(s), overriding the config",
    )
    _add_common(p_region)
    p_region.set_defaults(func=cmd_region)

    p_discrete = sub.add_parser("discrete", help="evaluate a factored distribution")
    p_discrete.add_argument(
        "--distribution", required=True, help="JSON factored-distribution file"
    )
    p_discrete.add_argument(
        "--scheme",
        choices=("full", "sim", "suc"),
        default="full",
        help="coding scheme to evaluate",
    )
    _add_common(p_discrete)
    p_discrete.set_defaults(func=cmd_discrete)

    p_figure = sub.add_parser("figure", help="run a figure preset")
    p_figure.add_argument("preset", choices=sorted(FIGURE_PRESETS))
    _add_common(p_figure)
    p_figure.set_defaults(func=cmd_figure)

    p_dpc = sub.add_parser("dpc-lambda", help="dirty-paper bin coefficient")
    p_dpc.add_argument("--p1", type=float, required=True)
    p_dpc.add_argument("--p2", type=float, required=True)
    p_dpc.add_argument("--c12", type=float, default=0.0)
    p_dpc.add_argument("--c21", type=float, default=0.0)
    p_dpc.add_argument("--alpha", type=float, required=True)
    p_dpc.add_argument("--beta", type=float, required=True)
    p_dpc.add_argument(
        "--check",
        type=int,
        nargs="?",
        const=50001,
        default=None,
        help="grid-check the optimum with this many grid points",
    )
    _add_common(p_dpc)
    p_dpc.set_defaults(func=cmd_dpc_lambda)

    p_oracle = sub.add_parser("oracle-check", help="run oracle self-checks")
    p_oracle.add_argument("--draws", type=int, default=3)
    p_oracle.add_argument("--samples", type=int, default=200_000)
    _add_common(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None:
        args.seed = 0
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
