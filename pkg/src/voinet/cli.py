"""Command-line front end.

Commands: weights (derive priority weights from a comparison matrix),
assess (score a single context), sweep (figure presets or custom sweep
specs to CSV), schedule (rank and filter a record batch), presets.

Exit codes: 0 success, 1 input error, 2 consistency rule failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Mapping

import numpy as np

from . import ahp, config as cfgmod
from .scheduler import SchedulerConfig, filter_broadcast, rank
from .sweep import (
    SweepSeries,
    SweepSpec,
    figure_preset,
    preset_names,
    run_sweep,
)
from .voi import (
    ATTRIBUTES,
    BUILTIN_MATRICES,
    PROCESSED,
    AssessmentContext,
    attribute_scores,
    overall_voi,
    temporal_from_decay,
)


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit code 2; the contract reserves 2 for the
    # consistency rule, so argument errors must exit 1.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="voinet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_weights = sub.add_parser("weights", help="derive priority weights")
    src = p_weights.add_mutually_exclusive_group(required=True)
    src.add_argument("--profile", help="built-in comparison matrix (safety, traffic)")
    src.add_argument("--matrix", help="JSON file with a pairwise comparison matrix")
    p_weights.set_defaults(func=cmd_weights)

    p_assess = sub.add_parser("assess", help="score a single context")
    p_assess.add_argument("--config", help="JSON config file")
    p_assess.add_argument("--profile", required=True)
    p_assess.add_argument("--scenario", default="urban")
    p_assess.add_argument("--sensor", default="medium")
    p_assess.add_argument("--distance", type=float, required=True)
    p_assess.add_argument("--aoi", type=float, default=0.0)
    p_assess.add_argument("--ptd", type=float, default=1.0, help="temporal decay rate (1/s)")
    p_assess.add_argument("--mode", choices=["processed", "nonprocessed"], default="processed")
    p_assess.add_argument("--obs-distance", type=float, default=None)
    p_assess.set_defaults(func=cmd_assess)

    p_sweep = sub.add_parser("sweep", help="evaluate a sweep and write CSV")
    src = p_sweep.add_mutually_exclusive_group(required=True)
    src.add_argument("--figure", help="preset name (see the presets command)")
    src.add_argument("--spec", help="JSON sweep spec file")
    p_sweep.add_argument("--config", help="JSON config file (names used by --spec)")
    p_sweep.add_argument("--out", help="output CSV path (default: <name>.csv)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_sched = sub.add_parser("schedule", help="rank records and apply the threshold")
    p_sched.add_argument("--config", help="JSON config file")
    p_sched.add_argument("--records", required=True, help="JSON-lines record file")
    p_sched.add_argument("--receivers", required=True, help="JSON-lines receiver file")
    p_sched.add_argument("--profile", required=True)
    p_sched.add_argument("--threshold", type=float, default=None)
    p_sched.add_argument("--now", type=float, default=None, help="evaluation instant (default: latest t0)")
    p_sched.add_argument("--out", help="output CSV path (default: stdout)")
    p_sched.set_defaults(func=cmd_schedule)

    p_presets = sub.add_parser("presets", help="list figure presets")
    p_presets.set_defaults(func=cmd_presets)
    return parser


def _load_matrix_file(path: str) -> ahp.ComparisonMatrix:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from None
    if isinstance(data, list):
        entries, labels = data, None
    elif isinstance(data, dict) and "matrix" in data:
        entries = data["matrix"]
        labels = data.get("labels")
    else:
        raise ValueError(f"{path}: expected a JSON matrix or an object with a 'matrix' key")
    if labels is None:
        n = len(entries)
        labels = ATTRIBUTES if n == 3 else tuple(f"c{i + 1}" for i in range(n))
    return ahp.ComparisonMatrix(tuple(labels), np.array(entries, dtype=float))


def cmd_weights(args: argparse.Namespace) -> int:
    if args.profile is not None:
        try:
            matrix = BUILTIN_MATRICES[args.profile]()
        except KeyError:
            raise ValueError(
                f"no built-in comparison matrix named {args.profile!r}; "
                f"known: {sorted(BUILTIN_MATRICES)} (or pass --matrix)"
            ) from None
        source = args.profile
    else:
        matrix = _load_matrix_file(args.matrix)
        source = args.matrix

    solution = ahp.principal_eigenvector(matrix)
    report = ahp.consistency(solution, matrix.n)
    print(f"matrix: {source} ({matrix.n}x{matrix.n})")
    pairs = " ".join(f"{label}={w:.6f}" for label, w in zip(matrix.labels, solution.weights))
    print(f"weights: {pairs}")
    print(f"lambda_max: {solution.lambda_max:.6f}")
    print(f"consistency_index: {report.consistency_index:.6f}")
    print(f"random_index: {report.random_index:g}")
    print(f"consistency_ratio: {report.consistency_ratio:.6f}")
    print(f"acceptable: {'yes' if report.acceptable else 'no'}")
    return 0 if report.acceptable else 2


def cmd_assess(args: argparse.Namespace) -> int:
    cfg = cfgmod.load_config(args.config)
    ctx = AssessmentContext(
        distance=args.distance,
        aoi=args.aoi,
        scenario=cfgmod.resolve_name(cfg.scenarios, args.scenario, "scenario", "assess"),
        temporal=temporal_from_decay(args.ptd),
        sensor=cfgmod.resolve_name(cfg.sensors, args.sensor, "sensor", "assess"),
        mode=cfgmod.resolve_mode(args.mode),
        obs_distance=args.obs_distance,
    )
    profile = cfgmod.resolve_name(cfg.profiles, args.profile, "profile", "assess")
    scores = attribute_scores(ctx, cfg.logistic)
    overall = overall_voi(ctx, profile, cfg.logistic)
    print(
        f"overall={overall:.6f} proximity={scores.proximity:.6f} "
        f"timeliness={scores.timeliness:.6f} quality={scores.quality:.6f}"
    )
    return 0


def _series_from_json(obj: Mapping[str, Any], cfg: cfgmod.ConfigDocument, where: str) -> SweepSeries:
    if "label" not in obj:
        raise ValueError(f"{where}: series needs a label")
    kwargs: dict[str, Any] = {"label": str(obj["label"])}
    if "profile" in obj:
        kwargs["profile"] = cfgmod.resolve_name(cfg.profiles, obj["profile"], "profile", where)
    if "scenario" in obj:
        kwargs["scenario"] = cfgmod.resolve_name(cfg.scenarios, obj["scenario"], "scenario", where)
    if "sensor" in obj:
        kwargs["sensor"] = cfgmod.resolve_name(cfg.sensors, obj["sensor"], "sensor", where)
    if "temporal" in obj:
        kwargs["temporal"] = cfgmod.parse_temporal(obj["temporal"], where)
    if "mode" in obj:
        kwargs["mode"] = cfgmod.resolve_mode(str(obj["mode"]))
    if "attribute" in obj:
        kwargs["attribute"] = str(obj["attribute"])
    for key in ("aoi", "distance", "obs_distance"):
        if obj.get(key) is not None:
            kwargs[key] = float(obj[key])
    return SweepSeries(**kwargs)


def _spec_from_file(path: str, cfg: cfgmod.ConfigDocument) -> SweepSpec:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError(f"{path}: sweep spec must be a JSON object")
    for key in ("variable", "start", "stop", "step", "series"):
        if key not in data:
            raise ValueError(f"{path}: sweep spec needs {key!r}")
    series = tuple(
        _series_from_json(obj, cfg, f"{path} series[{i}]")
        for i, obj in enumerate(data["series"])
    )
    obs_grid = data.get("obs_grid")
    return SweepSpec(
        variable=str(data["variable"]),
        start=float(data["start"]),
        stop=float(data["stop"]),
        step=float(data["step"]),
        series=series,
        obs_grid=None if obs_grid is None else float(obs_grid),
        name=str(data.get("name", "custom")),
        notes=tuple(str(n) for n in data.get("notes", ())),
    )


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = cfgmod.load_config(args.config)
    if args.figure is not None:
        spec = figure_preset(args.figure)
    else:
        spec = _spec_from_file(args.spec, cfg)
    curves = run_sweep(spec, cfg.logistic)
    out_path = args.out or f"{spec.name}.csv"
    with open(out_path, "w", newline="") as fh:
        fh.write(curves.to_csv())
    print(f"wrote {len(curves.xs)} rows x {len(spec.series)} series to {out_path}")
    return 0


def cmd_schedule(args: argparse.Namespace) -> int:
    cfg = cfgmod.load_config(args.config)
    records = cfgmod.load_records(args.records, cfg)
    receivers = cfgmod.load_receivers(args.receivers, cfg)
    threshold = args.threshold if args.threshold is not None else cfg.threshold
    if threshold is None:
        raise ValueError("no threshold given; pass --threshold or set defaults.threshold in the config")
    if args.now is not None:
        now = args.now
    else:
        now = max((r.generated_at for r in records), default=0.0)
    sched_cfg = SchedulerConfig(
        profile=cfgmod.resolve_name(cfg.profiles, args.profile, "profile", "schedule"),
        threshold=threshold,
        now=now,
        params=cfg.logistic,
    )
    ranked = rank(records, receivers, sched_cfg)
    transmit, cancelled = filter_broadcast(ranked, sched_cfg)
    passing = {e.record_id for e in transmit}

    lines = ["rank,record_id,best_receiver,best_value,decision"]
    for position, entry in enumerate(ranked, 1):
        decision = "transmit" if entry.record_id in passing else "cancel"
        lines.append(
            f"{position},{entry.record_id},{entry.best_receiver},"
            f"{entry.best_value:.6g},{decision}"
        )
    body = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    print(f"transmit={len(transmit)} cancelled={len(cancelled)}")
    return 0


def cmd_presets(args: argparse.Namespace) -> int:
    for name in preset_names():
        spec = figure_preset(name)
        print(
            f"{name}: {len(spec.series)} series over {spec.variable} "
            f"{spec.start:g}..{spec.stop:g} step {spec.step:g}"
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
