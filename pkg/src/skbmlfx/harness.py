"""Experiment orchestration: per-trial worlds, planner comparisons, the
latency/accuracy tradeoff table, and SKB-size sweeps."""

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import planner as pl
from .channel import achievable_rate
from .config import ExperimentConfig, config_as_dict
from .data import generate
from .errors import ConfigInvalid
from .extractor import SemanticPrototypes, train_extractor
from .lossmodel import PartyContext, compute_menu, effective_decision
from .skb import build_skb, parse_selection

BRUTE_FORCE_M_CAP = 10


@dataclass(frozen=True)
class ExperimentRow:
    trial: int
    planner: str
    avg_loss: float
    avg_latency_s: float
    accuracy: float
    feasible: bool
    wall_time_s: float


def _selection_for_trial(spec, trial):
    """Random SKB selections get a per-trial seed offset; others unchanged."""
    sel = parse_selection(spec)
    if sel[0] == "random":
        return ("random", sel[1], sel[2] + trial)
    return sel


def _solve(name, inst, seed):
    if name.startswith("level"):
        return pl.solve_fixed_level(inst, int(name[len("level"):]))
    if name == "lp_relax":
        return pl.solve_linear_relaxation(inst)
    if name == "lagrangian":
        return pl.solve_lagrangian(inst)
    if name == "cccp":
        return pl.solve_cccp(inst, seed=seed)
    if name == "brute_force":
        return pl.solve_brute_force(inst)
    raise ConfigInvalid(f"unknown planner {name!r}")


def run_trial(cfg, trial):
    """One seeded trial: world + models + menus, then every planner."""
    seed = cfg.base_seed + trial
    world = generate(replace(cfg.synth, seed=seed))
    tx_model = train_extractor(world.tx_train, cfg.k, cfg.lambda_tx)
    rx_model = train_extractor(world.rx_train, cfg.k, cfg.lambda_rx)
    # knowledge bases hold candidate classes for the unseen-recognition task
    idx = [world.prototypes.class_ids.index(c) for c in world.test_classes]
    task_protos = SemanticPrototypes(
        class_ids=world.test_classes,
        vectors=world.prototypes.vectors[:, idx],
    )
    tx = PartyContext(model=tx_model, skb=build_skb(task_protos, _selection_for_trial(cfg.skb_tx, trial)))
    rx = PartyContext(model=rx_model, skb=build_skb(task_protos, _selection_for_trial(cfg.skb_rx, trial)))
    rate = achievable_rate(cfg.channel)

    n_test = world.test_labels.size
    m = min(cfg.m_per_trial, n_test)
    picks = np.random.default_rng(seed).choice(n_test, size=m, replace=False)
    menus = [compute_menu(world.test_visual[:, i], tx, rx, cfg.channel, rate) for i in picks]
    truth = world.test_labels[picks]

    losses = np.vstack([mn.losses for mn in menus])
    lats = np.vstack([mn.latencies for mn in menus])
    tau = cfg.tau
    if tau is None:
        tau = 0.5 * (lats[:, 1].mean() + lats[:, 3].mean())
    inst = pl.Instance(losses=losses, latencies=lats, tau=tau)

    rows = []
    for name in cfg.planners:
        if name == "brute_force" and m > BRUTE_FORCE_M_CAP:
            continue
        t0 = time.perf_counter()
        report = _solve(name, inst, seed)
        wall = time.perf_counter() - t0
        levels = report.assignment.levels
        correct = sum(
            1 for i, mn in enumerate(menus)
            if effective_decision(mn, int(levels[i])) == int(truth[i])
        )
        rows.append(ExperimentRow(
            trial=trial,
            planner=name,
            avg_loss=report.avg_loss,
            avg_latency_s=report.avg_latency,
            accuracy=correct / m,
            feasible=report.feasible,
            wall_time_s=wall,
        ))
    return rows


def _workers(cfg):
    env = os.environ.get("SKBMLFX_WORKERS")
    return max(1, int(env) if env else cfg.workers)


def _run_trials(cfg, trials):
    workers = _workers(cfg)
    if workers <= 1:
        results = [run_trial(cfg, t) for t in trials]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(run_trial, [cfg] * len(trials), trials))
    return [row for rows in results for row in rows]


TRADEOFF_COLUMNS = ("trial", "planner", "avg_loss", "avg_latency_s", "accuracy", "feasible")
SWEEP_COLUMNS = ("side", "size", "trial", "planner", "avg_loss", "avg_latency_s", "accuracy", "feasible")


def _csv_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def rows_to_csv(rows, columns):
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_csv_value(getattr(row, c) if not isinstance(row, dict) else row[c])
                              for c in columns))
    return "\n".join(lines) + "\n"


def run_tradeoff(cfg):
    """One row per (trial, planner); wall times are reported separately so the
    CSV is bit-reproducible for a fixed config and seed."""
    rows = _run_trials(cfg, list(range(cfg.trials)))
    csv_text = rows_to_csv(rows, TRADEOFF_COLUMNS)
    summary = _summarize(cfg, rows)
    return rows, csv_text, summary


def _summarize(cfg, rows):
    by_planner = {}
    for row in rows:
        by_planner.setdefault(row.planner, []).append(row)
    planners = {}
    for name, group in sorted(by_planner.items()):
        planners[name] = {
            "mean_avg_loss": float(np.mean([r.avg_loss for r in group])),
            "mean_avg_latency_s": float(np.mean([r.avg_latency_s for r in group])),
            "mean_accuracy": float(np.mean([r.accuracy for r in group])),
            "feasible_fraction": float(np.mean([r.feasible for r in group])),
            "total_wall_time_s": float(np.sum([r.wall_time_s for r in group])),
        }
    return {"config": config_as_dict(cfg), "planners": planners}


def run_skb_sweep(cfg, side, sizes):
    """Sweep one party's SKB size (random membership, per-trial seeds) with
    the other side fixed; returns long-format rows plus a summary."""
    if side not in ("tx", "rx"):
        raise ConfigInvalid("side must be 'tx' or 'rx'")
    c = cfg.synth.c_total - max(cfg.synth.c_seen_tx, cfg.synth.c_seen_rx)
    sizes = [int(s) for s in sizes]
    if any(s < 1 or s > c for s in sizes):
        raise ConfigInvalid(f"sizes must lie in [1, {c}]")
    out_rows = []
    for size in sizes:
        # offset the swept side's selection seed so it never mirrors the
        # fixed side's random membership at equal sizes
        swept = replace(cfg, **{f"skb_{side}": f"random:{size}:{cfg.base_seed + 104729}"})
        for row in _run_trials(swept, list(range(cfg.trials))):
            out_rows.append({
                "side": side, "size": size, "trial": row.trial, "planner": row.planner,
                "avg_loss": row.avg_loss, "avg_latency_s": row.avg_latency_s,
                "accuracy": row.accuracy, "feasible": row.feasible,
                "wall_time_s": row.wall_time_s,
            })
    csv_text = rows_to_csv(out_rows, SWEEP_COLUMNS)
    means = {}
    for row in out_rows:
        means.setdefault((row["size"], row["planner"]), []).append(row["accuracy"])
    summary = {
        "config": config_as_dict(cfg),
        "side": side,
        "sizes": sizes,
        "mean_accuracy": {f"{size}:{name}": float(np.mean(v)) for (size, name), v in sorted(means.items())},
        "total_wall_time_s": float(np.sum([r["wall_time_s"] for r in out_rows])),
    }
    return out_rows, csv_text, summary


def write_outputs(out_dir, csv_name, csv_text, summary):
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, csv_name)
    with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(csv_text)
    summary_path = os.path.join(out_dir, "summary.json")
    with open(summary_path, "w", encoding="utf-8") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return csv_path, summary_path
