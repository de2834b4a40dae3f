"""Command-line surface: data generation, training, planning, and the
tradeoff / SKB-sweep experiment drivers."""

import argparse
import json
import os
import sys
from dataclasses import replace

import numpy as np

from . import planner as pl
from .config import load_config
from .data import generate, save_features, save_prototypes
from .errors import SkbmlfxError
from .extractor import train_extractor
from .harness import run_skb_sweep, run_tradeoff, write_outputs

USAGE_EXIT = 1
RUNTIME_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _build_parser():
    parser = _Parser(prog="skbmlfx", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", default="default", help="config file path or 'default'")
        p.add_argument("--seed", type=int, default=None, help="override harness.base_seed")
        p.add_argument("--out", default=None, help="override harness.out_dir")

    p = sub.add_parser("gen-data", help="generate a synthetic world and write feature/prototype CSVs")
    common(p)

    p = sub.add_parser("train", help="train both party extractors and save them as .npz")
    common(p)

    p = sub.add_parser("plan", help="solve a planner instance file")
    p.add_argument("--instance", required=True, help="instance CSV path")
    p.add_argument("--planner", default="cccp",
                   choices=["level1", "level2", "level3", "level4", "lp_relax",
                            "lagrangian", "cccp", "brute_force"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write the JSON report here")

    p = sub.add_parser("tradeoff", help="latency/accuracy tradeoff over all planners")
    common(p)

    p = sub.add_parser("sweep", help="SKB-size sweep on one side")
    common(p)
    p.add_argument("--side", choices=["tx", "rx"], required=True)
    p.add_argument("--sizes", default=None, help="comma-separated SKB sizes (default 1..C)")

    p = sub.add_parser("oracle", help="CCCP vs brute-force match rate on random instances")
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--instances", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("selftest", help="run the quick invariant suite")
    return parser


def _load(args):
    cfg = load_config(args.config)
    if getattr(args, "seed", None) is not None:
        cfg = replace(cfg, base_seed=args.seed)
    if getattr(args, "out", None):
        cfg = replace(cfg, out_dir=args.out)
    return cfg


def _cmd_gen_data(args):
    cfg = _load(args)
    world = generate(replace(cfg.synth, seed=cfg.base_seed))
    os.makedirs(cfg.out_dir, exist_ok=True)
    save_prototypes(os.path.join(cfg.out_dir, "prototypes.csv"), world.prototypes)
    save_features(os.path.join(cfg.out_dir, "tx_train.csv"), world.tx_train)
    save_features(os.path.join(cfg.out_dir, "rx_train.csv"), world.rx_train)
    from .extractor import TrainingSet
    test = TrainingSet(
        visual=world.test_visual,
        labels=world.test_labels,
        semantic=np.stack([world.prototypes.vector_for(c) for c in world.test_labels], axis=1),
    )
    save_features(os.path.join(cfg.out_dir, "test.csv"), test)
    print(f"wrote prototypes + tx/rx/test features to {cfg.out_dir}")
    return 0


def _cmd_train(args):
    cfg = _load(args)
    world = generate(replace(cfg.synth, seed=cfg.base_seed))
    os.makedirs(cfg.out_dir, exist_ok=True)
    for name, train, lam in (("tx", world.tx_train, cfg.lambda_tx),
                             ("rx", world.rx_train, cfg.lambda_rx)):
        model = train_extractor(train, cfg.k, lam)
        path = os.path.join(cfg.out_dir, f"model_{name}.npz")
        np.savez(path, w_s=model.w_s, w_v=model.w_v, p_v=model.p_v, p_s=model.p_s,
                 k=model.k, d_v=model.d_v, d_s=model.d_s, lam=model.lam)
        print(f"wrote {path}")
    return 0


def _cmd_plan(args):
    inst = pl.load_instance(args.instance)
    if args.planner.startswith("level"):
        report = pl.solve_fixed_level(inst, int(args.planner[len("level"):]))
    elif args.planner == "lp_relax":
        report = pl.solve_linear_relaxation(inst)
    elif args.planner == "lagrangian":
        report = pl.solve_lagrangian(inst)
    elif args.planner == "brute_force":
        report = pl.solve_brute_force(inst)
    else:
        report = pl.solve_cccp(inst, seed=args.seed)
    if args.out:
        pl.save_report(args.out, report)
    print(json.dumps(report.to_dict(), sort_keys=True))
    return 0


def _cmd_tradeoff(args):
    cfg = _load(args)
    _, csv_text, summary = run_tradeoff(cfg)
    csv_path, summary_path = write_outputs(cfg.out_dir, "tradeoff.csv", csv_text, summary)
    print(f"wrote {csv_path} and {summary_path}")
    return 0


def _cmd_sweep(args):
    cfg = _load(args)
    c_unseen = cfg.synth.c_total - max(cfg.synth.c_seen_tx, cfg.synth.c_seen_rx)
    sizes = ([int(s) for s in args.sizes.split(",")] if args.sizes
             else list(range(1, c_unseen + 1)))
    _, csv_text, summary = run_skb_sweep(cfg, args.side, sizes)
    csv_path, summary_path = write_outputs(cfg.out_dir, f"sweep_{args.side}.csv", csv_text, summary)
    print(f"wrote {csv_path} and {summary_path}")
    return 0


def _cmd_oracle(args):
    matches = 0
    worst = 1.0
    for i in range(args.instances):
        inst = pl.random_instance(args.m, seed=args.seed + i)
        bf = pl.solve_brute_force(inst)
        cc = pl.solve_cccp(inst, seed=args.seed + i)
        ratio = cc.avg_loss / max(bf.avg_loss, 1e-300)
        worst = max(worst, ratio)
        if cc.avg_loss <= bf.avg_loss + 1e-9:
            matches += 1
    print(f"cccp matched brute force on {matches}/{args.instances} instances "
          f"(worst ratio {worst:.6f})")
    return 0


def _cmd_selftest(args):
    from . import selftest
    return selftest.run()


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    handlers = {
        "gen-data": _cmd_gen_data,
        "train": _cmd_train,
        "plan": _cmd_plan,
        "tradeoff": _cmd_tradeoff,
        "sweep": _cmd_sweep,
        "oracle": _cmd_oracle,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except SkbmlfxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RUNTIME_EXIT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RUNTIME_EXIT


if __name__ == "__main__":
    sys.exit(main())
