"""Quick invariant suite behind the `selftest` CLI subcommand."""

import numpy as np

from . import numkernel as nk
from . import planner as pl
from .data import SynthConfig, generate
from .extractor import train_extractor


def _check(name, ok, failures):
    print(f"{'PASS' if ok else 'FAIL'} {name}")
    if not ok:
        failures.append(name)


def run():
    failures = []
    rng = np.random.default_rng(0)

    a = rng.normal(size=(8, 8))
    a = a + a.T
    eig = nk.eigh_sym(a)
    resid = np.linalg.norm(a @ eig.vectors - eig.vectors @ np.diag(eig.values))
    _check("eigh residual", resid <= 1e-10 * max(1.0, np.linalg.norm(a)), failures)
    _check("eigh trace identity", abs(a.trace() - eig.values.sum()) <= 1e-10 * np.linalg.norm(a), failures)

    b = rng.normal(size=(5, 9))
    p = nk.pinv(b)
    _check("pinv Moore-Penrose", np.linalg.norm(b @ p @ b - b) <= 1e-8 * np.linalg.norm(b), failures)

    sa = rng.normal(size=(4, 4)); sa = sa @ sa.T
    sb = rng.normal(size=(6, 6)); sb = sb @ sb.T
    c = rng.normal(size=(4, 6))
    x = nk.sylvester_spd(sa, sb, c)
    _check("sylvester residual",
           np.linalg.norm(sa @ x + x @ sb - c) <= 1e-8 * np.linalg.norm(c), failures)

    world = generate(SynthConfig(d_v=24, d_s=8, n_per_class=15, seed=1))
    model = train_extractor(world.tx_train, k=4)
    _check("w_s orthonormal rows",
           np.linalg.norm(model.w_s @ model.w_s.T - np.eye(4)) <= 1e-8, failures)

    ok = True
    for trial in range(10):
        inst = pl.random_instance(5, seed=trial)
        bf = pl.solve_brute_force(inst)
        cc = pl.solve_cccp(inst, seed=trial)
        lp_obj = pl.solve_lp_mck(inst, inst.losses)[1] / inst.m
        ok = ok and cc.feasible and lp_obj <= bf.avg_loss + 1e-9 and cc.avg_loss >= bf.avg_loss - 1e-9
    _check("planner bound chain (10 instances)", ok, failures)

    a1 = pl.solve_cccp(pl.random_instance(6, seed=3), seed=9)
    a2 = pl.solve_cccp(pl.random_instance(6, seed=3), seed=9)
    _check("cccp determinism", np.array_equal(a1.assignment.x, a2.assignment.x), failures)

    if failures:
        print(f"{len(failures)} check(s) failed")
        return 2
    print("all checks passed")
    return 0
