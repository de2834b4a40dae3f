"""Multi-choice knapsack planning: exact-penalty CCCP solver, fixed-level /
LP-rounding / Lagrangian baselines, a brute-force oracle, and instance I/O.

Each of M samples picks exactly one of 4 transmission levels; the average
latency must stay within the budget tau while the average semantic loss is
minimized.
"""

import json
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DegenerateDenominator,
    Infeasible,
    IoFailure,
    MalformedAssignment,
    MalformedHeader,
    TooLarge,
)

N_LEVELS = 4
FEAS_TOL = 1e-9
BRUTE_FORCE_CAP = 12


@dataclass(frozen=True)
class Instance:
    """Loss/latency menus (M x 4) and the average-latency budget tau."""

    losses: np.ndarray
    latencies: np.ndarray
    tau: float

    def __post_init__(self):
        losses = np.asarray(self.losses, dtype=np.float64)
        lats = np.asarray(self.latencies, dtype=np.float64)
        if losses.ndim != 2 or losses.shape[1] != N_LEVELS or losses.shape[0] < 1:
            raise MalformedAssignment(f"losses must be M x {N_LEVELS}")
        if lats.shape != losses.shape:
            raise MalformedAssignment("losses and latencies must share shape")
        if not (np.all(np.isfinite(losses)) and np.all(losses >= 0)):
            raise ValueError("losses must be finite and non-negative")
        if not (np.all(np.isfinite(lats)) and np.all(lats > 0)):
            raise ValueError("latencies must be finite and strictly positive")
        object.__setattr__(self, "losses", losses)
        object.__setattr__(self, "latencies", lats)
        object.__setattr__(self, "tau", float(self.tau))
        if float(np.mean(lats.min(axis=1))) > self.tau + FEAS_TOL:
            raise Infeasible("even per-row minimum latencies exceed tau on average")

    @property
    def m(self):
        return self.losses.shape[0]


@dataclass(frozen=True)
class Assignment:
    """Binary one-hot level selection per sample."""

    x: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x)
        if x.ndim != 2 or x.shape[1] != N_LEVELS:
            raise MalformedAssignment("assignment must be M x 4")
        if not np.all((x == 0) | (x == 1)):
            raise MalformedAssignment("assignment entries must be 0/1")
        if not np.all(x.sum(axis=1) == 1):
            raise MalformedAssignment("each row must select exactly one level")
        object.__setattr__(self, "x", x.astype(np.int64))

    @property
    def levels(self):
        """1-based chosen level per row."""
        return self.x.argmax(axis=1) + 1


@dataclass(frozen=True)
class FractionalPoint:
    """Relaxed selection: rows on the simplex over the four levels."""

    x: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=np.float64)
        if x.ndim != 2 or x.shape[1] != N_LEVELS:
            raise MalformedAssignment("fractional point must be M x 4")
        if np.any(x < -FEAS_TOL) or np.any(x > 1 + FEAS_TOL):
            raise MalformedAssignment("entries must lie in [0, 1]")
        if np.any(np.abs(x.sum(axis=1) - 1.0) > FEAS_TOL):
            raise MalformedAssignment("row sums must equal 1")
        object.__setattr__(self, "x", x)


@dataclass(frozen=True)
class PlannerReport:
    assignment: Assignment
    avg_loss: float
    avg_latency: float
    feasible: bool
    iterations: int = 0
    restarts_used: int = 0
    gamma_final: float = 0.0
    converged: bool = True
    repair_fired: bool = False

    def to_dict(self):
        return {
            "levels": self.assignment.levels.tolist(),
            "avg_loss": self.avg_loss,
            "avg_latency": self.avg_latency,
            "feasible": self.feasible,
            "iterations": self.iterations,
            "restarts_used": self.restarts_used,
            "gamma_final": self.gamma_final,
            "converged": self.converged,
            "repair_fired": self.repair_fired,
        }


def evaluate(inst, a):
    """Average loss/latency of a binary assignment plus its feasibility flag."""
    if not isinstance(a, Assignment):
        a = Assignment(a)
    if a.x.shape != inst.losses.shape:
        raise MalformedAssignment("assignment shape does not match instance")
    avg_loss = float(np.sum(a.x * inst.losses)) / inst.m
    avg_lat = float(np.sum(a.x * inst.latencies)) / inst.m
    return PlannerReport(
        assignment=a,
        avg_loss=avg_loss,
        avg_latency=avg_lat,
        feasible=avg_lat <= inst.tau + FEAS_TOL,
    )


def _levels_to_assignment(levels, m):
    x = np.zeros((m, N_LEVELS), dtype=np.int64)
    x[np.arange(m), levels] = 1
    return Assignment(x)


def _row_pick(scores, lats, prefer_high_latency):
    """Per-row argmin of ``scores`` with near-ties broken by latency
    (low by default, high when asked), then lowest index."""
    m = scores.shape[0]
    picks = np.empty(m, dtype=np.int64)
    for r in range(m):
        row = scores[r]
        smin = row.min()
        tol = 1e-9 * (1.0 + abs(smin))
        tied = np.flatnonzero(row <= smin + tol)
        if tied.size == 1:
            picks[r] = tied[0]
            continue
        t_tied = lats[r, tied]
        best_t = t_tied.max() if prefer_high_latency else t_tied.min()
        picks[r] = tied[np.argmax(t_tied == best_t)]
    return picks


def solve_lp_mck(inst, costs):
    """LP relaxation of the multi-choice knapsack via parametric dualization.

    For multiplier mu >= 0 each row picks argmin(cost + mu * latency); mu is
    swept over the finite breakpoint set where row argmins change. At the
    critical multiplier at most one row is interpolated between two levels so
    the budget binds with equality. Returns (FractionalPoint, objective).
    """
    costs = np.asarray(costs, dtype=np.float64)
    if costs.shape != inst.losses.shape:
        raise MalformedAssignment("costs shape does not match instance")
    T = inst.latencies
    m = inst.m
    budget = inst.tau * m
    budget_tol = FEAS_TOL * m

    def picks_at(mu, prefer_high):
        return _row_pick(costs + mu * T, T, prefer_high)

    def total_lat(picks):
        return float(T[np.arange(m), picks].sum())

    pick0 = picks_at(0.0, prefer_high=False)
    if total_lat(pick0) <= budget + budget_tol:
        x = np.zeros((m, N_LEVELS))
        x[np.arange(m), pick0] = 1.0
        return FractionalPoint(x), float(costs[np.arange(m), pick0].sum())

    # breakpoints: multipliers where two levels of some row swap preference
    bps = []
    for r in range(m):
        for i in range(N_LEVELS):
            for j in range(N_LEVELS):
                dt = T[r, i] - T[r, j]
                if dt > 0:
                    mu = (costs[r, j] - costs[r, i]) / dt
                    if mu > 0:
                        bps.append(mu)
    bps = sorted(set(bps))
    # sentinel past the last crossing: ordering is frozen beyond it
    bps.append((bps[-1] if bps else 0.0) + 1.0)

    # smallest breakpoint whose low-latency pick fits the budget (monotone)
    lo_i, hi_i = 0, len(bps) - 1
    if total_lat(picks_at(bps[hi_i], prefer_high=False)) > budget + budget_tol:
        raise Infeasible("no multiplier brings the LP pick within budget")
    while lo_i < hi_i:
        mid = (lo_i + hi_i) // 2
        if total_lat(picks_at(bps[mid], prefer_high=False)) <= budget + budget_tol:
            hi_i = mid
        else:
            lo_i = mid + 1
    mu_star = bps[lo_i]

    low = picks_at(mu_star, prefer_high=False)
    high = picks_at(mu_star, prefer_high=True)
    cur = high.copy()
    cur_lat = total_lat(cur)
    x = np.zeros((m, N_LEVELS))
    x[np.arange(m), cur] = 1.0
    if cur_lat > budget + budget_tol:
        # walk tied rows from the high-latency to the low-latency option;
        # all swaps trade cost for latency at the common ratio mu_star, so
        # any completion that reaches the budget boundary is optimal
        for r in range(m):
            if high[r] == low[r]:
                continue
            saved = T[r, high[r]] - T[r, low[r]]
            theta = (cur_lat - budget) / saved
            if theta >= 1.0 - 1e-15:
                x[r, high[r]] = 0.0
                x[r, low[r]] = 1.0
                cur_lat -= saved
                if cur_lat <= budget + budget_tol:
                    break
            else:
                x[r, high[r]] = 1.0 - theta
                x[r, low[r]] = theta
                cur_lat -= theta * saved
                break
        if cur_lat > budget + budget_tol:
            raise Infeasible("budget unreachable at critical multiplier")
    return FractionalPoint(x), float(np.sum(costs * x))


def _round_argmax(xfrac):
    """Per-row argmax rounding; ties go to the lowest level index."""
    return np.argmax(xfrac, axis=1)


def _repair_to_feasible(inst, levels, losses=None):
    """Greedy repair: repeatedly switch the row with the smallest
    loss-increase-per-latency-saved to its cheapest-latency level."""
    if losses is None:
        losses = inst.losses
    T = inst.latencies
    m = inst.m
    levels = levels.copy()
    fired = False
    while float(T[np.arange(m), levels].mean()) > inst.tau + FEAS_TOL:
        best_r, best_ratio = -1, np.inf
        for r in range(m):
            cheap = int(np.argmin(T[r]))
            saved = T[r, levels[r]] - T[r, cheap]
            if saved <= 0:
                continue
            ratio = (losses[r, cheap] - losses[r, levels[r]]) / saved
            if ratio < best_ratio:
                best_r, best_ratio = r, ratio
        if best_r < 0:
            break
        levels[best_r] = int(np.argmin(T[best_r]))
        fired = True
    return levels, fired


def _blend_feasible(inst, x):
    """Blend a row-simplex point toward the per-row cheapest-latency levels
    until the relaxed budget holds (possible by the feasibility guard)."""
    m = inst.m
    T = inst.latencies
    cheap = np.zeros((m, N_LEVELS))
    cheap[np.arange(m), T.argmin(axis=1)] = 1.0
    budget = inst.tau * m
    lat = float(np.sum(T * x))
    lat_cheap = float(np.sum(T * cheap))
    if lat <= budget:
        return x
    theta = min(1.0, (lat - budget) / max(lat - lat_cheap, 1e-300))
    return (1.0 - theta) * x + theta * cheap


def _random_feasible_fraction(inst, rng):
    """Random simplex point per row, blended to satisfy the relaxed budget."""
    return _blend_feasible(inst, rng.dirichlet(np.ones(N_LEVELS), size=inst.m))


def _polish_levels(inst, levels):
    """Local search on an integer assignment: single-row switches, then best
    feasible pair swap, until no move lowers the total loss."""
    m = inst.m
    L, T = inst.losses, inst.latencies
    budget = inst.tau * m + FEAS_TOL * m
    levels = levels.copy()
    lat = float(T[np.arange(m), levels].sum())
    improved = True
    while improved:
        improved = False
        for r in range(m):
            cur = levels[r]
            for l in range(N_LEVELS):
                if l != cur and L[r, l] < L[r, cur] - 1e-15 and lat - T[r, cur] + T[r, l] <= budget:
                    lat += T[r, l] - T[r, cur]
                    levels[r] = l
                    cur = l
                    improved = True
        if improved:
            continue
        best = None
        for i in range(m):
            ci = levels[i]
            for li in range(N_LEVELS):
                dli = L[i, li] - L[i, ci]
                if dli >= 0:
                    continue
                dti = T[i, li] - T[i, ci]
                for j in range(m):
                    if j == i:
                        continue
                    cj = levels[j]
                    for lj in range(N_LEVELS):
                        gain = dli + L[j, lj] - L[j, cj]
                        if gain < -1e-15 and lat + dti + T[j, lj] - T[j, cj] <= budget:
                            if best is None or gain < best[0]:
                                best = (gain, i, li, j, lj, dti + T[j, lj] - T[j, cj])
        if best is not None:
            _, i, li, j, lj, dt = best
            levels[i] = li
            levels[j] = lj
            lat += dt
            improved = True
            continue
        if m <= 12:
            move = _best_triple_move(inst, levels, lat, budget)
            if move is not None:
                (i, li), (j, lj), (k, lk), dt = move
                levels[i], levels[j], levels[k] = li, lj, lk
                lat += dt
                improved = True
    return levels


def _best_triple_move(inst, levels, lat, budget):
    """Best loss-reducing feasible simultaneous change of three rows; only
    worth the cubic sweep on small instances."""
    m = inst.m
    L, T = inst.losses, inst.latencies
    best = None
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                for li in range(N_LEVELS):
                    dli = L[i, li] - L[i, levels[i]]
                    dti = T[i, li] - T[i, levels[i]]
                    for lj in range(N_LEVELS):
                        dlj = dli + L[j, lj] - L[j, levels[j]]
                        dtj = dti + T[j, lj] - T[j, levels[j]]
                        for lk in range(N_LEVELS):
                            gain = dlj + L[k, lk] - L[k, levels[k]]
                            if gain >= -1e-15:
                                continue
                            dt = dtj + T[k, lk] - T[k, levels[k]]
                            if lat + dt <= budget and (best is None or gain < best[0]):
                                best = (gain, i, li, j, lj, k, lk, dt)
    if best is None:
        return None
    _, i, li, j, lj, k, lk, dt = best
    return (i, li), (j, lj), (k, lk), dt


def penalty_objective(inst, x, gamma):
    """Penalized objective: total loss minus gamma * sum x (x - 1)."""
    return float(np.sum(x * inst.losses) - gamma * np.sum(x * (x - 1.0)))


def _cccp_run(inst, x0, gamma0, gamma_growth, tol, max_iters, max_doublings=20):
    """One CCCP run from x0. Returns (x, iterations, gamma, converged, traces)
    where traces maps gamma -> list of penalized objectives (for descent
    checks)."""
    x = np.asarray(x0, dtype=np.float64)
    gamma = gamma0
    iters = 0
    traces = []
    for doubling in range(max_doublings + 1):
        trace = [penalty_objective(inst, x, gamma)]
        for _ in range(max_iters):
            costs = inst.losses - gamma * (2.0 * x - 1.0)
            xf, _ = solve_lp_mck(inst, costs)
            iters += 1
            trace.append(penalty_objective(inst, xf.x, gamma))
            delta = float(np.max(np.abs(xf.x - x)))
            x = xf.x
            if delta <= tol:
                break
        traces.append((gamma, trace))
        if float(np.max(np.abs(x - np.round(x)))) <= tol:
            return x, iters, gamma, True, traces
        gamma *= gamma_growth
    return x, iters, gamma / gamma_growth, False, traces


def solve_cccp(inst, gamma0=None, gamma_growth=2.0, restarts=16, tol=1e-7,
               max_iters=100, seed=0, max_doublings=20, polish=True):
    """Exact-penalty CCCP: iterate LP subproblems with linearized penalty
    costs, escalating gamma until the limit is binary, over several seeded
    restarts; rounded limits get a local-search polish. Returns the best
    feasible binary assignment found."""
    # start well below the per-row loss spreads so early iterations track the
    # unpenalized LP; the doubling schedule escalates past the exact penalty
    # threshold until the limit is binary
    spread = float(np.mean(inst.losses.max(axis=1) - inst.losses.min(axis=1)))
    if spread <= 0:
        spread = 1.0
    if gamma0 is not None and (gamma0 <= 0 or gamma_growth <= 1):
        raise ValueError("need gamma0 > 0 and gamma_growth > 1")
    rng = np.random.default_rng(seed)
    best = None
    total_iters = 0
    all_converged = True
    for r in range(restarts):
        if r == 0:
            # deterministic first restart from the (feasibility-blended) uniform point
            x0 = _blend_feasible(inst, np.full((inst.m, N_LEVELS), 0.25))
            g0 = gamma0 if gamma0 is not None else 0.05 * spread
        else:
            # randomized starts; the initial penalty tilt is randomized too so
            # restarts explore distinct rounding basins
            x0 = _random_feasible_fraction(inst, rng)
            g0 = gamma0 if gamma0 is not None else spread * rng.uniform(0.05, 0.8)
        x, iters, gamma, converged, _ = _cccp_run(
            inst, x0, g0, gamma_growth, tol, max_iters, max_doublings)
        total_iters += iters
        all_converged = all_converged and converged
        levels = _round_argmax(x)
        levels, _ = _repair_to_feasible(inst, levels)
        if polish:
            levels = _polish_levels(inst, levels)
        report = evaluate(inst, _levels_to_assignment(levels, inst.m))
        if report.feasible and (best is None or report.avg_loss < best.avg_loss):
            best = replace(report, gamma_final=gamma)
    if best is None:
        raise Infeasible("no CCCP restart produced a feasible assignment")
    return replace(best, iterations=total_iters, restarts_used=restarts,
                   converged=all_converged)


def penalty_lower_bound(inst, x0):
    """Exact-penalty threshold estimate: (loss at x0 - LP optimum) divided by
    the maximum of sum x(1-x) over the relaxed polytope (magnitude reading)."""
    if not isinstance(x0, FractionalPoint):
        x0 = FractionalPoint(x0)
    if x0.x.shape != inst.losses.shape:
        raise MalformedAssignment("x0 shape does not match instance")
    lat0 = float(np.sum(inst.latencies * x0.x)) / inst.m
    if lat0 > inst.tau + FEAS_TOL:
        raise Infeasible("x0 violates the latency budget")
    _, lbar0 = solve_lp_mck(inst, inst.losses)
    numerator = float(np.sum(x0.x * inst.losses)) - lbar0
    d = _max_concavity(inst)
    if d <= 1e-12:
        raise DegenerateDenominator("max of sum x(1-x) over the polytope is ~0")
    return numerator / d


def _max_concavity(inst):
    """Maximize sum x(1-x) subject to row simplexes and the latency budget.

    Unconstrained row maximum is 3/4 at the uniform point; if uniform violates
    the budget, water-fill each row against a bisected latency multiplier.
    """
    m = inst.m
    T = inst.latencies
    budget = inst.tau * m
    uniform_lat = float(T.mean(axis=1).sum())
    if uniform_lat <= budget + FEAS_TOL:
        return 0.75 * m

    def lat_at(mu):
        # per row maximize sum (x - x^2 - mu t x) over the simplex:
        # water-filling x_l = clip((1 - mu t_l - nu_r) / 2, 0, 1), sum_l = 1,
        # with the nu_r bisections run vectorized across rows
        lo = np.full(m, -8.0 * (1.0 + mu * T.max()))
        hi = np.full(m, 2.0)
        for _ in range(100):
            nu = 0.5 * (lo + hi)
            x = np.clip((1.0 - mu * T - nu[:, None]) / 2.0, 0.0, 1.0)
            over = x.sum(axis=1) > 1.0
            lo = np.where(over, nu, lo)
            hi = np.where(over, hi, nu)
        x = np.clip((1.0 - mu * T - (0.5 * (lo + hi))[:, None]) / 2.0, 0.0, 1.0)
        x /= x.sum(axis=1, keepdims=True)
        return x, float(np.sum(T * x))

    mu_lo, mu_hi = 0.0, 1.0
    while lat_at(mu_hi)[1] > budget:
        mu_hi *= 2.0
        if mu_hi > 1e12:
            break
    for _ in range(100):
        mid = 0.5 * (mu_lo + mu_hi)
        if lat_at(mid)[1] > budget:
            mu_lo = mid
        else:
            mu_hi = mid
    x, _ = lat_at(mu_hi)
    return float(np.sum(x * (1.0 - x)))


def solve_fixed_level(inst, level):
    """All rows at one level; infeasibility is reported, not raised."""
    if level not in (1, 2, 3, 4):
        raise ValueError(f"level must be in 1..4, got {level}")
    levels = np.full(inst.m, level - 1, dtype=np.int64)
    return evaluate(inst, _levels_to_assignment(levels, inst.m))


def solve_linear_relaxation(inst):
    """LP relaxation with per-row argmax rounding, plus greedy repair when the
    rounded point violates the budget."""
    xfrac, _ = solve_lp_mck(inst, inst.losses)
    levels = _round_argmax(xfrac.x)
    levels, fired = _repair_to_feasible(inst, levels)
    report = evaluate(inst, _levels_to_assignment(levels, inst.m))
    return replace(report, repair_fired=fired)


def _lagrangian_pick(inst, mu):
    """Per-row integer argmin of loss + mu * latency; ties to lower latency,
    then lower index."""
    scores = inst.losses + mu * inst.latencies
    return _row_pick(scores, inst.latencies, prefer_high_latency=False)


def solve_lagrangian(inst, bisect_tol=1e-9, max_steps=200):
    """One-dimensional dual bisection on the latency multiplier; returns the
    best feasible integer pick encountered."""
    m = inst.m

    def report_of(mu):
        levels = _lagrangian_pick(inst, mu)
        return evaluate(inst, _levels_to_assignment(levels, m))

    best = None
    steps = 0
    r0 = report_of(0.0)
    if r0.feasible:
        return replace(r0, iterations=1)
    mu_lo, mu_hi = 0.0, 1.0
    while True:
        r = report_of(mu_hi)
        steps += 1
        if r.feasible:
            best = r
            break
        mu_hi *= 2.0
        if steps > max_steps:
            raise Infeasible("no multiplier yields a feasible Lagrangian pick")
    while mu_hi - mu_lo > bisect_tol and steps < max_steps:
        mid = 0.5 * (mu_lo + mu_hi)
        r = report_of(mid)
        steps += 1
        if r.feasible:
            mu_hi = mid
            if best is None or r.avg_loss < best.avg_loss:
                best = r
        else:
            mu_lo = mid
    return replace(best, iterations=steps)


def solve_brute_force(inst, chunk=1 << 16):
    """Exact optimum by 4^M enumeration (M <= 12); ties go to the
    lexicographically smallest assignment."""
    m = inst.m
    if m > BRUTE_FORCE_CAP:
        raise TooLarge(f"brute force capped at M={BRUTE_FORCE_CAP}, got {m}")
    total = N_LEVELS ** m
    budget = inst.tau * m + FEAS_TOL * m
    rows = np.arange(m)
    best_obj, best_flat = np.inf, -1
    for start in range(0, total, chunk):
        flat = np.arange(start, min(start + chunk, total))
        choices = np.stack(np.unravel_index(flat, (N_LEVELS,) * m), axis=1)
        lat = inst.latencies[rows, choices].sum(axis=1)
        feas = lat <= budget
        if not np.any(feas):
            continue
        obj = inst.losses[rows, choices].sum(axis=1)
        obj[~feas] = np.inf
        i = int(np.argmin(obj))
        if obj[i] < best_obj:
            best_obj, best_flat = float(obj[i]), int(flat[i])
    if best_flat < 0:
        raise Infeasible("no feasible assignment exists")
    levels = np.array(np.unravel_index(best_flat, (N_LEVELS,) * m))
    return evaluate(inst, _levels_to_assignment(levels, m))


def random_instance(m, seed, loss_scale=1.0):
    """Seeded random instance with a budget tight enough to bind typically."""
    rng = np.random.default_rng(seed)
    losses = loss_scale * rng.uniform(0.0, 1.0, size=(m, N_LEVELS))
    lats = rng.uniform(0.2, 1.0, size=(m, N_LEVELS))
    row_min = lats.min(axis=1).mean()
    row_max = lats.max(axis=1).mean()
    tau = row_min + 0.3 * (row_max - row_min)
    return Instance(losses=losses, latencies=lats, tau=tau)


def save_instance(path, inst):
    """CSV: header '# tau=<seconds>' then 'm,loss1..loss4,latency1..latency4'."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"# tau={inst.tau!r}\n")
            fh.write("m,loss1,loss2,loss3,loss4,latency1,latency2,latency3,latency4\n")
            for r in range(inst.m):
                vals = [repr(float(v)) for v in (*inst.losses[r], *inst.latencies[r])]
                fh.write(f"{r}," + ",".join(vals) + "\n")
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def load_instance(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
    if not lines or not lines[0].startswith("# tau="):
        raise MalformedHeader("instance file must start with '# tau=<seconds>'")
    tau = float(lines[0][len("# tau="):])
    body = [ln for ln in lines[1:] if not ln.startswith("m,")]
    losses, lats = [], []
    for ln in body:
        parts = ln.split(",")
        if len(parts) != 1 + 2 * N_LEVELS:
            raise MalformedHeader(f"expected 9 columns, got {len(parts)}")
        losses.append([float(v) for v in parts[1:5]])
        lats.append([float(v) for v in parts[5:9]])
    if not losses:
        raise MalformedHeader("instance file has no rows")
    return Instance(losses=np.array(losses), latencies=np.array(lats), tau=tau)


def save_report(path, report):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
