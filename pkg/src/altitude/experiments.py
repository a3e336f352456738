"""Experiment campaigns: the hypercube table and the random-graph sandwich.

Each row is recomputable from its own parameters and seed.  Rows are
produced by a worker pool but emitted in parameter order, so reruns give
byte-identical CSV except for the wall-time column, which is always last.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from io import StringIO
from typing import Callable, Iterable, Sequence

from .adversary import upper_bound_report
from .bounds import gnp_k, gnp_threshold_p, gnp_union_bound_log, hypercube_bounds, hypercube_k
from .density import rodl_criterion, zeta_exact
from .exactf import exact_f
from .graphs import Graph, degree_stats, make_hypercube, sample_gnp
from .orderings import coloring_ordering, greedy_edge_coloring, hypercube_dimension_coloring, random_ordering
from .paths import longest_increasing_path, longest_increasing_trail
from .pedestrian import run_pedestrian, sqrt_degree_floor

SCHEMA_HYPERCUBE = "altitude/experiment-hypercube/1"
SCHEMA_GNP = "altitude/experiment-gnp/1"


@dataclass(frozen=True)
class ExperimentRow:
    """One campaign row: stable columns first, wall time last."""

    campaign: str
    values: tuple[tuple[str, str], ...]
    wall_ms: int


def default_workers() -> int:
    env = os.environ.get("ALTITUDE_WORKERS")
    if env:
        try:
            w = int(env)
            if w >= 1:
                return w
        except ValueError:
            pass
    return min(4, os.cpu_count() or 1)


def _pool_map(fn: Callable, tasks: Sequence, workers: int | None) -> list:
    w = workers if workers is not None else default_workers()
    if w <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=w) as ex:
        return list(ex.map(fn, tasks))


def rows_to_csv(schema: str, header: Sequence[str], rows: Iterable[ExperimentRow]) -> str:
    """Render rows with a schema comment line; wall_ms is the final column."""
    out = StringIO()
    out.write(f"# schema={schema}\n")
    out.write(",".join(list(header) + ["wall_ms"]) + "\n")
    for row in rows:
        got = [k for k, _ in row.values]
        if got != list(header):
            raise ValueError(f"row columns {got} do not match header")
        out.write(",".join([v for _, v in row.values] + [str(row.wall_ms)]) + "\n")
    return out.getvalue()


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.6g}"
    if x is None:
        return ""
    return str(x)


# ----------------------------------------------------------------------
# Hypercube campaign
# ----------------------------------------------------------------------

HYPERCUBE_HEADER = (
    "d",
    "n",
    "m",
    "lower_ratio",
    "upper_dim",
    "coloring_psi",
    "coloring_psi_exact",
    "cert_lower",
    "exact_f",
    "exact_f_is_exact",
    "adversary_psi",
    "adversary_verified",
)


def _hypercube_row(args: tuple[int, int, int, int]) -> ExperimentRow:
    d, psi_budget, f_budget, seed = args
    t0 = time.perf_counter()
    g = make_hypercube(d)
    lower = hypercube_k(d) if d >= 2 else 1
    upper = hypercube_bounds(d)[1] if d >= 2 else 1

    phi = coloring_ordering(g, hypercube_dimension_coloring(g), seed)
    res = longest_increasing_path(g, phi, budget=psi_budget)
    coloring_psi = res.length if res.exact else longest_increasing_trail(g, phi).length

    # Density certificates: push the proved floor while exact zeta certifies.
    cert = sqrt_degree_floor(g)
    k = cert + 1
    while k <= g.n:
        zr = zeta_exact(g, k, budget=psi_budget)
        if not zr.exact or not rodl_criterion(g, k, zr.value):
            break
        cert = k
        k += 1

    fval: int | None = None
    fexact: bool | None = None
    adv_psi: int | None = None
    adv_ver: bool | None = None
    if g.m <= 12:
        fres = exact_f(g, budget=f_budget)
        fval, fexact = fres.value, fres.exact
    else:
        rep = upper_bound_report(g, seed=seed, steps=1500, restarts=1, psi_budget=psi_budget)
        adv_psi, adv_ver = rep.best_psi, rep.verified

    vals = (
        ("d", _fmt(d)),
        ("n", _fmt(g.n)),
        ("m", _fmt(g.m)),
        ("lower_ratio", _fmt(lower)),
        ("upper_dim", _fmt(upper)),
        ("coloring_psi", _fmt(coloring_psi)),
        ("coloring_psi_exact", _fmt(res.exact)),
        ("cert_lower", _fmt(cert)),
        ("exact_f", _fmt(fval)),
        ("exact_f_is_exact", _fmt(fexact)),
        ("adversary_psi", _fmt(adv_psi)),
        ("adversary_verified", _fmt(adv_ver)),
    )
    ms = int((time.perf_counter() - t0) * 1000)
    return ExperimentRow("hypercube", vals, ms)


def experiment_hypercube(
    d_max: int,
    psi_budget: int = 200000,
    f_budget: int = 2000000,
    seed: int = 0,
    workers: int | None = None,
) -> str:
    """One row per dimension 2..d_max; returns the CSV text."""
    if d_max < 2:
        raise ValueError("d_max must be at least 2")
    tasks = [(d, psi_budget, f_budget, seed) for d in range(2, d_max + 1)]
    rows = _pool_map(_hypercube_row, tasks, workers)
    return rows_to_csv(SCHEMA_HYPERCUBE, HYPERCUBE_HEADER, rows)


# ----------------------------------------------------------------------
# G(n, p) campaign
# ----------------------------------------------------------------------

GNP_HEADER = (
    "n",
    "p",
    "trial",
    "seed",
    "m",
    "delta_plus_1",
    "coloring_psi",
    "coloring_psi_exact",
    "adversary_psi",
    "adversary_verified",
    "pedestrian_max",
    "sqrt_floor",
    "floor_ok",
    "gnp_k",
    "union_exponent",
    "union_negative",
)


def _gnp_row(args: tuple[int, float, int, int, float, float, int]) -> ExperimentRow:
    n, p, trial, row_seed, omega, eps, psi_budget = args
    t0 = time.perf_counter()
    g = sample_gnp(n, p, row_seed)
    stats = degree_stats(g)
    delta1 = stats.max_degree + 1

    if g.m > 0:
        phi = coloring_ordering(g, greedy_edge_coloring(g), row_seed)
        res = longest_increasing_path(g, phi, budget=psi_budget)
        col_psi = res.length if res.exact else longest_increasing_trail(g, phi).length
        col_exact = res.exact
        rep = upper_bound_report(g, seed=row_seed, steps=800, restarts=1, psi_budget=psi_budget)
        adv_psi, adv_ver = rep.best_psi, rep.verified
        ped = run_pedestrian(g, random_ordering(g, row_seed))
        ped_max = ped.max_path_edges
    else:
        col_psi, col_exact = 0, True
        adv_psi, adv_ver = 0, True
        ped_max = 0
    floor = sqrt_degree_floor(g)
    if ped_max < floor:
        raise AssertionError(f"pedestrian floor violated on n={n} seed={row_seed}")

    if p > 0 and n >= 2:
        kval = gnp_k(n, p, omega, eps)
        if 1 <= kval <= n:
            ub = gnp_union_bound_log(n, p, kval)
            exponent, negative = ub.exponent, ub.certifies
        else:
            exponent, negative = None, None
    else:
        kval, exponent, negative = 0, None, None

    vals = (
        ("n", _fmt(n)),
        ("p", _fmt(p)),
        ("trial", _fmt(trial)),
        ("seed", _fmt(row_seed)),
        ("m", _fmt(g.m)),
        ("delta_plus_1", _fmt(delta1)),
        ("coloring_psi", _fmt(col_psi)),
        ("coloring_psi_exact", _fmt(col_exact)),
        ("adversary_psi", _fmt(adv_psi)),
        ("adversary_verified", _fmt(adv_ver)),
        ("pedestrian_max", _fmt(ped_max)),
        ("sqrt_floor", _fmt(floor)),
        ("floor_ok", _fmt(ped_max >= floor)),
        ("gnp_k", _fmt(kval)),
        ("union_exponent", _fmt(exponent)),
        ("union_negative", _fmt(negative)),
    )
    ms = int((time.perf_counter() - t0) * 1000)
    return ExperimentRow("gnp", vals, ms)


def experiment_gnp(
    n_list: Sequence[int],
    p: float | None,
    omega: float,
    eps: float,
    trials: int,
    seed: int = 0,
    psi_budget: int = 200000,
    workers: int | None = None,
) -> str:
    """Rows over n_list x trials; p=None applies the threshold density rule."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    tasks = []
    idx = 0
    for n in n_list:
        pn = gnp_threshold_p(n, omega) if p is None else p
        if pn > 1:
            pn = 1.0
        for t in range(trials):
            tasks.append((n, pn, t, seed + 1000003 * idx, omega, eps, psi_budget))
            idx += 1
    rows = _pool_map(_gnp_row, tasks, workers)
    return rows_to_csv(SCHEMA_GNP, GNP_HEADER, rows)
