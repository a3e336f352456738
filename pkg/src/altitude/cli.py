"""Command-line front end.

Subcommands: gen, psi, trail, pedestrian, zeta, exact-f, adversary, bounds,
verify, experiment.  Single runs emit JSON transcripts, campaigns emit CSV
with a leading ``# schema=`` comment; both are deterministic for fixed
flags and seed (the wall_ms CSV column excepted).

Exit codes: 0 success; 2 usage or parse error; 3 precondition violation
(bad file, bad parameter, failed verification); 4 budget exhaustion, with
partial output still emitted.

Option precedence: explicit flags, then ``--config`` file entries (one
``key=value`` per line, keys named like the long flags), then defaults.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .adversary import AnnealSchedule, local_search_min_psi, upper_bound_report
from .bounds import (
    gnp_k,
    gnp_union_bound_log,
    graham_kleitman,
    hypercube_bounds,
    sweep_inequality_6,
    verify_inequality_6,
)
from .density import hypercube_zeta_bound_check, zeta_exact, zeta_greedy
from .exactf import exact_f, f_bounds_sandwich
from .experiments import experiment_gnp, experiment_hypercube
from .graphs import (
    Graph,
    GraphFormatError,
    degree_stats,
    hypercube_dimension,
    make_complete,
    make_cycle,
    make_hypercube,
    make_matching,
    make_path,
    make_star,
    parse_graph,
    sample_gnp,
    serialize_graph,
)
from .orderings import (
    EdgeOrdering,
    OrderingFormatError,
    coloring_ordering,
    greedy_edge_coloring,
    hypercube_dimension_coloring,
    identity_ordering,
    parse_ordering,
    random_ordering,
    serialize_ordering,
)
from .paths import longest_increasing_path, longest_increasing_trail, verify_witness
from .pedestrian import (
    check_invariants,
    run_pedestrian,
    sqrt_degree_floor,
    verify_counting,
    verify_coverage,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4

# Central defaults; argparse stores None so config-file values can slot in.
_DEFAULTS = {
    "seed": 0,
    "budget": 200000,
    "ordering": "identity",
    "steps": 2000,
    "restarts": 2,
    "k": None,
    "verify": False,
    "greedy": False,
    "workers": None,
    "psi_budget": 200000,
    "f_budget": 2000000,
    "trials": 3,
    "omega": 5.0,
    "eps": 0.1,
}

_PER_COMMAND_DEFAULTS = {
    "adversary": {"ordering": "coloring"},
}

def _parse_bool(s: str) -> bool:
    return s.lower() in ("1", "true", "yes", "on")


_COERCE = {
    "seed": int,
    "budget": int,
    "steps": int,
    "restarts": int,
    "k": int,
    "n": int,
    "d": int,
    "leaves": int,
    "p": float,
    "omega": float,
    "eps": float,
    "workers": int,
    "psi_budget": int,
    "f_budget": int,
    "trials": int,
    "d_max": int,
    "lo": int,
    "hi": int,
    "ordering": str,
    "ks": str,
    "n_list": str,
    "schedule": str,
    "verify": _parse_bool,
    "greedy": _parse_bool,
    "portfolio": _parse_bool,
}


def _load_config(path: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, ln in enumerate(Path(path).read_text().splitlines(), start=1):
        s = ln.strip()
        if not s or s.startswith("#"):
            continue
        if "=" not in s:
            raise ValueError(f"config line {lineno}: expected key=value, got {s!r}")
        key, _, value = s.partition("=")
        entries[key.strip().replace("-", "_")] = value.strip()
    return entries


def _merge(args: argparse.Namespace) -> argparse.Namespace:
    config = _load_config(args.config) if getattr(args, "config", None) else {}
    for dest, raw in config.items():
        if hasattr(args, dest) and getattr(args, dest) is None:
            coerce = _COERCE.get(dest, str)
            setattr(args, dest, coerce(raw))
    for dest, value in _PER_COMMAND_DEFAULTS.get(getattr(args, "command", ""), {}).items():
        if hasattr(args, dest) and getattr(args, dest) is None:
            setattr(args, dest, value)
    for dest, value in _DEFAULTS.items():
        if hasattr(args, dest) and getattr(args, dest) is None:
            setattr(args, dest, value)
    return args


def _read_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _resolve_ordering(g: Graph, spec: str, seed: int) -> EdgeOrdering:
    if spec == "identity":
        return identity_ordering(g)
    if spec == "rand":
        return random_ordering(g, seed)
    if spec == "coloring":
        return coloring_ordering(g, greedy_edge_coloring(g), seed)
    if spec == "dimension":
        return coloring_ordering(g, hypercube_dimension_coloring(g), seed)
    if spec.startswith("file:"):
        ordering = parse_ordering(Path(spec[5:]).read_text())
        if ordering.m != g.m:
            raise ValueError("ordering file does not match the graph's edge count")
        return ordering
    raise ValueError(
        f"unknown ordering {spec!r}: use identity, rand, coloring, dimension, or file:PATH"
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(payload: dict, out: str | None) -> None:
    _emit(json.dumps(payload, indent=2), out)


# ----------------------------------------------------------------------
# Subcommand handlers
# ----------------------------------------------------------------------

def _cmd_gen(args: argparse.Namespace) -> int:
    fam = args.family
    if fam == "complete":
        g = make_complete(_require(args, "n"))
    elif fam == "hypercube":
        g = make_hypercube(_require(args, "d"))
    elif fam == "path":
        g = make_path(_require(args, "n"))
    elif fam == "cycle":
        g = make_cycle(_require(args, "n"))
    elif fam == "star":
        g = make_star(_require(args, "leaves"))
    elif fam == "matching":
        g = make_matching(_require(args, "k"))
    elif fam == "gnp":
        g = sample_gnp(_require(args, "n"), _require(args, "p"), args.seed)
    else:
        raise ValueError(f"unknown family {fam!r}")
    _emit(serialize_graph(g), args.out)
    return EXIT_OK


def _require(args: argparse.Namespace, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise ValueError(f"--{name.replace('_', '-')} is required for this invocation")
    return value


def _cmd_psi(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    phi = _resolve_ordering(g, args.ordering, args.seed)
    res = longest_increasing_path(g, phi, budget=args.budget)
    if args.verify:
        verify_witness(g, phi, res)
    payload = {
        "schema": "altitude/psi/1",
        "n": g.n,
        "m": g.m,
        "ordering": args.ordering,
        "seed": args.seed,
        "length": res.length,
        "exact": res.exact,
        "explored": res.explored,
        "vertices": list(res.vertices),
        "edges": list(res.edges),
    }
    _emit_json(payload, args.out)
    return EXIT_OK if res.exact else EXIT_BUDGET


def _cmd_trail(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    phi = _resolve_ordering(g, args.ordering, args.seed)
    res = longest_increasing_trail(g, phi)
    if args.verify:
        verify_witness(g, phi, res)
    payload = {
        "schema": "altitude/trail/1",
        "n": g.n,
        "m": g.m,
        "ordering": args.ordering,
        "seed": args.seed,
        "length": res.length,
        "vertices": list(res.vertices),
        "edges": list(res.edges),
    }
    _emit_json(payload, args.out)
    return EXIT_OK


def _cmd_pedestrian(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    phi = _resolve_ordering(g, args.ordering, args.seed)
    t = run_pedestrian(g, phi)
    payload = {
        "schema": "altitude/pedestrian/1",
        "n": g.n,
        "m": g.m,
        "ordering": args.ordering,
        "seed": args.seed,
        "paths": [list(p) for p in t.paths],
        "swap_log": [[e, s] for e, s in t.swap_log],
        "final_position": list(t.final_position),
        "max_path_edges": t.max_path_edges,
    }
    status = EXIT_OK
    if args.verify:
        check_invariants(g, phi, t)
        cov = verify_coverage(g, t)
        cnt = verify_counting(g, t)
        floor = sqrt_degree_floor(g)
        payload["verification"] = {
            "coverage": cov.ok,
            "counting_lhs": cnt.lhs,
            "counting_rhs": str(cnt.rhs),
            "counting_holds": cnt.holds,
            "sqrt_floor": floor,
            "floor_ok": t.max_path_edges >= floor,
        }
        if not (cov.ok and cnt.holds and t.max_path_edges >= floor):
            status = EXIT_PRECONDITION
    _emit_json(payload, args.out)
    return status


def _cmd_zeta(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    if args.ks:
        ks = [int(tok) for tok in args.ks.split(",") if tok]
    elif args.k is not None:
        ks = [args.k]
    else:
        raise ValueError("pass --k or --ks")
    d = hypercube_dimension(g)
    lines = ["# schema=altitude/zeta/1", "graph,k,zeta,exact,bound_rhs,bound_holds"]
    any_inexact = False
    gid = Path(args.graph).name
    for k in ks:
        if args.greedy:
            r = zeta_greedy(g, k, args.seed)
        else:
            r = zeta_exact(g, k, budget=args.budget)
        any_inexact |= not r.exact
        if d is not None and d >= 1:
            rhs = k * math.log2(k) / 2 if k >= 1 else 0.0
            holds = hypercube_zeta_bound_check(d, k, r.value) if r.exact else None
            bound_rhs, bound_holds = f"{rhs:.6g}", ("" if holds is None else str(holds).lower())
        else:
            bound_rhs, bound_holds = "", ""
        lines.append(
            f"{gid},{k},{r.value},{str(r.exact).lower()},{bound_rhs},{bound_holds}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    # --greedy is complete as requested; only an exact search can run out
    return EXIT_BUDGET if any_inexact and not args.greedy else EXIT_OK


def _cmd_exact_f(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    res = exact_f(g, budget=args.budget)
    sandwich = f_bounds_sandwich(g)
    print(f"f={res.value}" + ("" if res.exact else f" (bracket [{res.lower}, {res.value}])"))
    print("witness: " + " ".join(str(r) for r in res.witness.rank))
    payload = {
        "schema": "altitude/exact-f/1",
        "n": g.n,
        "m": g.m,
        "f": res.value,
        "lower": res.lower,
        "exact": res.exact,
        "explored": res.explored,
        "witness_ranks": list(res.witness.rank),
        "sandwich": {
            "lower": sandwich.lower,
            "upper": sandwich.upper,
            "lower_candidates": [[s, v] for s, v in sandwich.lower_candidates],
            "upper_candidates": [[s, v] for s, v in sandwich.upper_candidates],
        },
    }
    if args.out:
        _emit_json(payload, args.out)
    if args.ordering_out:
        _emit(serialize_ordering(res.witness), args.ordering_out)
    return EXIT_OK if res.exact else EXIT_BUDGET


def _parse_schedule(spec: str | None) -> AnnealSchedule | None:
    if not spec:
        return None
    kwargs: dict[str, float | int] = {}
    for part in spec.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key == "decay":
            kwargs["decay"] = float(value)
        elif key == "t0":
            kwargs["t0"] = float(value)
        elif key == "moves":
            kwargs["moves_per_level"] = int(value)
        else:
            raise ValueError(f"unknown schedule key {key!r} (use decay, t0, moves)")
    return AnnealSchedule(**kwargs)


def _cmd_adversary(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    schedule = _parse_schedule(args.schedule)
    if args.portfolio:
        rep = upper_bound_report(
            g, seed=args.seed, steps=args.steps, restarts=args.restarts, psi_budget=args.budget
        )
        best_psi, witness, verified = rep.best_psi, rep.witness, rep.verified
        payload = {
            "schema": "altitude/adversary/1",
            "mode": "portfolio",
            "best_psi": best_psi,
            "verified": verified,
            "strategies": [[s, v, e] for s, v, e in rep.strategies],
        }
    else:
        init = _resolve_ordering(g, args.ordering, args.seed)
        trace = local_search_min_psi(
            g, init, args.steps, args.seed, schedule=schedule, psi_budget=args.budget
        )
        best_psi, witness, verified = trace.best_psi, trace.best_ordering, trace.verified
        payload = {
            "schema": "altitude/adversary/1",
            "mode": "anneal",
            "iterations": trace.iterations,
            "best_psi": best_psi,
            "verified": verified,
            "best_history": [[s, v] for s, v in trace.best_history],
        }
    _emit_json(payload, args.out)
    if args.ordering_out:
        Path(args.ordering_out).write_text(serialize_ordering(witness))
    return EXIT_OK if verified else EXIT_BUDGET


def _cmd_bounds(args: argparse.Namespace) -> int:
    payload: dict = {"schema": "altitude/bounds/1"}
    if args.gk:
        lo, hi = graham_kleitman(_require(args, "n"))
        print(f"{lo:g}, {hi:g}")
        payload.update(name="complete-bracket", n=args.n, lower=lo, upper=hi)
    elif args.hypercube:
        lo, hi = hypercube_bounds(_require(args, "d"))
        print(f"{lo:.6g}, {hi}")
        payload.update(name="hypercube-bracket", d=args.d, lower=lo, upper=hi)
    elif args.ineq6:
        ok = verify_inequality_6(_require(args, "d"))
        print(str(ok).lower())
        payload.update(name="hypercube-key-inequality", d=args.d, holds=ok)
    elif args.sweep6:
        lo = args.lo if args.lo is not None else 5
        hi = args.hi if args.hi is not None else 10**6
        ok, failures = sweep_inequality_6(lo, hi)
        print(f"all hold in [{lo}, {hi}]" if ok else f"failures: {failures}")
        payload.update(name="hypercube-key-inequality-sweep", lo=lo, hi=hi, holds=ok,
                       failures=list(failures))
    elif args.gnp:
        n, p = _require(args, "n"), _require(args, "p")
        k = gnp_k(n, p, args.omega, args.eps)
        payload.update(name="gnp-lower", n=n, p=p, omega=args.omega, eps=args.eps, k=k)
        if k < 1:
            print("vacuous (k < 1)")
            payload.update(vacuous=True)
        else:
            ub = gnp_union_bound_log(n, p, k)
            print(f"k={k} exponent={ub.exponent:.6g} certifies={str(ub.certifies).lower()}")
            payload.update(
                vacuous=False,
                union_exponent=ub.exponent,
                binomial_exponent=ub.binomial_exponent,
                certifies=ub.certifies,
            )
    else:
        raise ValueError("pick one of --gk, --hypercube, --ineq6, --sweep6, --gnp")
    if args.out:
        _emit_json(payload, args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    phi = _resolve_ordering(g, args.ordering, args.seed)
    checks: list[tuple[str, bool]] = []

    trail = longest_increasing_trail(g, phi)
    verify_witness(g, phi, trail)
    checks.append(("trail_witness", True))

    res = longest_increasing_path(g, phi, budget=args.budget)
    verify_witness(g, phi, res)
    checks.append(("path_witness", True))
    checks.append(("path_le_trail", res.length <= trail.length))

    t = run_pedestrian(g, phi)
    check_invariants(g, phi, t)
    checks.append(("pedestrian_invariants", True))
    cov = verify_coverage(g, t)
    checks.append(("coverage", cov.ok))
    cnt = verify_counting(g, t)
    checks.append(("counting", cnt.holds))
    floor = sqrt_degree_floor(g) if g.n else 0
    checks.append(("pedestrian_floor", t.max_path_edges >= floor))
    if res.exact:
        checks.append(("pedestrian_le_path", t.max_path_edges <= res.length))

    ok = all(flag for _, flag in checks)
    payload = {
        "schema": "altitude/verify/1",
        "n": g.n,
        "m": g.m,
        "ordering": args.ordering,
        "seed": args.seed,
        "psi": res.length,
        "psi_exact": res.exact,
        "trail": trail.length,
        "pedestrian_max": t.max_path_edges,
        "checks": {name: flag for name, flag in checks},
        "ok": ok,
    }
    _emit_json(payload, args.out)
    if not ok:
        return EXIT_PRECONDITION
    return EXIT_OK if res.exact else EXIT_BUDGET


def _cmd_experiment(args: argparse.Namespace) -> int:
    if args.campaign == "hypercube":
        csv_text = experiment_hypercube(
            _require(args, "d_max"),
            psi_budget=args.psi_budget,
            f_budget=args.f_budget,
            seed=args.seed,
            workers=args.workers,
        )
    elif args.campaign == "gnp":
        n_list = [int(tok) for tok in _require(args, "n_list").split(",") if tok]
        csv_text = experiment_gnp(
            n_list,
            p=args.p,
            omega=args.omega,
            eps=args.eps,
            trials=args.trials,
            seed=args.seed,
            psi_budget=args.psi_budget,
            workers=args.workers,
        )
    else:
        raise ValueError(f"unknown campaign {args.campaign!r}")
    _emit(csv_text, args.out)
    return EXIT_OK


# ----------------------------------------------------------------------
# Parser assembly
# ----------------------------------------------------------------------

def _add_common(sp: argparse.ArgumentParser, *, graph: bool = True) -> None:
    if graph:
        sp.add_argument("--graph", required=True, help="graph file (n m header + edge lines)")
    sp.add_argument("--config", help="key=value config file (flags take precedence)")
    sp.add_argument("--seed", type=int, help="RNG seed (default 0)")
    sp.add_argument("--out", help="write machine-readable output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="altitude",
        description="Increasing paths in edge-ordered graphs: bounds on the altitude.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="generate a graph file")
    sp.add_argument("--family", required=True,
                    choices=["complete", "hypercube", "path", "cycle", "star", "matching", "gnp"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--leaves", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--p", type=float)
    _add_common(sp, graph=False)
    sp.set_defaults(func=_cmd_gen)

    for name, func, extra in (
        ("psi", _cmd_psi, True),
        ("trail", _cmd_trail, False),
        ("pedestrian", _cmd_pedestrian, False),
    ):
        sp = sub.add_parser(name, help=f"compute {name} for one (graph, ordering)")
        _add_common(sp)
        sp.add_argument("--ordering", help="identity | rand | coloring | dimension | file:PATH")
        sp.add_argument("--verify", action="store_const", const=True,
                        help="re-validate the result independently")
        if extra:
            sp.add_argument("--budget", type=int, help="search node budget")
        sp.set_defaults(func=func)

    sp = sub.add_parser("zeta", help="densest k-subset edge counts")
    _add_common(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--ks", help="comma-separated list of k values")
    sp.add_argument("--budget", type=int)
    sp.add_argument("--greedy", action="store_const", const=True,
                    help="greedy lower bound instead of exact search")
    sp.set_defaults(func=_cmd_zeta)

    sp = sub.add_parser("exact-f", help="exact altitude for tiny graphs")
    _add_common(sp)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--ordering-out", help="write the witness ordering file here")
    sp.set_defaults(func=_cmd_exact_f)

    sp = sub.add_parser("adversary", help="heuristic ordering minimization")
    _add_common(sp)
    sp.add_argument("--ordering", help="initial ordering spec (default coloring)")
    sp.add_argument("--steps", type=int)
    sp.add_argument("--restarts", type=int)
    sp.add_argument("--budget", type=int, help="exact-psi verification budget")
    sp.add_argument("--schedule", help="annealing schedule, e.g. decay=0.95,moves=1200")
    sp.add_argument("--portfolio", action="store_const", const=True,
                    help="run the full strategy portfolio")
    sp.add_argument("--ordering-out", help="write the best ordering file here")
    sp.set_defaults(func=_cmd_adversary)

    sp = sub.add_parser("bounds", help="closed-form bound evaluation")
    sp.add_argument("--gk", action="store_true", help="complete-graph bracket")
    sp.add_argument("--hypercube", action="store_true", help="hypercube bracket")
    sp.add_argument("--ineq6", action="store_true", help="key hypercube inequality at d")
    sp.add_argument("--sweep6", action="store_true", help="sweep the inequality over [lo, hi]")
    sp.add_argument("--gnp", action="store_true", help="random-graph lower bound")
    sp.add_argument("--n", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--p", type=float)
    sp.add_argument("--omega", type=float)
    sp.add_argument("--eps", type=float)
    sp.add_argument("--lo", type=int)
    sp.add_argument("--hi", type=int)
    _add_common(sp, graph=False)
    sp.set_defaults(func=_cmd_bounds)

    sp = sub.add_parser("verify", help="full verification battery on one (graph, ordering)")
    _add_common(sp)
    sp.add_argument("--ordering", help="identity | rand | coloring | dimension | file:PATH")
    sp.add_argument("--budget", type=int)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("experiment", help="CSV campaigns")
    sp.add_argument("campaign", choices=["hypercube", "gnp"])
    sp.add_argument("--d-max", dest="d_max", type=int)
    sp.add_argument("--n-list", dest="n_list", help="comma-separated n values")
    sp.add_argument("--p", type=float, help="fixed edge density (omit for the threshold rule)")
    sp.add_argument("--omega", type=float)
    sp.add_argument("--eps", type=float)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--psi-budget", dest="psi_budget", type=int)
    sp.add_argument("--f-budget", dest="f_budget", type=int)
    sp.add_argument("--workers", type=int, help="worker pool size (or ALTITUDE_WORKERS)")
    _add_common(sp, graph=False)
    sp.set_defaults(func=_cmd_experiment)

    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        args = _merge(args)
        return args.func(args)
    except (GraphFormatError, OrderingFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
