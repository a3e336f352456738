"""End-to-end checks for the command-line interface.

Every test drives `main(argv)` in-process and inspects stdout, stderr,
files written via --out, and the exit code contract:
0 success, 2 usage, 3 bad input, 4 budget exhausted.
"""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from altitude.cli import main
from altitude.graphs import (
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
from altitude.orderings import parse_ordering
from oracles import brute_psi


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


@pytest.fixture()
def k3_file(tmp_path: Path) -> str:
    p = tmp_path / "k3.txt"
    p.write_text(serialize_graph(make_complete(3)))
    return str(p)


@pytest.fixture()
def q3_file(tmp_path: Path) -> str:
    p = tmp_path / "q3.txt"
    p.write_text(serialize_graph(make_hypercube(3)))
    return str(p)


# gen


def test_gen_families_match_constructors(capsys, tmp_path):
    cases = [
        (["--family", "complete", "--n", "5"], make_complete(5)),
        (["--family", "hypercube", "--d", "3"], make_hypercube(3)),
        (["--family", "path", "--n", "6"], make_path(6)),
        (["--family", "cycle", "--n", "7"], make_cycle(7)),
        (["--family", "star", "--leaves", "4"], make_star(4)),
        (["--family", "matching", "--k", "3"], make_matching(3)),
    ]
    for flags, want in cases:
        rc, out, _ = run(capsys, "gen", *flags)
        assert rc == 0
        assert parse_graph(out) == want


def test_gen_gnp_seeded_and_out_file(capsys, tmp_path):
    out = tmp_path / "g.txt"
    rc, stdout, _ = run(capsys, "gen", "--family", "gnp", "--n", "12", "--p", "0.4", "--seed", "7")
    assert rc == 0
    rc2 = main(["gen", "--family", "gnp", "--n", "12", "--p", "0.4", "--seed", "7", "--out", str(out)])
    capsys.readouterr()
    assert rc2 == 0
    # stdout and --out agree byte for byte, and both match the library sampler
    assert out.read_text() == stdout
    assert parse_graph(stdout) == sample_gnp(12, 0.4, seed=7)


def test_gen_bad_parameters(capsys):
    rc, _, err = run(capsys, "gen", "--family", "path", "--n", "0")
    assert rc == 3
    assert "error:" in err


# psi / trail


def test_psi_dimension_ordering_on_hypercube(capsys, q3_file):
    rc, out, _ = run(capsys, "psi", "--graph", q3_file, "--ordering", "dimension", "--verify")
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == "altitude/psi/1"
    assert (doc["n"], doc["m"]) == (8, 12)
    assert doc["length"] == 3
    assert doc["exact"] is True
    # witness arrays are consistent with the reported length
    assert len(doc["edges"]) == doc["length"]
    assert len(doc["vertices"]) == doc["length"] + 1


def test_psi_identity_on_path_graph(capsys, tmp_path):
    p = tmp_path / "p6.txt"
    p.write_text(serialize_graph(make_path(6)))
    rc, out, _ = run(capsys, "psi", "--graph", str(p))
    assert rc == 0
    assert json.loads(out)["length"] == 5


def test_psi_random_ordering_seeded(capsys, q3_file):
    _, out_a, _ = run(capsys, "psi", "--graph", q3_file, "--ordering", "rand", "--seed", "11")
    _, out_b, _ = run(capsys, "psi", "--graph", q3_file, "--ordering", "rand", "--seed", "11")
    assert out_a == out_b
    assert json.loads(out_a)["seed"] == 11


def test_trail_identity_triangle(capsys, k3_file):
    rc, out, _ = run(capsys, "trail", "--graph", k3_file, "--verify")
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == "altitude/trail/1"
    assert doc["length"] == 3
    assert doc["edges"] == [0, 1, 2]


def test_psi_budget_exhaustion_exits_4(capsys, tmp_path):
    p = tmp_path / "dense.txt"
    p.write_text(serialize_graph(sample_gnp(9, 0.8, seed=5)))
    rc, out, _ = run(capsys, "psi", "--graph", str(p), "--budget", "1")
    assert rc == 4
    assert json.loads(out)["exact"] is False


# pedestrian


def test_pedestrian_triangle_transcript(capsys, k3_file):
    rc, out, _ = run(capsys, "pedestrian", "--graph", k3_file, "--verify")
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == "altitude/pedestrian/1"
    assert doc["paths"] == [[0, 1], [1, 0, 2], [2, 0]]
    assert doc["swap_log"] == [[0, True], [1, True], [2, False]]
    assert doc["final_position"] == [1, 2, 0]
    assert doc["max_path_edges"] == 2
    ver = doc["verification"]
    assert ver["coverage"] is True
    assert ver["counting_lhs"] == 3
    assert ver["counting_rhs"] == "3"  # exact rational, serialized as text
    assert ver["counting_holds"] is True
    assert ver["sqrt_floor"] == 2 and ver["floor_ok"] is True


# zeta


def test_zeta_csv_hypercube_bound_columns(capsys, q3_file):
    rc, out, _ = run(capsys, "zeta", "--graph", q3_file, "--ks", "2,3,4")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "# schema=altitude/zeta/1"
    assert lines[1] == "graph,k,zeta,exact,bound_rhs,bound_holds"
    rows = [ln.split(",") for ln in lines[2:]]
    assert [(r[1], r[2], r[3]) for r in rows] == [
        ("2", "1", "true"),
        ("3", "2", "true"),
        ("4", "4", "true"),
    ]
    # hypercube rows carry the k*log2(k)/2 comparison
    assert all(r[4] != "" and r[5] == "true" for r in rows)


def test_zeta_bound_columns_blank_off_hypercube(capsys, k3_file):
    rc, out, _ = run(capsys, "zeta", "--graph", k3_file, "--k", "2")
    assert rc == 0
    row = out.strip().splitlines()[-1].split(",")
    assert (row[1], row[2], row[3]) == ("2", "1", "true")
    assert row[4] == "" and row[5] == ""


def test_zeta_budget_exit_and_greedy_exit(capsys, q3_file):
    rc_budget, out, _ = run(capsys, "zeta", "--graph", q3_file, "--k", "3", "--budget", "2")
    assert rc_budget == 4
    assert out.strip().splitlines()[-1].split(",")[3] == "false"
    # greedy is complete as requested, so it succeeds even though inexact
    rc_greedy, out_g, _ = run(capsys, "zeta", "--graph", q3_file, "--k", "3", "--greedy")
    assert rc_greedy == 0
    assert out_g.strip().splitlines()[-1].split(",")[3] == "false"


# exact-f


def test_exact_f_triangle_stdout_and_witness(capsys, k3_file, tmp_path):
    ord_file = tmp_path / "ord.txt"
    rc, out, _ = run(capsys, "exact-f", "--graph", k3_file, "--ordering-out", str(ord_file))
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "f=2"
    assert lines[1].startswith("witness: ")
    ordering = parse_ordering(ord_file.read_text())
    assert brute_psi(make_complete(3), ordering) == 2


def test_exact_f_witness_achieves_value(capsys, q3_file, tmp_path):
    ord_file = tmp_path / "ord.txt"
    rc, out, _ = run(capsys, "exact-f", "--graph", q3_file, "--ordering-out", str(ord_file))
    assert rc == 0
    assert out.strip().splitlines()[0] == "f=3"
    rc2, out2, _ = run(capsys, "psi", "--graph", q3_file, "--ordering", f"file:{ord_file}")
    assert rc2 == 0
    assert json.loads(out2)["length"] == 3


def test_exact_f_budget_exhaustion_exits_4(capsys, tmp_path):
    p = tmp_path / "dense.txt"
    p.write_text(serialize_graph(sample_gnp(9, 0.8, seed=5)))
    rc, out, _ = run(capsys, "exact-f", "--graph", str(p), "--budget", "3")
    assert rc == 4
    assert "bracket" in out  # inexact result reports the surviving interval


# adversary


def test_adversary_anneal_triangle(capsys, k3_file):
    rc, out, _ = run(capsys, "adversary", "--graph", k3_file, "--steps", "200", "--seed", "1")
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == "altitude/adversary/1"
    assert doc["mode"] == "anneal"
    assert doc["best_psi"] == 2
    assert doc["verified"] is True
    assert doc["iterations"] == 200


def test_adversary_portfolio_and_ordering_out(capsys, q3_file, tmp_path):
    ord_file = tmp_path / "best.txt"
    rc, out, _ = run(
        capsys,
        "adversary", "--graph", q3_file, "--steps", "300", "--portfolio",
        "--seed", "2", "--ordering-out", str(ord_file),
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["mode"] == "portfolio"
    names = [s[0] for s in doc["strategies"]]
    assert any(n == "coloring" for n in names)
    assert any(n.startswith("anneal") for n in names)
    assert doc["best_psi"] == min(s[1] for s in doc["strategies"])
    assert all(s[2] is True for s in doc["strategies"])
    # the exported ordering reproduces the reported value
    ordering = parse_ordering(ord_file.read_text())
    assert brute_psi(make_hypercube(3), ordering) == doc["best_psi"]


def test_adversary_schedule_flag(capsys, k3_file):
    rc, out, _ = run(
        capsys,
        "adversary", "--graph", k3_file, "--steps", "100",
        "--schedule", "decay=0.9,moves=20",
    )
    assert rc == 0
    assert json.loads(out)["best_psi"] == 2


# bounds


def test_bounds_complete_graph_bracket(capsys):
    rc, out, _ = run(capsys, "bounds", "--gk", "--n", "3")
    assert rc == 0 and out.strip() == "1, 2.25"
    rc, out, _ = run(capsys, "bounds", "--gk", "--n", "7")
    assert rc == 0 and out.strip() == "2, 5.25"


def test_bounds_hypercube_bracket(capsys):
    rc, out, _ = run(capsys, "bounds", "--hypercube", "--d", "5")
    assert rc == 0
    lo, hi = out.strip().split(", ")
    assert float(lo) == pytest.approx(5 / 2.321928094887362, rel=1e-4)
    assert hi == "5"


def test_bounds_inequality_point_and_sweep(capsys):
    rc, out, _ = run(capsys, "bounds", "--ineq6", "--d", "9")
    assert rc == 0 and out.strip() == "true"
    rc, out, _ = run(capsys, "bounds", "--sweep6", "--lo", "5", "--hi", "1000")
    assert rc == 0 and out.strip() == "all hold in [5, 1000]"


def test_bounds_gnp_lower_bound(capsys):
    rc, out, _ = run(
        capsys,
        "bounds", "--gnp", "--n", "10000", "--p", "0.05", "--omega", "5", "--eps", "0.1",
    )
    assert rc == 0
    fields = dict(part.split("=") for part in out.split())
    assert fields["k"] == "9"
    assert fields["certifies"] == "true"
    assert float(fields["exponent"]) < 0


def test_bounds_bad_domain(capsys):
    rc, _, err = run(capsys, "bounds", "--ineq6", "--d", "4")
    assert rc == 3 and "error:" in err


# verify


def test_verify_battery_all_checks(capsys, q3_file):
    rc, out, _ = run(capsys, "verify", "--graph", q3_file, "--ordering", "rand", "--seed", "4")
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == "altitude/verify/1"
    assert set(doc["checks"]) == {
        "trail_witness", "path_witness", "path_le_trail", "pedestrian_invariants",
        "coverage", "counting", "pedestrian_floor", "pedestrian_le_path",
    }
    assert all(doc["checks"].values())
    assert doc["ok"] is True
    assert doc["psi"] <= doc["trail"]
    assert doc["pedestrian_max"] <= doc["psi"]


# experiment


def test_experiment_hypercube_cli(capsys):
    rc, out, _ = run(capsys, "experiment", "hypercube", "--d-max", "3")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "# schema=altitude/experiment-hypercube/1"
    assert lines[1].startswith("d,n,m,")
    assert len(lines) == 4  # schema + header + d=2 + d=3


def test_experiment_gnp_cli_deterministic(capsys, tmp_path):
    argv = ["experiment", "gnp", "--n-list", "30", "--p", "0.3", "--trials", "2", "--seed", "1"]
    rc, out_a, _ = run(capsys, *argv)
    assert rc == 0
    out_file = tmp_path / "rows.csv"
    rc2 = main(argv + ["--out", str(out_file)])
    capsys.readouterr()
    assert rc2 == 0

    def stable(text: str) -> list[str]:
        # drop the wall-clock column, everything else must reproduce
        return [ln.rsplit(",", 1)[0] for ln in text.strip().splitlines()[1:]]

    assert stable(out_a) == stable(out_file.read_text())


# exit codes and config


def test_unknown_subcommand_is_usage_error(capsys):
    rc, _, err = run(capsys, "nosuch")
    assert rc == 2
    assert "invalid choice" in err


def test_missing_and_malformed_graph_files(capsys, tmp_path):
    rc, _, err = run(capsys, "psi", "--graph", str(tmp_path / "absent.txt"))
    assert rc == 3 and "error:" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 0\n")  # loop edge
    rc, _, err = run(capsys, "psi", "--graph", str(bad))
    assert rc == 3 and "error:" in err


def test_bad_ordering_file(capsys, k3_file, tmp_path):
    short = tmp_path / "short.txt"
    short.write_text("1\n2\n")  # K_3 has three edges
    rc, _, err = run(capsys, "psi", "--graph", k3_file, "--ordering", f"file:{short}")
    assert rc == 3 and "error:" in err


def test_config_file_seed_and_flag_precedence(capsys, q3_file, tmp_path):
    conf = tmp_path / "conf.txt"
    conf.write_text("seed=9\n")
    _, out, _ = run(capsys, "psi", "--graph", q3_file, "--ordering", "rand", "--config", str(conf))
    assert json.loads(out)["seed"] == 9
    _, out, _ = run(
        capsys,
        "psi", "--graph", q3_file, "--ordering", "rand", "--config", str(conf), "--seed", "2",
    )
    assert json.loads(out)["seed"] == 2
