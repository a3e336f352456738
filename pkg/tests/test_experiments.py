"""Experiment campaigns: CSV schema, row content, reproducibility."""

from __future__ import annotations

import math

import pytest

import altitude as alt
from altitude.experiments import (
    GNP_HEADER,
    HYPERCUBE_HEADER,
    SCHEMA_GNP,
    SCHEMA_HYPERCUBE,
    ExperimentRow,
    default_workers,
    experiment_gnp,
    experiment_hypercube,
    rows_to_csv,
)


def _parse(csv: str) -> tuple[str, list[str], list[dict[str, str]]]:
    lines = csv.strip().splitlines()
    header = lines[1].split(",")
    rows = [dict(zip(header, ln.split(","))) for ln in lines[2:]]
    return lines[0], header, rows


def _strip_wall(csv: str) -> str:
    # wall time is always the last column; everything else must reproduce
    return "\n".join(ln.rsplit(",", 1)[0] for ln in csv.strip().splitlines()[1:])


def test_hypercube_campaign_rows() -> None:
    schema_line, header, rows = _parse(experiment_hypercube(4, seed=0, workers=1))
    assert schema_line == f"# schema={SCHEMA_HYPERCUBE}"
    assert header == list(HYPERCUBE_HEADER) + ["wall_ms"]
    assert [r["d"] for r in rows] == ["2", "3", "4"]

    d2 = rows[0]
    assert (d2["lower_ratio"], d2["upper_dim"]) == ("2", "2")
    assert d2["exact_f"] == "2" and d2["exact_f_is_exact"] == "true"

    d3 = rows[1]
    assert d3["exact_f"] == "3" and d3["exact_f_is_exact"] == "true"
    assert int(d3["cert_lower"]) <= 3 <= int(d3["upper_dim"])

    d4 = rows[2]
    assert d4["exact_f"] == ""  # too large for the exact branch
    assert int(d4["adversary_psi"]) <= 4
    assert int(d4["cert_lower"]) >= int(d4["lower_ratio"]) >= 2


def test_hypercube_campaign_dimension_six_bracket() -> None:
    _, _, rows = _parse(experiment_hypercube(6, seed=0, workers=1))
    d6 = rows[-1]
    assert d6["d"] == "6"
    assert int(d6["cert_lower"]) >= 3  # density certificate from zeta_3 = 2
    assert int(d6["adversary_psi"]) <= 6
    assert d6["coloring_psi_exact"] == "true"
    assert int(d6["coloring_psi"]) <= 6


def test_hypercube_campaign_reproducible() -> None:
    a = experiment_hypercube(3, seed=5, workers=1)
    b = experiment_hypercube(3, seed=5, workers=1)
    assert _strip_wall(a) == _strip_wall(b)


def test_workers_do_not_change_row_order_or_content() -> None:
    serial = experiment_hypercube(4, seed=0, workers=1)
    pooled = experiment_hypercube(4, seed=0, workers=3)
    assert _strip_wall(serial) == _strip_wall(pooled)


def test_gnp_campaign_rows_and_guarantees() -> None:
    schema_line, header, rows = _parse(
        experiment_gnp([60], 0.2, omega=5.0, eps=0.1, trials=5, seed=0, workers=1)
    )
    assert schema_line == f"# schema={SCHEMA_GNP}"
    assert header == list(GNP_HEADER) + ["wall_ms"]
    assert len(rows) == 5
    for r in rows:
        assert int(r["pedestrian_max"]) >= int(r["sqrt_floor"])
        assert r["floor_ok"] == "true"
        assert int(r["adversary_psi"]) <= int(r["delta_plus_1"])
        assert int(r["coloring_psi"]) <= int(r["delta_plus_1"])
    assert [r["trial"] for r in rows] == ["0", "1", "2", "3", "4"]
    assert len({r["seed"] for r in rows}) == 5


def test_gnp_threshold_rule_records_union_bound() -> None:
    # the density rule caps p at 1; at this size the union exponent is negative
    _, _, rows = _parse(
        experiment_gnp([60], None, omega=3.0, eps=0.1, trials=1, seed=0, psi_budget=20000, workers=1)
    )
    r = rows[0]
    assert r["p"] == "1"
    k = alt.gnp_k(60, 1.0, 3.0, 0.1)
    assert r["gnp_k"] == str(k)
    want = alt.gnp_union_bound_log(60, 1.0, k)
    assert math.isclose(float(r["union_exponent"]), want.exponent, rel_tol=1e-5)
    assert r["union_negative"] == "true" and want.certifies


def test_gnp_vacuous_rows() -> None:
    _, _, rows = _parse(experiment_gnp([12], 0.0, omega=5.0, eps=0.1, trials=1, seed=0, workers=1))
    r = rows[0]
    assert r["m"] == "0" and r["pedestrian_max"] == "0" and r["sqrt_floor"] == "0"
    assert r["union_exponent"] == "" and r["union_negative"] == ""
    # fixed small p on a sparse instance: k = 0 flags the bound as vacuous
    _, _, rows2 = _parse(experiment_gnp([60], 0.2, omega=5.0, eps=0.1, trials=1, seed=0, workers=1))
    assert rows2[0]["gnp_k"] == "0"


def test_gnp_campaign_reproducible() -> None:
    kw = dict(p=0.3, omega=5.0, eps=0.1, trials=2, seed=9, workers=1)
    a = experiment_gnp([14, 18], **kw)
    b = experiment_gnp([14, 18], **kw)
    assert _strip_wall(a) == _strip_wall(b)


def test_rows_to_csv_rejects_header_mismatch() -> None:
    row = ExperimentRow("x", (("a", "1"),), 0)
    with pytest.raises(ValueError):
        rows_to_csv("s", ("b",), [row])


def test_default_workers_env_override(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("ALTITUDE_WORKERS", "7")
    assert default_workers() == 7
    monkeypatch.setenv("ALTITUDE_WORKERS", "bogus")
    assert default_workers() >= 1
    monkeypatch.delenv("ALTITUDE_WORKERS")
    assert default_workers() >= 1


def test_campaign_argument_validation() -> None:
    with pytest.raises(ValueError):
        experiment_hypercube(1)
    with pytest.raises(ValueError):
        experiment_gnp([10], 0.5, omega=5.0, eps=0.1, trials=0)
