"""Smoke tests for the python bindings."""

import json
import os

import pytest

import qalg

HALF = {"hbar": "1", "mu": "1", "mu1": "1/2", "mu2": "1/2", "mu3": "1/2"}


def test_energy_exact():
    assert qalg.energy_exact(0, HALF) == "-1/32"
    assert qalg.energy_exact(1, HALF) == "-1/50"
    assert qalg.energy_exact(2, HALF) == "-1/72"
    three_half = {**HALF, "mu1": "3/2", "mu2": "3/2", "mu3": "3/2"}
    assert qalg.energy_exact(0, three_half) == "-1/98"


def test_spectrum_table():
    rows = qalg.spectrum(2, HALF)
    assert [r["n"] for r in rows] == [0, 1, 2]
    assert rows[0]["branch"] == "even"
    assert rows[1]["branch"] == "odd"
    assert rows[0]["E"] == "-1/32"
    assert rows[0]["E_decimal"] == "-0.03125"


def test_zero_suite_symbolic():
    entries = qalg.zero_suite({})
    assert len(entries) == 10
    assert all(ok for _, ok in entries)


def test_verify_catalog():
    text = (
        "generators: J1 J2 J3;\n"
        "good: comm(J1, J2) == i*hbar*J3;\n"
        "bad: comm(J1, J2) == 2*i*hbar*J3;\n"
    )
    report = json.loads(qalg.verify_catalog_text(text))
    assert report[0]["status"] == "pass"
    assert report[1]["residual_terms"] > 0


def test_shipped_catalog():
    catdir = os.environ.get("QALG_CATALOGS")
    if not catdir:
        pytest.skip("QALG_CATALOGS not set")
    with open(os.path.join(catdir, "general.rel")) as f:
        report = json.loads(qalg.verify_catalog_text(f.read()))
    assert all(r["status"] == "pass" for r in report)


def test_radial_oracle_matches_algebra():
    exact = -1.0 / 32
    oracle = qalg.radial_eigenvalue(J=3, k=0, grid=3000)
    assert abs(oracle - exact) / abs(exact) < 1e-3

    report = json.loads(qalg.compare_spectra_json(1, HALF, grid=3000))
    assert all(row["rel_diff"] <= 1e-3 for row in report)


def test_dsl_round_trip():
    text = "comm(A1, comm(A1, B1)) - 4*hbar^2*anti(A1, B1)"
    canon = qalg.canonical_expression(text, ["A1", "B1"])
    assert qalg.canonical_expression(canon, ["A1", "B1"]) == canon
    with pytest.raises(Exception):
        qalg.canonical_expression("comm(A1, B1", ["A1", "B1"])


def test_build_operator():
    h = qalg.build_operator_str("H", HALF)
    assert "d" in h or "hbar" in h  # normal-ordered text form
    with pytest.raises(Exception):
        qalg.build_operator_str("NotAnOperator", {})
