"""Runs every acceptance criterion at its stated tolerance, one line each."""

import pytest

from hypercone_lab import acceptance, growth
from hypercone_lab.cli import main

SEED = 20240808


@pytest.fixture(scope="module")
def results():
    rows = acceptance.run_criteria("all", seed=SEED)
    return {r.cid: r for r in rows}


@pytest.mark.parametrize("cid", [cid for cid, _, _ in acceptance.CRITERIA])
def test_criterion(cid, results):
    r = results[cid]
    print(f"{r.cid}: {'PASS' if r.passed else 'FAIL'} | measured {r.measured} | tolerance {r.tolerance}")
    assert r.passed, f"{r.cid} failed: measured {r.measured}, tolerance {r.tolerance}"


def test_suite_selection_matches_registry():
    for suite in ("spectrum", "growth", "graph", "trees"):
        ids = acceptance.criterion_ids(suite)
        assert ids
        assert all(any(cid == i for i, s, _ in acceptance.CRITERIA if s == suite) for cid in ids)
    assert acceptance.criterion_ids("all") == [cid for cid, _, _ in acceptance.CRITERIA]


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        acceptance.run_criteria("bogus", seed=SEED)


def test_fault_injection_flips_gr2(monkeypatch):
    # a sign-flipped discriminant must be caught by the identity/PD checks
    original = growth.discriminant_power
    monkeypatch.setattr(growth, "discriminant_power", lambda K, a, b: -original(K, a, b))
    result = acceptance._gr2(SEED)
    assert not result.passed


def test_fault_injection_fails_suite_via_cli(monkeypatch, tmp_path):
    original = growth.discriminant_power
    monkeypatch.setattr(growth, "discriminant_power", lambda K, a, b: -original(K, a, b))
    out = tmp_path / "accept.csv"
    code = main(["accept", "--suite", "growth", "--seed", str(SEED), "--out", str(out)])
    assert code == 2
    text = out.read_text()
    assert "GR-2,FAIL" in text
