"""Constraint evaluation: fixed order, exact slacks, hypothesis configs."""

from __future__ import annotations

import random

import pytest

from p6fold.constraints import (
    COVER_FLAGS,
    HypothesisConfig,
    evaluate,
    is_feasible,
)
from p6fold.invariants import InvariantTuple, profile

GEOMETRIC = HypothesisConfig()


def ids_of(report):
    return [e.id for e in report.entries]


def test_report_order_geometric():
    report = evaluate(InvariantTuple(1, -2, 1, 1, 0), GEOMETRIC)
    assert ids_of(report) == ["B1", "B2", "B3", "B4", "B5",
                              "S1", "S2", "S3", "S4", "S5", "S6",
                              "H1", "H2"]


def test_report_order_raw_with_cap():
    report = evaluate(InvariantTuple(1, -2, 1, 1, 0),
                      HypothesisConfig(geometric_mode=False, ks2_cap=9))
    assert ids_of(report) == ["S1", "S2", "S3", "S4", "S5", "S6",
                              "H1", "H2", "K"]


def test_linear_p3_is_tight_everywhere():
    report = evaluate(InvariantTuple(1, -2, 1, 1, 0), GEOMETRIC)
    assert report.feasible
    for cid in ("S1", "S2", "S3", "S4", "S5", "S6", "H1", "H2"):
        assert report.value_of(cid) == 0, cid


def test_ci22_slacks():
    report = evaluate(InvariantTuple(4, 0, 1, 6, 32), GEOMETRIC)
    assert report.feasible
    assert report.value_of("S4") == 0
    assert report.value_of("S5") == 8


def test_quadric_with_cap():
    report = evaluate(InvariantTuple(2, -2, 1, 2, 2),
                      HypothesisConfig(ks2_cap=9))
    assert report.feasible
    assert report.value_of("K") == 1


def test_parity_violation():
    t = InvariantTuple(1, -1, 1, 1, 0)
    report = evaluate(t, GEOMETRIC)
    assert not report.feasible
    assert report.value_of("B2") == 1
    assert not is_feasible(t, GEOMETRIC)


def test_huge_v_violates_hodge():
    t = InvariantTuple(10, 0, 1, 1, 10 ** 6)
    report = evaluate(t, GEOMETRIC)
    assert not report.feasible
    h1 = report.value_of("H1")
    assert h1 == 39 ** 2 - 10 ** 6 * 20 and h1 < 0
    assert not is_feasible(t, GEOMETRIC)


def test_is_feasible_equals_report_conjunction():
    rng = random.Random(99)
    for _ in range(500):
        t = InvariantTuple(*(rng.randint(-30, 30) for _ in range(5)))
        assert is_feasible(t, GEOMETRIC) == evaluate(t, GEOMETRIC).feasible


def test_schur_values_match_profile():
    rng = random.Random(4)
    for _ in range(300):
        t = InvariantTuple(*(rng.randint(-10 ** 6, 10 ** 6)
                             for _ in range(5)))
        report = evaluate(t, HypothesisConfig(geometric_mode=False))
        schur = profile(t).schur
        assert [report.value_of(f"S{i}") for i in range(1, 7)] == list(schur)


def test_s2_plus_s3_closed_form():
    rng = random.Random(11)
    for _ in range(300):
        d, delta, chi, u, v = (rng.randint(-10 ** 6, 10 ** 6)
                               for _ in range(5))
        report = evaluate(InvariantTuple(d, delta, chi, u, v),
                          HypothesisConfig(geometric_mode=False))
        assert report.value_of("S2") + report.value_of("S3") == \
            3 * d + 6 * delta + 10 * chi - u


def test_cover_flags_default_the_cap():
    cfg = HypothesisConfig(cover_flags=frozenset({"covered_by_lines"}))
    assert cfg.effective_cap == 9
    report = evaluate(InvariantTuple(2, -2, 1, 2, 2), cfg)
    assert report.value_of("K") == 1


def test_explicit_cap_overrides_cover_flags():
    cfg = HypothesisConfig(ks2_cap=8,
                           cover_flags=frozenset({"kx_plus_h_empty"}))
    assert cfg.effective_cap == 8
    report = evaluate(InvariantTuple(2, -2, 1, 2, 2), cfg)
    assert report.value_of("K") == 0


def test_all_cover_flags_are_accepted():
    for flag in COVER_FLAGS:
        cfg = HypothesisConfig(cover_flags=frozenset({flag}))
        assert cfg.effective_cap == 9


def test_unknown_cover_flag_rejected():
    with pytest.raises(ValueError):
        HypothesisConfig(cover_flags=frozenset({"proper"}))


def test_min_degree_strictness():
    t = InvariantTuple(2, -2, 1, 2, 2)
    assert is_feasible(t, HypothesisConfig(min_degree=2))
    report = evaluate(t, HypothesisConfig(min_degree=4))
    assert not report.feasible
    assert report.value_of("B1") == -2


def test_report_json_schema():
    report = evaluate(InvariantTuple(1, -1, 1, 1, 0), GEOMETRIC)
    data = report.to_json_dict()
    assert data["tuple"] == {"d": 1, "delta": -1, "chi": 1, "u": 1, "v": 0}
    assert data["feasible"] is False
    b2 = next(c for c in data["constraints"] if c["id"] == "B2")
    assert b2 == {"id": "B2", "value": "1", "ok": False}
    assert all(isinstance(c["value"], str) for c in data["constraints"])


def test_evaluate_is_deterministic():
    t = InvariantTuple(4, 0, 1, 6, 32)
    assert evaluate(t, GEOMETRIC) == evaluate(t, GEOMETRIC)
