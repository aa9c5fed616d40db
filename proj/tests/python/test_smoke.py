import json
import math
import os
from pathlib import Path

import pytest

import ivqrof

DATA = Path(os.environ.get("IVQROF_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
CASE = DATA / "learning_effectiveness.json"

AI = (0.45, 0.55, 0.45, 0.55)
VHI = (0.80, 0.90, 0.10, 0.20)


def test_score_and_hesitation():
    r4 = (0.6003, 0.6947, 0.3344, 0.4252)
    assert ivqrof.score(r4, 2) == pytest.approx(0.27517489, abs=1e-12)
    lo, hi = ivqrof.hesitation(r4, 2)
    assert 0 <= lo <= hi <= 1
    assert ivqrof.normalized_score((1, 1, 0, 0), 2) == 1.0
    assert ivqrof.compare(VHI, AI, 2) == 1
    assert ivqrof.compare(AI, AI, 2) == 0
    assert ivqrof.distance((0, 0, 1, 1), (1, 1, 0, 0), 3) == pytest.approx(1.0)


def test_invalid_values_raise():
    with pytest.raises(ivqrof.IvqrofError):
        ivqrof.score((0.90, 0.99, 0.01, 0.05), 1)
    with pytest.raises(ValueError):
        ivqrof.check((0.6, 0.5, 0.1, 0.2))
    with pytest.raises(ivqrof.IvqrofError):
        ivqrof.from_linguistic("NOPE")


def test_linguistic_and_min_q():
    assert ivqrof.from_linguistic("HI") == pytest.approx((0.65, 0.80, 0.20, 0.35))
    assert ivqrof.min_valid_q([(0.90, 0.99, 0.01, 0.05)]) == 2


def test_weber_operations():
    s = ivqrof.weber_add(VHI, AI, lam=2.0, q=2)
    assert ivqrof.validate(s, 2)
    assert ivqrof.weber_add(AI, (0, 0, 1, 1)) == pytest.approx(AI, abs=1e-12)
    assert ivqrof.weber_mul(VHI, AI) == pytest.approx(ivqrof.weber_mul(AI, VHI))
    assert ivqrof.weber_scalar(1.0, AI) == pytest.approx(AI, abs=1e-12)
    assert ivqrof.weber_pow(AI, 1.0) == pytest.approx(AI, abs=1e-12)
    with pytest.raises(ivqrof.IvqrofError):
        ivqrof.weber_add(VHI, AI, lam=-1.5)


def test_owa_aggregate():
    assert ivqrof.owa_aggregate([AI, AI, AI], [0.2, 0.3, 0.5]) == pytest.approx(AI, abs=1e-12)
    a = ivqrof.owa_aggregate([VHI, AI], [0.6, 0.4], family="algebraic", q=3)
    b = ivqrof.owa_aggregate([AI, VHI], [0.6, 0.4], family="algebraic", q=3)
    assert a == pytest.approx(b)
    with pytest.raises(ivqrof.IvqrofError):
        ivqrof.owa_aggregate([AI, VHI], [0.5])


def _group_matrix():
    report = ivqrof.evaluate(CASE)
    return [[tuple(c) for c in row] for row in report["aggregated"]], report


def test_weight_methods_on_the_case():
    R, report = _group_matrix()
    swing = ivqrof.swing_weights(R, 2)
    assert swing == pytest.approx(report["weights"], abs=1e-12)
    assert swing == pytest.approx([0.1961, 0.1961, 0.1961, 0.1961, 0.2156], abs=1e-3)
    assert ivqrof.projection_weights(R) == pytest.approx(
        [0.1974, 0.2239, 0.2159, 0.1732, 0.1896], abs=2e-3)
    mabac = ivqrof.mabac_weights(R)
    assert math.fsum(mabac) == pytest.approx(1.0)


def test_evaluate_ranks_the_case():
    _, report = _group_matrix()
    assert report["ranking_text"] == "x2 > x3 > x1 > x5 > x4"
    assert report["normalized_scores"] == pytest.approx([0.7249, 0.8257, 0.7945, 0.6370, 0.6919], abs=1e-4)
    again = ivqrof.evaluate(json.loads(CASE.read_text()), weights="projection")
    assert again["ranking_text"] == report["ranking_text"]


def test_evaluate_stage_errors():
    with pytest.raises(ivqrof.IvqrofError, match="weights"):
        ivqrof.evaluate(CASE, weights="manual:0.5,0.5")
    with pytest.raises(ivqrof.IvqrofError):
        ivqrof.evaluate("{}")


def test_hhi_and_spread():
    assert ivqrof.hhi([1, 1, 1, 1, 1]) == pytest.approx(0.2)
    assert ivqrof.score_spread([0.5, 0.5]) == 0.0
