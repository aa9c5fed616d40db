"""Interval-valued q-rung orthopair fuzzy decision engine.

Values are (mu_lo, mu_hi, nu_lo, nu_hi) tuples.
"""

import json as _json
from pathlib import Path as _Path

from ._core import (
    IvqrofError,
    accuracy,
    check,
    compare,
    distance,
    from_linguistic,
    hesitation,
    hhi,
    mabac_weights,
    min_valid_q,
    normalized_score,
    owa_aggregate,
    projection_weights,
    score,
    score_spread,
    swing_weights,
    validate,
    weber_add,
    weber_mul,
    weber_pow,
    weber_scalar,
)
from . import _core


def evaluate(problem, q=2, family="weber", weights="swing", weight_q=None, weight_family=None):
    """Run the pipeline. `problem` is a path, a JSON string or a dict."""
    if isinstance(problem, dict):
        text = _json.dumps(problem)
    elif isinstance(problem, _Path) or (isinstance(problem, str) and not problem.lstrip().startswith("{")):
        text = _Path(problem).read_text()
    else:
        text = problem
    return _json.loads(_core.evaluate_json(text, q, family, weights, weight_q, weight_family))
