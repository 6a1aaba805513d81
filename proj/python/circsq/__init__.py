"""Distinct squares in circular words.

Words are plain strings, one character per symbol. Characters are ranked in
sorted order, so ``canonical_rotation("cab") == "abc"``.
"""

import json

from ._core import (
    CHECKS,
    InvalidState,
    PreconditionError,
    RauzyGraph,
    SizeExceeded,
    build_rauzy_graph,
    canonical_rotation,
    circular_factors,
    class_circuit,
    class_decomposition,
    contains_class_circuit,
    decompose_split,
    distinct_squares,
    distinct_squares_circular,
    distinct_squares_circular_via_doubling,
    factors,
    fine_wilf_check,
    independent_rank,
    is_primitive,
    odd_even_formula,
    power_factors,
    primitive_root,
    rational_power,
    rotations,
    small_circuit_profile,
    smallest_period,
    split_point,
)
from . import _core


def count_squares(word, circular=False):
    """Sq(w), or Sq([w]) when ``circular`` is set."""
    squares = distinct_squares_circular(word) if circular else distinct_squares(word)
    return len(squares)


def word_report(word):
    return json.loads(_core.word_report(word))


def verify(checks="all", alphabet=2, max_len=8, canonicalize=True, jobs=1, seed=0, checkpoint=None):
    """Run verification sweeps and return the parsed JSON report."""
    ids = list(CHECKS) if checks == "all" else ([checks] if isinstance(checks, str) else list(checks))
    text = _core.run_checks_json(ids, alphabet, max_len, canonicalize, jobs, seed, checkpoint)
    return json.loads(text)


def search_extremal(n, k=2, budget=100000, seed=0):
    return json.loads(_core.search_extremal_json(n, k, budget, seed))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
