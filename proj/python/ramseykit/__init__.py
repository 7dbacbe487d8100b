"""Constructive 2-color Ramsey machinery.

Structured reports (traces, bound ledgers, inequality sweeps) come back as
JSON strings rendered by the same emitters as the command-line tool; the
helpers below parse them into plain dicts.
"""

import json

from ._core import (
    Graph,
    RamseyError,
    TwoColoring,
    arrows,
    es_pair,
    esz_pair,
    find_mono_copy,
    gen_biased,
    gen_paley,
    gen_uniform,
    prove_or_find,
    ramsey_number_exact,
    sparse_subset,
    trace_bounds,
    verify_constants,
)

__all__ = [
    "Graph",
    "RamseyError",
    "TwoColoring",
    "arrows",
    "arrows_report",
    "bound_report",
    "es_pair",
    "esz_pair",
    "find_mono_copy",
    "gen_biased",
    "gen_paley",
    "gen_uniform",
    "prove_or_find",
    "prove_report",
    "ramsey_number_exact",
    "sparse_subset",
    "trace_bounds",
    "verify_constants",
]


def bound_report(m):
    """trace_bounds as a dict."""
    return json.loads(trace_bounds(m))


def prove_report(coloring, pattern, profile="relaxed"):
    """prove_or_find as a dict."""
    return json.loads(prove_or_find(coloring, pattern, profile))


def arrows_report(n, pattern, max_edges=30):
    """arrows as a dict."""
    return json.loads(arrows(n, pattern, max_edges))
