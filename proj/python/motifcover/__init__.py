"""Network motif analysis via minimum-total-information subgraph covers.

The heavy lifting lives in the compiled extension ``motifcover._core``;
this wrapper re-exports it and adds dict-returning conveniences around the
JSON interfaces.
"""

import json as _json

from ._core import (
    Graph,
    InfeasibleSpecError,
    MotifCatalog,
    ValidationError,
    __version__,
    analyze_json,
    canonical_form,
    count_instances,
    edge_list_code_bits,
    find_instances,
    generate_bjr,
    generate_uniform,
    is_biconnected,
    load_edge_list,
    loads_edge_list,
    log2_binomial,
    log_star,
    motif_alias,
    motif_class,
    score_json,
    write_edge_list,
)

__all__ = [
    "Graph",
    "InfeasibleSpecError",
    "MotifCatalog",
    "ValidationError",
    "__version__",
    "analyze",
    "analyze_json",
    "canonical_form",
    "count_instances",
    "edge_list_code_bits",
    "find_instances",
    "generate_bjr",
    "generate_uniform",
    "is_biconnected",
    "load_edge_list",
    "loads_edge_list",
    "log2_binomial",
    "log_star",
    "motif_alias",
    "motif_class",
    "score",
    "score_json",
    "write_edge_list",
]


def analyze(graph, catalog, seed=1, restarts=5, runs=1, epsilon="edge-list",
            workers=0, include_cover=False):
    """Run the greedy cover solver and return the analysis report as a dict."""
    return _json.loads(
        analyze_json(graph, catalog, seed=seed, restarts=restarts, runs=runs,
                     epsilon=epsilon, workers=workers, include_cover=include_cover)
    )


def score(graph, cover, epsilon="edge-list"):
    """Recompute totals and c-scores for a cover (dict, list, or JSON string)."""
    if not isinstance(cover, str):
        cover = _json.dumps(cover)
    return _json.loads(score_json(graph, cover, epsilon=epsilon))
