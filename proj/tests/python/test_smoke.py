"""Smoke tests for the python bindings."""

import json
import math
import os
from pathlib import Path

import pytest

motifcover = pytest.importorskip("motifcover")


def repo_root() -> Path:
    env = os.environ.get("MOTIFCOVER_REPO")
    if env:
        return Path(env)
    return Path(__file__).resolve().parents[2]


def test_graph_roundtrip():
    g = motifcover.Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert g.n == 4
    assert g.edge_count == 4
    text = g.to_edge_list()
    back = motifcover.loads_edge_list(text)
    assert back.edges() == g.edges()


def test_catalog_counts():
    cat = motifcover.MotifCatalog.generate(5, directed=False, filter="connected")
    assert len(cat) == 30
    cat4 = motifcover.MotifCatalog.generate(4, directed=True, filter="connected")
    assert len(cat4) == 2 + 13 + 199


def test_canonical_and_symmetry():
    assert motifcover.canonical_form("2-1,0-1,0-2") == "0-1,0-2,1-2"
    cls = motifcover.motif_class("0-1,0-2,0-3")
    assert cls["aut"] == 6
    assert cls["orbit_count"] == 2
    assert motifcover.is_biconnected("0-1,0-2,1-2")
    assert not motifcover.is_biconnected("0-1,1-2")


def test_log_star_values():
    assert math.isclose(motifcover.log_star(1), math.log2(2.865064), rel_tol=1e-12)
    assert math.isclose(motifcover.log_star(16), math.log2(2.865064) + 7, rel_tol=1e-12)


def test_analyze_triangles():
    g = motifcover.loads_edge_list("0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n")
    cat = motifcover.MotifCatalog.generate(3)
    report = motifcover.analyze(g, cat, seed=3)
    assert report["totals"]["sigma_bits"] <= report["totals"]["eri_bits"] + 1e-9
    motifs = {row["motif"]: row["count"] for row in report["motifs"]}
    assert motifs.get("0-1,0-2,1-2") == 2


def test_generate_score_roundtrip():
    g, cover_json, collisions = motifcover.generate_uniform(
        80, False, [("triangle", 10), ("edge", 12)], seed=5
    )
    assert collisions >= 0
    report = motifcover.score(g, cover_json)
    assert report["totals"]["sigma_bits"] > 0
    counts = {row["motif"]: row["count"] for row in report["motifs"]}
    assert counts["0-1,0-2,1-2"] == 10
    assert counts["0-1"] == 12


def test_count_instances():
    g = motifcover.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    cat = motifcover.MotifCatalog.generate(3)
    assert motifcover.count_instances(g, cat, "0-1,0-2,1-2") == 4


def test_report_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema_path = repo_root() / "schemas" / "analysis_report.schema.json"
    schema = json.loads(schema_path.read_text())
    g, cover_json, _ = motifcover.generate_uniform(
        120, False, [("triangle", 15), ("edge", 20)], seed=9
    )
    cat = motifcover.MotifCatalog.generate(4)
    report = motifcover.analyze(g, cat, seed=2, runs=2, include_cover=True)
    jsonschema.validate(report, schema)


def test_validation_errors_surface():
    with pytest.raises(ValueError):
        motifcover.loads_edge_list("1 1\n")
    with pytest.raises(ValueError):
        motifcover.generate_uniform(3, False, [("triangle", 5)], seed=1)
