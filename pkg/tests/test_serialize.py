"""File formats: cotree JSON, graph6 against networkx, DOT, snapshots."""

import json

import networkx as nx
import pytest

from cogex.cotree import clique, to_adjacency
from cogex.enumerator import analyze_periodicity, build_registries, extremal_function
from cogex.oracle import enumerate_cotrees
from cogex.profile import forbidden_biclique_profile
from cogex.serialize import (
    CotreeFormatError,
    dumps_cotree,
    graph6_bytes,
    loads_cotree,
    registry_from_obj,
    registry_to_obj,
    series_from_obj,
    series_to_csv,
    series_to_obj,
    to_dot,
)


def test_json_round_trip_identity(k2_join_two_triangles):
    text = dumps_cotree(k2_join_two_triangles)
    again = loads_cotree(text)
    assert again == k2_join_two_triangles
    assert dumps_cotree(again) == text


def test_json_round_trip_catalog():
    for n in range(1, 7):
        for g in enumerate_cotrees(n).items:
            assert loads_cotree(dumps_cotree(g)) == g


def test_json_rejects_same_kind_nesting():
    bad = {"op": "sum", "children": [
        {"op": "sum", "children": [{"op": "leaf"}, {"op": "leaf"}]},
        {"op": "leaf"}]}
    with pytest.raises(CotreeFormatError) as exc:
        loads_cotree(json.dumps(bad))
    assert exc.value.path == "/children/0"


def test_json_rejects_single_child_and_bad_ops():
    with pytest.raises(CotreeFormatError):
        loads_cotree('{"op":"sum","children":[{"op":"leaf"}]}')
    with pytest.raises(CotreeFormatError):
        loads_cotree('{"op":"join","children":[{"op":"leaf"},{"op":"leaf"}]}')
    with pytest.raises(CotreeFormatError):
        loads_cotree('{"op":')


def test_graph6_k2():
    assert graph6_bytes(to_adjacency(clique(2))) == b"A_"


def test_graph6_matches_networkx():
    """networkx is the independent reference encoder."""
    for n in range(1, 8):
        for g in enumerate_cotrees(n).items:
            a = to_adjacency(g)
            ref_graph = nx.Graph()
            ref_graph.add_nodes_from(range(a.n))
            ref_graph.add_edges_from(a.edges())
            ref = nx.to_graph6_bytes(ref_graph, header=False).strip()
            assert graph6_bytes(a) == ref


def test_dot_structure(k2_join_two_triangles):
    dot = to_dot(k2_join_two_triangles)
    assert dot.count("•") == 8  # leaves
    assert dot.count('label="+"') == 1
    assert dot.count("×") == 3  # the root and the two triangles
    first_node = dot.splitlines()[2]
    assert "fillcolor" in first_node and "×" in first_node  # marked root


def test_catalog_graph6_lines():
    from cogex.serialize import catalog_to_graph6

    lines = catalog_to_graph6(enumerate_cotrees(4)).strip().splitlines()
    assert len(lines) == 10
    decoded = {nx.to_graph6_bytes(nx.from_graph6_bytes(l.encode()),
                                  header=False).strip() for l in lines}
    assert len(decoded) == 10  # pairwise distinct encodings


def test_registry_snapshot_round_trip():
    p = forbidden_biclique_profile(2, 2)
    regs = build_registries(5, 3, prune=p)
    obj = json.loads(json.dumps(registry_to_obj(regs[4], p)))
    restored, prune = registry_from_obj(obj)
    assert prune == p
    assert restored.n == 5 and restored.cap == 3
    assert restored.records == regs[4].records


def test_series_snapshot_and_csv():
    series = extremal_function(2, 2, range(1, 11))
    rep = analyze_periodicity(series)
    obj = series_to_obj(series, rep.detected_period)
    assert obj["rows"][4]["n"] == 5 and obj["rows"][4]["ex"] == 6
    restored = series_from_obj(json.loads(json.dumps(obj)))
    assert restored.values == series.values
    assert restored.alpha == series.alpha

    csv_text = series_to_csv(series, rep.detected_period)
    lines = csv_text.strip().splitlines()
    assert lines[0] == "n,ex,alpha_n,bound_ok,residue,witness"
    assert lines[5].startswith("5,6,15/2,True,1,")
