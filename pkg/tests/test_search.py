import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, random_graph
from utils.constructions import complete, odd_cycle, wheel
from utils.criticality import is_k_critical
from utils.errors import ParameterError, ScaleLimitError
from utils.graph import Graph, from_graph6
from utils.search import (
    all_graphs,
    canonical_form,
    canonical_order,
    colorable_graphs,
    construction_lower_bound,
    enumerate_k_critical,
    f_table,
    f_table_frame,
    max_enumeration_n,
    refine_colors,
)

MOSER_SPINDLE = Graph.from_edges(7, [
    (0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
    (0, 4), (0, 5), (4, 5), (4, 6), (5, 6),
    (3, 6),
])


# --- Forma canónica ---

@settings(max_examples=200, deadline=None)
@given(st.data())
def test_canonical_form_is_relabeling_invariant(data):
    g = data.draw(graphs(min_n=1, max_n=9))
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_canonical_form_separates_non_isomorphic_graphs():
    rng = random.Random(11)
    sample = [random_graph(rng, 7, 0.45) for _ in range(60)]
    for i, g in enumerate(sample):
        for h in sample[i + 1:]:
            same = canonical_form(g) == canonical_form(h)
            assert same == nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def test_canonical_order_is_a_permutation(petersen_graph):
    order = canonical_order(petersen_graph)
    assert sorted(order) == list(range(10))
    assert from_graph6(canonical_form(petersen_graph)).edge_count == 15


def test_refine_colors_on_vertex_transitive_graph(petersen_graph, wheel5):
    assert len(set(refine_colors(petersen_graph))) == 1
    assert len(set(refine_colors(wheel5))) == 2


def test_canonical_form_scale_limit():
    with pytest.raises(ScaleLimitError):
        canonical_form(Graph.empty(11))


# --- Catálogos de grafos ---

@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_all_graphs_counts(n, count):
    assert len(all_graphs(n)) == count


@pytest.mark.slow
def test_all_graphs_on_six_vertices():
    assert len(all_graphs(6)) == 156


def test_all_graphs_scale_limit():
    with pytest.raises(ScaleLimitError):
        all_graphs(7)


def test_colorable_graphs():
    assert len(colorable_graphs(4, 2)) == 7
    for n in range(1, 6):
        assert colorable_graphs(n, n) == all_graphs(n)


# --- Enumeración ---

@pytest.mark.parametrize("n,k,expected", [
    (2, 2, [complete(2)]),
    (3, 2, []),
    (4, 4, [complete(4)]),
    (5, 4, []),
    (5, 3, [odd_cycle(5)]),
    (4, 3, []),
    (6, 4, [wheel(5)]),
])
def test_small_enumerations(n, k, expected):
    result = enumerate_k_critical(n, k)
    assert result.graphs == [canonical_form(g) for g in expected]
    assert result.to_dict()["count"] == len(expected)


def test_k4_on_four_vertices_is_complete_graph():
    assert enumerate_k_critical(4, 4).graphs == ["C~"]


def test_fewer_vertices_than_k():
    result = enumerate_k_critical(3, 5)
    assert result.graphs == [] and result.f_value is None and result.units == 0


def test_f_value_and_witnesses():
    result = enumerate_k_critical(6, 4)
    assert result.f_value == 10
    assert result.witnesses == [canonical_form(wheel(5))]


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_enumeration_is_complete(n, k):
    expected = sorted(key for key in all_graphs(n) if is_k_critical(from_graph6(key), k).verdict)
    assert sorted(enumerate_k_critical(n, k).graphs) == expected


@pytest.mark.slow
@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_enumeration_is_complete_on_six_vertices(k):
    expected = sorted(key for key in all_graphs(6) if is_k_critical(from_graph6(key), k).verdict)
    assert sorted(enumerate_k_critical(6, k).graphs) == expected


@pytest.mark.slow
def test_seven_vertex_four_critical_graphs():
    result = enumerate_k_critical(7, 4)
    assert len(result.graphs) == 2
    assert canonical_form(MOSER_SPINDLE) in result.graphs


def test_every_enumerated_graph_is_critical():
    result = enumerate_k_critical(6, 4)
    for key in result.graphs:
        g = from_graph6(key)
        assert g.n == 6 and is_k_critical(g, 4).verdict


def test_scale_limits():
    assert max_enumeration_n(4) == 9 and max_enumeration_n(5) == 8
    with pytest.raises(ScaleLimitError):
        enumerate_k_critical(10, 4)
    with pytest.raises(ScaleLimitError):
        enumerate_k_critical(9, 5)
    with pytest.raises(ParameterError):
        enumerate_k_critical(5, 1)
    with pytest.raises(ParameterError):
        enumerate_k_critical(0, 3)


def test_maximum_only_keeps_witnesses():
    full = enumerate_k_critical(6, 4)
    best = enumerate_k_critical(6, 4, maximum_only=True)
    assert best.maximum_only and best.f_value == full.f_value
    assert best.graphs == best.witnesses == full.witnesses


@pytest.mark.parametrize("n,maximum_only", [(6, False), (6, True), pytest.param(7, True, marks=pytest.mark.slow)])
def test_parallel_enumeration_matches_serial(n, maximum_only):
    serial = enumerate_k_critical(n, 4, maximum_only=maximum_only, jobs=1)
    parallel = enumerate_k_critical(n, 4, maximum_only=maximum_only, jobs=2)
    assert parallel.to_dict() == serial.to_dict()


def test_candidate_count_ignores_best_bound():
    assert enumerate_k_critical(6, 4, maximum_only=True).candidates == enumerate_k_critical(6, 4).candidates


# --- Checkpoints ---

def test_checkpoint_is_written_and_reused(tmp_path):
    path = tmp_path / "ck" / "n6k4.json"
    first = enumerate_k_critical(6, 4, checkpoint=str(path))
    state = json.loads(path.read_text(encoding="utf-8"))
    assert state["n"] == 6 and state["k"] == 4 and not state["maximum_only"]
    assert state["completed"] == list(range(first.units))
    assert state["found"] == first.graphs

    resumed = enumerate_k_critical(6, 4, checkpoint=str(path))
    assert resumed.graphs == first.graphs and resumed.candidates == 0


def test_checkpoint_results_are_trusted(tmp_path):
    units = enumerate_k_critical(6, 4).units
    path = tmp_path / "ck.json"
    key = canonical_form(wheel(5))
    path.write_text(json.dumps({"n": 6, "k": 4, "maximum_only": False, "units": units,
                                "completed": list(range(units)), "found": [key]}), encoding="utf-8")
    result = enumerate_k_critical(6, 4, checkpoint=str(path))
    assert result.graphs == [key] and result.f_value == 10


def test_checkpoint_mismatch_is_rejected(tmp_path):
    path = tmp_path / "ck.json"
    enumerate_k_critical(6, 4, checkpoint=str(path))
    with pytest.raises(ParameterError):
        enumerate_k_critical(6, 4, maximum_only=True, checkpoint=str(path))


# --- Tabla de f_k(n) ---

def test_f_table_k4(tmp_path):
    rows = f_table(4, 6, output_dir=str(tmp_path))
    assert [row.n for row in rows] == [4, 5, 6]
    assert [row.f_value for row in rows] == [6, None, 10]

    four, five, six = rows
    assert four.construction == "K4" and four.meets_construction and four.gao_ma_cap is None
    assert five.gao_ma_cap == 10 and five.within_cap and five.construction is None
    assert six.construction == "wheel(5)" and six.meets_construction
    assert six.gao_ma_cap == 14 and six.within_cap

    assert (tmp_path / "f4_n6_0.g6").read_text(encoding="ascii").strip() == canonical_form(wheel(5))
    frame = f_table_frame(rows)
    assert frame["f_value"].isna().tolist() == [False, True, False]
    assert frame.loc[2, "witnesses"] == canonical_form(wheel(5))


def test_f_table_k3():
    rows = f_table(3, 6)
    assert [row.f_value for row in rows] == [3, None, 5, None]
    assert rows[2].construction == "cycle(5)"


def test_f_table_requires_n_max_at_least_k():
    with pytest.raises(ParameterError):
        f_table(4, 3)


@pytest.mark.parametrize("n,k,expected", [
    (4, 4, (6, "K4")),
    (6, 4, (10, "wheel(5)")),
    (12, 4, (22, "wheel(11)")),
    (20, 4, (45, "toft(5)")),
    (7, 3, (7, "cycle(7)")),
    (10, 6, (35, "dirac(5)")),
    (5, 4, None),
    (8, 5, None),
])
def test_construction_lower_bound(n, k, expected):
    assert construction_lower_bound(n, k) == expected
