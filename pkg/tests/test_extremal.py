from fractions import Fraction

import pytest

from utils.constructions import complete, dirac, odd_cycle, turan
from utils.errors import NoFourCycleError, ParameterError
from utils.extremal import (
    bound_row,
    bound_table,
    bound_table_frame,
    check_2path_bound,
    check_4cycle,
    check_clique_caps,
    check_heavy_edge,
    delta_k,
    evaluate_partition,
    exact_value,
    stability_partition,
    toft_lower_constant,
    weak_bound_from_2path,
)
from utils.graph import Graph


# --- Cotas ---

def test_bounds_k4_n100():
    row = bound_row(100, 4)
    assert row.turan_trivial == 3333
    assert row.stiebitz == 2500
    assert row.thm1 == 2470
    assert row.gao_ma == 2599
    assert row.thm2_4crit == 1640
    assert row.weak_4crit == 2666
    assert row.twopath_cap == 2327
    assert row.toft_lower == 625
    assert row.dirac_lower is None and row.kk2_barrier is None


def test_bounds_k4_n1000():
    row = bound_row(1000, 4)
    assert (row.thm1, row.thm2_4crit, row.gao_ma) == (246914, 164000, 250999)


def test_bounds_k5_n100():
    row = bound_row(100, 5)
    assert (row.stiebitz, row.thm1, row.gao_ma, row.kk2_barrier) == (3333, 3316, 3431, 2500)
    assert row.thm2_4crit is None and row.twopath_cap is None
    assert row.to_dict()["toft_lower"] == "40000/31"


def test_bounds_k6_dirac():
    row = bound_row(10, 6)
    assert row.dirac_lower == 35
    assert row.toft_lower == 25


def test_thm1_exact_stays_below_stiebitz_at_small_n():
    row = bound_row(10, 4)
    assert row.thm1 == row.stiebitz == 25
    assert row.thm1_exact == Fraction(2000, 81)
    assert row.to_dict()["thm1_exact"] == "2000/81"


def test_lower_constants():
    assert toft_lower_constant(4) == Fraction(1, 16)
    assert toft_lower_constant(5) == Fraction(4, 31)
    assert toft_lower_constant(6) == Fraction(1, 4)
    assert toft_lower_constant(7) == Fraction(4, 15)
    assert [delta_k(k) for k in (6, 7, 8)] == [0, Fraction(8, 7), Fraction(44, 23)]
    with pytest.raises(ParameterError):
        delta_k(5)
    with pytest.raises(ParameterError):
        toft_lower_constant(3)


def test_weak_bound_from_2path():
    assert weak_bound_from_2path(4) == 11
    assert weak_bound_from_2path(100) == 2327


def test_gao_ma_dominates_stiebitz():
    for k in range(4, 9):
        for row in bound_table(k, range(k + 1, 40)):
            assert row.gao_ma > row.stiebitz >= row.thm1
            assert row.thm1_exact < row.stiebitz and row.thm1 >= row.thm1_exact
            assert row.turan_trivial >= row.stiebitz


@pytest.mark.parametrize("n,k", [(4, 4), (10, 3)])
def test_bound_row_domain(n, k):
    with pytest.raises(ParameterError):
        bound_row(n, k)


def test_bound_frame_keeps_exact_values():
    frame = bound_table_frame(bound_table(5, [100, 101]))
    assert list(frame["n"]) == [100, 101]
    assert frame.loc[0, "toft_lower"] == "40000/31"


def test_exact_value():
    assert exact_value(Fraction(4, 2)) == 2
    assert exact_value(Fraction(1, 3)) == "1/3"
    assert exact_value(None) is None


# --- Comprobadores ---

def test_2path_check_on_wheel(wheel5):
    check = check_2path_bound(wheel5)
    assert check.max_value == -1 and check.cap == 7 and check.verdict
    assert check.averaging_hypotheses and check.averaging_met
    assert check.to_dict()["averaging_bound"] == "-112/5"


def test_2path_check_on_toft(toft3):
    check = check_2path_bound(toft3)
    assert check.verdict
    assert check.averaging_bound == Fraction(126, 12) - Fraction(1296, 21)


def test_2path_check_refutes_dense_bipartite():
    assert not check_2path_bound(turan(6, 2)).verdict


def test_clique_caps(wheel5, toft5, k4):
    check = check_clique_caps(wheel5, 4)
    assert (check.count, check.n_cap, check.sharp_cap) == (5, 6, 5)
    assert check.verdict and check.to_dict()["triangle_cap_verdict"]

    assert check_clique_caps(toft5, 4).count == 0
    assert check_clique_caps(dirac(5), 6).count == 0

    small = check_clique_caps(k4, 4)
    assert small.sharp_cap_verdict is None and small.verdict


def test_heavy_edge(wheel5):
    report = check_heavy_edge(wheel5)
    assert report["edge"] == [0, 5] and report["degree_sum"] == 8
    assert report["twice_average_degree"] == "20/3" and report["verdict"]


def test_4cycle_report(wheel5):
    report = check_4cycle(wheel5)
    assert report["degree_sum"] == 14
    assert report["deficit"] == "-2/3"
    with pytest.raises(NoFourCycleError):
        check_4cycle(complete(3))


# --- Particiones ---

def test_evaluate_partition_on_c5(c5):
    result = evaluate_partition(c5, [[0, 1, 2], [3, 4]])
    assert result.internal_edge_sum == 3 and result.missing_edges == 4
    assert result.deviation == Fraction(1, 2)
    assert result.slack == 1 and result.clique_free and result.hypotheses_hold
    assert result.to_dict()["measured"] == {"internal_within_t": False, "missing_within_2t": False}


def test_evaluate_partition_allows_empty_parts(c5):
    result = evaluate_partition(c5, [[0, 1, 2, 3, 4], []])
    assert result.internal_edge_sum == 5 and result.missing_edges == 0


def test_evaluate_partition_rejects_non_partition(c5):
    with pytest.raises(ParameterError):
        evaluate_partition(c5, [[0, 1], [1, 2, 3, 4]])
    with pytest.raises(ParameterError):
        evaluate_partition(c5, [[0, 1], [2, 3]])


def test_clique_free_flag(k4):
    result = evaluate_partition(k4, [[0, 1], [2, 3]])
    assert not result.clique_free and not result.hypotheses_hold
    assert result.to_dict()["measured"] == {}


def test_stability_partition_finds_turan_parts():
    g = turan(9, 3)
    parts = stability_partition(g, 3)
    assert evaluate_partition(g, parts).internal_edge_sum == 0


def test_stability_partition_on_k4(k4):
    parts = stability_partition(k4, 2)
    assert parts == [[0, 2], [1, 3]]
    assert evaluate_partition(k4, parts).internal_edge_sum == 2
    with pytest.raises(ParameterError):
        stability_partition(k4, 1)


def test_stability_partition_covers_vertices():
    g = Graph.from_edges(7, odd_cycle(7).edges() + [(0, 3)])
    parts = stability_partition(g, 3)
    assert sorted(v for part in parts for v in part) == list(range(7))
