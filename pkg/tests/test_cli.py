import io
import json
import logging
import os

import pytest

from main import run
from utils.constructions import odd_cycle, petersen, toft, wheel
from utils.graph import to_graph6
from utils.logger import logger
from utils.search import canonical_form


@pytest.fixture
def cli(capsys):
    """Ejecuta la CLI y devuelve (código de salida, stdout)"""
    def invoke(*argv):
        code = run([str(arg) for arg in argv])
        return code, capsys.readouterr().out
    return invoke


@pytest.fixture
def cli_json(cli):
    def invoke(*argv):
        code, out = cli(*argv)
        return code, json.loads(out)
    return invoke


# --- construct ---

def test_construct_toft(cli_json):
    code, doc = cli_json("construct", "toft", 3)
    assert code == 0 and doc["ok"] and doc["command"] == "construct" and doc["seed"] == 0
    result = doc["result"]
    assert result["edges"] == 21 == result["expected_edges"]
    assert result["graph6"] == to_graph6(toft(3))
    assert result["parts"]["B"] == [3, 4, 5]


def test_construct_rejects_even_parameter(cli_json):
    code, doc = cli_json("construct", "toft", 4)
    assert code == 1 and not doc["ok"] and doc["error"]["kind"] == "parameter"


def test_construct_wrong_arity_is_usage_error(cli_json):
    code, doc = cli_json("construct", "turan", 5)
    assert code == 2 and doc["error"]["kind"] == "usage"


def test_construct_dot(cli):
    code, out = cli("construct", "wheel", 5, "--dot")
    assert code == 0
    assert out.startswith("graph wheel {") and out.count("--") == 10


# --- color / verify-critical ---

def test_color_chromatic_number(cli_json):
    code, doc = cli_json("color", "-g", "C~")
    assert code == 0 and doc["result"]["chi"] == 4


def test_color_decision(cli_json):
    code, doc = cli_json("color", "-g", to_graph6(odd_cycle(5)), "-k", 2)
    assert code == 0
    assert doc["result"]["k"] == 2 and doc["result"]["colorable"] is False
    assert doc["result"]["coloring"] is None


def test_verify_critical_from_stdin(cli_json, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(">>graph6<<" + to_graph6(wheel(5)) + "\n"))
    code, doc = cli_json("verify-critical", "-k", 4)
    assert code == 0
    result = doc["result"]
    assert result["verdict"] and result["chi"] == 4 and len(result["edge_evidence"]) == 10


def test_verify_critical_from_file(cli_json, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(to_graph6(petersen()) + "\n", encoding="ascii")
    code, doc = cli_json("verify-critical", "-k", 3, "--file", path)
    assert code == 0 and not doc["result"]["verdict"]


def test_verify_critical_core(cli_json):
    g = odd_cycle(5).add_edge(2, 4)
    code, doc = cli_json("verify-critical", "-k", 3, "-g", to_graph6(g), "--core")
    assert code == 0
    assert doc["result"]["core"] == {"graph6": "Bw", "n": 3, "edges": 3, "support": [2, 3, 4]}


def test_budget_exhaustion_exit_code(cli_json):
    code, doc = cli_json("verify-critical", "-k", 3, "-g", to_graph6(petersen()), "--budget", 1)
    assert code == 3 and not doc["ok"]
    assert doc["error"]["kind"] == "indeterminate" and doc["error"]["details"]["budget"] == 1


def test_budget_from_environment(cli_json, monkeypatch):
    monkeypatch.setenv("CRITLAB_BUDGET", "1")
    code, doc = cli_json("color", "-g", to_graph6(petersen()))
    assert code == 3 and doc["error"]["kind"] == "budget-exceeded"


def test_invalid_environment_is_domain_error(cli_json, monkeypatch):
    monkeypatch.setenv("CRITLAB_JOBS", "0")
    code, doc = cli_json("bounds", "-k", 4, "--n", 100)
    assert code == 1 and doc["error"]["kind"] == "parameter"


def test_graph6_errors(cli_json):
    code, doc = cli_json("color", "-g", "A`")
    assert code == 1
    assert doc["error"]["kind"] == "graph6-parse" and doc["error"]["details"]["offset"] == 1


def test_non_ascii_file_is_graph6_error(cli_json, tmp_path):
    path = tmp_path / "g.g6"
    path.write_bytes("Cé\n".encode("utf-8"))
    code, doc = cli_json("verify-critical", "-k", 4, "--file", path)
    assert code == 1
    assert doc["error"]["kind"] == "graph6-parse" and doc["error"]["details"]["offset"] == 1


def test_non_ascii_stdin_is_graph6_error(cli_json, monkeypatch):
    stdin = io.TextIOWrapper(io.BytesIO("Cé\n".encode("utf-8")), encoding="ascii")
    monkeypatch.setattr("sys.stdin", stdin)
    code, doc = cli_json("color")
    assert code == 1
    assert doc["error"]["kind"] == "graph6-parse" and doc["error"]["details"]["offset"] == 1


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["verify-critical", "-g", "C~"],
    ["bounds", "-k", "x", "--n", "10"],
    [],
])
def test_usage_errors(cli, argv):
    code, out = cli(*argv)
    assert code == 2 and out == ""


def test_two_graph_sources_conflict(cli_json, tmp_path):
    code, doc = cli_json("color", "-g", "C~", "-f", tmp_path / "missing.g6")
    assert code == 2 and doc["error"]["kind"] == "usage"


# --- witness / check ---

def test_witness_matching(cli_json):
    code, doc = cli_json("witness", "matching", "-g", to_graph6(toft(3)), "-k", 4,
                         "--clique", "3", "-u", 4, "--W", "6,7,8")
    assert code == 0
    assert doc["result"]["phi"] == {"6": 9, "7": 10, "8": 11}


def test_witness_matching_requires_u(cli_json):
    code, doc = cli_json("witness", "matching", "-g", "C~", "--clique", "0")
    assert code == 2 and doc["error"]["kind"] == "usage"


def test_witness_hypothesis_failure(cli_json):
    code, doc = cli_json("witness", "matching", "-g", "C~", "-k", 3, "-u", 1, "--W", "2")
    assert code == 1 and doc["error"]["details"]["hypothesis"] == "k>=4"


def test_witness_xy_defaults_to_neighbourhoods(cli_json):
    code, doc = cli_json("witness", "xy", "-g", to_graph6(toft(3)), "--cycle", "3 6 4 7")
    assert code == 0
    assert doc["result"]["X_dprime"] == [11] and doc["result"]["Y_dprime"] == [2]


def test_witness_xy_vertex_out_of_range(cli_json):
    code, doc = cli_json("witness", "xy", "-g", "C~", "--cycle", "0 1 2 9")
    assert code == 1 and doc["error"]["details"]["hypothesis"] == "vertex-range"


def test_check_2path(cli_json):
    code, doc = cli_json("check", "2path", "-g", to_graph6(wheel(5)))
    result = doc["result"]
    assert code == 0 and result["verdict"]
    assert result["two_path"]["max_value"] == -1
    assert result["four_cycle"]["degree_sum"] == 14


def test_check_2path_without_four_cycles(cli_json):
    code, doc = cli_json("check", "2path", "-g", to_graph6(odd_cycle(5)))
    assert code == 0 and doc["result"]["four_cycle"] is None


def test_check_2path_verify_critical(cli_json):
    code, doc = cli_json("check", "2path", "-g", to_graph6(odd_cycle(5)), "--verify-critical")
    assert code == 1 and doc["error"]["details"]["hypothesis"] == "k-critical"


def test_check_cliques(cli_json):
    code, doc = cli_json("check", "cliques", "-g", to_graph6(wheel(5)), "-k", 4)
    assert code == 0 and doc["result"]["count"] == 5 and doc["result"]["triangle_cap_verdict"]
    code, _ = cli_json("check", "cliques", "-g", to_graph6(wheel(5)))
    assert code == 2


def test_check_partition(cli_json):
    g6 = to_graph6(odd_cycle(5))
    code, doc = cli_json("check", "partition", "-g", g6, "--parts", "0,1,2|3,4")
    assert code == 0
    assert doc["result"]["internal_edge_sum"] == 3 and doc["result"]["deviation"] == "1/2"
    assert doc["result"]["source"] == "given"

    code, doc = cli_json("check", "partition", "-g", g6, "-r", 2)
    assert code == 0 and doc["result"]["source"] == "stability_partition"


def test_check_partition_rejects_malformed_parts(cli_json):
    code, doc = cli_json("check", "partition", "-g", to_graph6(odd_cycle(5)), "--parts", "a|b")
    assert code == 2 and doc["error"]["kind"] == "usage"


# --- bounds / enumerate / ftable ---

def test_bounds_json(cli_json):
    code, doc = cli_json("bounds", "-k", 4, "--n", 100, 1000)
    rows = doc["result"]["rows"]
    assert code == 0 and [row["thm1"] for row in rows] == [2470, 246914]
    assert doc["result"]["validity"]["stiebitz"] == "large-n only"


def test_bounds_csv(cli):
    code, out = cli("bounds", "-k", 5, "--n", 100, "--format", "csv")
    lines = out.strip().split("\n")
    assert code == 0 and len(lines) == 2
    assert lines[0].startswith("n,k,turan_trivial,stiebitz,thm1,gao_ma")
    assert lines[1].startswith("100,5,")


def test_bounds_xlsx(cli_json, tmp_path):
    code, doc = cli_json("bounds", "-k", 4, "--n", 50, "--format", "xlsx",
                         "--output-dir", tmp_path / "tables")
    assert code == 0 and os.path.exists(doc["result"]["table_file"])


def test_bounds_domain_error(cli_json):
    code, doc = cli_json("bounds", "-k", 4, "--n", 4)
    assert code == 1 and doc["error"]["kind"] == "parameter"


def test_enumerate_writes_witnesses(cli_json, tmp_path):
    code, doc = cli_json("enumerate", "-n", 6, "-k", 4, "--write-witnesses", "--output-dir", tmp_path)
    result = doc["result"]
    assert code == 0 and result["count"] == 1 and result["f_value"] == 10
    with open(result["witness_files"][0], encoding="ascii") as fh:
        assert fh.read().strip() == canonical_form(wheel(5))


def test_enumerate_scale_limit(cli_json):
    code, doc = cli_json("enumerate", "-n", 10, "-k", 4)
    assert code == 1 and doc["error"]["kind"] == "scale-limit"


def test_ftable(cli_json, tmp_path):
    code, doc = cli_json("ftable", "-k", 4, "--nmax", 6, "--output-dir", tmp_path)
    result = doc["result"]
    assert code == 0 and result["computed"] and result["consistent"]
    assert [row["f_value"] for row in result["rows"]] == [6, None, 10]


# --- Determinismo ---

def test_output_is_deterministic(cli):
    first = cli("enumerate", "-n", 6, "-k", 4)
    second = cli("enumerate", "-n", 6, "-k", 4, "--jobs", 2)
    assert first == second


def test_log_level_follows_verbose_and_environment(cli_json, monkeypatch):
    cli_json("construct", "cycle", 5, "--verbose")
    assert logger.logger.level == logging.DEBUG
    monkeypatch.setenv("CRITLAB_LOG_LEVEL", "WARNING")
    cli_json("construct", "cycle", 5)
    assert logger.logger.level == logging.WARNING
    monkeypatch.setenv("CRITLAB_LOG_LEVEL", "INFO")
    cli_json("construct", "cycle", 5)
    assert logger.logger.level == logging.INFO


@pytest.mark.slow
def test_maximum_only_output_is_deterministic(cli):
    first = cli("enumerate", "-n", 7, "-k", 4, "--maximum-only", "--jobs", 1)
    second = cli("enumerate", "-n", 7, "-k", 4, "--maximum-only", "--jobs", 2)
    assert first == second


def test_seed_is_echoed(cli_json, monkeypatch):
    assert cli_json("construct", "cycle", 5, "--seed", 7)[1]["seed"] == 7
    monkeypatch.setenv("CRITLAB_SEED", "3")
    assert cli_json("construct", "cycle", 5)[1]["seed"] == 3
