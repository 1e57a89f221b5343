import json

import pytest

from pycops.cli import build_family, load_graph, main, play
from pycops.errors import InvalidParameterError
from pycops.game import GameConfig
from pycops.graphs import capture_family, petersen, read_graph, sequence_realizer

from .helpers import write_catalog


def run_json(capsys, argv):
    """Runs the command line and parses what it printed"""
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_can_generate_graph6(capsys):
    assert main(["gen", "cycle", "5"]) == 0
    assert capsys.readouterr().out == "Dhc\n"


def test_can_generate_edge_list(capsys):
    assert main(["gen", "path", "3", "--edges"]) == 0
    assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"


def test_can_generate_powers_and_subdivisions(tmp_path):
    target = tmp_path / "k4.edges"
    assert main(["gen", "complete", "4", "--subdivide", "2", "--out", str(target)]) == 0
    g = read_graph(str(target))
    assert (g.order, g.edge_count) == (10, 12)
    target = tmp_path / "g9.g6"
    assert main(["gen", "capture-family", "9", "--power", "2", "--out", str(target)]) == 0
    assert read_graph(str(target)).edge_count > capture_family(9).edge_count


def test_unknown_family_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        main(["gen", "nope"])


def test_can_solve_a_generated_file(tmp_path, capsys):
    target = tmp_path / "petersen.g6"
    assert main(["gen", "petersen", "--out", str(target)]) == 0
    code, result = run_json(capsys, ["solve", "--graph", str(target), "--cops", "3"])
    assert code == 0
    assert result["cop_win"]
    assert result["config"]["cop_count"] == 3
    assert result["graph_hash"] == petersen().digest()


def test_can_get_cop_number(capsys):
    code, result = run_json(capsys, ["copnumber", "--graph", "cycle:4"])
    assert code == 0
    assert result == {"config": "s1-t1-k1-standard-r0", "cop_number": 2, "k_max": 4}
    code, result = run_json(capsys, ["copnumber", "--graph", "cycle:4", "--k-max", "1"])
    assert code == 0
    assert result["cop_number"] is None


def test_can_get_capture_time(capsys):
    code, result = run_json(capsys, ["capttime", "--graph", "capture-family:11", "-s", "2"])
    assert code == 0
    assert result == {"config": "s2-t2-k1-standard-r0", "capture_time": 4}


def test_capture_time_of_robber_win_is_an_input_error(capsys):
    assert main(["capttime", "--graph", "cycle:6", "-s", "2"]) == 3
    assert "error:" in capsys.readouterr().err


def test_can_get_partition(capsys):
    code, result = run_json(capsys, ["partition", "--graph", "capture-family:9", "--speed", "2"])
    assert code == 0
    assert result == {"layers": [[6, 8], [0, 1, 2, 4, 5, 7], [3]], "capture_time": 2}
    _, result = run_json(capsys, ["partition", "--graph", "complete:4"])
    assert result == {"layers": None, "capture_time": 1}
    _, result = run_json(capsys, ["partition", "--graph", "cycle:5"])
    assert result == {"layers": None, "capture_time": None}


def test_bad_graph_is_an_input_error(capsys):
    assert main(["solve", "--graph", "nope:3"]) == 3
    assert main(["solve", "--graph", "cycle:2"]) == 3


def test_budget_overrun_has_its_own_exit_code(capsys):
    assert main(["solve", "--graph", "hypercube:3", "-k", "2", "--budget", "10"]) == 2
    assert "budget" in capsys.readouterr().err


def test_unknown_claim_is_an_input_error(capsys):
    assert main(["verify", "nope", "--no-cache"]) == 3


def test_can_verify_a_claim(capsys):
    assert main(["verify", "capture_family_partition", "--no-cache", "--format", "csv"]) == 0
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert lines[0] == "claim_id,status,expected,computed,millis"
    assert lines[1].startswith("capture_family_partition,holds,")
    assert "capture_family_partition" in captured.err


def test_can_write_verify_report(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["verify", "all", "--kind", "skipped", "--no-cache", "--out", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    data = json.loads(target.read_text())
    assert all(d["status"] == "skipped(budget)" for d in data)


def test_can_list_claims(capsys):
    assert main(["claims", "--kind", "skipped"]) == 0
    out = capsys.readouterr().out
    assert "capt2_star_10" in out
    assert "capture_family_partition" not in out
    assert main(["claims", "--pattern", "torus_*"]) == 0
    assert "[stretch]" in capsys.readouterr().out


def test_can_explore_speeds(capsys):
    code, reports = run_json(capsys, ["explore-monotone", "--graph", "petersen", "--no-cache"])
    assert code == 0
    assert reports[0]["sequence"] == [3, 1]
    assert reports[0]["monotone"]


def test_can_scan_a_catalog(tmp_path, capsys):
    catalog = write_catalog(tmp_path, 3, ["Bg", "Bw", "B?"])
    code, report = run_json(capsys, ["scan", "--g6", str(catalog), "-n", "3"])
    assert code == 0
    assert report["cop_win"] == 2
    assert report["disconnected"] == 1
    assert report["max_capture_time"] == 1


def test_missing_catalog_is_an_input_error(tmp_path):
    assert main(["scan", "--g6", str(tmp_path / "missing.g6")]) == 3


def test_can_build_families():
    assert build_family("cycle", ["5"]).order == 5
    assert build_family("random", ["6", "0.5", "1"]).order == 6
    with pytest.raises(InvalidParameterError):
        build_family("nope", [])
    with pytest.raises(InvalidParameterError):
        build_family("cycle", [])
    with pytest.raises(InvalidParameterError):
        build_family("cycle", ["x"])


def test_can_load_graphs():
    assert load_graph("petersen") == petersen()
    assert load_graph("realizer:3,3,1") == sequence_realizer([3, 3, 1])
    with pytest.raises(InvalidParameterError):
        load_graph("missing.g6")


def test_can_play_as_the_robber(capsys):
    from pycops.graphs import path

    answers = iter(["x", "1", "0"])
    assert play(path(3), GameConfig(), read=lambda prompt: next(answers), use_color=False)
    out = capsys.readouterr().out
    assert "The cops win in 1 turns against best play." in out
    assert "'x' is not a vertex" in out
    assert "1 is not a legal choice" in out
    assert "Caught after 1 cop turns." in out
