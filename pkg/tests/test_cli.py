import json

import pytest

import main as cli
from src.poset import chain, fence
from src.report import CheckReport
from src.settings import EngineSettings, get_settings, update_settings
from src.workflows.verification import checklist, checklist_lines


def run(argv, capsys):
    code = cli.main(argv + ["--progress", "off"])
    out, err = capsys.readouterr()
    return code, out, err


def test_info(cli_env, poset_file, capsys):
    code, out, _ = run(["info", str(poset_file(chain(3)))], capsys)
    assert code == 0
    assert out.splitlines() == [
        "k=3 d=4 exp=+1*4 -1*3",
        "min={0} height=3",
        "bound[minimals]: d <= 5 slack=1",
        "bound[height]: d <= 4 slack=0",
    ]


def test_info_empty_poset(cli_env, capsys):
    path = cli_env / "empty.txt"
    path.write_text("points 0\n", encoding="utf-8")
    code, out, _ = run(["info", str(path)], capsys)
    assert code == 0
    assert out.splitlines() == ["k=0 d=1 exp=+1*1", "min={} height=0"]


def test_info_json(cli_env, poset_file, capsys):
    code, out, _ = run(["info", str(poset_file(fence(2))), "--format", "json"], capsys)
    assert code == 0
    info = json.loads(out)
    assert (info['k'], info['d'], info['min']) == (4, 8, [0, 2])
    assert info['exp'] == "+1*8 -1*6 -1*5 +1*4"


def test_format_from_environment(cli_env, poset_file, capsys, monkeypatch):
    monkeypatch.setenv("POSETX_FORMAT", "json")
    code, out, _ = run(["info", str(poset_file(chain(1)))], capsys)
    assert code == 0
    assert json.loads(out)['d'] == 2


def test_downsets_list(cli_env, poset_file, capsys):
    code, out, _ = run(["downsets", str(poset_file(chain(2))), "--list"], capsys)
    assert code == 0
    assert out.splitlines() == ["d=3", "{}", "{0}", "{0,1}"]


def test_downsets_list_in_mask_order(cli_env, capsys):
    path = cli_env / "n.txt"
    path.write_text("points 4\nrel 0 2\nrel 1 2\nrel 1 3\n", encoding="utf-8")
    code, out, _ = run(["downsets", str(path), "--list"], capsys)
    assert code == 0
    assert out.splitlines() == [
        "d=8", "{}", "{0}", "{1}", "{0,1}", "{0,1,2}", "{1,3}", "{0,1,3}", "{0,1,2,3}",
    ]


@pytest.mark.parametrize("algo", ["brute", "split", "antichain"])
def test_downsets_algorithms(cli_env, poset_file, capsys, algo):
    code, out, _ = run(["downsets", str(poset_file(fence(2))), "--algo", algo], capsys)
    assert code == 0
    assert out.strip() == "d=8"


def test_unknown_algorithm_is_a_usage_error(cli_env, poset_file):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["downsets", str(poset_file(chain(2))), "--algo", "magic"])
    assert excinfo.value.code == 2


def test_expo_outputs(cli_env, poset_file, capsys):
    path = str(poset_file(chain(3)))
    assert run(["expo", path], capsys)[1] == "exp=+1*4 -1*3\n"
    assert run(["expo", path, "--m", "2"], capsys)[1] == "e(2)=7\n"
    assert run(["expo", path, "--m", "2", "--sum"], capsys)[1] == "exp=+1*4 -1*3\ne(2)=7\n"


def test_expo_verify_prints_checklist(cli_env, poset_file, capsys):
    code, out, _ = run(["expo", str(poset_file(chain(2))), "--verify", "--m-max", "3"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "exp=+1*3 -1*2"
    assert "PASS expo.oracle.maps" in lines
    assert "PASS expo.recursion" in lines
    assert not any(line.startswith("FAIL") for line in lines)


def test_expo_verify_failure_exits_one(cli_env, poset_file, capsys, monkeypatch):
    def failing(P, m_max, budget=None):
        report = CheckReport("stub")
        report.add("expo.stub", False, "broken on purpose")
        return report

    monkeypatch.setattr("src.workflows.poset_commands.expo_report", failing)
    code, out, err = run(["expo", str(poset_file(chain(2))), "--verify"], capsys)
    assert code == 1
    assert "FAIL expo.stub: broken on purpose" in out
    assert "Verification failed" in err


def test_parse_error_exits_two(cli_env, capsys):
    path = cli_env / "bad.txt"
    path.write_text("points 2\nrel 0 7\n", encoding="utf-8")
    code, out, err = run(["info", str(path)], capsys)
    assert code == 2
    assert out == ""
    assert "line 2" in err


def test_cycle_exits_two(cli_env, capsys):
    path = cli_env / "cycle.txt"
    path.write_text("points 2\nrel 0 1\nrel 1 0\n", encoding="utf-8")
    assert run(["downsets", str(path)], capsys)[0] == 2


def test_missing_file_exits_two(cli_env, capsys):
    code, _, err = run(["info", str(cli_env / "missing.txt")], capsys)
    assert code == 2
    assert "not found" in err


def test_catalog_beyond_limit_exits_three(cli_env, capsys):
    code, out, err = run(["catalog", "build", "--max-k", "8"], capsys)
    assert code == 3
    assert out == ""
    assert "Budget exceeded" in err


def test_catalog_build_to_stdout(cli_env, capsys):
    code, out, _ = run(["catalog", "build", "--max-k", "2"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "posetx-catalog v1 kmax=2"
    assert len(lines) == 5


def test_catalog_file_feeds_tables(cli_env, capsys):
    path = cli_env / "catalog.tsv"
    code, out, _ = run(["catalog", "build", "--max-k", "3", "--out", str(path)], capsys)
    assert code == 0
    assert out.splitlines()[0] == "classes: 1 1 2 5"
    assert path.exists()

    code, out, _ = run(["catalog", "tables", "--max-k", "3", "--input", str(path)], capsys)
    assert code == 0
    lines = out.splitlines()
    assert "e_3(m) = +1*8 +6*6 +6*5 -6*4 -18*3 +12*2 -1*1" in lines
    assert lines[-1] == "p: 1 1 3 19 219"


def test_smaller_input_catalog_is_truncated(cli_env, capsys):
    path = cli_env / "catalog.tsv"
    run(["catalog", "build", "--max-k", "3", "--out", str(path)], capsys)
    code, out, _ = run(["catalog", "tables", "--max-k", "2", "--input", str(path)], capsys)
    assert code == 0
    assert out.splitlines()[-1] == "p: 1 1 3 19"


def test_tables_json(cli_env, capsys):
    code, out, _ = run(["catalog", "tables", "--max-k", "2", "--format", "json"], capsys)
    assert code == 0
    tables = json.loads(out)
    assert tables['p'] == [1, 1, 3, 19]
    assert tables['e_k']['1'] == "+1*2 -1*1"


def test_matrices(cli_env, capsys):
    code, out, _ = run(["catalog", "matrices", "--max-k", "1", "--m-max", "2"], capsys)
    assert code == 0
    assert out.splitlines()[:3] == ["A (2x2)", "1 1", "0 2"]


def test_checklist_collapses_tags():
    report = CheckReport("sample")
    report.add("a", True)
    report.add("b", False, "first")
    report.add("a", True)
    report.add("b", False, "second")
    report.add("c", False)
    assert checklist(report) == [("a", True, ""), ("b", False, "first"), ("c", False, "")]
    assert checklist_lines(report) == ["PASS a", "FAIL b: first", "FAIL c"]


@pytest.mark.slow
def test_catalog_verify(cli_env, capsys):
    code, out, _ = run(["catalog", "verify", "--max-k", "4", "--m-max", "6"], capsys)
    lines = out.splitlines()
    assert code == 0, [line for line in lines if line.startswith("FAIL")]
    assert lines[-1].endswith("passed, 0 failed")
    assert "PASS catalog.census.classes" in lines
    assert "PASS catalog.matrices.inverse" in lines


@pytest.mark.slow
def test_catalog_verify_five_points(cli_env, capsys):
    code, out, _ = run(["catalog", "verify", "--max-k", "5"], capsys)
    lines = out.splitlines()
    assert code == 0, [line for line in lines if line.startswith("FAIL")]
    assert "PASS expo.partition" in lines
    assert "PASS catalog.stanley.count" in lines


def test_flags_replace_engine_settings(cli_env, poset_file, capsys):
    update_settings(threads=3)
    code, _, _ = run(["info", str(poset_file(chain(2))), "--budget", "500", "--seed", "7"], capsys)
    assert code == 0
    assert get_settings() == EngineSettings(oracle_budget=500, threads=1, seed=7)
