import json
import subprocess
import sys
from pathlib import Path

import pytest

from deodhar import build_system, enumerate_elements
from deodhar.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from deodhar.kl import MuReport, kl_recursive

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def strip_footer(text):
    return "".join(line for line in text.splitlines(keepends=True) if not line.startswith("# elapsed"))


def test_kl_examples(capsys):
    assert run(capsys, "kl", "--type", "A", "--rank", "3", "--w", "3 4 1 2", "--x", "id")[:2] == (EXIT_OK, "1 + q\n")
    assert run(capsys, "kl", "--type", "A", "--rank", "3", "--w", "3 4 1 2", "--x", "3 4 1 2")[1] == "1\n"
    code, out, _ = run(capsys, "kl", "--type", "D", "--rank", "4", "--w", "-3 -4 -2 -1", "--x", "id", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["polynomial"] == "1 + q" and doc["route"] == "recursion"


def test_kl_methods_agree(capsys):
    args = ["kl", "--type", "A", "--rank", "3", "--w-word", "2 1 3 2", "--x-word", "2"]
    assert run(capsys, *args, "--method", "masks")[1] == run(capsys, *args, "--method", "recursion")[1] == "1 + q\n"


def test_kl_is_a_thin_wrapper(capsys):
    A3 = build_system("A", 3)
    w = A3.element([4, 2, 3, 1])
    for x in enumerate_elements(A3):
        text = " ".join(map(str, x.one_line))
        out = run(capsys, "kl", "--type", "A", "--rank", "3", "--w", "4 2 3 1", "--x", text)[1]
        assert out == f"{kl_recursive(x, w)}\n"


def test_mu_and_deodhar(capsys):
    assert run(capsys, "mu", "--type", "A", "--rank", "3", "--w", "3 4 1 2", "--x-word", "2")[1] == "1\n"
    assert run(capsys, "deodhar", "--type", "A", "--rank", "2", "--w", "3 2 1")[1] == "not deodhar\n"
    code, out, _ = run(capsys, "deodhar", "--type", "A", "--rank", "2")
    assert code == EXIT_OK and out == (DATA / "deodhar_A2.txt").read_text()


def test_verify01_text_golden(capsys):
    code, out, _ = run(capsys, "verify01", "--type", "A", "--rank", "3")
    assert code == EXIT_OK
    assert strip_footer(out) == (DATA / "verify01_A3.txt").read_text()
    assert "deodhar=14 violations=0 PASS" in out


def test_verify01_json_golden(capsys):
    code, out, _ = run(capsys, "verify01", "--type", "G", "--rank", "2", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == json.loads((DATA / "verify01_G2.json").read_text())


def test_verify01_jobs_do_not_change_output(capsys):
    serial = run(capsys, "verify01", "--type", "A", "--rank", "4", "--format", "json")[1]
    parallel = run(capsys, "verify01", "--type", "A", "--rank", "4", "--format", "json", "--jobs", "2")[1]
    assert serial == parallel


def test_verify01_refuses_long_runs(capsys):
    code, _, err = run(capsys, "verify01", "--type", "E", "--rank", "8")
    assert code == EXIT_USAGE and "--force-long" in err


def test_verify01_fail_exit_code(capsys, monkeypatch):
    import deodhar.cli as cli

    def fake(system, **kw):
        return MuReport(system=system.name, deodhar_only=True, violations=[("x", "w", 2, 2)])

    monkeypatch.setattr(cli, "verify_zero_one", fake)
    code, out, _ = run(capsys, "verify01", "--type", "A", "--rank", "2")
    assert code == EXIT_FAIL and "FAIL" in out


def test_heap_goldens(capsys):
    out = run(capsys, "heap", "--type", "A", "--rank", "5", "--word", "1 4 2 3 5")[1]
    assert out == (DATA / "cli_heap_14235.txt").read_text()
    out = run(capsys, "heap", "--type", "A", "--rank", "3", "--word", "2 1 3 2", "--mask", "1000",
              "--defect-graph", "--strings")[1]
    assert out == (DATA / "cli_heap_2132.txt").read_text()
    grid = "".join(out.splitlines()[:3])
    assert grid.count("D") == 1 and grid.count("o") == 2 and "v={4}, e={}" in out


def test_heap_json(capsys):
    out = run(capsys, "heap", "--type", "A", "--rank", "3", "--word", "1 2 1", "--strings", "--format", "json")[1]
    doc = json.loads(out)
    assert doc["top"] == [3, 2, 1, 4] and doc["bottom"] == [1, 2, 3, 4]
    assert [e["level"] for e in doc["entries"]] == [1, 2, 3]


def test_mumasks(capsys):
    out = run(capsys, "mumasks", "--type", "A", "--rank", "3", "--word", "2 1 3 2", "--x-word", "2")[1]
    assert out == "1000\nmu=1\n"


@pytest.mark.parametrize("argv", [
    ["heap", "--type", "A", "--rank", "3", "--word", "1 2 1", "--mask", "11"],
    ["kl", "--type", "A", "--rank", "3", "--w", "3 4 x 2"],
    ["kl", "--type", "A", "--rank", "3", "--w", "1 1 2 3"],
    ["kl", "--type", "E", "--rank", "9", "--w", "id"],
    ["kl", "--type", "A", "--rank", "3"],
    ["kl", "--type", "A", "--rank", "3", "--w-word", "1 1"],
    ["verify01", "--type", "A", "--rank", "2", "--jobs", "0"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err.startswith("error:")


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["nope"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "deodhar", "kl", "--type", "A", "--rank", "2", "--w", "3 2 1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "1\n"
