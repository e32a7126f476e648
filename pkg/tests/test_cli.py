import json
import subprocess
import sys

import pytest

from jordan_ladder.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_chain_text(capsys):
    code, out, _ = run(capsys, "chain", "--model", "quartic", "--n", "1")
    assert code == 0 and "[3,0] 3*omega/(64*a^4*b)" in out


def test_chain_json_citations(capsys):
    code, out, _ = run(capsys, "chain", "--model", "quartic", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["n"] == 2 and doc["citations"]


def test_chain_custom(capsys):
    code, out, _ = run(capsys, "chain", "--model", "custom", "--f", "2:b,5:c5", "--n", "1", "--format", "json")
    assert code == 0 and json.loads(out)["citations"] == []


def test_chain_output_file(tmp_path, capsys):
    path = tmp_path / "c.tex"
    code, out, _ = run(capsys, "chain", "--n", "1", "--format", "latex", "-o", str(path))
    assert code == 0 and out == "" and "\\Psi_{1,1}" in path.read_text()


def test_deterministic_bytes(capsys):
    first = run(capsys, "chain", "--model", "sextic", "--n", "2", "--format", "json")[1]
    second = run(capsys, "chain", "--model", "sextic", "--n", "2", "--format", "json")[1]
    assert first == second


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--model", "cubic-quartic", "--depth", "1", "--trials", "3",
                       "--pairing-degree", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["checks"]


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--model", "quartic", "--n", "5")
    assert code == 0 and "known-typo-candidate" in out and "summary:" in out
    code, out, _ = run(capsys, "compare", "--model", "quartic", "--n", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["counts"] == {"exact-match": len(doc["entries"])}


def test_compare_missing_fixture(capsys):
    code, _, err = run(capsys, "compare", "--model", "sextic", "--n", "5")
    assert code == 2 and "no fixture" in err


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--omega1", "2", "--omega2", "1", "--g=-3/2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["valid"] and doc["a"] == "sqrt(10)/4"
    code, out, _ = run(capsys, "params", "--omega1", "2", "--omega2", "1", "--g", "1")
    assert code == 1 and "violates" in out
    code, _, _ = run(capsys, "params", "--omega1", "0", "--omega2", "0", "--g", "0")
    assert code == 2


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit):
        main(["chain", "--n", "-1"])
    with pytest.raises(SystemExit):
        main(["chain", "--model", "custom", "--n", "1"])
    with pytest.raises(SystemExit):
        main(["chain", "--model", "quartic", "--f", "2:b", "--n", "1"])
    code, _, err = run(capsys, "chain", "--model", "custom", "--f", "1:b", "--n", "1")
    assert code == 2 and "error" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "jordan_ladder", "chain", "--n", "0"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "E_n = 4*a" in res.stdout
