import json
import subprocess
import sys

import pytest

from jalpha.cli import latex_poly, main
from jalpha.poly import IntPoly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_plain(capsys):
    code, out, _ = run(capsys, "compute", "--system", "A3", "--alpha", "1,1,1")
    assert code == 0
    assert "numerator: 1+3q+q^2" in out
    assert "K: 5" in out
    assert "degree: 2" in out


def test_compute_examples(capsys):
    _, out, _ = run(capsys, "compute", "--system", "A2", "--alpha", "1,1")
    assert "numerator: 1+q\n" in out
    _, out, _ = run(capsys, "compute", "--system", "A2", "--alpha", "0,0")
    assert "numerator: 1\n" in out


@pytest.mark.parametrize("method", ["fermionic", "toda", "typea"])
def test_methods_agree(capsys, method):
    code, out, _ = run(capsys, "compute", "--system", "A3", "--alpha", "2,1,2", "--method", method, "--format", "json")
    assert code == 0
    data = json.loads(out)
    data.pop("method")
    ref_code, ref, _ = run(capsys, "compute", "--system", "A3", "--alpha", "2,1,2", "--format", "json")
    ref = json.loads(ref)
    ref.pop("method")
    assert data == ref


def test_formats(capsys):
    _, out, _ = run(capsys, "compute", "--system", "A3", "--alpha", "1,2,1", "--format", "csv")
    assert "numerator,1,3,5,3,1" in out.splitlines()
    assert "K,13/4" in out.splitlines()
    _, out, _ = run(capsys, "compute", "--system", "A2", "--alpha", "2,1", "--format", "latex")
    assert r"\begin{bmatrix} 3 \\ 2 \end{bmatrix}_{q}" in out
    assert r"K_{\alpha} = \frac{3}{4}" in out
    assert latex_poly(IntPoly([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2])) == "1+2q^{12}"


def test_output_is_deterministic(capsys):
    a = run(capsys, "compute", "--system", "G2", "--alpha", "2,2", "--format", "json")
    b = run(capsys, "compute", "--system", "G2", "--alpha", "2,2", "--format", "json")
    assert a == b


def test_usage_errors(capsys):
    assert run(capsys, "compute", "--system", "B2", "--alpha", "1,1", "--method", "toda")[0] == 1
    assert run(capsys, "compute", "--system", "X3", "--alpha", "1,1,1")[0] == 1
    assert run(capsys, "compute", "--system", "A2", "--alpha", "1,x")[0] == 1
    assert run(capsys, "compute", "--system", "A2", "--alpha", "1,1,1")[0] == 1
    assert run(capsys, "series", "--system", "B2", "--alpha", "1,1", "--oracle", "monopole")[0] == 1
    assert run(capsys, "betti", "--system", "D4", "--alpha", "1,1,1,1")[0] == 1
    assert run(capsys, "scan", "--system", "A2", "--max-coeff", "1", "--checks", "nope")[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["compute", "--system", "A2"])
    assert info.value.code == 1


def test_series(capsys):
    assert run(capsys, "series", "--system", "A1", "--alpha", "1", "--order", "3")[1] == "1,2,3,4\n"
    assert run(capsys, "series", "--system", "A1", "--alpha", "1", "--order", "3", "--oracle", "monopole")[1] == "1,2,3,4\n"
    assert run(capsys, "series", "--system", "A2", "--alpha", "0,0", "--order", "3")[1] == "1,0,0,0\n"
    code, out, _ = run(capsys, "series", "--system", "D4", "--alpha", "1,1,1,1", "--order", "6", "--compare")
    assert code == 0 and "verdict: match" in out


def test_betti(capsys):
    code, out, _ = run(capsys, "betti", "--system", "A2", "--alpha", "1,1")
    assert code == 0 and "poincare: 1+q\n" in out and "euler: 2\n" in out and "verdict: match" in out
    code, out, _ = run(capsys, "betti", "--system", "A3", "--alpha", "1,1,1")
    assert "poincare: 1+3q+q^2" in out and "euler: 5" in out
    code, out, _ = run(capsys, "betti", "--system", "A4", "--alpha", "1,1,1,1", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"] == "match"
    assert run(capsys, "betti", "--system", "A3", "--alpha", "3,3,3", "--limit", "10")[0] == 3


def test_scan(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, _, err = run(capsys, "scan", "--system", "A2", "--max-coeff", "3", "--out", str(out_file), "--cache", str(tmp_path / "c"))
    assert code == 0
    data = json.loads(out_file.read_text())
    assert sum(1 for r in data["results"] if any(r["alpha"])) == 15
    assert data["summary"]["fail"] == 0
    assert (tmp_path / "c" / "A2.json").exists()
    first = out_file.read_text()
    run(capsys, "scan", "--system", "A2", "--max-coeff", "3", "--out", str(out_file), "--cache", str(tmp_path / "c"), "--workers", "2")
    assert out_file.read_text() == first

    code, out, _ = run(capsys, "scan", "--system", "A2", "--max-coeff", "0")
    assert code == 0 and [r["alpha"] for r in json.loads(out)["results"]] == [[0, 0]]

    code, out, _ = run(capsys, "scan", "--system", "G2", "--max-coeff", "3")
    data = json.loads(out)
    assert code == 0 and data["summary"]["fail"] == 0
    assert data["findings"] and data["findings"][0]["alpha"] == [3, 3]

    assert run(capsys, "scan", "--system", "A4", "--max-coeff", "12")[0] == 3


def test_scan_reports_theorem_violation(capsys, tmp_path):
    cdir = tmp_path / "c"
    cdir.mkdir()
    bad = {"family": "A", "rank": 2, "entries": [{"alpha": [1, 1], "num": ["1", "2"], "den": ["1", "-4", "6", "-4", "1"]}]}
    (cdir / "A2.json").write_text(json.dumps(bad))
    code, out, err = run(capsys, "scan", "--system", "A2", "--max-coeff", "1", "--cache", str(cdir))
    assert code == 2
    assert "theorem violation" in err
    assert json.loads(out)["summary"]["fail"] > 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jalpha", "compute", "--system", "A1", "--alpha", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "numerator: 1" in proc.stdout
