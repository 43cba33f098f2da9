import json
import subprocess
import sys

import pytest

from bezoutlab.cli import main, run


def _ok(argv):
    code, out = run(argv)
    assert code == 0, out
    return json.loads(out)


def test_bezout_output():
    out = _ok(["bezout", "--ring", "Z", "12", "18"])
    assert (out["d"], out["p"], out["q"], out["a0"], out["b0"]) == ("6", "-1", "1", "2", "3")
    assert out["status"] == "ok"


def test_json_input_files(tmp_path):
    f = tmp_path / "A.json"
    f.write_text(json.dumps({"ring": "Z", "rows": [[2, 4], [6, 8]]}))
    assert _ok(["snf", "--json", str(f), "--check"])["diagonal"] == ["2", "4"]
    g = tmp_path / "args.json"
    g.write_text(json.dumps({"ring": "Z/6", "args": ["2", "3"]}))
    assert _ok(["ssr1", "--json", str(g)])["witness"] == "1"


def test_check_passes_on_every_command():
    cases = [
        ["sr2", "--ring", "Z", "6", "10", "15"],
        ["neat", "--ring", "Z/12", "4"],
        ["neat-shift", "--ring", "Z", "4", "3"],
        ["prop5-backward", "--ring", "Z/6", "2", "3", "5", "2", "1", "1"],
        ["toeplitz-snf", "--ring", "GF(3)[x]", "[[\"x\", \"1\"], [\"0\", \"x^2\"]]"],
        ["verify", "--ring", "Z/6", "THM10"],
    ]
    for argv in cases:
        assert _ok(argv + ["--check"])["check"] == "passed", argv


def test_tampered_certificate_is_rejected(tmp_path):
    out = _ok(["bezout", "--ring", "Z", "12", "18"])
    out["p"] = "2"
    f = tmp_path / "cert.json"
    f.write_text(json.dumps(out))
    code, text = run(["bezout", "--certificate", str(f), "--check"])
    assert code == 1 and json.loads(text)["error_code"] == "CertificateMismatch"


def test_domain_errors_exit_1():
    code, text = run(["sr1", "--ring", "Z", "2", "4"])
    assert code == 1 and json.loads(text)["error_code"] == "NotCoprime"
    code, text = run(["bezout", "--ring", "GF(4)[x]", "1", "1"])
    assert code == 1 and json.loads(text)["error_code"] == "NotPrime"
    code, text = run(["bezout", "--ring", "Z/6", "1/2", "1"])
    assert code == 1 and json.loads(text)["error_code"] == "RingMismatch"
    code, text = run(["classify", "--ring", "Z"])
    assert code == 1 and json.loads(text)["error_code"] == "InfiniteRing"


def test_usage_errors_exit_2(capsys):
    for argv in (["bezout", "--ring", "Z", "1"], ["nonsense"], ["verify", "--ring", "Z/6", "X"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bezoutlab", "ssr1", "--ring", "Z/6", "2", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["witness"] == "1"
