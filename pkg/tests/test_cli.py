import json
import subprocess
import sys

import numpy as np
import pytest

from lorentz_partners.cli import run_cli
from lorentz_partners.config import ENV_OVERRIDE
from lorentz_partners.export import read_csv, read_svg

HELIX = ["--curve", "timelike_helix"]


def verify(tmp_path, *extra, name="r.json"):
    out = tmp_path / name
    code = run_cli(["verify", *HELIX, "--out", str(out), *extra])
    return code, json.loads(out.read_text())


@pytest.mark.parametrize("args", [
    ["--kind", "evolute", "--case", "i"],
    ["--kind", "mannheim", "--case", "i"],
    ["--kind", "bertrand", "--case", "i"],
    ["--kind", "bertrand", "--case", "i", "--theta", "0.7"],
])
def test_verify_passes(args, tmp_path):
    code, rep = verify(tmp_path, *args)
    assert code == 0 and rep["pass"] is True
    assert rep["schema_version"] == "1"
    assert rep["theorems"] and all(t["pass"] for t in rep["theorems"])
    for c in rep["checks"]:
        assert set(c) == {"id", "paper_ref", "max_residual", "tolerance", "pass", "notes"}


def test_corrupt_frame_fails(tmp_path):
    code, rep = verify(tmp_path, "--kind", "evolute", "--case", "i", "--inject-corrupt-frame")
    assert code == 1 and rep["pass"] is False
    row1 = next(c for c in rep["checks"] if c["id"] == "frenet_eq_row1")
    assert row1["pass"] is False


def test_exit_code_tracks_report(tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_OVERRIDE, json.dumps({"frenet": 1e-30}))
    code, rep = verify(tmp_path, "--kind", "evolute", "--case", "i")
    assert code == 1 and rep["pass"] is False
    assert rep["config"]["tolerances"]["frenet"] == 1e-30


@pytest.mark.parametrize("argv,code", [
    (["frenet", "--curve", "nope"], 2),
    (["frenet", "--curve", "straight_line"], 3),
    (["partner", *HELIX, "--kind", "evolute", "--case", "iii"], 2),
    (["frenet", *HELIX, "--n", "10"], 2),
    (["frenet", *HELIX, "--param", "a"], 2),
    (["frenet", *HELIX, "--param", "b=0.5"], 2),
    (["bogus"], 2),
    (["plot", *HELIX, "--plane", "x9x9"], 2),
])
def test_exit_codes(argv, code, capsys):
    assert run_cli(argv) == code
    assert "error" in capsys.readouterr().err


def test_bad_override_is_usage_error(monkeypatch, capsys):
    monkeypatch.setenv(ENV_OVERRIDE, "{broken")
    assert run_cli(["frenet", *HELIX, "--n", "16"]) == 2


def test_unwritable_out(tmp_path):
    assert run_cli(["frenet", *HELIX, "--n", "16", "--out", str(tmp_path / "no" / "a.csv")]) == 3
    assert run_cli(["verify", *HELIX, "--out", str(tmp_path / "no" / "r.json")]) == 3


def test_frenet_stdout_round_trip(tmp_path, capsys):
    assert run_cli(["frenet", *HELIX, "--n", "16"]) == 0
    text = capsys.readouterr().out
    p = tmp_path / "a.csv"
    p.write_text(text)
    assert len(read_csv(p)["s"]) == 17


def test_partner_writes_both_curves(tmp_path):
    assert run_cli(["partner", *HELIX, "--kind", "mannheim", "--case", "i", "--c0", "0.3",
                    "--out", str(tmp_path)]) == 0
    a, b = read_csv(tmp_path / "alpha.csv"), read_csv(tmp_path / "beta.csv")
    assert np.array_equal(a["s"], b["s"])
    # case i: X = -cosh(psi) T + sinh(psi) N is timelike
    assert np.all(b["eps_T"] == -1)


def test_classify(tmp_path):
    out = tmp_path / "c.json"
    assert run_cli(["classify", "--curve", "intrinsic_nonhelix", "--out", str(out)]) == 0
    v = json.loads(out.read_text())["verdicts"]
    assert v["helix"] is False and v["plane"] is False


def test_plot(tmp_path):
    out = tmp_path / "p.svg"
    assert run_cli(["plot", *HELIX, "--kind", "evolute", "--case", "i", "--out", str(out)]) == 0
    assert len(read_svg(out)) == 2


def test_catalog(capsys):
    assert run_cli(["catalog"]) == 0
    names = {e["name"] for e in json.loads(capsys.readouterr().out)}
    assert {"timelike_helix", "timelike_planar", "spacelike_helix_type1", "spacelike_helix_type2",
            "spacelike_planar", "intrinsic_nonhelix"} <= names


def test_module_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "lorentz_partners.cli", "frenet", "--curve", "nope"],
                       capture_output=True, text=True)
    assert r.returncode == 2 and "UnknownCurveError" in r.stderr
