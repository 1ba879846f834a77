import importlib.util
import json
from pathlib import Path

import numpy as np
import pytest

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_verify_identities(capsys):
    mod = load("verify_identities")
    assert mod.run(mod.parse_args(["--trials", "200", "--seeds", "4"]))
    assert capsys.readouterr().out.count("PASS") == 6


def test_hopf_fibers_link_once(tmp_path):
    mod = load("export_hopf_fibers")
    out = tmp_path / "f.csv"
    links = mod.run(mod.parse_args(["--out", str(out), "--latitudes", "-0.5", "0.5",
                                    "--per-ring", "2", "--samples", "128"]))
    assert len(links) == 6
    assert all(abs(abs(x) - 1) < 1e-2 for x in links)
    assert out.read_text().splitlines()[1] == "fiber,x,y,z"


def test_linking_number_of_unlinked_circles():
    mod = load("export_hopf_fibers")
    t = np.linspace(0, 2 * np.pi, 200, endpoint=False)
    c1 = np.stack([np.cos(t), np.sin(t), 0 * t], axis=1)
    assert mod.linking_number(c1, c1 + [5, 0, 0]) == pytest.approx(0, abs=1e-6)


def test_run_bench(tmp_path):
    mod = load("run_bench")
    out = tmp_path / "b.json"
    doc = mod.run(mod.parse_args(["--sizes", "10", "500", "--repeats", "1", "--out", str(out)]))
    assert [r["n_vectors"] for r in json.loads(out.read_text())["runs"]] == [10, 500]
    assert all(r["agreement"]["pass"] for r in doc["runs"])
