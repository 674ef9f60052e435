#
# galoistrans: sound model transformation with Galois connections
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
import json

import pytest
from _util import scenario_path

import galoistrans
from galoistrans.__main__ import main

FAST = ["--budget", "2000"]


def run(capsys, *argv):
    with pytest.raises(SystemExit) as exit_info:
        main([str(arg) for arg in argv])
    captured = capsys.readouterr()
    return exit_info.value.code, captured.out, captured.err


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert out.strip() == f"galoistrans {galoistrans.__version__}."


@pytest.mark.parametrize("argv", [[], ["frobnicate"]])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_check(capsys):
    code, out, _ = run(capsys, "check", scenario_path("paper-sec4"),
                       "--laws", "galois", *FAST)
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert [r["subject"] for r in report["reports"]] == ["reliability", "topology"]


def test_check_all_laws_on_bundled_scenario(capsys):
    code, out, _ = run(capsys, "check", scenario_path("paper-sec4"), *FAST)
    assert code == 0
    report = json.loads(out)
    assert report["laws"] == "all"
    assert report["status"] == "pass", [
        (r["subject"], law["law"]) for r in report["reports"]
        for law in r["laws"] if law["status"] != "pass"
    ]
    subjects = [r["subject"] for r in report["reports"]]
    assert "phi over {t1,t2,t3}/{x,y}" in subjects


def test_check_broken_gamma(capsys):
    code, out, _ = run(capsys, "check", scenario_path("broken-gamma"),
                       "--laws", "galois", *FAST)
    assert code == 1
    assert json.loads(out)["status"] == "fail"


def test_check_capacity(capsys):
    code, out, err = run(capsys, "check", scenario_path("hasse"), "--laws",
                         "lattice", "--max-elements", 1000, *FAST)
    assert code == 1
    assert out == ""
    assert "CapacityError" in err


def test_transform(capsys):
    code, out, _ = run(capsys, "transform", scenario_path("paper-sec4"),
                       "--from", "reliable-c1", "--to", "topology", *FAST)
    assert code == 0
    report = json.loads(out)
    assert report["result"] == {"formalism": "topology", "allowed": {}}
    assert report["classification"]["kind"] == "needs-selection"


@pytest.mark.parametrize("argv", [
    ["--from", "missing", "--to", "topology"],
    ["--from", "linked", "--to", "missing"],
    ["--to", "topology"],
])
def test_transform_usage_errors(capsys, argv):
    code, _, _ = run(capsys, "transform", scenario_path("paper-sec4"),
                     *argv, *FAST)
    assert code == 2


def test_transform_broken_connection(capsys):
    argv = ["transform", scenario_path("broken-gamma"), "--from", "diagonal",
            "--to", "powerset-hull", *FAST]
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert "LawViolationError" in err
    with pytest.warns(UserWarning, match="not verified"):
        code, out, _ = run(capsys, *argv, "--no-verify")
    assert code == 0
    assert json.loads(out)["verified"] is False


def test_pipeline(capsys):
    code, out, _ = run(capsys, "pipeline", scenario_path("refinement"), *FAST)
    assert code == 0
    report = json.loads(out)
    assert report["final"]["rel"] == {"c1": ["1/2"], "c2": ["1/2"]}
    _, again, _ = run(capsys, "pipeline", scenario_path("refinement"), *FAST)
    assert again == out


def test_pipeline_failure(capsys, tmp_path):
    path = tmp_path / "bottom.json"
    path.write_text(json.dumps({
        "components": ["c1"],
        "grid_denominator": 2,
        "properties": {"rel": {"c1": []}},
        "pipeline": [{"step": "abstract"}, {"step": "select"}],
    }))
    code, out, err = run(capsys, "pipeline", path, *FAST)
    assert code == 1
    assert out == ""
    assert "Step 1" in err


def test_consistency(capsys):
    path = scenario_path("series-parallel")
    code, out, _ = run(capsys, "consistency", path)
    assert code == 1
    assert json.loads(out)["status"] == "inconsistent"
    code, out, _ = run(capsys, "consistency", path, "--models",
                       "series, dependable-lines")
    assert code == 0
    assert json.loads(out)["inputs"] == ["series", "dependable-lines"]


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", scenario_path("bound"))
    assert code == 0
    report = json.loads(out)
    assert (report["low"], report["high"], report["systems"]) == ("1/4", "1/1", 4)
    code, _, _ = run(capsys, "bound", scenario_path("refinement"))
    assert code == 2
    code, _, err = run(capsys, "bound", scenario_path("bound"),
                       "--system-budget", 3)
    assert code == 1
    assert "BudgetExceededError" in err


def test_hasse(capsys, tmp_path):
    out_file = tmp_path / "diamond.dot"
    code, out, _ = run(capsys, "hasse", scenario_path("hasse"), "--lattice",
                       "options-one-tag", "--out", out_file)
    assert code == 0
    assert out == ""
    dot = out_file.read_text(encoding="utf-8")
    assert dot.startswith('digraph "options-one-tag" {')
    code, _, _ = run(capsys, "hasse", scenario_path("hasse"), "--lattice",
                     "too-large")
    assert code == 1
    code, _, _ = run(capsys, "hasse", scenario_path("hasse"), "--lattice",
                     "missing")
    assert code == 2


def test_grid_override(capsys):
    code, out, _ = run(capsys, "bound", scenario_path("bound"), "--grid", 4)
    assert code == 0
    report = json.loads(out)
    assert report["low"] == "1/16"
    assert report["systems"] == 16


def test_unreadable_scenarios(capsys, tmp_path):
    code, _, err = run(capsys, "check", tmp_path / "missing.json")
    assert code == 2
    assert "Cannot read" in err
    broken = tmp_path / "broken.json"
    broken.write_text("[")
    code, _, _ = run(capsys, "pipeline", broken)
    assert code == 2
