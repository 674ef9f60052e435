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
import itertools
import random

import pytest
from _util import scenario_path

import galoistrans.domains as domains
import galoistrans.io as gio
import galoistrans.pipeline as pipeline
from galoistrans.config import Config
from galoistrans.galois import LawViolationError
from galoistrans.lattice import CapacityError
from galoistrans.scenario import Scenario
from galoistrans.scenario import ScenarioError


@pytest.fixture
def config():
    return Config(budget=2000)


def load(name):
    return Scenario.load(scenario_path(name))


@pytest.fixture(scope="module")
def worked():
    return load("paper-sec4")


@pytest.mark.parametrize("laws", ["galois", "correctness", "homomorphism"])
def test_check_worked_scenario(worked, config, laws):
    report = pipeline.run_check(worked, laws, config)
    assert report["status"] == "pass"
    assert report["command"] == "check"
    assert report["laws"] == laws
    assert all(r["status"] == "pass" for r in report["reports"])


def test_check_worked_lattices(worked, config):
    report = pipeline.run_check(worked, "lattice", config)
    assert report["status"] == "pass"
    assert len(report["reports"]) == 1 + len(worked.lattices)


def test_check_unknown_suite(worked, config):
    with pytest.raises(ValueError):
        pipeline.run_check(worked, "everything", config)


@pytest.mark.parametrize("laws", ["galois", "correctness"])
def test_check_broken_gamma(config, laws):
    report = pipeline.run_check(load("broken-gamma"), laws, config)
    assert report["status"] == "fail"


def test_check_broken_gamma_names_model_pair(config):
    report = pipeline.run_check(load("broken-gamma"), "galois", config)
    (hull,) = report["reports"]
    laws = {law["law"]: law for law in hull["laws"]}
    named = laws["gamma preserves meets of named models"]
    assert named["status"] == "fail"
    assert named["witness"]["models"] == ["anti-diagonal", "diagonal"]
    assert laws["gamma is completely multiplicative"]["status"] == "fail"


def test_check_single_models_add_no_pair_law(worked, config):
    report = pipeline.run_check(worked, "galois", config)
    for subject in report["reports"]:
        assert "gamma preserves meets of named models" not in [
            law["law"] for law in subject["laws"]
        ]


def test_check_capacity(config):
    scenario = load("hasse")
    with pytest.raises(CapacityError):
        pipeline.run_check(scenario, "lattice", Config(budget=2000,
                                                       max_elements=1000))


def test_transform_needs_selection(worked, config):
    report = pipeline.run_transform(worked, "reliable-c1", "topology", config)
    assert report["result"] == {"formalism": "topology", "allowed": {}}
    assert report["classification"] == {"kind": "needs-selection"}
    assert report["from"]["element"] == {
        "formalism": "reliability",
        "allowed": {"c1": ["1/1"]},
    }
    assert report["verified"]


def _tiny(**extra):
    data = {
        "name": "tiny",
        "components": ["c1"],
        "nodes": ["a", "b"],
        "grid_denominator": 1,
        "formalisms": ["reliability"],
        "models": {
            "open": {"formalism": "reliability", "allowed": {}},
            "contradiction": {"formalism": "reliability", "allowed": {"c1": []}},
        },
    }
    data.update(extra)
    return Scenario.from_dict(data)


def test_transform_classification(config):
    scenario = _tiny()
    singleton = pipeline.run_transform(scenario, "open", "reliability", config)
    assert singleton["classification"] == {
        "kind": "singleton",
        "model": {"c1": "1/1"},
    }
    bottom = pipeline.run_transform(scenario, "contradiction", "reliability",
                                    config)
    assert bottom["classification"]["kind"] == "bottom"
    assert bottom["result"]["allowed"] == {"c1": []}
    lifted = pipeline.run_transform(scenario, "open", "topology", config)
    assert lifted["classification"]["kind"] == "needs-selection"


def test_transform_errors(worked, config):
    with pytest.raises(ScenarioError):
        pipeline.run_transform(worked, "missing", "topology", config)
    with pytest.raises(ScenarioError):
        pipeline.run_transform(worked, "linked", "missing", config)


def test_transform_rejects_broken_connection(config):
    scenario = load("broken-gamma")
    with pytest.raises(LawViolationError):
        pipeline.run_transform(scenario, "diagonal", "powerset-hull", config)
    with pytest.warns(UserWarning, match="not verified"):
        report = pipeline.run_transform(scenario,
                                        "diagonal",
                                        "powerset-hull",
                                        config,
                                        verify=False)
    assert report["verified"] is False
    assert len(report["result"]["assignments"]) == 4


def test_refinement_pipeline(config):
    report = pipeline.run_pipeline(load("refinement"), config)
    assert report["final"] == {
        "rel": {"c1": ["1/2"], "c2": ["1/2"]},
        "topo": {},
    }
    assert [step["step"] for step in report["trace"]
           ] == ["abstract", "select", "refine"]
    assert [(step["systems"]["before"], step["systems"]["after"])
            for step in report["trace"]] == [(8, 8), (8, 8), (8, 2)]
    assert report["trace"][1]["chosen"] == {"c1": "1/2", "c2": "1/2"}
    assert report["trace"][1]["selector"] == "canonical-least"
    assert not report["inconsistent"]


def test_series_parallel_pipeline(config):
    report = pipeline.run_pipeline(load("series-parallel"), config)
    assert report["inconsistent"]
    meet, conflict, consistency = report["trace"]
    assert meet["systems"] == {"before": 64, "after": 8}
    assert conflict["systems"]["after"] == 0
    assert consistency["consistent"] is False
    assert consistency["conflicts"] == [{
        "part": "topo",
        "tag": "a-c",
        "assigned": {"series": ["absent"], "parallel": ["present"]},
    }]
    assert consistency["drop_restores_consistency"] == {
        "series": True,
        "parallel": True,
        "dependable-lines": False,
    }


def test_select_from_bottom(config):
    scenario = _tiny(properties={"rel": {"c1": []}},
                     pipeline=[{"step": "abstract"}, {"step": "select"}])
    with pytest.raises(pipeline.PipelineError) as error:
        pipeline.run_pipeline(scenario, config)
    assert error.value.index == 1
    assert len(error.value.trace) == 1
    assert "Step 1" in str(error.value)


@pytest.mark.parametrize("steps", [
    [{"step": "select"}],
    [{"step": "abstract"}, {"step": "refine"}],
    [{"step": "abstract"}, {"step": "select", "selector": "system"}],
])
def test_pipeline_step_errors(config, steps):
    with pytest.raises(pipeline.PipelineError):
        pipeline.run_pipeline(_tiny(pipeline=steps), config)


def test_pipeline_explicit_and_system_selection(config):
    system = {"reliability": {"c1": "1/2", "c2": "1"}, "lines": ["c1-c2"]}
    for selector, chosen in (
        ("system", {"c1": "1/2", "c2": "1/1"}),
        ({"explicit": {"c1": "1", "c2": "1/2"}}, {"c1": "1/1", "c2": "1/2"}),
    ):
        scenario = Scenario.from_dict({
            "components": ["c1", "c2"],
            "grid_denominator": 2,
            "selector": selector,
            "system": system,
            "pipeline": [{"step": "abstract"}, {"step": "select"}],
        })
        report = pipeline.run_pipeline(scenario, config)
        assert report["trace"][1]["chosen"] == chosen
        assert report["final"]["rel"] == {
            tag: [value] for tag, value in chosen.items()
        }


def test_pipeline_without_verification_warns(config):
    with pytest.warns(UserWarning, match="not verified"):
        report = pipeline.run_pipeline(load("refinement"), config, verify=False)
    assert report["final"]["rel"] == {"c1": ["1/2"], "c2": ["1/2"]}


def test_pipeline_makes_properties_more_specific(config):
    scenario = load("refinement")
    scenario.pipeline = [{"step": "abstract"}, {"step": "select"}]
    P = scenario.lattice
    f = scenario.formalism("reliability")
    rng = random.Random(0)
    candidates = [p for p in P.elements if not domains.is_inconsistent(p)]
    for p in rng.sample(candidates, 20):
        scenario.properties = p
        report = pipeline.run_pipeline(scenario, config)
        final = gio.decode_properties(report["final"], scenario.universe)
        assert P.leq(final, p)
        models = list(itertools.islice(f.models.members(f.alpha(p)), 2))
        assert (final != p) == (len(models) > 1)


def test_consistency(config):
    scenario = load("series-parallel")
    report = pipeline.run_consistency(scenario)
    assert report["status"] == "inconsistent"
    assert report["inputs"] == ["series", "parallel", "dependable-lines"]
    fine = pipeline.run_consistency(scenario, ["series", "dependable-lines"])
    assert fine["status"] == "consistent"
    assert fine["conflicts"] == []
    assert fine["meet"]["topo"] == {
        "a-b": ["present"],
        "a-c": ["absent"],
        "b-c": ["present"],
    }
    with pytest.raises(ScenarioError):
        pipeline.run_consistency(scenario, ["series", "missing"])


def test_bound(config):
    report = pipeline.run_bound(load("bound"), None, None, config)
    assert (report["low"], report["high"]) == ("1/4", "1/1")
    assert report["systems"] == 4
    assert (report["source"], report["sink"]) == ("a", "c")
    swapped = pipeline.run_bound(load("bound"), "c", "a", config)
    assert (swapped["low"], swapped["high"]) == ("1/4", "1/1")
    with pytest.raises(ScenarioError):
        pipeline.run_bound(load("refinement"), None, None, config)
    with pytest.raises(domains.BudgetExceededError):
        pipeline.run_bound(load("bound"), None, None,
                           Config(system_budget=3))


def test_hasse(config):
    scenario = load("hasse")
    dot = pipeline.run_hasse(scenario, "options-one-tag", config)
    assert dot.startswith('digraph "options-one-tag" {')
    assert dot.count(" -> ") == 4
    assert pipeline.run_hasse(scenario, "options-one-tag", config) == dot
    with pytest.raises(CapacityError):
        pipeline.run_hasse(scenario, "too-large", config)
    with pytest.raises(ScenarioError):
        pipeline.run_hasse(scenario, "missing", config)


def test_empty_pipeline(config):
    scenario = load("bound")
    report = pipeline.run_pipeline(scenario, config)
    assert report["trace"] == []
    assert report["final"] == report["initial"]
