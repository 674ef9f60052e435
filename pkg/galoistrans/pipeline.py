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
"""Operations of the command line interface, run on a loaded scenario.

Every ``run_*`` function returns a JSON-serializable report. Reports carry the
schema version and never contain timings unless ``timing`` is requested, so
repeated runs produce identical output.
"""

import itertools
import warnings
from typing import Any, Callable, Dict, List, Optional, Sequence

import literate_dataclasses as dataclasses

import galoistrans.galois as galois
import galoistrans.io as gio
from galoistrans.config import Config
from galoistrans.domains.consistency import consistency_check
from galoistrans.domains.formalisms import Formalism
from galoistrans.domains.properties import PropertiesElement
from galoistrans.domains.properties import count_systems
from galoistrans.domains.properties import is_inconsistent
from galoistrans.domains.properties import properties_relation
from galoistrans.domains.reliability import reliability_bound
from galoistrans.galois.connection import LawViolationError
from galoistrans.galois.connection import check_transform_soundness
from galoistrans.galois.connection import induced_relation
from galoistrans.galois.connection import transform
from galoistrans.galois.relation import check_correctness_relation
from galoistrans.galois.selection import SelectionOperator
from galoistrans.galois.selection import refine
from galoistrans.galois.selection import select
from galoistrans.lattice.laws import Cases
from galoistrans.lattice.laws import Law
from galoistrans.lattice.laws import LawReport
from galoistrans.lattice.laws import check_lattice_laws
from galoistrans.lattice.laws import check_laws
from galoistrans.scenario import Scenario
from galoistrans.scenario import ScenarioError
from galoistrans.tagopts.hasse import hasse_export
from galoistrans.tagopts.homomorphism import check_homomorphism

LAW_SUITES = ("lattice", "galois", "correctness", "homomorphism", "all")

NO_VERIFY_WARNING = (
    "Connections are not verified (--no-verify); soundness of the result is "
    "not claimed.")


class PipelineError(RuntimeError):
    """A pipeline step failed.

    Attributes:
        index: Position of the failed step.
        trace: The steps completed before the failure.
    """

    def __init__(self, message: str, index: int, trace: List[Dict[str, Any]]):
        super().__init__(f"Step {index}: {message}")
        self.index = index
        self.trace = trace


def _header(command: str, scenario: Scenario) -> Dict[str, Any]:
    return {
        "schema_version": gio.SCHEMA_VERSION,
        "command": command,
        "scenario": scenario.name,
    }


def _failed_report(subject: str, error: LawViolationError,
                   timing: bool) -> Dict[str, Any]:
    report = error.report.to_dict(timing)
    report["subject"] = subject
    report["error"] = str(error)
    return report


def _lattice_reports(scenario: Scenario, config: Config) -> List[LawReport]:
    budget = config.budget_for_laws()
    lattices = [scenario.lattice] + list(scenario.lattices.values())
    return [check_lattice_laws(L, budget) for L in lattices]


def _named_model_law(scenario: Scenario, f: Formalism) -> Optional[Law]:
    """Meet preservation of gamma on the pairs of named models of ``f``."""
    named = sorted(name for name, (owner, _) in scenario.models.items()
                   if owner == f.name)
    if len(named) < 2:
        return None
    P, M = f.properties, f.abstract

    def preserves_meet(pair):
        (n1, m1), (n2, m2) = pair
        meet_of_gamma = P.meet(f.gamma(m1), f.gamma(m2))
        gamma_of_meet = f.gamma(M.meet(m1, m2))
        if meet_of_gamma != gamma_of_meet:
            return {
                "models": [n1, n2],
                "gamma_of_meet": str(gamma_of_meet),
                "meet_of_gamma": str(meet_of_gamma),
                "relation": "γ(m1 ⊓ m2) = γ(m1) ⊓ γ(m2)",
            }

    elements = [(name, scenario.models[name][1]) for name in named]
    return Law("gamma preserves meets of named models",
               Cases.of(list(itertools.combinations(elements, 2))),
               preserves_meet)


def _galois_reports(scenario: Scenario, config: Config) -> List[LawReport]:
    budget = config.budget_for_laws()
    reports = []
    for f in scenario.formalisms.values():
        report = f.connection.verify(budget)
        law = _named_model_law(scenario, f)
        if law is not None:
            report = report.merge(check_laws(report.subject, [law], budget))
        reports.append(report)
    return reports


def _correctness_reports(scenario: Scenario, config: Config,
                         timing: bool) -> List[Dict[str, Any]]:
    budget = config.budget_for_laws()
    base = properties_relation(scenario.universe)
    reports = [check_correctness_relation(base, budget).to_dict(timing)]
    formalisms = list(scenario.formalisms.values())
    for f in formalisms:
        try:
            induced = induced_relation(f.connection, base, budget)
        except LawViolationError as e:
            reports.append(_failed_report(f"{base.name} induced by {f.name}", e,
                                          timing))
            continue
        reports.append(check_correctness_relation(induced, budget).to_dict(timing))
    for f1, f2 in itertools.product(formalisms, repeat=2):
        try:
            report = check_transform_soundness(f1.connection, f2.connection,
                                               base, budget)
        except LawViolationError as e:
            reports.append(_failed_report(f"transform {f1.name} → {f2.name}", e,
                                          timing))
            continue
        reports.append(report.to_dict(timing))
    return reports


def _homomorphism_reports(scenario: Scenario, config: Config) -> List[LawReport]:
    section = scenario.homomorphism or {
        "tags": list(scenario.universe.components.tags),
        "options": list(scenario.universe.grid_values),
    }
    return [
        check_homomorphism(section["tags"], section["options"],
                           config.budget_for_laws())
    ]


def run_check(scenario: Scenario, laws: str, config: Config) -> Dict[str, Any]:
    """Run the selected law suites.

    Args:
        scenario: The loaded scenario.
        laws: One of ``lattice``, ``galois``, ``correctness``,
            ``homomorphism`` or ``all``.
        config: Budgets and output options.

    Returns:
        A report whose ``status`` is ``pass`` iff every law passed.

    Raises:
        CapacityError: If a lattice is too large to check.
    """
    if laws not in LAW_SUITES:
        raise ValueError(f"Unknown law suite {laws!r}; choose one of {LAW_SUITES}.")
    suites = LAW_SUITES[:-1] if laws == "all" else (laws,)
    timing = config.timing
    reports = []
    for suite in suites:
        if suite == "lattice":
            reports += [r.to_dict(timing) for r in _lattice_reports(scenario, config)]
        elif suite == "galois":
            reports += [r.to_dict(timing) for r in _galois_reports(scenario, config)]
        elif suite == "correctness":
            reports += _correctness_reports(scenario, config, timing)
        elif suite == "homomorphism":
            reports += [
                r.to_dict(timing) for r in _homomorphism_reports(scenario, config)
            ]
    result = _header("check", scenario)
    result["laws"] = laws
    result["status"] = ("pass" if all(r["status"] == "pass" for r in reports)
                        else "fail")
    result["reports"] = reports
    return result


def _classify(f: Formalism, element) -> Dict[str, Any]:
    members = list(itertools.islice(f.models.members(element), 2))
    if len(members) == 0:
        return {
            "kind": "bottom",
            "message": "The target formalism cannot reason about the given "
                       "system constraints.",
        }
    if len(members) == 1:
        return {"kind": "singleton", "model": gio.encode_model(members[0])}
    return {"kind": "needs-selection"}


def _verify_flag(verify: bool):
    if not verify:
        warnings.warn(NO_VERIFY_WARNING, UserWarning)


def run_transform(scenario: Scenario, model: str, target: str,
                  config: Config, verify: bool = True) -> Dict[str, Any]:
    """Transform the named model into the formalism ``target``.

    Raises:
        ScenarioError: If the model or formalism is unknown.
        LawViolationError: If ``verify`` is set and a connection fails its laws.
    """
    _verify_flag(verify)
    source, element = scenario.model(model)
    try:
        f2 = scenario.formalism(target)
    except ValueError as e:
        raise ScenarioError(str(e)) from e
    result = transform(source.connection, f2.connection, element,
                       verify=verify, budget=config.budget_for_laws())
    report = _header("transform", scenario)
    report.update({
        "from": {"model": model, "element": gio.encode_element(source, element)},
        "to": target,
        "result": gio.encode_element(f2, result),
        "classification": _classify(f2, result),
        "verified": verify,
    })
    return report


def run_consistency(scenario: Scenario,
                    models: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    """Check the named models (all by default) for consistency."""
    names = list(scenario.models) if models is None else list(models)
    inputs = []
    for name in names:
        f, element = scenario.model(name)
        inputs.append((f.name, element))
    report = consistency_check(inputs, scenario.universe, names=names,
                               formalisms=scenario.formalisms)
    result = _header("consistency", scenario)
    result.update(report.to_dict(render=gio.encode_properties))
    result["status"] = "consistent" if report.consistent else "inconsistent"
    return result


def _endpoints(scenario: Scenario, source: Optional[str], sink: Optional[str]):
    source = source or scenario.bound.get("source")
    sink = sink or scenario.bound.get("sink")
    if source is None or sink is None:
        raise ScenarioError("Give a source and a sink node, on the command line "
                            "or in the 'bound' section of the scenario.")
    return source, sink


def _bound(p: PropertiesElement, scenario: Scenario, source: str, sink: str,
           config: Config) -> Dict[str, Any]:
    bound = reliability_bound(p, source, sink, scenario.universe,
                              budget=config.system_budget,
                              max_edges=config.max_edges)
    return {"source": source, "sink": sink, **bound.to_dict()}


def run_bound(scenario: Scenario, source: Optional[str], sink: Optional[str],
              config: Config) -> Dict[str, Any]:
    """Bound the reliability between two nodes over the scenario's properties.

    Raises:
        InconsistentPropertiesError: If the properties are inconsistent.
        BudgetExceededError: If too many systems are described.
    """
    source, sink = _endpoints(scenario, source, sink)
    report = _header("bound", scenario)
    report["properties"] = gio.encode_properties(scenario.properties)
    report.update(_bound(scenario.properties, scenario, source, sink, config))
    return report


def run_hasse(scenario: Scenario, name: str, config: Config) -> str:
    """The DOT text of the Hasse diagram of a scenario lattice.

    Raises:
        CapacityError: If the lattice is larger than ``hasse_max_elements``.
    """
    L = scenario.named_lattice(name)
    return hasse_export(L, max_elements=config.hasse_max_elements, title=name)


@dataclasses.dataclass
class PipelineState:
    """What a running pipeline carries from one step to the next."""

    properties: PropertiesElement = dataclasses.field(
        default=None, doc="""The current properties.""")
    formalism: Optional[Formalism] = dataclasses.field(
        default=None, doc="""Formalism of the current model.""")
    element: Any = dataclasses.field(
        default=None, doc="""The current abstract element.""")
    chosen: Any = dataclasses.field(
        default=None, doc="""The model chosen by the last selection.""")


def make_selector(spec, f: Formalism,
                  system=None) -> SelectionOperator:
    """Instantiate a selection strategy from its scenario form."""
    if isinstance(spec, dict):
        return galois.init("explicit", f.models,
                           gio.decode_model(f, spec["explicit"]))
    if spec == "system":
        if system is None:
            raise ScenarioError("The 'system' selector needs a 'system' section.")
        return galois.init("system", f.models, f.model_of, system)
    return galois.init(spec, f.models)


def _require_model(state: PipelineState):
    if state.formalism is None:
        raise ScenarioError(
            "No current model; run an 'abstract' or 'transform' step first.")


def _step_abstract(scenario, state, step, config, verify):
    f = scenario.formalism(step.get("formalism", "reliability"))
    if verify:
        f.connection.require_laws(config.budget_for_laws())
    state.formalism, state.element = f, f.alpha(state.properties)
    return {"formalism": f.name, "model": gio.encode_element(f, state.element)}


def _step_transform(scenario, state, step, config, verify):
    if "from" in step:
        state.formalism, state.element = scenario.model(step["from"])
    _require_model(state)
    f2 = scenario.formalism(step["to"])
    result = transform(state.formalism.connection, f2.connection, state.element,
                       verify=verify, budget=config.budget_for_laws())
    info = {
        "from": state.formalism.name,
        "to": f2.name,
        "model": gio.encode_element(f2, result),
        "classification": _classify(f2, result),
    }
    state.formalism, state.element = f2, result
    return info


def _refine(scenario, state):
    state.properties = refine(state.properties, state.formalism.connection,
                              state.chosen)


def _step_select(scenario, state, step, config, verify):
    _require_model(state)
    spec = step.get("selector", scenario.selector)
    sel = make_selector(spec, state.formalism, scenario.system)
    state.chosen = select(sel, state.element)
    info = {"selector": sel.name, "chosen": gio.encode_model(state.chosen)}
    if step.get("refine", True):
        _refine(scenario, state)
    return info


def _step_refine(scenario, state, step, config, verify):
    _require_model(state)
    if "model" in step:
        state.chosen = gio.decode_model(state.formalism, step["model"])
    if state.chosen is None:
        raise ScenarioError("Nothing to refine with; run a 'select' step first.")
    _refine(scenario, state)
    return {"chosen": gio.encode_model(state.chosen)}


def _step_meet(scenario, state, step, config, verify):
    if "model" in step:
        f, element = scenario.model(step["model"])
        other = f.gamma(element)
        info = {"model": step["model"]}
    else:
        other = gio.decode_properties(step.get("properties"), scenario.universe)
        info = {"properties": gio.encode_properties(other)}
    state.properties = scenario.lattice.meet(state.properties, other)
    return info


def _step_consistency(scenario, state, step, config, verify):
    report = run_consistency(scenario, step.get("models"))
    return {
        key: report[key] for key in ("inputs", "consistent", "conflicts",
                                     "drop_restores_consistency")
    }


def _step_bound(scenario, state, step, config, verify):
    source, sink = _endpoints(scenario, step.get("source"), step.get("sink"))
    return _bound(state.properties, scenario, source, sink, config)


_STEPS: Dict[str, Callable] = {
    "abstract": _step_abstract,
    "transform": _step_transform,
    "select": _step_select,
    "refine": _step_refine,
    "meet": _step_meet,
    "consistency": _step_consistency,
    "bound": _step_bound,
}


def run_pipeline(scenario: Scenario, config: Config,
                 verify: bool = True) -> Dict[str, Any]:
    """Execute the scenario pipeline, threading the current properties.

    Each trace entry records the properties before and after the step and the
    number of systems they describe.

    Raises:
        PipelineError: If a step fails, e.g. selecting from an empty model set.
    """
    _verify_flag(verify)
    universe = scenario.universe
    state = PipelineState(properties=scenario.properties)
    trace = []
    for index, step in enumerate(scenario.pipeline):
        before = state.properties
        try:
            info = _STEPS[step["step"]](scenario, state, step, config, verify)
        except (ValueError, KeyError, RuntimeError) as e:
            raise PipelineError(str(e), index, trace) from e
        after = state.properties
        trace.append({
            "index": index,
            "step": step["step"],
            **info,
            "before": gio.encode_properties(before),
            "after": gio.encode_properties(after),
            "systems": {
                "before": count_systems(before, universe),
                "after": count_systems(after, universe),
            },
        })
    report = _header("pipeline", scenario)
    report["initial"] = gio.encode_properties(scenario.properties)
    report["final"] = gio.encode_properties(state.properties)
    report["inconsistent"] = is_inconsistent(state.properties)
    report["trace"] = trace
    return report


__all__ = [
    "LAW_SUITES",
    "PipelineError",
    "PipelineState",
    "make_selector",
    "run_check",
    "run_transform",
    "run_consistency",
    "run_bound",
    "run_hasse",
    "run_pipeline",
]
