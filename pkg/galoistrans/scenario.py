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
"""Scenario files: a universe with properties, models and a pipeline.

A scenario is a UTF-8 JSON object. Only ``components`` is required::

    {
      "name": "refinement",
      "components": ["c1", "c2"],
      "nodes": ["a", "b"],
      "grid_denominator": 2,
      "properties": {"rel": {"c1": "[0.5,1]"}, "topo": {"a-b": ["present"]}},
      "formalisms": ["reliability", "topology"],
      "models": {"r": {"formalism": "reliability", "allowed": {"c1": ["1/2"]}}},
      "selector": "canonical-least",
      "system": {"reliability": {"c1": "1/2", "c2": "1"}, "lines": ["a-b"]},
      "pipeline": [{"step": "abstract", "formalism": "reliability"},
                   {"step": "select"}, {"step": "refine"}],
      "lattices": {"fig": {"type": "options", "tags": ["t1"], "options": ["x", "y"]}},
      "homomorphism": {"tags": ["t1", "t2"], "options": ["x", "y"]},
      "bound": {"source": "a", "sink": "b"}
    }

Reliability options are lists of rationals or the interval shorthand
``"[lo,hi]"``, which stands for the grid points inside the interval.
"""

import json
import pathlib
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import literate_dataclasses as dataclasses

import galoistrans.domains as domains
import galoistrans.galois as galois
import galoistrans.io as gio
import galoistrans.lattice as lattice
from galoistrans.domains.formalisms import Formalism
from galoistrans.domains.formalisms import formalism as make_formalism
from galoistrans.domains.properties import PropertiesElement
from galoistrans.domains.properties import PropertiesLattice
from galoistrans.domains.universe import SystemInstance
from galoistrans.domains.universe import Universe
from galoistrans.lattice.base import FiniteLattice
from galoistrans.lattice.powerset import MAX_UNIVERSE

DEFAULT_FORMALISMS = ("reliability", "topology")
STEPS = ("abstract", "transform", "select", "refine", "meet", "consistency",
         "bound")

_LATTICE_ARGUMENTS = {
    "powerset": ("universe",),
    "tag": ("tags",),
    "options": ("tags", "options"),
    "tag-options": ("tags", "options"),
}


class ScenarioError(ValueError):
    """A scenario file cannot be read or does not validate."""


@dataclasses.dataclass
class Scenario:
    """A validated scenario.

    Formalisms are instantiated once per scenario, so law checks of their
    connections are computed at most once.
    """

    name: str = dataclasses.field(default="scenario",
                                  doc="""Name used in reports.""")
    universe: Universe = dataclasses.field(
        default=None, doc="""Components, nodes and reliability grid.""")
    properties: PropertiesElement = dataclasses.field(
        default=None, doc="""The starting properties, top if not given.""")
    formalisms: Dict[str, Formalism] = dataclasses.field(
        default_factory=dict,
        doc="""Formalisms by name, in declaration order.""")
    models: Dict[str, Tuple[str, Any]] = dataclasses.field(
        default_factory=dict,
        doc="""Named models as ``(formalism name, abstract element)``.""")
    selector: Any = dataclasses.field(
        default="canonical-least",
        doc="""``canonical-least``, ``system`` or ``{"explicit": model}``.""")
    system: Optional[SystemInstance] = dataclasses.field(
        default=None, doc="""The known system, for the ``system`` selector.""")
    pipeline: List[Dict[str, Any]] = dataclasses.field(
        default_factory=list, doc="""Pipeline steps, in execution order.""")
    lattices: Dict[str, FiniteLattice] = dataclasses.field(
        default_factory=dict, doc="""Additional named lattices.""")
    homomorphism: Optional[Dict[str, list]] = dataclasses.field(
        default=None, doc="""Tag and option universes for transport checks.""")
    bound: Dict[str, str] = dataclasses.field(
        default_factory=dict, doc="""Default ``source`` and ``sink`` nodes.""")
    max_universe: int = dataclasses.field(
        default=MAX_UNIVERSE,
        doc="""Largest assignment set a ``powerset-hull`` formalism is built over.""")

    @property
    def lattice(self) -> PropertiesLattice:
        return PropertiesLattice(self.universe)

    def formalism(self, name: str) -> Formalism:
        """The formalism called ``name``, instantiated on first use."""
        if name not in self.formalisms:
            kwargs = {}
            if name == "powerset-hull":
                kwargs["max_universe"] = self.max_universe
            self.formalisms[name] = make_formalism(name, self.universe, **kwargs)
        return self.formalisms[name]

    def model(self, name: str) -> Tuple[Formalism, Any]:
        """The formalism and abstract element of the model called ``name``.

        Raises:
            ScenarioError: If there is no such model.
        """
        if name not in self.models:
            raise ScenarioError(f"Unknown model {name!r}; the scenario defines "
                                f"{sorted(self.models)}.")
        formalism_name, element = self.models[name]
        return self.formalism(formalism_name), element

    def named_lattice(self, name: str) -> FiniteLattice:
        """A lattice of the scenario: a named lattice, ``properties`` or the
        model lattice of a formalism."""
        if name in self.lattices:
            return self.lattices[name]
        if name == "properties":
            return self.lattice
        if name in domains.get_options():
            return self.formalism(name).abstract
        raise ScenarioError(
            f"Unknown lattice {name!r}; choose one of "
            f"{sorted(self.lattices) + ['properties']} or a formalism name.")

    @classmethod
    def from_dict(cls,
                  data: Mapping[str, Any],
                  grid: Optional[int] = None,
                  max_universe: int = MAX_UNIVERSE) -> "Scenario":
        """Validate a decoded scenario.

        Args:
            data: The decoded JSON object.
            grid: Overrides the grid denominator of the scenario.
            max_universe: Capacity of the ``powerset-hull`` formalism.

        Raises:
            ScenarioError: On any missing, unknown or malformed entry.
        """
        try:
            return cls._from_dict(data, grid, max_universe)
        except ScenarioError:
            raise
        except (ValueError, TypeError, KeyError, AttributeError) as e:
            raise ScenarioError(f"Invalid scenario: {e}") from e

    @classmethod
    def _from_dict(cls, data, grid, max_universe):
        if not isinstance(data, Mapping):
            raise ScenarioError("A scenario must be a JSON object.")
        if "components" not in data:
            raise ScenarioError("A scenario needs a list of 'components'.")
        if grid is None:
            grid = data.get("grid_denominator", data.get("grid", 20))
        universe = Universe(data["components"], data.get("nodes"), int(grid))
        scenario = cls(name=data.get("name", "scenario"),
                       universe=universe,
                       max_universe=max_universe)
        scenario.properties = gio.decode_properties(data.get("properties"),
                                                    universe)
        for name in data.get("formalisms", DEFAULT_FORMALISMS):
            scenario.formalism(name)
        for name, spec in data.get("models", {}).items():
            if "formalism" not in spec:
                raise ScenarioError(f"The model {name!r} names no formalism.")
            f = scenario.formalism(spec["formalism"])
            scenario.models[name] = (f.name, gio.decode_element(f, spec))
        scenario.selector = data.get("selector", "canonical-least")
        _check_selector(scenario.selector)
        if "system" in data:
            spec = data["system"]
            scenario.system = SystemInstance.build(
                spec.get("reliability", {}),
                spec.get("lines", ()),
                nodes=universe.nodes.tags)
        scenario.pipeline = [dict(step) for step in data.get("pipeline", [])]
        for index, step in enumerate(scenario.pipeline):
            if step.get("step") not in STEPS:
                raise ScenarioError(
                    f"Pipeline step {index} has the unknown kind "
                    f"{step.get('step')!r}; choose one of {list(STEPS)}.")
            if "selector" in step:
                _check_selector(step["selector"])
        scenario.lattices = {
            name: _build_lattice(spec, universe)
            for name, spec in data.get("lattices", {}).items()
        }
        scenario.homomorphism = data.get("homomorphism")
        scenario.bound = dict(data.get("bound", {}))
        return scenario

    @classmethod
    def load(cls,
             path: Union[str, pathlib.Path],
             grid: Optional[int] = None,
             max_universe: int = MAX_UNIVERSE) -> "Scenario":
        """Read and validate a scenario file.

        Raises:
            ScenarioError: If the file is missing, is not JSON or does not validate.
        """
        path = pathlib.Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ScenarioError(f"Cannot read scenario {str(path)!r}: {e}") from e
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ScenarioError(f"{str(path)!r} is not valid JSON: {e}") from e
        return cls.from_dict(data, grid=grid, max_universe=max_universe)


def _check_selector(selector):
    if isinstance(selector, str):
        if selector not in galois.get_options() or selector == "explicit":
            raise ScenarioError(
                f"Unknown selector {selector!r}; use 'canonical-least', "
                f"'system' or {{'explicit': model}}.")
    elif not (isinstance(selector, Mapping) and set(selector) == {"explicit"}):
        raise ScenarioError(f"Cannot read the selector {selector!r}.")


def _build_lattice(spec: Mapping[str, Any], universe: Universe) -> FiniteLattice:
    kind = spec.get("type")
    if kind == "properties":
        return lattice.init(kind, universe)
    if kind == "dual":
        return lattice.init(kind, _build_lattice(spec["of"], universe))
    if kind == "product":
        return lattice.init(kind, _build_lattice(spec["first"], universe),
                            _build_lattice(spec["second"], universe))
    if kind is not None and kind.startswith("interval"):
        kwargs = {}
        if "denominator" in spec:
            kwargs["denominator"] = int(spec["denominator"])
        return lattice.init(kind, **kwargs)
    if kind not in _LATTICE_ARGUMENTS:
        raise ScenarioError(
            f"Unknown lattice type {kind!r}; choose one of "
            f"{lattice.get_options()}.")
    return lattice.init(kind, *(spec[key] for key in _LATTICE_ARGUMENTS[kind]))


__all__ = ["ScenarioError", "Scenario", "DEFAULT_FORMALISMS", "STEPS"]
