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
"""Consistency of models given in different formalisms.

Models contradict each other if the meet of their concretizations assigns the
empty option set to some tag: no system can meet all of their assumptions.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

import literate_dataclasses as dataclasses

import galoistrans.helper as helper
from galoistrans.domains.formalisms import Formalism
from galoistrans.domains.formalisms import formalism
from galoistrans.domains.properties import PropertiesElement
from galoistrans.domains.properties import PropertiesLattice
from galoistrans.domains.properties import is_inconsistent
from galoistrans.domains.universe import Universe


@dataclasses.dataclass
class Conflict:
    """A tag that no option satisfies after combining the models."""

    part: str = dataclasses.field(default="rel",
                                  doc="""``rel`` or ``topo``.""")
    tag: str = dataclasses.field(default="", doc="""The contradicted tag.""")
    assigned: Dict[str, List[str]] = dataclasses.field(
        default_factory=dict,
        doc="""Options each input allows for the tag, by input name. Inputs
    that leave the tag unconstrained are omitted.""")

    def to_dict(self):
        return {"part": self.part, "tag": self.tag, "assigned": self.assigned}


@dataclasses.dataclass
class ConsistencyReport:
    """Result of :py:func:`consistency_check`."""

    names: List[str] = dataclasses.field(
        default_factory=list, doc="""Input names, in input order.""")
    meet: Optional[PropertiesElement] = dataclasses.field(
        default=None, doc="""The meet of all concretized models.""")
    consistent: bool = dataclasses.field(
        default=True, doc="""Whether the meet is consistent.""")
    conflicts: List[Conflict] = dataclasses.field(
        default_factory=list, doc="""Contradicted tags, sorted by part and tag.""")
    drop_restores: Dict[str, bool] = dataclasses.field(
        default_factory=dict,
        doc="""For every input, whether the others alone are consistent.""")

    def to_dict(self, render=str) -> Dict[str, Any]:
        return {
            "inputs": list(self.names),
            "meet": render(self.meet),
            "consistent": self.consistent,
            "conflicts": [conflict.to_dict() for conflict in self.conflicts],
            "drop_restores_consistency": dict(self.drop_restores),
        }


def _conflicts(meet: PropertiesElement, names: Sequence[str],
               concrete: Sequence[PropertiesElement]) -> List[Conflict]:
    conflicts = []
    for part in ("rel", "topo"):
        combined = getattr(meet, part)
        for tag, values in combined.options.assignment:
            if len(values) > 0:
                continue
            assigned = {}
            for name, p in zip(names, concrete):
                own = getattr(p, part)
                if tag in own.tag_set:
                    assigned[name] = [
                        helper.render_value(v)
                        for v in helper.sorted_canonical(own[tag])
                    ]
            conflicts.append(Conflict(part=part, tag=tag, assigned=assigned))
    return conflicts


def consistency_check(models: Sequence[Tuple[str, Any]],
                      universe: Universe,
                      names: Optional[Sequence[str]] = None,
                      formalisms: Optional[Dict[str, Formalism]] = None
                     ) -> ConsistencyReport:
    """Check whether models given in registered formalisms can hold together.

    Args:
        models: Pairs of a formalism name and a model of that formalism.
        universe: The universe all formalisms are instantiated over.
        names: Names of the inputs used in the report, by default ``#0``, ``#1``...
        formalisms: Already instantiated formalisms by name, reused if given.

    Returns:
        The meet of the concretized models, whether it is consistent, the
        conflicting tags and, per input, whether dropping it restores
        consistency.

    Raises:
        ValueError: If a formalism name is not registered.
    """
    formalisms = dict(formalisms or {})
    names = list(names) if names is not None else [
        f"#{i}" for i in range(len(models))
    ]
    if len(names) != len(models):
        raise ValueError(f"Got {len(names)} names for {len(models)} models.")
    concrete = []
    for name, model in models:
        if name not in formalisms:
            formalisms[name] = formalism(name, universe)
        f = formalisms[name]
        f.abstract.validate(model)
        concrete.append(f.gamma(model))

    P = PropertiesLattice(universe)
    meet = P.meet_all(concrete)
    drop_restores = {}
    for i, name in enumerate(names):
        others = concrete[:i] + concrete[i + 1:]
        drop_restores[name] = not is_inconsistent(P.meet_all(others))
    return ConsistencyReport(
        names=names,
        meet=meet,
        consistent=not is_inconsistent(meet),
        conflicts=_conflicts(meet, names, concrete),
        drop_restores=drop_restores,
    )


__all__ = ["Conflict", "ConsistencyReport", "consistency_check"]
