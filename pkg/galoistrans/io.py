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
"""Helper functions for reading and writing lattice values as JSON.

Properties, model boxes and single models are written as plain JSON objects
with rationals rendered as ``"num/den"`` strings. Everything written here reads
back to an equal value, and output is serialized with sorted keys so that the
same input always produces the same bytes.
"""

import json
import pathlib
import sys
from typing import Any, Dict, Iterable, Mapping, Optional, Union

import galoistrans.helper as helper
from galoistrans.domains.boxes import ModelBox
from galoistrans.domains.formalisms import Formalism
from galoistrans.domains.properties import PropertiesElement
from galoistrans.domains.properties import PropertiesLattice
from galoistrans.domains.universe import ABSENT
from galoistrans.domains.universe import PRESENT
from galoistrans.domains.universe import Universe
from galoistrans.lattice.base import ElementError
from galoistrans.lattice.interval import IntervalLattice
from galoistrans.tagopts.tol import TagOptionsElement

SCHEMA_VERSION = 1


def dumps(data: Any) -> str:
    """Canonical JSON text, terminated by a newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write(text: str, out: Optional[Union[str, pathlib.Path]] = None):
    """Write ``text`` to the file ``out``, or to standard output."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    pathlib.Path(out).write_text(text, encoding="utf-8")


def reliability_options(value: Union[str, Iterable], universe: Universe) -> list:
    """Parse the allowed reliabilities of one component.

    Accepts a list of rationals or the interval shorthand ``"[0.8,1.0]"``,
    which stands for every grid point inside the interval.

    Raises:
        ElementError: If a value or an interval endpoint is not on the grid.
    """
    if isinstance(value, str):
        intervals = IntervalLattice(universe.grid)
        return list(intervals.points(intervals.parse(value)))
    return [universe.check_value(v) for v in value]


def topology_options(value: Union[str, Iterable[str]]) -> list:
    """Parse the allowed states of one line, a state or a list of states."""
    states = [value] if isinstance(value, str) else list(value)
    for state in states:
        if state not in (ABSENT, PRESENT):
            raise ElementError(
                f"Line states are {ABSENT!r} or {PRESENT!r}, got {state!r}.")
    return states


def encode_part(part: TagOptionsElement) -> Dict[str, list]:
    return {
        tag: [helper.render_value(v) for v in helper.sorted_canonical(values)]
        for tag, values in part.options.assignment
    }


def encode_properties(p: PropertiesElement) -> Dict[str, Any]:
    return {"rel": encode_part(p.rel), "topo": encode_part(p.topo)}


def decode_properties(data: Optional[Mapping[str, Any]],
                      universe: Universe) -> PropertiesElement:
    """Read a properties element written by :py:func:`encode_properties`.

    A missing element or part is the top element, which constrains nothing.
    """
    data = data or {}
    unknown = set(data) - {"rel", "topo"}
    if unknown:
        raise ElementError(
            f"Properties have the parts 'rel' and 'topo', got {sorted(unknown)}.")
    rel = {
        tag: reliability_options(value, universe)
        for tag, value in data.get("rel", {}).items()
    }
    topo = {
        tag: topology_options(value)
        for tag, value in data.get("topo", {}).items()
    }
    return PropertiesLattice(universe).element(rel, topo)


def encode_element(formalism: Formalism, element) -> Dict[str, Any]:
    """JSON form of an abstract element of ``formalism``."""
    if isinstance(element, ModelBox):
        return {
            "formalism": formalism.name,
            "allowed": encode_part(element.as_tag_options()),
        }
    return {
        "formalism": formalism.name,
        "assignments": [
            encode_model(model) for model in helper.sorted_canonical(element)
        ],
    }


def decode_element(formalism: Formalism, data: Mapping[str, Any]):
    """Read an abstract element of ``formalism``.

    Boxes are given as ``{"allowed": {tag: options}}``, where reliability
    options may use the interval shorthand. Sets of assignments are given as
    ``{"assignments": [{tag: value}, ...]}``.
    """
    allowed = data.get("allowed", {})
    if formalism.name == "reliability":
        return formalism.model({
            tag: reliability_options(value, formalism.universe)
            for tag, value in allowed.items()
        })
    if formalism.name == "topology":
        return formalism.model(
            {tag: topology_options(value) for tag, value in allowed.items()})
    return formalism.model(data)


def encode_model(model) -> Dict[str, str]:
    return {tag: helper.render_value(value) for tag, value in model}


def decode_model(formalism: Formalism, data: Mapping[str, Any]):
    """Read a single model ``{tag: option}`` of ``formalism``."""
    if formalism.name == "topology":
        return tuple((formalism.universe.check_line(tag), data[tag])
                     for tag in sorted(data))
    return tuple((tag, formalism.universe.check_value(data[tag]))
                 for tag in sorted(data))


__all__ = [
    "SCHEMA_VERSION",
    "dumps",
    "write",
    "reliability_options",
    "topology_options",
    "encode_properties",
    "decode_properties",
    "encode_element",
    "decode_element",
    "encode_model",
    "decode_model",
]
