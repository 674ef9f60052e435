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
"""Model boxes: the abstract elements of the worked formalisms.

A model of the reliability formalism is a total assignment of one grid value to
every component; a model of the topology formalism assigns ``absent`` or
``present`` to every line. A box describes the set of models that pick, for each
tag in its domain, one of the allowed options, and anything for the other tags.
A box with an empty option set describes no model at all.

Boxes are ordered like the tag-options elements they are made of, so the box
lattice of a formalism is isomorphic to a tag-options lattice. Distinct boxes can
describe the same model set, e.g. the empty box and a box allowing every option.
"""

import dataclasses
import itertools
from typing import ClassVar, Hashable, Iterator, Tuple

import galoistrans.helper as helper
from galoistrans.galois.connection import ModelLiftError
from galoistrans.galois.connection import ModelSpace
from galoistrans.lattice.base import FiniteLattice
from galoistrans.tagopts.options import OptionsElement
from galoistrans.tagopts.tol import TagOptionsElement
from galoistrans.tagopts.tol import TagOptionsLattice

Model = Tuple[Tuple[str, Hashable], ...]


@dataclasses.dataclass(frozen=True)
class ModelBox:
    """A box ``(domain, allowed)`` of models."""

    kind: ClassVar[str] = "box"

    domain: frozenset
    allowed: OptionsElement

    @classmethod
    def of(cls, element: TagOptionsElement) -> "ModelBox":
        return cls(element.tag_set, element.options)

    def as_tag_options(self) -> TagOptionsElement:
        return TagOptionsElement(self.domain, self.allowed)

    def is_empty(self) -> bool:
        """Whether the box describes no model."""
        return any(len(values) == 0 for _, values in self.allowed.assignment)

    def __getitem__(self, tag):
        return self.allowed[tag]

    def __str__(self):
        return f"{self.kind} box {self.as_tag_options()}"


@dataclasses.dataclass(frozen=True)
class ReliabilityModelBox(ModelBox):
    """Allowed reliabilities per component."""

    kind: ClassVar[str] = "reliability"

    @property
    def domain_components(self) -> frozenset:
        return self.domain


@dataclasses.dataclass(frozen=True)
class TopologyModelBox(ModelBox):
    """Allowed line states per line."""

    kind: ClassVar[str] = "topology"

    @property
    def domain_pairs(self) -> frozenset:
        return self.domain


class BoxLattice(FiniteLattice):
    """The lattice of boxes of one kind over a tag-options lattice.

    Args:
        space: The tag-options lattice the boxes mirror.
        box_type: :py:class:`ReliabilityModelBox` or :py:class:`TopologyModelBox`.
    """

    def __init__(self, space: TagOptionsLattice, box_type: type):
        self.space = space
        self.box_type = box_type

    def wrap(self, element: TagOptionsElement) -> ModelBox:
        return self.box_type.of(element)

    def _enumerate(self):
        return (self.wrap(element) for element in self.space.elements)

    def _key(self):
        return ("box", self.box_type.kind, self.space)

    @property
    def cardinality(self):
        return self.space.cardinality

    def describe(self):
        return f"{self.box_type.kind} boxes over {self.space.describe()}"

    def contains(self, element):
        return (type(element) is self.box_type and
                self.space.contains(element.as_tag_options()))

    def box(self, mapping) -> ModelBox:
        """Build and check a box from a ``tag -> options`` mapping."""
        return self.wrap(self.space.element(mapping))

    def leq(self, a, b):
        return self.space.leq(a.as_tag_options(), b.as_tag_options())

    def meet_all(self, items):
        return self.wrap(
            self.space.meet_all(item.as_tag_options() for item in items))

    def join_all(self, items):
        return self.wrap(
            self.space.join_all(item.as_tag_options() for item in items))

    def render(self, element):
        return str(element)


def box_model_space(boxes: BoxLattice) -> ModelSpace:
    """Total assignments over the tag universe as the models of ``boxes``.

    Models are tuples of ``(tag, option)`` sorted by tag. Members of a box are
    listed in canonical order, so the first member picks the least allowed
    option for every tag.
    """
    tags = boxes.space.universe.tags
    options = helper.sorted_canonical(boxes.space.options)

    def members(box: ModelBox) -> Iterator[Model]:
        choices = [
            helper.sorted_canonical(box[tag]) if tag in box.domain else options
            for tag in tags
        ]
        for values in itertools.product(*choices):
            yield tuple(zip(tags, values))

    def contains(box: ModelBox, model: Model) -> bool:
        assignment = dict(model)
        return (set(assignment) == set(tags) and
                all(assignment[tag] in box[tag] for tag in box.domain))

    def lift(model: Model) -> ModelBox:
        try:
            assignment = dict(model)
        except (TypeError, ValueError) as e:
            raise ModelLiftError(f"{model!r} is not a list of (tag, option) "
                                 f"pairs.") from e
        if set(assignment) != set(tags):
            raise ModelLiftError(
                f"A {boxes.box_type.kind} model assigns exactly the tags "
                f"{helper.render_set(tags)}, got {helper.render_set(assignment)}.")
        invalid = {tag: value for tag, value in assignment.items()
                   if value not in boxes.space.options}
        if invalid:
            raise ModelLiftError(
                f"Options {invalid} are not in "
                f"{helper.render_set(boxes.space.options)}.")
        return boxes.box({tag: (value,) for tag, value in assignment.items()})

    def render(model: Model) -> str:
        return "{" + ",".join(f"{tag}={helper.render_value(value)}"
                              for tag, value in model) + "}"

    return ModelSpace(members=members, contains=contains, lift=lift,
                      render=render)


__all__ = [
    "Model",
    "ModelBox",
    "ReliabilityModelBox",
    "TopologyModelBox",
    "BoxLattice",
    "box_model_space",
]
