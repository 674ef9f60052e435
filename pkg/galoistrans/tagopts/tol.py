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
"""The tag-options lattice.

Elements are pairs ``(T', f)`` of a tag set and an options element over it.
``(A, f) ⊑ (B, g)`` iff ``A ⊇ B`` and ``phi(A, B, f) ⊑ g``: the smaller element
knows at least the tags of the larger one, and its options are at least as
restrictive once transported.

Meets and joins combine the tag sets in the tag lattice first, then transport
every options element into the combined tag set and combine pointwise. The top
element is ``(∅, {})``, which says nothing about any tag, and the bottom element
is ``(T, λt.∅)``, under which no option is valid for any tag.
"""

import dataclasses
import math
from typing import Hashable, Iterable, Mapping, Union

import galoistrans.helper as helper
import galoistrans.lattice as lattice
from galoistrans.lattice.base import ElementError
from galoistrans.lattice.base import FiniteLattice
from galoistrans.tagopts.homomorphism import phi
from galoistrans.tagopts.options import OptionsElement
from galoistrans.tagopts.options import enumerate_options
from galoistrans.tagopts.options import options_join
from galoistrans.tagopts.options import options_leq
from galoistrans.tagopts.options import options_meet
from galoistrans.tagopts.tags import TagUniverse
from galoistrans.tagopts.tags import as_universe


class UniverseMismatchError(ValueError):
    """A value does not belong to the tag or option universe it is used with."""


@dataclasses.dataclass(frozen=True)
class TagOptionsElement:
    """An element ``(tag_set, options)`` of a tag-options lattice."""

    tag_set: frozenset
    options: OptionsElement

    def __post_init__(self):
        if self.options.domain != self.tag_set:
            raise ElementError(
                f"The options {self.options} are not over the tag set "
                f"{helper.render_set(self.tag_set)}.")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Iterable[Hashable]]) -> "TagOptionsElement":
        """The element whose tag set is the keys of ``mapping``."""
        options = OptionsElement.from_mapping(mapping)
        return cls(options.domain, options)

    def __getitem__(self, tag: str) -> frozenset:
        return self.options[tag]

    def is_empty_somewhere(self) -> bool:
        """Whether some tag is assigned the empty option set."""
        return any(len(values) == 0 for _, values in self.options.assignment)

    def __str__(self):
        return f"({helper.render_set(self.tag_set)}, {self.options})"


@lattice.register("tag-options")
class TagOptionsLattice(FiniteLattice):
    """The tag-options lattice over a tag universe and an option universe.

    Args:
        universe: The tag universe ``T``.
        options: The option universe ``O``.
    """

    def __init__(self, universe: Union[TagUniverse, Iterable[str]],
                 options: Iterable[Hashable]):
        self.universe = as_universe(universe)
        self.options = frozenset(options)

    def _enumerate(self):
        for tag_set in helper.powerset(self.universe.tags):
            for f in enumerate_options(tag_set, self.options):
                yield TagOptionsElement(tag_set, f)

    def _key(self):
        return ("tag-options", self.universe, self.options)

    @property
    def cardinality(self):
        n, k = len(self.universe), len(self.options)
        return sum(math.comb(n, size) * 2**(size * k) for size in range(n + 1))

    def describe(self):
        return (f"tag-options{helper.render_set(self.universe.tags)}"
                f"/{helper.render_set(self.options)}")

    def contains(self, element):
        return (isinstance(element, TagOptionsElement) and
                element.tag_set <= self.universe.all and all(
                    values <= self.options
                    for _, values in element.options.assignment))

    def check(self, element: TagOptionsElement) -> TagOptionsElement:
        """Return ``element`` if it belongs to this lattice.

        Raises:
            UniverseMismatchError: If a tag or an option is outside the universes.
        """
        if not self.contains(element):
            raise UniverseMismatchError(
                f"{element} is not over the tags "
                f"{helper.render_set(self.universe.tags)} and the options "
                f"{helper.render_set(self.options)}.")
        return element

    def element(self, mapping: Mapping[str, Iterable[Hashable]]) -> TagOptionsElement:
        """Build and check an element from a ``tag -> options`` mapping."""
        return self.check(TagOptionsElement.from_mapping(mapping))

    def constant(self, tags: Iterable[str], values: Iterable[Hashable]) -> TagOptionsElement:
        """The element assigning ``values`` to each of ``tags``."""
        f = OptionsElement.constant(tags, values)
        return self.check(TagOptionsElement(f.domain, f))

    def transport(self, element: TagOptionsElement, target: Iterable[str]) -> OptionsElement:
        """``phi`` of the element's options into the tag set ``target``."""
        return phi(element.tag_set, target, element.options, self.options)

    def leq(self, a, b):
        return (a.tag_set >= b.tag_set and
                options_leq(self.transport(a, b.tag_set), b.options))

    def meet_all(self, items):
        items = tuple(items)
        tag_set = frozenset().union(*(item.tag_set for item in items))
        options = options_meet([self.transport(item, tag_set) for item in items],
                               domain=tag_set,
                               options=self.options)
        return TagOptionsElement(tag_set, options)

    def join_all(self, items):
        items = tuple(items)
        tag_set = self.universe.all.intersection(*(item.tag_set for item in items))
        options = options_join([self.transport(item, tag_set) for item in items],
                               domain=tag_set)
        return TagOptionsElement(tag_set, options)

    def render(self, element):
        return str(element)


def tag_options_lattice(universe: Union[TagUniverse, Iterable[str]],
                        options: Iterable[Hashable]) -> TagOptionsLattice:
    """The tag-options lattice over ``universe`` and ``options``."""
    return TagOptionsLattice(universe, options)


def _checked(universe, options, elements):
    space = TagOptionsLattice(universe, options)
    for element in elements:
        space.check(element)
    return space


def tol_leq(x: TagOptionsElement, y: TagOptionsElement,
            universe: Union[TagUniverse, Iterable[str]],
            options: Iterable[Hashable]) -> bool:
    """``(A, f) ⊑ (B, g)`` iff ``A ⊇ B`` and ``phi(A, B, f) ⊑ g``.

    Raises:
        UniverseMismatchError: If ``x`` or ``y`` is not over the universes.
    """
    return _checked(universe, options, (x, y)).leq(x, y)


def tol_meet(elements: Iterable[TagOptionsElement],
             universe: Union[TagUniverse, Iterable[str]],
             options: Iterable[Hashable]) -> TagOptionsElement:
    """Meet of a finite collection; the empty meet is ``(∅, {})``."""
    elements = tuple(elements)
    return _checked(universe, options, elements).meet_all(elements)


def tol_join(elements: Iterable[TagOptionsElement],
             universe: Union[TagUniverse, Iterable[str]],
             options: Iterable[Hashable]) -> TagOptionsElement:
    """Join of a finite collection; the empty join is ``(T, λt.∅)``."""
    elements = tuple(elements)
    return _checked(universe, options, elements).join_all(elements)


__all__ = [
    "UniverseMismatchError",
    "TagOptionsElement",
    "TagOptionsLattice",
    "tag_options_lattice",
    "tol_join",
    "tol_leq",
    "tol_meet",
]
