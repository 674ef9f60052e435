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
"""Options lattices: assignments of option sets to tags.

For a set of tags ``T'`` and a finite option universe ``O``, the options lattice
contains all total maps ``f: T' -> P(O)`` ordered pointwise by inclusion.
Meets and joins are pointwise intersection and union. The top element assigns
``O`` to every tag, the bottom element assigns ``∅``.

Options elements over different tag sets cannot be compared directly; use
:py:func:`galoistrans.tagopts.phi` to move one into the domain of the other
first.
"""

import dataclasses
import itertools
from typing import Dict, Hashable, Iterable, Mapping, Optional, Sequence, Tuple

import galoistrans.helper as helper
import galoistrans.lattice as lattice
from galoistrans.lattice.base import ElementError
from galoistrans.lattice.base import FiniteLattice


class DomainMismatchError(ValueError):
    """Options elements over different tag sets were combined."""


@dataclasses.dataclass(frozen=True)
class OptionsElement:
    """A total map from a set of tags to subsets of the option universe.

    ``assignment`` holds exactly one ``(tag, options)`` pair per tag, sorted by
    tag. Build elements with :py:meth:`from_mapping`, which takes care of the
    canonical form.
    """

    assignment: Tuple[Tuple[str, frozenset], ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Iterable[Hashable]]) -> "OptionsElement":
        return cls(
            tuple((tag, frozenset(mapping[tag])) for tag in sorted(mapping)))

    @classmethod
    def constant(cls, domain: Iterable[str], options: Iterable[Hashable]) -> "OptionsElement":
        """The element assigning the same ``options`` to every tag in ``domain``."""
        options = frozenset(options)
        return cls(tuple((tag, options) for tag in sorted(domain)))

    @property
    def domain(self) -> frozenset:
        return frozenset(tag for tag, _ in self.assignment)

    def as_dict(self) -> Dict[str, frozenset]:
        return dict(self.assignment)

    def __getitem__(self, tag: str) -> frozenset:
        for name, options in self.assignment:
            if name == tag:
                return options
        raise KeyError(tag)

    def __str__(self):
        pairs = ",".join(f"({tag},{helper.render_set(options)})"
                         for tag, options in self.assignment)
        return "{" + pairs + "}"


def _check_domains(elements: Sequence[OptionsElement]):
    domains = {element.domain for element in elements}
    if len(domains) > 1:
        raise DomainMismatchError(
            "Options elements must share their tag set, got "
            f"{sorted(helper.render_set(domain) for domain in domains)}. "
            "Apply phi to move them into a common domain first.")


def _pointwise(combine, elements: Sequence[OptionsElement]) -> OptionsElement:
    return OptionsElement(
        tuple((tag, combine(*(element.assignment[i][1] for element in elements)))
              for i, (tag, _) in enumerate(elements[0].assignment)))


def options_leq(f: OptionsElement, g: OptionsElement) -> bool:
    """``f ⊑ g`` iff ``f(t) ⊆ g(t)`` for every tag.

    Raises:
        DomainMismatchError: If ``f`` and ``g`` have different tag sets.
    """
    _check_domains((f, g))
    return all(a <= b for (_, a), (_, b) in zip(f.assignment, g.assignment))


def options_meet(elements: Iterable[OptionsElement],
                 *,
                 domain: Optional[Iterable[str]] = None,
                 options: Optional[Iterable[Hashable]] = None) -> OptionsElement:
    """Pointwise intersection.

    Args:
        elements: Options elements over a common tag set.
        domain, options: Needed for the empty collection only, whose meet is
            the top element ``λt.O`` over ``domain``.
    """
    elements = tuple(elements)
    if len(elements) == 0:
        if domain is None or options is None:
            raise ValueError(
                "The meet of an empty collection needs domain and options.")
        return OptionsElement.constant(domain, options)
    _check_domains(elements)
    return _pointwise(frozenset.intersection, elements)


def options_join(elements: Iterable[OptionsElement],
                 *,
                 domain: Optional[Iterable[str]] = None) -> OptionsElement:
    """Pointwise union. The join of no elements is ``λt.∅`` over ``domain``."""
    elements = tuple(elements)
    if len(elements) == 0:
        if domain is None:
            raise ValueError("The join of an empty collection needs a domain.")
        return OptionsElement.constant(domain, ())
    _check_domains(elements)
    return _pointwise(frozenset.union, elements)


def enumerate_options(domain: Iterable[str],
                      options: Iterable[Hashable]) -> Iterable[OptionsElement]:
    """All options elements over ``domain``, in lexicographic order of subsets."""
    tags = sorted(domain)
    choices = list(helper.powerset(options))
    for values in itertools.product(choices, repeat=len(tags)):
        yield OptionsElement(tuple(zip(tags, values)))


@lattice.register("options")
class OptionsLattice(FiniteLattice):
    """The options lattice over a tag set and an option universe.

    Args:
        domain: The tag set ``T'``.
        options: The option universe ``O``.
    """

    def __init__(self, domain: Iterable[str], options: Iterable[Hashable]):
        self.domain = frozenset(domain)
        self.options = frozenset(options)

    def _enumerate(self):
        return enumerate_options(self.domain, self.options)

    def _key(self):
        return ("options", self.domain, self.options)

    @property
    def cardinality(self):
        return 2**(len(self.options) * len(self.domain))

    def describe(self):
        return (f"options{helper.render_set(self.domain)}"
                f"/{helper.render_set(self.options)}")

    def element(self, mapping: Mapping[str, Iterable[Hashable]]) -> OptionsElement:
        """Build an element, checking tags and options.

        Raises:
            ElementError: If a tag or option is outside the lattice's universes.
        """
        element = OptionsElement.from_mapping(mapping)
        if not self.contains(element):
            raise ElementError(
                f"{element} is not an element of {self.describe()}.")
        return element

    def contains(self, element):
        return (isinstance(element, OptionsElement) and
                element.domain == self.domain and
                all(values <= self.options for _, values in element.assignment))

    def leq(self, a, b):
        return options_leq(a, b)

    def meet_all(self, items):
        return options_meet(items, domain=self.domain, options=self.options)

    def join_all(self, items):
        return options_join(items, domain=self.domain)


def options_lattice(domain: Iterable[str],
                    options: Iterable[Hashable]) -> OptionsLattice:
    """The options lattice ``O_{T'}`` for ``T' = domain`` and ``O = options``."""
    return OptionsLattice(domain, options)


__all__ = [
    "DomainMismatchError",
    "OptionsElement",
    "OptionsLattice",
    "enumerate_options",
    "options_join",
    "options_leq",
    "options_lattice",
    "options_meet",
]
