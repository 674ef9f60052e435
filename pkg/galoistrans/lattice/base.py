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
"""Abstract base class for finite complete lattices.

A :py:class:`FiniteLattice` is a finitely enumerable complete lattice. Besides
the element universe it provides the order, the meet and join of any finite
collection, and a canonical text rendering for every element. All law checks in
:py:mod:`galoistrans.lattice.laws` and :py:mod:`galoistrans.galois` run against
this interface.

Lattices are immutable values. Two lattices built from equal parameters compare
equal, which is how :py:func:`galoistrans.galois.transform` decides that two
connections share their concrete domain.
"""

import abc
import functools
from typing import Any, Callable, Dict, Hashable, Iterable, Optional, Sequence, Tuple


class CapacityError(ValueError):
    """A lattice or enumeration exceeds its configured size bound."""


class ElementError(ValueError):
    """A value is not a well-formed element of the lattice it is used with."""


class FiniteLattice(abc.ABC):
    """Base class for finite complete lattices.

    Subclasses implement :py:meth:`_enumerate`, :py:meth:`leq`,
    :py:meth:`meet_all`, :py:meth:`join_all` and :py:meth:`_key`. Elements must be
    hashable and use a canonical representation, so that structural equality
    decides element equality.
    """

    @abc.abstractmethod
    def _enumerate(self) -> Iterable[Hashable]:
        """Yield every element exactly once, in a deterministic order."""
        raise NotImplementedError()

    @abc.abstractmethod
    def _key(self) -> Tuple:
        """Tag and parameters that determine the lattice, used for equality."""
        raise NotImplementedError()

    @abc.abstractmethod
    def leq(self, a, b) -> bool:
        """The partial order ``a ⊑ b``."""
        raise NotImplementedError()

    @abc.abstractmethod
    def meet_all(self, items: Iterable):
        """Greatest lower bound of a finite collection. The empty meet is top."""
        raise NotImplementedError()

    @abc.abstractmethod
    def join_all(self, items: Iterable):
        """Least upper bound of a finite collection. The empty join is bottom."""
        raise NotImplementedError()

    @functools.cached_property
    def elements(self) -> Tuple:
        """All elements of the lattice in enumeration order."""
        return tuple(self._enumerate())

    @functools.cached_property
    def _positions(self) -> Dict[Hashable, int]:
        return {element: i for i, element in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def cardinality(self) -> int:
        """Number of elements, computed without enumerating where possible."""
        return self.size

    @property
    def top(self):
        return self.meet_all(())

    @property
    def bottom(self):
        return self.join_all(())

    def meet(self, a, b):
        return self.meet_all((a, b))

    def join(self, a, b):
        return self.join_all((a, b))

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def contains(self, element) -> bool:
        try:
            return element in self._positions
        except TypeError:
            return False

    def index(self, element) -> int:
        """Position of ``element`` in :py:attr:`elements`.

        Raises:
            ElementError: If the value is not an element of this lattice.
        """
        if not self.contains(element):
            raise ElementError(
                f"{element!r} is not an element of {self.describe()}.")
        return self._positions[element]

    def validate(self, element):
        """Return ``element`` if it belongs to the lattice.

        Raises:
            ElementError: If the value is not an element of this lattice.
        """
        if not self.contains(element):
            raise ElementError(
                f"{element!r} is not an element of {self.describe()}.")
        return element

    def render(self, element) -> str:
        """Canonical text rendering of an element."""
        return str(element)

    def describe(self) -> str:
        """Short human readable name of the lattice."""
        return type(self).__name__

    def check_capacity(self, bound: int, what: str = "lattice"):
        """Raise a :py:class:`CapacityError` if the lattice has more than ``bound`` elements."""
        if self.cardinality > bound:
            raise CapacityError(
                f"The {what} {self.describe()} has {self.cardinality} elements, "
                f"exceeding the configured bound of {bound}.")

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<{self.describe()} with {self.cardinality} elements>"


class ExplicitLattice(FiniteLattice):
    """A lattice given by an element list and an order predicate.

    Meets and joins are found by scanning all elements, which is only sensible
    for small lattices. A collection without a greatest lower (least upper)
    bound raises :py:class:`ElementError`, so an order that is not a lattice is
    detected as soon as the missing bound is requested.

    Args:
        elements: The elements, in the enumeration order to use.
        leq: The order predicate.
        renderer: Optional element rendering, defaults to ``str``.
        name: Used in :py:meth:`describe`.
    """

    def __init__(self,
                 elements: Sequence[Hashable],
                 leq: Callable[[Any, Any], bool],
                 renderer: Optional[Callable[[Any], str]] = None,
                 name: str = "explicit"):
        if len(set(elements)) != len(elements):
            raise ElementError("Lattice elements must be unique.")
        if len(elements) == 0:
            raise ElementError("A lattice needs at least one element.")
        self._given = tuple(elements)
        self._leq = leq
        self._renderer = renderer or str
        self._name = name

    def _enumerate(self):
        return self._given

    def _key(self):
        return ("explicit", self._name, self._given, self._leq)

    def describe(self):
        return self._name

    def leq(self, a, b):
        return bool(self._leq(a, b))

    def render(self, element):
        return self._renderer(element)

    def _extremal(self, candidates, better, kind):
        best = [c for c in candidates if all(better(d, c) for d in candidates)]
        if len(best) != 1:
            raise ElementError(f"No unique {kind} in {self._name}.")
        return best[0]

    def meet_all(self, items):
        items = tuple(items)
        lower = [
            x for x in self.elements if all(self.leq(x, item) for item in items)
        ]
        return self._extremal(lower, self.leq, "greatest lower bound")

    def join_all(self, items):
        items = tuple(items)
        upper = [
            x for x in self.elements if all(self.leq(item, x) for item in items)
        ]
        return self._extremal(upper, lambda d, c: self.leq(c, d),
                              "least upper bound")


def render_collection(lattice: FiniteLattice, items: Iterable) -> list:
    """Render every element of a collection, keeping its order."""
    return [lattice.render(item) for item in items]


def sorted_elements(lattice: FiniteLattice, items: Iterable) -> list:
    """Sort elements of ``lattice`` by enumeration position."""
    return sorted(items, key=lattice.index)


__all__ = [
    "CapacityError",
    "ElementError",
    "FiniteLattice",
    "ExplicitLattice",
    "render_collection",
    "sorted_elements",
]
