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
"""Tag universes and the tag lattice.

A tag names something that may or may not be known to apply to a system, such
as one of its components. The tag lattice orders sets of tags by reverse
inclusion: knowing more tags is more specific, so ``⊑`` is ``⊇``, the meet is
union and the top element is the empty set.
"""

from typing import Iterable, Tuple, Union

import galoistrans.helper as helper
import galoistrans.lattice as lattice
from galoistrans.lattice.base import ElementError
from galoistrans.lattice.powerset import DualLattice
from galoistrans.lattice.powerset import PowersetLattice

TagSet = frozenset


class TagUniverse:
    """A finite set of tag names.

    Tags are kept in sorted order, so universes built from the same names
    compare equal regardless of the order they were given in.

    Args:
        tags: Unique, non-empty tag names.

    Raises:
        ElementError: If a tag is not a non-empty string or is repeated.
    """

    def __init__(self, tags: Iterable[str]):
        tags = list(tags)
        for tag in tags:
            if not isinstance(tag, str) or len(tag) == 0:
                raise ElementError(
                    f"Tags must be non-empty strings, got {tag!r}.")
        if len(set(tags)) != len(tags):
            duplicates = sorted({tag for tag in tags if tags.count(tag) > 1})
            raise ElementError(f"Duplicate tags: {duplicates}.")
        self.tags: Tuple[str, ...] = tuple(sorted(tags))

    @property
    def all(self) -> TagSet:
        return TagSet(self.tags)

    def tag_set(self, tags: Iterable[str]) -> TagSet:
        """A :py:data:`TagSet` of this universe.

        Raises:
            ElementError: If a tag does not belong to the universe.
        """
        tags = TagSet(tags)
        unknown = tags - self.all
        if unknown:
            raise ElementError(f"Unknown tags {helper.render_set(unknown)}; "
                               f"the universe is {helper.render_set(self.all)}.")
        return tags

    def __contains__(self, tag):
        return tag in self.all

    def __iter__(self):
        return iter(self.tags)

    def __len__(self):
        return len(self.tags)

    def __eq__(self, other):
        if not isinstance(other, TagUniverse):
            return NotImplemented
        return self.tags == other.tags

    def __hash__(self):
        return hash(self.tags)

    def __repr__(self):
        return f"TagUniverse({list(self.tags)})"


def as_universe(universe: Union[TagUniverse, Iterable[str]]) -> TagUniverse:
    """Accept a :py:class:`TagUniverse` or any iterable of tag names."""
    if isinstance(universe, TagUniverse):
        return universe
    return TagUniverse(universe)


@lattice.register("tag")
class TagLattice(DualLattice):
    """The dual of the powerset lattice of a tag universe.

    ``⊑`` is ``⊇``, the meet is ``∪``, the join is ``∩``, the top element is
    ``∅`` and the bottom element is the full tag set.
    """

    def __init__(self, universe: Union[TagUniverse, Iterable[str]]):
        self.universe = as_universe(universe)
        super().__init__(
            PowersetLattice(self.universe.tags,
                            max_universe=max(len(self.universe), 1)))

    def _key(self):
        return ("tag", self.universe)

    def describe(self):
        return f"tag{helper.render_set(self.universe.tags)}"


def tag_lattice(universe: Union[TagUniverse, Iterable[str]]) -> TagLattice:
    """The tag lattice over ``universe``."""
    return TagLattice(universe)


__all__ = ["TagSet", "TagUniverse", "TagLattice", "as_universe", "tag_lattice"]
