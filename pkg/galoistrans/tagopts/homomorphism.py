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
"""Transport of options elements between tag sets.

``phi(A, B, f)`` moves an options element ``f`` over the tag set ``A`` into the
options lattice over ``B``. Tags in both sets keep their option set, tags that
are only in ``B`` receive the full option universe (nothing is known about
them), and tags only in ``A`` are dropped.

:py:func:`check_homomorphism` verifies on a bounded universe that every such
transport preserves meets and non-empty joins, and the order property needed for the
tag-options lattice to be complete.
"""

from typing import Callable, Hashable, Iterable, Optional, Union

import galoistrans.helper as helper
from galoistrans.lattice.base import CapacityError
from galoistrans.lattice.laws import Budget
from galoistrans.lattice.laws import Cases
from galoistrans.lattice.laws import Law
from galoistrans.lattice.laws import LawReport
from galoistrans.lattice.laws import check_laws
from galoistrans.tagopts.options import OptionsElement
from galoistrans.tagopts.options import OptionsLattice
from galoistrans.tagopts.options import options_join
from galoistrans.tagopts.options import options_leq
from galoistrans.tagopts.options import options_meet
from galoistrans.tagopts.tags import TagLattice
from galoistrans.tagopts.tags import TagUniverse
from galoistrans.tagopts.tags import as_universe

MAX_TAGS = 3
MAX_OPTIONS = 2

Phi = Callable[[frozenset, frozenset, OptionsElement, frozenset], OptionsElement]


def phi(source: Iterable[str], target: Iterable[str], f: OptionsElement,
        options: Iterable[Hashable]) -> OptionsElement:
    """Transport ``f`` from the tag set ``source`` to the tag set ``target``.

    Args:
        source: The tag set ``A``, which must be the domain of ``f``.
        target: The tag set ``B`` of the result.
        f: An options element over ``A``.
        options: The option universe ``O``, assigned to tags in ``B - A``.

    Returns:
        The element mapping ``t`` to ``f(t)`` for ``t ∈ A ∩ B`` and to ``O`` for
        ``t ∈ B - A``.
    """
    source, target = frozenset(source), frozenset(target)
    if f.domain != source:
        raise ValueError(f"The options element {f} is not over the tag set "
                         f"{helper.render_set(source)}.")
    if source == target:
        return f
    options = frozenset(options)
    values = f.as_dict()
    return OptionsElement(
        tuple((tag, values[tag] if tag in source else options)
              for tag in sorted(target)))


def _homomorphism_laws(universe: TagUniverse, options: frozenset,
                       budget: Budget, transport: Phi):
    tags = TagLattice(universe)
    tag_sets = tags.elements
    lattices = {A: OptionsLattice(A, options) for A in tag_sets}
    render = helper.render_set

    def transport_pairs(collection_size, min_size=0):

        def inner(pair):
            A, _ = pair
            return Cases.collections(lattices[A].elements, collection_size,
                                     min_size)

        return Cases.dependent(
            [(A, B) for A in tag_sets for B in tag_sets], inner)

    def _witness(A, B, S, left, right, relation):
        return {
            "source": render(A),
            "target": render(B),
            "collection": [str(f) for f in S],
            "left": str(left),
            "right": str(right),
            "relation": relation,
        }

    def preserves_meets(case):
        (A, B), S = case
        left = options_meet([transport(A, B, f, options) for f in S],
                            domain=B,
                            options=options)
        right = transport(A, B, options_meet(S, domain=A, options=options),
                          options)
        if left != right:
            return _witness(A, B, S, left, right,
                            "⨅{φ(f) | f ∈ S} = φ(⨅S)")

    def preserves_joins(case):
        (A, B), S = case
        left = options_join([transport(A, B, f, options) for f in S], domain=B)
        right = transport(A, B, options_join(S, domain=A), options)
        if left != right:
            return _witness(A, B, S, left, right,
                            "⨆{φ(f) | f ∈ S} = φ(⨆S)")

    def identity(case):
        A, f = case
        result = transport(A, A, f, options)
        if result != f:
            return {"source": render(A), "f": str(f), "result": str(result),
                    "relation": "φ_{A→A}(f) = f"}

    def consistency(case):
        (A, B), f = case
        direct = transport(A, B, f, options)
        through = transport(A, B, transport(A, A, f, options), options)
        if direct != through:
            return {"source": render(A), "target": render(B), "f": str(f),
                    "left": str(through), "right": str(direct),
                    "relation": "φ_{A→B}(φ_{A→A}(f)) = φ_{A→B}(f)"}

    chains = [(A, B, C)
              for A in tag_sets
              for B in tag_sets
              for C in tag_sets
              if tags.leq(A, B) and tags.leq(B, C)]

    def composes(case):
        (A, B, C), f = case
        left = transport(B, C, transport(A, B, f, options), options)
        right = transport(A, C, f, options)
        if left != right:
            return {"chain": [render(A), render(B), render(C)], "f": str(f),
                    "left": str(left), "right": str(right),
                    "relation": "φ_{B→C}(φ_{A→B}(f)) = φ_{A→C}(f)"}

    def order_corollary(case):
        (A, B, C), (f, g) = case
        if not options_leq(transport(A, C, f, options), g):
            return None
        left = transport(A, B, f, options)
        right = transport(C, B, g, options)
        if not options_leq(left, right):
            return {"chain": [render(A), render(B), render(C)], "f": str(f),
                    "g": str(g), "left": str(left), "right": str(right),
                    "relation": "φ_{A→C}(f) ⊑ g ⟹ φ_{A→B}(f) ⊑ φ_{C→B}(g)"}

    return [
        Law("phi preserves meets", transport_pairs(budget.subset_size),
            preserves_meets),
        # The empty join is λt.∅ over A but φ sends tags of B - A to O.
        Law("phi preserves joins", transport_pairs(budget.subset_size, 1),
            preserves_joins),
        Law("identity transport",
            Cases.dependent(tag_sets, lambda A: Cases.of(lattices[A].elements)),
            identity),
        Law("transport consistency",
            Cases.dependent([(A, B) for A in tag_sets for B in tag_sets],
                            lambda pair: Cases.of(lattices[pair[0]].elements)),
            consistency),
        Law("transport composes along chains",
            Cases.dependent(chains,
                            lambda chain: Cases.of(lattices[chain[0]].elements)),
            composes),
        Law("order corollary",
            Cases.dependent(
                chains, lambda chain: Cases.product(
                    Cases.of(lattices[chain[0]].elements),
                    Cases.of(lattices[chain[2]].elements))), order_corollary),
    ]


def check_homomorphism(universe: Union[TagUniverse, Iterable[str]],
                       options: Iterable[Hashable],
                       budget: Optional[Budget] = None,
                       *,
                       max_tags: int = MAX_TAGS,
                       max_options: int = MAX_OPTIONS,
                       phi_fn: Phi = phi) -> LawReport:
    """Check that ``phi`` is a lattice homomorphism for all pairs of tag sets.

    Args:
        universe: The tag universe ``T``.
        options: The option universe ``O``.
        budget: Check limits; the meet and join laws range over sub-collections
            of at most ``budget.subset_size`` elements plus the full collection.
            Joins are checked over non-empty collections only.
        max_tags: Largest accepted tag universe.
        max_options: Largest accepted option universe.
        phi_fn: The transport under test, :py:func:`phi` by default.

    Raises:
        CapacityError: If the universes exceed ``max_tags`` or ``max_options``.
    """
    universe = as_universe(universe)
    options = frozenset(options)
    budget = budget or Budget()
    if len(universe) > max_tags or len(options) > max_options:
        raise CapacityError(
            f"Homomorphism checks are limited to {max_tags} tags and "
            f"{max_options} options, got {len(universe)} and {len(options)}.")
    laws = _homomorphism_laws(universe, options, budget, phi_fn)
    report = check_laws(
        f"phi over {helper.render_set(universe.tags)}/{helper.render_set(options)}",
        laws, budget)
    return report


__all__ = ["phi", "check_homomorphism"]
