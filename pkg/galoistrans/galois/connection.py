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
"""Galois connections between a properties lattice and a model lattice.

A :py:class:`GaloisConnection` pairs an abstraction ``alpha`` from the concrete
lattice of properties to the abstract lattice of a modeling formalism with a
concretization ``gamma`` back. It is valid if both maps are monotone,
``gamma(alpha(p)) ⊒ p`` for every property ``p``, ``alpha(gamma(m)) ⊑ m`` for
every model set ``m``, and ``gamma`` maps meets to meets.

Connections are never trusted: :py:func:`check_galois` verifies the laws on the
enumerated lattices, and operations that rely on them
(:py:func:`induced_relation`, :py:func:`transform`) refuse connections whose
laws fail.
"""

from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Tuple

import galoistrans.helper as helper
from galoistrans.galois.relation import CorrectnessRelation
from galoistrans.galois.relation import check_correctness_relation
from galoistrans.lattice.base import FiniteLattice
from galoistrans.lattice.laws import Budget
from galoistrans.lattice.laws import Cases
from galoistrans.lattice.laws import Law
from galoistrans.lattice.laws import LawReport
from galoistrans.lattice.laws import check_laws
from galoistrans.lattice.powerset import PowersetLattice


class LawViolationError(RuntimeError):
    """An operation required a law that does not hold.

    Attributes:
        report: The :py:class:`LawReport` with the failed law and its witness.
    """

    def __init__(self, message: str, report: LawReport):
        super().__init__(message)
        self.report = report


class ConcreteDomainError(ValueError):
    """Two connections that must share their concrete lattice do not."""


class ModelLiftError(ValueError):
    """A single model is not well formed for the formalism."""


class ModelSpace:
    """How single, fully specified models relate to abstract elements.

    Abstract elements represent sets of models. A model space tells which models
    an element represents and how a single model is lifted to the element
    representing only that model.

    Args:
        members: Yields the models represented by an element, in a deterministic
            order (canonical least first).
        contains: Decides whether an element represents a model.
        lift: Maps a model to the element ``{m}``; raises
            :py:class:`ModelLiftError` for malformed models.
        render: Text rendering of a model.
    """

    def __init__(self,
                 members: Callable[[Any], Iterable[Hashable]],
                 contains: Callable[[Any, Hashable], bool],
                 lift: Callable[[Hashable], Any],
                 render: Callable[[Hashable], str] = str):
        self.members = members
        self.contains = contains
        self.lift = lift
        self.render = render

    def is_empty(self, element) -> bool:
        """Whether the element represents no model at all."""
        return next(iter(self.members(element)), _NOTHING) is _NOTHING

    @classmethod
    def of_powerset(cls, lattice: PowersetLattice) -> "ModelSpace":
        """Models are the universe values, elements are sets of them."""

        def lift(model):
            if model not in lattice.universe:
                raise ModelLiftError(
                    f"{model!r} is not a model of {lattice.describe()}.")
            return frozenset((model,))

        return cls(
            members=helper.sorted_canonical,
            contains=lambda element, model: model in element,
            lift=lift,
            render=helper.render_value,
        )


_NOTHING = object()


class GaloisConnection:
    """A candidate Galois connection ``(concrete, abstract, alpha, gamma)``.

    Args:
        concrete: The concrete lattice ``P`` of properties.
        abstract: The abstract lattice ``M`` of model sets.
        alpha: Abstraction ``P -> M``.
        gamma: Concretization ``M -> P``.
        name: Name used in reports and error messages.
        models: Optional :py:class:`ModelSpace` of the abstract lattice, needed
            for selection and refinement.
    """

    def __init__(self,
                 concrete: FiniteLattice,
                 abstract: FiniteLattice,
                 alpha: Callable[[Any], Any],
                 gamma: Callable[[Any], Any],
                 name: str = "connection",
                 models: Optional[ModelSpace] = None):
        self.concrete = concrete
        self.abstract = abstract
        self.alpha = alpha
        self.gamma = gamma
        self.name = name
        self.models = models
        self._reports: Dict[Tuple, LawReport] = {}

    def verify(self, budget: Optional[Budget] = None) -> LawReport:
        """The :py:func:`check_galois` report, computed once per budget."""
        budget = budget or Budget()
        key = (budget.subset_size, budget.max_checks, budget.max_elements,
               budget.seed)
        if key not in self._reports:
            self._reports[key] = check_galois(self, budget)
        return self._reports[key]

    def require_laws(self, budget: Optional[Budget] = None) -> LawReport:
        """Verify the connection and raise if a law fails.

        Raises:
            LawViolationError: Naming the first failed law.
        """
        report = self.verify(budget)
        if not report.passed:
            failed = report.failures[0]
            raise LawViolationError(
                f"The connection {self.name} violates the law "
                f"{failed.law!r}: {failed.witness}", report)
        return report

    def __repr__(self):
        return (f"GaloisConnection({self.name}: {self.concrete.describe()} ⇄ "
                f"{self.abstract.describe()})")


def identity_connection(lattice: FiniteLattice) -> GaloisConnection:
    """The connection with ``P = M`` and both maps the identity."""
    return GaloisConnection(lattice, lattice, lambda p: p, lambda m: m,
                            name=f"identity on {lattice.describe()}")


def _galois_laws(c: GaloisConnection, budget: Budget) -> List[Law]:
    P, M = c.concrete, c.abstract
    alpha, gamma = c.alpha, c.gamma

    def monotone(f, source, target, what):

        def check(case):
            a, x = case
            b = source.join(a, x)
            fa, fb = f(a), f(b)
            if not target.leq(fa, fb):
                return {"a": source.render(a), "b": source.render(b),
                        f"{what}(a)": target.render(fa),
                        f"{what}(b)": target.render(fb),
                        "relation": f"a ⊑ b but {what}(a) ⋢ {what}(b)"}

        return check

    def extensive(p):
        a = alpha(p)
        if not M.contains(a):
            return {"p": P.render(p), "alpha(p)": repr(a),
                    "relation": "alpha(p) is not an abstract element"}
        back = gamma(a)
        if not P.leq(p, back):
            return {"p": P.render(p), "alpha(p)": M.render(a),
                    "gamma(alpha(p))": P.render(back),
                    "relation": "p ⊑ gamma(alpha(p))"}

    def reductive(m):
        g = gamma(m)
        if not P.contains(g):
            return {"m": M.render(m), "gamma(m)": repr(g),
                    "relation": "gamma(m) is not a concrete element"}
        back = alpha(g)
        if not M.leq(back, m):
            return {"m": M.render(m), "gamma(m)": P.render(g),
                    "alpha(gamma(m))": M.render(back),
                    "relation": "alpha(gamma(m)) ⊑ m"}

    def multiplicative(S):
        left = P.meet_all(gamma(m) for m in S)
        right = gamma(M.meet_all(S))
        if left != right:
            return {"collection": [M.render(m) for m in S],
                    "meet of gamma": P.render(left),
                    "gamma of meet": P.render(right),
                    "relation": "⨅{gamma(m) | m ∈ S} = gamma(⨅S)"}

    def adjunction(case):
        p, m = case
        left, right = M.leq(alpha(p), m), P.leq(p, gamma(m))
        if left != right:
            return {"p": P.render(p), "m": M.render(m),
                    "alpha(p) ⊑ m": left, "p ⊑ gamma(m)": right,
                    "relation": "alpha(p) ⊑ m ⟺ p ⊑ gamma(m)"}

    return [
        Law("alpha is monotone", Cases.tuples(P.elements, 2),
            monotone(alpha, P, M, "alpha")),
        Law("gamma is monotone", Cases.tuples(M.elements, 2),
            monotone(gamma, M, P, "gamma")),
        Law("gamma after alpha is extensive", Cases.of(P.elements), extensive),
        Law("alpha after gamma is reductive", Cases.of(M.elements), reductive),
        Law("gamma is completely multiplicative",
            Cases.collections(M.elements, budget.subset_size), multiplicative),
        Law("adjunction",
            Cases.product(Cases.of(P.elements), Cases.of(M.elements)),
            adjunction),
    ]


def check_galois(c: GaloisConnection,
                 budget: Optional[Budget] = None) -> LawReport:
    """Check the Galois connection laws of ``c``.

    Besides the laws, the report notes whether ``alpha(gamma(m)) = m`` holds for
    every abstract element (``reduction_exact``); this is informational only.

    Raises:
        CapacityError: If either lattice exceeds ``budget.max_elements``.
    """
    budget = budget or Budget()
    c.concrete.check_capacity(budget.max_elements, what="concrete lattice")
    c.abstract.check_capacity(budget.max_elements, what="abstract lattice")
    report = check_laws(c.name, _galois_laws(c, budget), budget)
    if report.passed:
        report.notes["reduction_exact"] = all(
            c.alpha(c.gamma(m)) == m for m in c.abstract.elements)
    else:
        report.notes["reduction_exact"] = None
    return report


def induced_relation(c: GaloisConnection,
                     base: CorrectnessRelation,
                     budget: Optional[Budget] = None) -> CorrectnessRelation:
    """The correctness relation on models induced by ``c``: ``s ⊨ m ⟺ s ⊨ gamma(m)``.

    Raises:
        LawViolationError: If ``c`` is not a Galois connection or ``base`` is
            not a correctness relation.
    """
    if base.lattice != c.concrete:
        raise ConcreteDomainError(
            f"The relation {base.name} is over {base.lattice.describe()}, but "
            f"the connection {c.name} is over {c.concrete.describe()}.")
    c.require_laws(budget)
    report = check_correctness_relation(base, budget)
    if not report.passed:
        failed = report.failures[0]
        raise LawViolationError(
            f"{base.name} is not a correctness relation, it violates "
            f"{failed.law!r}: {failed.witness}", report)
    gamma = c.gamma
    return CorrectnessRelation(base.systems,
                               c.abstract,
                               lambda s, m: base.holds(s, gamma(m)),
                               name=f"{base.name} induced by {c.name}",
                               render_system=base.render_system)


def transform(c1: GaloisConnection,
              c2: GaloisConnection,
              m1,
              verify: bool = True,
              budget: Optional[Budget] = None):
    """Transform the model ``m1`` of ``c1`` into the formalism of ``c2``.

    The result is ``alpha2(gamma1(m1))``: the constraints expressed by ``m1`` are
    concretized to properties and abstracted again by the target formalism.
    Every system correct for ``m1`` is correct for the result.

    Args:
        c1: Connection of the source formalism.
        c2: Connection of the target formalism.
        m1: An element of ``c1.abstract``.
        verify: Check both connections first. Soundness is only guaranteed for
            verified connections.
        budget: Law check limits.

    Raises:
        ConcreteDomainError: If the connections have different concrete lattices.
        LawViolationError: If ``verify`` is set and a connection fails its laws.
    """
    if c1.concrete != c2.concrete:
        raise ConcreteDomainError(
            f"Cannot transform from {c1.name} to {c2.name}: their concrete "
            f"lattices {c1.concrete.describe()} and {c2.concrete.describe()} "
            f"differ.")
    c1.abstract.validate(m1)
    if verify:
        c1.require_laws(budget)
        c2.require_laws(budget)
    return c2.alpha(c1.gamma(m1))


def check_transform_soundness(c1: GaloisConnection,
                              c2: GaloisConnection,
                              base: CorrectnessRelation,
                              budget: Optional[Budget] = None) -> LawReport:
    """Check that :py:func:`transform` preserves induced correctness.

    For every system ``s`` and source model ``m1`` with ``s ⊨ m1``, checks
    ``s ⊨ transform(c1, c2, m1)``.
    """
    budget = budget or Budget()
    source = induced_relation(c1, base, budget)
    target = induced_relation(c2, base, budget)

    def preserved(case):
        s, m1 = case
        m2 = transform(c1, c2, m1, verify=False)
        if not target(s, m2):
            return {"system": base.render_system(s),
                    "m1": c1.abstract.render(m1),
                    "m2": c2.abstract.render(m2),
                    "relation": "s ⊨ m1 but not s ⊨ transform(m1)"}

    law = Law(
        "transform preserves correctness",
        Cases.dependent(base.systems, lambda s: Cases.of(source.described(s))),
        preserved)
    return check_laws(f"transform {c1.name} → {c2.name}", [law], budget)


__all__ = [
    "LawViolationError",
    "ConcreteDomainError",
    "ModelLiftError",
    "ModelSpace",
    "GaloisConnection",
    "identity_connection",
    "check_galois",
    "induced_relation",
    "transform",
    "check_transform_soundness",
]
