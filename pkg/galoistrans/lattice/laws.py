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
"""Law checking over finite enumerations.

A law is a predicate over the cases of a :py:class:`Cases` enumeration. When the
enumeration fits into the check budget every case is visited and the law is
reported as exhaustive. Larger enumerations are replaced by seeded random draws
from the same family of cases; the result then says ``exhaustive = False`` and a
:py:class:`SamplingWarning` is emitted.

The first failing case in enumeration order is reported as the witness. Cases
are enumerated from small to large elements, so witnesses tend to be minimal.

:py:func:`check_lattice_laws` applies this machinery to the complete-lattice
axioms. :py:mod:`galoistrans.tagopts.homomorphism` and :py:mod:`galoistrans.galois`
build their own laws with the same helpers.
"""

import itertools
import random
import warnings
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence

import joblib
import literate_dataclasses as dataclasses

import galoistrans.helper as helper
import galoistrans.util as util
from galoistrans.lattice.base import FiniteLattice

SUBSET_SIZE = 3
MAX_CHECKS = 200_000
MAX_ELEMENTS = 20_000

Witness = Optional[Dict[str, Any]]


class SamplingWarning(UserWarning):
    """An enumeration exceeded the budget and was checked on random samples."""


@dataclasses.dataclass
class Budget:
    """Limits shared by all law checkers."""

    subset_size: int = dataclasses.field(
        default=SUBSET_SIZE,
        doc="""Largest sub-collection size for meet and join checks.""")
    max_checks: int = dataclasses.field(
        default=MAX_CHECKS,
        doc="""Cases per law before switching to seeded sampling.""")
    max_elements: int = dataclasses.field(
        default=MAX_ELEMENTS, doc="""Largest lattice accepted by the checkers.""")
    seed: int = dataclasses.field(default=0,
                                  doc="""Seed of the sampling fallback.""")
    jobs: int = dataclasses.field(
        default=1, doc="""Laws evaluated in parallel threads.""")
    progress: bool = dataclasses.field(
        default=False, doc="""Display a progress bar over laws.""")


class Cases:
    """A finite family of cases with an exact count and a sampler.

    Args:
        enumerate: Returns a fresh iterator over all cases.
        count: The number of cases the iterator yields.
        sample: Draws one case using the given random generator.
    """

    def __init__(self, enumerate: Callable[[], Iterator], count: int,
                 sample: Callable[[random.Random], Any]):
        self.enumerate = enumerate
        self.count = count
        self.sample = sample

    @classmethod
    def single(cls, case=None) -> "Cases":
        return cls(lambda: iter((case,)), 1, lambda rng: case)

    @classmethod
    def of(cls, items: Sequence) -> "Cases":
        items = tuple(items)
        return cls(lambda: iter(items), len(items), lambda rng: rng.choice(items))

    @classmethod
    def tuples(cls, items: Sequence, repeat: int) -> "Cases":
        """All ``repeat``-tuples over ``items``."""
        items = tuple(items)
        return cls(lambda: itertools.product(items, repeat=repeat),
                   len(items)**repeat,
                   lambda rng: tuple(rng.choice(items) for _ in range(repeat)))

    @classmethod
    def collections(cls,
                    items: Sequence,
                    max_size: int,
                    min_size: int = 0) -> "Cases":
        """Sub-collections of ``min_size`` to ``max_size`` items, plus the full
        collection."""
        items = tuple(items)
        return cls(lambda: helper.subsets(items, max_size, min_size),
                   helper.count_subsets(len(items), max_size, min_size),
                   lambda rng: helper.sample_subset(rng, items, max_size, min_size))

    @classmethod
    def product(cls, *families: "Cases") -> "Cases":
        """All combinations of one case from each family."""
        count = 1
        for family in families:
            count *= family.count
        return cls(
            lambda: itertools.product(*(f.enumerate() for f in families)),
            count, lambda rng: tuple(f.sample(rng) for f in families))

    @classmethod
    def dependent(cls, outer: Sequence, inner: Callable[[Any], "Cases"]) -> "Cases":
        """Pairs ``(x, case)`` where ``case`` ranges over ``inner(x)``."""
        outer = tuple(outer)
        families = [(x, inner(x)) for x in outer]
        families = [(x, f) for x, f in families if f.count > 0]
        total = sum(f.count for _, f in families)

        def _enumerate():
            for x, family in families:
                for case in family.enumerate():
                    yield x, case

        def _sample(rng):
            # Weighted by family size, so samples are uniform over all cases.
            position = rng.randrange(total)
            for x, family in families:
                if position < family.count:
                    return x, family.sample(rng)
                position -= family.count
            raise AssertionError("unreachable")

        if total == 0:
            return cls(lambda: iter(()), 0, None)
        return cls(_enumerate, total, _sample)


@dataclasses.dataclass
class Law:
    """A named predicate over a family of cases.

    ``check`` returns ``None`` when the case satisfies the law and a witness
    dictionary describing the violation otherwise.
    """

    name: str
    cases: Cases
    check: Callable[[Any], Witness]


@dataclasses.dataclass
class LawResult:
    """Outcome of checking a single law."""

    law: str
    passed: bool
    checked: int
    exhaustive: bool
    witness: Witness = None
    elapsed: Optional[float] = None

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        result = {
            "law": self.law,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "exhaustive": self.exhaustive,
        }
        if not self.passed:
            result["witness"] = self.witness
        if timing:
            result["elapsed"] = self.elapsed
        return result


@dataclasses.dataclass
class LawReport:
    """Ordered law results for one subject, plus free-form notes."""

    subject: str
    results: List[LawResult] = dataclasses.field(default_factory=list)
    notes: Dict[str, Any] = dataclasses.field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[LawResult]:
        return [result for result in self.results if not result.passed]

    @property
    def laws(self) -> List[str]:
        return [result.law for result in self.results]

    def result(self, law: str) -> LawResult:
        """The result of the law called ``law``."""
        for result in self.results:
            if result.law == law:
                return result
        raise KeyError(f"No law {law!r} in report on {self.subject}. "
                       f"Checked laws: {self.laws}.")

    def merge(self, other: "LawReport", prefix: str = "") -> "LawReport":
        """A new report holding the results of both, ``other`` renamed with ``prefix``."""
        renamed = [
            LawResult(prefix + result.law, result.passed, result.checked,
                      result.exhaustive, result.witness, result.elapsed)
            for result in other.results
        ]
        notes = dict(self.notes)
        notes.update({prefix + key: value for key, value in other.notes.items()})
        return LawReport(self.subject, self.results + renamed, notes)

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "status": "pass" if self.passed else "fail",
            "laws": [result.to_dict(timing) for result in self.results],
            "notes": self.notes,
        }


def check_law(law: Law, budget: Budget) -> LawResult:
    """Check one law within ``budget``."""
    with util.Stopwatch() as stopwatch:
        exhaustive = law.cases.count <= budget.max_checks
        if exhaustive:
            cases = law.cases.enumerate()
        else:
            warnings.warn(
                f"Law {law.name!r} has {law.cases.count} cases, exceeding the "
                f"budget of {budget.max_checks}; checking "
                f"{budget.max_checks} seeded samples instead.", SamplingWarning)
            rng = random.Random(f"{budget.seed}:{law.name}")
            cases = (law.cases.sample(rng) for _ in range(budget.max_checks))
        checked, witness = 0, None
        for case in cases:
            checked += 1
            witness = law.check(case)
            if witness is not None:
                break
    return LawResult(
        law=law.name,
        passed=witness is None,
        checked=checked,
        exhaustive=exhaustive,
        witness=witness,
        elapsed=stopwatch.elapsed,
    )


def check_laws(subject: str,
               laws: Sequence[Law],
               budget: Optional[Budget] = None) -> LawReport:
    """Check all ``laws`` and collect the results in declaration order.

    Laws are independent, so they are distributed over ``budget.jobs`` threads.
    """
    budget = budget or Budget()
    items = util.progress(laws, budget.progress, total=len(laws))
    results = joblib.Parallel(n_jobs=budget.jobs, prefer="threads")(
        joblib.delayed(check_law)(law, budget) for law in items)
    return LawReport(subject=subject, results=list(results))


def _lattice_laws(L: FiniteLattice, budget: Budget) -> List[Law]:
    r = L.render
    elements = L.elements
    singles = Cases.of(elements)
    pairs = Cases.tuples(elements, 2)
    triples = Cases.tuples(elements, 3)
    collections = Cases.collections(elements, budget.subset_size)

    def reflexivity(a):
        if not L.leq(a, a):
            return {"a": r(a), "relation": "a ⊑ a is false"}

    def antisymmetry(case):
        a, b = case
        if a != b and L.leq(a, b) and L.leq(b, a):
            return {"a": r(a), "b": r(b), "relation": "a ⊑ b and b ⊑ a"}

    def transitivity(case):
        a, b, c = case
        if L.leq(a, b) and L.leq(b, c) and not L.leq(a, c):
            return {"a": r(a), "b": r(b), "c": r(c),
                    "relation": "a ⊑ b ⊑ c but not a ⊑ c"}

    def _bound(S, result, below, what):
        if not L.contains(result):
            return {"collection": [r(x) for x in S], what: r(result),
                    "relation": f"{what} is not an element"}
        for x in S:
            if not (L.leq(result, x) if below else L.leq(x, result)):
                return {"collection": [r(x) for x in S], what: r(result),
                        "element": r(x),
                        "relation": f"{what} ⋢ element" if below else
                                    f"element ⋢ {what}"}

    def meet_lower(S):
        return _bound(S, L.meet_all(S), True, "meet")

    def join_upper(S):
        return _bound(S, L.join_all(S), False, "join")

    def meet_greatest(case):
        S, g = case
        m = L.meet_all(S)
        if all(L.leq(g, x) for x in S) and not L.leq(g, m):
            return {"collection": [r(x) for x in S], "meet": r(m),
                    "lower_bound": r(g), "relation": "lower_bound ⋢ meet"}

    def join_least(case):
        S, u = case
        j = L.join_all(S)
        if all(L.leq(x, u) for x in S) and not L.leq(j, u):
            return {"collection": [r(x) for x in S], "join": r(j),
                    "upper_bound": r(u), "relation": "join ⋢ upper_bound"}

    def _equal(left, right, relation):
        if left != right:
            return {"left": r(left), "right": r(right), "relation": relation}

    def empty_meet(_):
        return _equal(L.meet_all(()), L.top, "⨅∅ = ⊤")

    def empty_join(_):
        return _equal(L.join_all(()), L.bottom, "⨆∅ = ⊥")

    def top_is_join(_):
        return _equal(L.join_all(elements), L.top, "⨆elements = ⊤")

    def bottom_is_meet(_):
        return _equal(L.meet_all(elements), L.bottom, "⨅elements = ⊥")

    def order_agreement(case):
        a, b = case
        le, by_meet, by_join = L.leq(a, b), L.meet(a, b) == a, L.join(a, b) == b
        if not le == by_meet == by_join:
            return {"a": r(a), "b": r(b), "leq": le, "meet_is_a": by_meet,
                    "join_is_b": by_join,
                    "relation": "a ⊑ b ⟺ a ⊓ b = a ⟺ a ⊔ b = b"}

    def commutativity(case):
        a, b = case
        return (_equal(L.meet(a, b), L.meet(b, a), "a ⊓ b = b ⊓ a") or
                _equal(L.join(a, b), L.join(b, a), "a ⊔ b = b ⊔ a"))

    def associativity(case):
        a, b, c = case
        return (_equal(L.meet(L.meet(a, b), c), L.meet(a, L.meet(b, c)),
                       "(a ⊓ b) ⊓ c = a ⊓ (b ⊓ c)") or
                _equal(L.join(L.join(a, b), c), L.join(a, L.join(b, c)),
                       "(a ⊔ b) ⊔ c = a ⊔ (b ⊔ c)"))

    def idempotence(a):
        return (_equal(L.meet(a, a), a, "a ⊓ a = a") or
                _equal(L.join(a, a), a, "a ⊔ a = a"))

    def absorption(case):
        a, b = case
        return (_equal(L.meet(a, L.join(a, b)), a, "a ⊓ (a ⊔ b) = a") or
                _equal(L.join(a, L.meet(a, b)), a, "a ⊔ (a ⊓ b) = a"))

    return [
        Law("reflexivity", singles, reflexivity),
        Law("antisymmetry", pairs, antisymmetry),
        Law("transitivity", triples, transitivity),
        Law("meet is lower bound", collections, meet_lower),
        Law("meet is greatest lower bound",
            Cases.product(collections, singles), meet_greatest),
        Law("join is upper bound", collections, join_upper),
        Law("join is least upper bound", Cases.product(collections, singles),
            join_least),
        Law("empty meet is top", Cases.single(), empty_meet),
        Law("empty join is bottom", Cases.single(), empty_join),
        Law("top is join of all elements", Cases.single(), top_is_join),
        Law("bottom is meet of all elements", Cases.single(), bottom_is_meet),
        Law("order agrees with meet and join", pairs, order_agreement),
        Law("commutativity", pairs, commutativity),
        Law("associativity", triples, associativity),
        Law("idempotence", singles, idempotence),
        Law("absorption", pairs, absorption),
    ]


def check_lattice_laws(L: FiniteLattice,
                       budget: Optional[Budget] = None) -> LawReport:
    """Check the complete-lattice axioms on ``L``.

    Args:
        L: The lattice to check.
        budget: Check limits, defaults to :py:class:`Budget`.

    Returns:
        A :py:class:`LawReport` with one result per axiom.

    Raises:
        CapacityError: If ``L`` has more than ``budget.max_elements`` elements.
    """
    budget = budget or Budget()
    L.check_capacity(budget.max_elements)
    report = check_laws(L.describe(), _lattice_laws(L, budget), budget)
    report.notes["elements"] = L.size
    return report
