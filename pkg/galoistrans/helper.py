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
"""Collection of helper functions that did not fit into own modules."""

import fractions
import itertools
import math
import random
from typing import Any, Hashable, Iterable, Iterator, Sequence, Tuple, Union

Rational = fractions.Fraction


def canonical_key(value: Any) -> Tuple:
    """Sort key that orders values of mixed type deterministically.

    Values of one type compare natively; values of different types are grouped
    by type name. Tuples and frozensets are compared element-wise in canonical
    order, so sets of options and pairs of tags sort reproducibly.
    """
    if isinstance(value, (frozenset, set)):
        return ("set", len(value), tuple(canonical_key(v) for v in sorted_canonical(value)))
    if isinstance(value, tuple):
        return ("tuple", len(value), tuple(canonical_key(v) for v in value))
    if isinstance(value, (int, fractions.Fraction)) and not isinstance(
            value, bool):
        return ("number", fractions.Fraction(value))
    return (type(value).__name__, value)


def sorted_canonical(values: Iterable[Any]) -> list:
    """Return ``values`` sorted by :py:func:`canonical_key`."""
    return sorted(values, key=canonical_key)


def powerset(universe: Iterable[Hashable]) -> Iterator[frozenset]:
    """Enumerate all subsets of ``universe`` by size, then canonical order."""
    items = sorted_canonical(set(universe))
    for size in range(len(items) + 1):
        for combination in itertools.combinations(items, size):
            yield frozenset(combination)


def subsets(elements: Sequence[Any],
            max_size: int,
            min_size: int = 0) -> Iterator[Tuple]:
    """Enumerate the finite sub-collections used to check complete-lattice laws.

    Yields every combination of at most ``max_size`` elements, in
    ``itertools.combinations`` order, followed by the full collection if it is
    larger than ``max_size``. Empty, binary and full collections generate all
    finite meets and joins by associativity. Collections smaller than
    ``min_size`` are skipped.
    """
    for size in range(min_size, min(max_size, len(elements)) + 1):
        yield from itertools.combinations(elements, size)
    if len(elements) > max_size:
        yield tuple(elements)


def count_subsets(num_elements: int, max_size: int, min_size: int = 0) -> int:
    """Number of collections yielded by :py:func:`subsets`."""
    total = sum(
        math.comb(num_elements, size)
        for size in range(min_size, min(max_size, num_elements) + 1))
    if num_elements > max_size:
        total += 1
    return total


def sample_subset(rng: random.Random,
                  elements: Sequence[Any],
                  max_size: int,
                  min_size: int = 0) -> Tuple:
    """Draw one collection from the same family as :py:func:`subsets`."""
    if len(elements) > max_size and rng.random() < 0.05:
        return tuple(elements)
    size = rng.randint(min_size, min(max_size, len(elements)))
    return tuple(rng.sample(list(elements), size))


def parse_rational(value: Union[str, int, float, fractions.Fraction]) -> Rational:
    """Parse an exact rational from ``"num/den"``, a decimal string or a number.

    Floats are converted through their shortest decimal representation, so
    ``0.8`` becomes ``4/5`` rather than the nearest binary fraction.
    """
    if isinstance(value, bool):
        raise ValueError(f"Invalid rational value: {value!r}")
    if isinstance(value, fractions.Fraction):
        return value
    if isinstance(value, int):
        return fractions.Fraction(value)
    if isinstance(value, float):
        return fractions.Fraction(repr(value))
    if isinstance(value, str):
        try:
            return fractions.Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Invalid rational value: {value!r}") from e
    raise ValueError(f"Invalid rational value: {value!r}")


def format_rational(value: fractions.Fraction) -> str:
    """Render a rational as ``"num/den"``, also for integers (``"1/1"``)."""
    value = fractions.Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def render_value(value: Any) -> str:
    """Canonical text rendering of an option or tag."""
    if isinstance(value, fractions.Fraction):
        return format_rational(value)
    if isinstance(value, tuple):
        return "(" + ",".join(render_value(v) for v in value) + ")"
    return str(value)


def render_set(values: Iterable[Any]) -> str:
    """Render a set as ``{a,b}`` in canonical order, ``∅`` when empty."""
    values = sorted_canonical(values)
    if len(values) == 0:
        return "∅"
    return "{" + ",".join(render_value(v) for v in values) + "}"
