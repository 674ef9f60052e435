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
"""Interval constraints on a reliability grid.

Reliabilities live in ``(0,1]``. To keep the lattice finite, interval endpoints
are restricted to the grid ``{k/n : 1 <= k <= n}`` for a grid denominator ``n``.
The lattice contains

* ``⊥``, the unsatisfiable constraint,
* every closed interval ``[k/n, l/n]`` with ``k <= l``,
* the top element ``(0,1]``, which is the only interval with an open lower
  bound.

The meet intersects intervals (``⊥`` if the intersection is empty) and the join
takes the interval hull. All endpoints are exact rationals.
"""

import dataclasses
import fractions
import re
from typing import Iterable, Optional, Tuple

import galoistrans.helper as helper
import galoistrans.lattice as lattice
from galoistrans.lattice.base import ElementError
from galoistrans.lattice.base import FiniteLattice

GRID_DENOMINATOR = 20

_INTERVAL = re.compile(r"^\s*([\[(])\s*([^,\s]+)\s*,\s*([^\]\s]+)\s*\]\s*$")


@dataclasses.dataclass(frozen=True, order=False)
class IntervalElement:
    """An element of the interval lattice.

    ``kind`` is ``"bottom"`` or ``"interval"``. For intervals, ``lo <= hi`` and
    the interval is closed unless ``lo_open`` is set, which only happens for the
    top element ``(0,1]``.
    """

    kind: str
    lo: Optional[fractions.Fraction] = None
    hi: Optional[fractions.Fraction] = None
    lo_open: bool = False

    @property
    def is_bottom(self) -> bool:
        return self.kind == "bottom"

    def contains_point(self, value: fractions.Fraction) -> bool:
        """Whether ``value`` satisfies the constraint."""
        if self.is_bottom:
            return False
        above = value > self.lo if self.lo_open else value >= self.lo
        return above and value <= self.hi

    def __str__(self):
        if self.is_bottom:
            return "⊥"
        if self.lo_open:
            return "(0,1]"
        return (f"[{helper.format_rational(self.lo)},"
                f"{helper.format_rational(self.hi)}]")


BOTTOM = IntervalElement("bottom")
TOP = IntervalElement("interval", fractions.Fraction(0), fractions.Fraction(1),
                      True)


def grid_values(denominator: int) -> Tuple[fractions.Fraction, ...]:
    """The grid points ``k/n`` for ``1 <= k <= n`` in increasing order."""
    if denominator < 1:
        raise ElementError(
            f"The grid denominator must be positive, got {denominator}.")
    return tuple(
        fractions.Fraction(k, denominator) for k in range(1, denominator + 1))


def _lower_key(element: IntervalElement):
    # An open bound at lo admits fewer points than a closed bound at lo.
    return (element.lo, element.lo_open)


@lattice.parametrize("interval-{denominator}", denominator=(2, 4, 20))
@lattice.register("interval")
class IntervalLattice(FiniteLattice):
    """Grid intervals in ``(0,1]`` ordered by containment.

    Args:
        denominator: The grid denominator ``n``.
    """

    def __init__(self, denominator: int = GRID_DENOMINATOR):
        self.denominator = int(denominator)
        self.grid = grid_values(self.denominator)

    def _enumerate(self):
        yield BOTTOM
        for i, lo in enumerate(self.grid):
            for hi in self.grid[i:]:
                yield IntervalElement("interval", lo, hi)
        yield TOP

    def _key(self):
        return ("interval", self.denominator)

    @property
    def cardinality(self):
        return self.denominator * (self.denominator + 1) // 2 + 2

    def describe(self):
        return f"interval-{self.denominator}"

    def interval(self, lo, hi) -> IntervalElement:
        """The closed interval ``[lo, hi]``.

        Raises:
            ElementError: If an endpoint is not on the grid, or ``lo > hi``.
        """
        lo, hi = helper.parse_rational(lo), helper.parse_rational(hi)
        for value in (lo, hi):
            if value not in self.grid:
                raise ElementError(
                    f"Endpoint {helper.format_rational(value)} is not on the "
                    f"grid with denominator {self.denominator}.")
        if lo > hi:
            raise ElementError(
                f"Empty interval [{helper.format_rational(lo)},"
                f"{helper.format_rational(hi)}]; use the bottom element.")
        return IntervalElement("interval", lo, hi)

    def parse(self, text: str) -> IntervalElement:
        """Parse a rendered element, e.g. ``"[4/5,1]"``, ``"(0,1]"`` or ``"⊥"``."""
        if text.strip() in ("⊥", "bottom"):
            return BOTTOM
        match = _INTERVAL.match(text)
        if match is None:
            raise ElementError(f"Cannot parse interval {text!r}.")
        bracket, lo, hi = match.groups()
        if bracket == "(":
            if (helper.parse_rational(lo), helper.parse_rational(hi)) != (0, 1):
                raise ElementError(
                    f"Only (0,1] may have an open lower bound, got {text!r}.")
            return TOP
        return self.interval(lo, hi)

    def points(self, element: IntervalElement) -> Tuple[fractions.Fraction, ...]:
        """The grid points satisfying the constraint."""
        return tuple(v for v in self.grid if element.contains_point(v))

    def contains(self, element):
        if not isinstance(element, IntervalElement):
            return False
        if element.is_bottom or element == TOP:
            return element in (BOTTOM, TOP)
        return (element.lo in self.grid and element.hi in self.grid and
                element.lo <= element.hi and not element.lo_open)

    def leq(self, a, b):
        if a.is_bottom:
            return True
        if b.is_bottom:
            return False
        return _lower_key(b) <= _lower_key(a) and a.hi <= b.hi

    def meet_all(self, items: Iterable[IntervalElement]):
        items = tuple(items)
        if len(items) == 0:
            return TOP
        if any(item.is_bottom for item in items):
            return BOTTOM
        lower = max(items, key=_lower_key)
        hi = min(item.hi for item in items)
        if lower.lo > hi or (lower.lo == hi and lower.lo_open):
            return BOTTOM
        return IntervalElement("interval", lower.lo, hi, lower.lo_open)

    def join_all(self, items: Iterable[IntervalElement]):
        items = tuple(item for item in items if not item.is_bottom)
        if len(items) == 0:
            return BOTTOM
        lower = min(items, key=_lower_key)
        hi = max(item.hi for item in items)
        return IntervalElement("interval", lower.lo, hi, lower.lo_open)


def interval_lattice(grid_denominator: int = GRID_DENOMINATOR) -> IntervalLattice:
    """Interval constraints with endpoints on the grid ``k/grid_denominator``."""
    return IntervalLattice(grid_denominator)
