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
import hypothesis
import hypothesis.strategies as st

import galoistrans.lattice as lattice
from galoistrans.lattice.interval import BOTTOM
from galoistrans.lattice.interval import TOP

GRID = 20
L = lattice.IntervalLattice(GRID)


@st.composite
def intervals(draw):
    kind = draw(st.sampled_from(["bottom", "top", "closed", "closed", "closed"]))
    if kind == "bottom":
        return BOTTOM
    if kind == "top":
        return TOP
    lo = draw(st.integers(1, GRID))
    hi = draw(st.integers(lo, GRID))
    return L.interval(f"{lo}/{GRID}", f"{hi}/{GRID}")


points = st.sampled_from(L.grid)


@hypothesis.given(intervals(), intervals(), points)
def test_meet_is_intersection(a, b, x):
    m = L.meet(a, b)
    assert L.contains(m)
    assert m.contains_point(x) == (a.contains_point(x) and b.contains_point(x))


@hypothesis.given(intervals(), intervals())
def test_join_is_hull(a, b):
    j = L.join(a, b)
    assert L.leq(a, j) and L.leq(b, j)
    inside = [x for x in L.grid if a.contains_point(x) or b.contains_point(x)]
    if inside and j != TOP:
        assert j.lo == min(inside) and j.hi == max(inside)


@hypothesis.given(intervals(), intervals())
def test_order_agrees_with_meet(a, b):
    assert L.leq(a, b) == (L.meet(a, b) == a)
    assert L.leq(a, b) == (L.join(a, b) == b)


@hypothesis.given(intervals(), intervals(), intervals())
def test_meet_is_greatest_lower_bound(a, b, c):
    if L.leq(c, a) and L.leq(c, b):
        assert L.leq(c, L.meet(a, b))


@hypothesis.given(intervals())
def test_parse_renders_back(a):
    assert L.parse(str(a)) == a
