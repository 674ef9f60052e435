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
import fractions
import random

import pytest

import galoistrans.domains as domains
from galoistrans.domains import SystemInstance
from galoistrans.domains import Universe
from galoistrans.lattice import CapacityError
from galoistrans.lattice import ElementError

F = fractions.Fraction
HALF, ONE = F(1, 2), F(1)


@pytest.fixture
def chain():
    return Universe(["a-b", "b-c"], nodes=["a", "b", "c"], grid=2)


def test_series_and_parallel_formulas():
    assert domains.series_reliability([HALF, HALF]) == F(1, 4)
    assert domains.series_reliability([]) == 1
    assert domains.parallel_reliability([HALF, HALF]) == F(3, 4)
    assert domains.parallel_reliability([]) == 0
    assert domains.parallel_reliability([F(9, 10), F(4, 5)]) == F(49, 50)


def test_series_system():
    s = SystemInstance.build({"a-b": HALF, "b-c": HALF}, edges=["a-b", "b-c"])
    assert domains.two_terminal_reliability(s, "a", "c") == F(1, 4)
    assert domains.two_terminal_reliability(s, "c", "a") == F(1, 4)


def test_parallel_system():
    s = SystemInstance.build({"a-b": HALF, "a-c": HALF, "b-c": ONE},
                             edges=["a-b", "a-c", "b-c"])
    expected = domains.parallel_reliability(
        [HALF, domains.series_reliability([HALF, ONE])])
    assert expected == F(3, 4)
    assert domains.two_terminal_reliability(s, "a", "c") == expected


def test_bridge_system():
    lines = ["a-s", "b-s", "a-b", "a-t", "b-t"]
    s = SystemInstance.build({line: HALF for line in lines}, edges=lines)
    assert domains.two_terminal_reliability(s, "s", "t") == HALF


def test_lines_without_component_always_work():
    s = SystemInstance.build({}, edges=["a-b", "b-c"])
    assert domains.two_terminal_reliability(s, "a", "c") == 1
    disconnected = SystemInstance.build({}, edges=["a-b"], nodes="abc")
    assert domains.two_terminal_reliability(disconnected, "a", "c") == 0
    assert domains.two_terminal_reliability(disconnected, "c", "c") == 1


def test_two_terminal_errors():
    s = SystemInstance.build({}, edges=["a-b", "b-c", "a-c"])
    with pytest.raises(ElementError):
        domains.two_terminal_reliability(s, "a", "z")
    with pytest.raises(CapacityError):
        domains.two_terminal_reliability(s, "a", "c", max_edges=2)


def test_bound_over_unknown_reliabilities(chain):
    P = domains.PropertiesLattice(chain)
    p = P.element(topo={"a-b": ["present"], "b-c": ["present"],
                        "a-c": ["absent"]})
    bound = domains.reliability_bound(p, "a", "c", chain)
    assert (bound.low, bound.high) == (F(1, 4), ONE)
    assert bound.systems == 4
    assert bound.argmin.reliability == (("a-b", HALF), ("b-c", HALF))
    assert bound.argmax.reliability == (("a-b", ONE), ("b-c", ONE))
    assert bound.to_dict()["low"] == "1/4"
    assert bound.to_dict()["high"] == "1/1"


def test_bound_of_determined_system(chain):
    P = domains.PropertiesLattice(chain)
    p = P.element(rel={"a-b": ["1/2"], "b-c": ["1/2"]},
                  topo={"a-b": ["present"], "b-c": ["present"],
                        "a-c": ["absent"]})
    bound = domains.reliability_bound(p, "a", "c", chain)
    assert (bound.low, bound.high) == (F(1, 4), F(1, 4))
    assert bound.systems == 1
    assert bound.argmin == bound.argmax


def test_bound_over_everything(chain):
    bound = domains.reliability_bound(
        domains.PropertiesLattice(chain).top, "a", "c", chain)
    assert bound.low == 0
    assert bound.high == 1
    assert bound.systems == domains.count_all_systems(chain)


def test_bound_errors(chain):
    P = domains.PropertiesLattice(chain)
    inconsistent = P.element(rel={"a-b": []})
    with pytest.raises(domains.InconsistentPropertiesError):
        domains.reliability_bound(inconsistent, "a", "c", chain)
    with pytest.raises(domains.BudgetExceededError):
        domains.reliability_bound(P.top, "a", "c", chain, budget=1)
    with pytest.raises(ElementError):
        domains.reliability_bound(P.top, "a", "z", chain)
    with pytest.raises(CapacityError):
        domains.reliability_bound(P.top, "a", "c", chain, max_edges=1)


def test_bound_is_monotone(chain):
    P = domains.PropertiesLattice(chain)
    rng = random.Random(0)
    elements = [p for p in P.elements if not domains.is_inconsistent(p)]
    compared = 0
    while compared < 20:
        p2 = rng.choice(elements)
        p1 = P.meet(p2, rng.choice(elements))
        if domains.is_inconsistent(p1):
            continue
        assert P.leq(p1, p2)
        outer = domains.reliability_bound(p2, "a", "c", chain)
        inner = domains.reliability_bound(p1, "a", "c", chain)
        assert outer.contains(inner)
        assert inner.systems <= outer.systems
        compared += 1


def test_bound_with_unknown_line(chain):
    P = domains.PropertiesLattice(chain)
    p = P.element(rel={"a-b": ["1/2"], "b-c": ["1/2"]},
                  topo={"a-b": ["present"], "b-c": ["present"]})
    bound = domains.reliability_bound(p, "a", "c", chain)
    assert (bound.low, bound.high) == (F(1, 4), ONE)
    assert bound.systems == 2
    assert bound.argmin.edges == frozenset({"a-b", "b-c"})
