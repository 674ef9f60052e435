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

import pytest
from _util import small_budget

import galoistrans.domains as domains
import galoistrans.galois as galois
import galoistrans.lattice as lattice
from galoistrans.domains import SystemInstance
from galoistrans.domains import Universe
from galoistrans.tagopts import UniverseMismatchError

F = fractions.Fraction
HALF, ONE = F(1, 2), F(1)


@pytest.fixture
def tiny():
    """One component and one line, grid {1/2, 1}."""
    return Universe(["c1"], nodes=["a", "b"], grid=2)


@pytest.fixture
def pair():
    """Two components and the line between them, grid {1/2, 1}."""
    return Universe(["c1", "c2"], grid=2)


def test_line_names():
    assert domains.line_name("b", "a") == "a-b"
    assert domains.pair_of("a-b") == ("a", "b")
    with pytest.raises(lattice.ElementError):
        domains.line_name("a", "a")
    for name in ("b-a", "a", "a-b-c", "-a"):
        with pytest.raises(lattice.ElementError):
            domains.pair_of(name)


def test_universe(pair):
    assert pair.lines.tags == ("c1-c2",)
    assert pair.grid_values == (HALF, ONE)
    assert pair.check_value("0.5") == HALF
    with pytest.raises(lattice.ElementError):
        pair.check_value("1/3")
    with pytest.raises(lattice.ElementError):
        pair.check_line("c2-c3")
    with pytest.raises(lattice.ElementError):
        Universe(["c1"], nodes=["a-b"])
    assert pair == Universe(["c2", "c1"], grid=2)
    assert pair != pair.with_grid(4)


def test_enumerate_systems(pair):
    systems = list(domains.enumerate_systems(pair))
    assert len(systems) == domains.count_all_systems(pair) == 8
    assert len(set(systems)) == 8
    first = systems[0]
    assert first.reliability == (("c1", HALF), ("c2", HALF))
    assert first.edges == frozenset()
    assert systems[1].edges == frozenset({"c1-c2"})
    assert systems[-1].reliability == (("c1", ONE), ("c2", ONE))


def test_system_instance():
    s = SystemInstance.build({"a-b": "1/2"}, edges=[("b", "a"), "b-c"])
    assert s.edges == frozenset({"a-b", "b-c"})
    assert s.nodes == frozenset("abc")
    assert s.reliability_of("a-b") == HALF
    assert s.state_of("a-c") == domains.ABSENT
    assert s.state_of("b-c") == domains.PRESENT
    assert str(s) == "system(rel: a-b=1/2; lines: {a-b,b-c})"
    for bad in ("0", "3/2"):
        with pytest.raises(lattice.ElementError):
            SystemInstance.build({"c1": bad})
    with pytest.raises(lattice.ElementError):
        SystemInstance.build({}, edges=["a-b"], nodes=["a"])


def test_properties_and_satisfaction(tiny):
    P = domains.PropertiesLattice(tiny)
    p = P.element(rel={"c1": ["1/2"]}, topo={"a-b": ["present"]})
    assert str(p) == "(rel: ({c1}, {(c1,{1/2})}), topo: ({a-b}, {(a-b,{present})}))"
    good = SystemInstance.build({"c1": HALF}, edges=["a-b"])
    bad = SystemInstance.build({"c1": ONE}, edges=["a-b"])
    assert domains.satisfies(good, p)
    assert not domains.satisfies(bad, p)
    assert domains.satisfies(bad, P.top)
    with pytest.raises(UniverseMismatchError):
        domains.satisfies(SystemInstance.build({"c9": HALF}, edges=["a-b"]), p)
    with pytest.raises(UniverseMismatchError):
        domains.satisfies(SystemInstance.build({"c1": HALF}, nodes=["a"]), p)
    with pytest.raises(lattice.ElementError):
        P.element(rel={"c1": ["1/3"]})
    assert lattice.init("properties", tiny) == P


def test_counting_agrees_with_enumeration(pair):
    P = domains.PropertiesLattice(pair)
    for p in P.elements[::7]:
        systems = list(domains.systems_satisfying(p, pair))
        assert len(systems) == domains.count_systems(p, pair)
        assert all(domains.satisfies(s, p) for s in systems)
        assert domains.is_inconsistent(p) == (len(systems) == 0)


def test_base_relation(tiny):
    relation = domains.properties_relation(tiny)
    assert len(relation.systems) == 4
    assert galois.check_correctness_relation(relation).passed


@pytest.mark.parametrize("name", ["reliability", "topology"])
def test_worked_connections_pass_exhaustively(pair, name):
    c = domains.formalism(name, pair).connection
    report = galois.check_galois(c)
    assert report.passed, report.failures
    assert all(result.exhaustive for result in report.results)
    assert report.notes["reduction_exact"] is True


def test_connection_helpers(pair):
    assert domains.reliability_connection(pair).abstract.cardinality == 25
    assert domains.reliability_connection(pair, grid=1).abstract.cardinality == 9
    assert domains.topology_connection(pair).abstract.cardinality == 5
    assert domains.powerset_hull_connection(pair).abstract.cardinality == 16


def test_powerset_hull_is_rejected(pair):
    hull = domains.PowersetHullFormalism(pair)
    report = hull.connection.verify()
    assert not report.passed
    assert report.notes["reduction_exact"] is None
    for law in ("gamma is completely multiplicative",
                "gamma after alpha is extensive", "adjunction"):
        assert not report.result(law).passed


def test_powerset_hull_multiplicativity_witness(pair):
    hull = domains.PowersetHullFormalism(pair)
    diagonal = hull.model({"assignments": [{"c1": "1/2", "c2": "1/2"},
                                           {"c1": "1", "c2": "1"}]})
    anti = hull.model({"assignments": [{"c1": "1/2", "c2": "1"},
                                       {"c1": "1", "c2": "1/2"}]})
    P, M = hull.properties, hull.abstract
    assert hull.gamma(diagonal) == hull.gamma(anti)
    meet_of_gamma = P.meet(hull.gamma(diagonal), hull.gamma(anti))
    gamma_of_meet = hull.gamma(M.meet(diagonal, anti))
    assert M.meet(diagonal, anti) == frozenset()
    assert meet_of_gamma != gamma_of_meet
    assert domains.is_inconsistent(gamma_of_meet)
    assert not domains.is_inconsistent(meet_of_gamma)


def test_model_boxes(pair):
    f = domains.ReliabilityFormalism(pair)
    box = f.model({"c1": ["1/2"]})
    assert isinstance(box, domains.ReliabilityModelBox)
    assert box.domain_components == frozenset({"c1"})
    assert str(box) == "reliability box ({c1}, {(c1,{1/2})})"
    assert list(f.models.members(box)) == [
        (("c1", HALF), ("c2", HALF)),
        (("c1", HALF), ("c2", ONE)),
    ]
    assert f.models.contains(box, (("c1", HALF), ("c2", ONE)))
    assert not f.models.contains(box, (("c1", ONE), ("c2", ONE)))
    assert f.models.render((("c1", HALF), ("c2", ONE))) == "{c1=1/2,c2=1/1}"
    empty = f.model({"c1": []})
    assert empty.is_empty() and f.models.is_empty(empty)
    assert not f.abstract.contains(
        domains.TopologyModelBox.of(box.as_tag_options()))


def test_model_lift_errors(pair):
    f = domains.ReliabilityFormalism(pair)
    lift = f.models.lift
    assert lift((("c1", HALF), ("c2", ONE))) == f.model({"c1": ["1/2"], "c2": ["1"]})
    for model in ((("c1", HALF),), (("c1", HALF), ("c2", F(1, 3))), 42):
        with pytest.raises(galois.ModelLiftError):
            lift(model)


def test_model_of(pair):
    s = SystemInstance.build({"c1": HALF, "c2": ONE}, edges=["c1-c2"])
    assert domains.ReliabilityFormalism(pair).model_of(s) == (("c1", HALF),
                                                              ("c2", ONE))
    assert domains.TopologyFormalism(pair).model_of(s) == (("c1-c2", "present"),)


def test_transform_between_worked_formalisms(pair):
    rel = domains.ReliabilityFormalism(pair)
    topo = domains.TopologyFormalism(pair)
    box = rel.model({"c1": ["1/2"]})
    result = galois.transform(rel.connection, topo.connection, box)
    assert result == topo.abstract.top
    assert galois.transform(rel.connection, rel.connection, box) == box
    linked = topo.model({"c1-c2": ["present"]})
    assert galois.transform(topo.connection, rel.connection,
                            linked) == rel.abstract.top


def test_transform_soundness_on_worked_formalisms(tiny):
    base = domains.properties_relation(tiny)
    connections = [
        domains.ReliabilityFormalism(tiny).connection,
        domains.TopologyFormalism(tiny).connection,
    ]
    for c1 in connections:
        assert galois.check_correctness_relation(
            galois.induced_relation(c1, base)).passed
        for c2 in connections:
            report = galois.check_transform_soundness(c1, c2, base)
            assert report.passed
            assert report.result("transform preserves correctness").exhaustive


def test_selection_on_worked_formalism(tiny):
    f = domains.ReliabilityFormalism(tiny)
    induced = galois.induced_relation(f.connection,
                                      domains.properties_relation(tiny))
    exact = galois.check_selection(
        galois.init("system", f.models, f.model_of), induced, small_budget())
    assert exact.passed
    least = galois.check_selection(galois.init("canonical-least", f.models),
                                   induced, small_budget())
    assert not least.result("selection preserves correctness").passed


def test_consistency_of_series_and_parallel():
    universe = Universe(["a-b", "a-c", "b-c"], nodes=["a", "b", "c"], grid=2)
    topo = domains.TopologyFormalism(universe)
    series = topo.model({"a-b": ["present"], "b-c": ["present"],
                         "a-c": ["absent"]})
    parallel = topo.model({"a-b": ["present"], "b-c": ["present"],
                           "a-c": ["present"]})
    report = domains.consistency_check(
        [("topology", series), ("topology", parallel)],
        universe,
        names=["series", "parallel"],
        formalisms={"topology": topo})
    assert not report.consistent
    assert domains.is_inconsistent(report.meet)
    assert [c.to_dict() for c in report.conflicts] == [{
        "part": "topo",
        "tag": "a-c",
        "assigned": {"series": ["absent"], "parallel": ["present"]},
    }]
    assert report.drop_restores == {"series": True, "parallel": True}
    assert report.to_dict()["inputs"] == ["series", "parallel"]


def test_consistency_across_formalisms(pair):
    rel = domains.ReliabilityFormalism(pair)
    topo = domains.TopologyFormalism(pair)
    report = domains.consistency_check(
        [("reliability", rel.model({"c1": ["1/2"]})),
         ("topology", topo.model({"c1-c2": ["absent"]}))], pair)
    assert report.consistent
    assert report.conflicts == []
    assert report.names == ["#0", "#1"]
    with pytest.raises(ValueError):
        domains.consistency_check([("reliability", rel.abstract.top)], pair,
                                  names=["a", "b"])
    with pytest.raises(lattice.ElementError):
        domains.consistency_check([("topology", rel.abstract.top)], pair)


def test_worked_values_of_the_reliability_formalism():
    universe = Universe(["c1", "c2"], grid=4)
    f = domains.ReliabilityFormalism(universe)
    P = f.properties
    c = f.connection
    s = SystemInstance.build({"c1": HALF, "c2": ONE}, edges=["c1-c2"])
    box = f.model({"c1": ["1/2"]})
    assert domains.satisfies(s, c.gamma(box))

    p = P.element(rel={"c1": ["1/2", "3/4"]})
    chosen = (("c1", HALF), ("c2", F(1, 4)))
    refined = galois.refine(p, c, chosen)
    assert refined.rel["c1"] == frozenset({HALF})
    assert P.leq(refined, p)
    assert galois.refine(P.top, c, chosen) == c.gamma(f.models.lift(chosen))

    assert c.alpha(P.bottom) == f.abstract.bottom
    assert domains.is_inconsistent(c.gamma(f.abstract.bottom))
    bottom = f.abstract.bottom
    assert galois.transform(c, c, bottom, verify=False) == bottom


def test_satisfaction_with_interval_constraints():
    universe = Universe(["c1"], nodes=["a", "b"], grid=20)
    P = domains.PropertiesLattice(universe)
    intervals = lattice.IntervalLattice(20)
    high = P.element(rel={"c1": intervals.points(intervals.parse("[0.9,1.0]"))})
    low = P.element(rel={"c1": intervals.points(intervals.parse("[0.5,0.7]"))})
    s = SystemInstance.build({"c1": F(19, 20)}, nodes=["a", "b"])
    assert domains.satisfies(s, high)
    assert not domains.satisfies(s, low)
    assert domains.is_inconsistent(P.meet(high, low))
    assert domains.is_inconsistent(P.bottom)
    assert not domains.is_inconsistent(P.top)


def test_contradicting_line_states(pair):
    topo = domains.TopologyFormalism(pair)
    present = topo.model({"c1-c2": ["present"]})
    absent = topo.model({"c1-c2": ["absent"]})
    assert not domains.consistency_check([("topology", present),
                                          ("topology", absent)], pair).consistent
    assert domains.consistency_check([("topology", present)], pair).consistent
