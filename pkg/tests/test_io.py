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
import json

import pytest

import galoistrans.domains as domains
import galoistrans.io as gio
from galoistrans.lattice import ElementError

F = fractions.Fraction


@pytest.fixture
def universe():
    return domains.Universe(["c1", "c2"], grid=10)


def test_dumps_is_canonical():
    text = gio.dumps({"b": 1, "a": ["∅"]})
    assert text == '{\n  "a": [\n    "∅"\n  ],\n  "b": 1\n}\n'
    assert gio.dumps({"a": ["∅"], "b": 1}) == text


def test_write(tmp_path, capsys):
    gio.write("text\n")
    assert capsys.readouterr().out == "text\n"
    gio.write("∅\n", tmp_path / "out.txt")
    assert (tmp_path / "out.txt").read_text(encoding="utf-8") == "∅\n"


def test_reliability_options(universe):
    assert gio.reliability_options("[0.8,1.0]", universe) == [
        F(4, 5), F(9, 10), F(1)
    ]
    assert gio.reliability_options("[1/2,1/2]", universe) == [F(1, 2)]
    assert gio.reliability_options(["0.5", 1, "3/10"], universe) == [
        F(1, 2), F(1), F(3, 10)
    ]
    with pytest.raises(ElementError):
        gio.reliability_options(["0.55"], universe)
    with pytest.raises(ElementError):
        gio.reliability_options("[0.55,1]", universe)


def test_topology_options():
    assert gio.topology_options("present") == ["present"]
    assert gio.topology_options(["absent", "present"]) == ["absent", "present"]
    with pytest.raises(ElementError):
        gio.topology_options(["broken"])


def test_properties(universe):
    P = domains.PropertiesLattice(universe)
    p = P.element(rel={"c2": ["1", "1/2"]}, topo={"c1-c2": ["absent"]})
    encoded = gio.encode_properties(p)
    assert encoded == {
        "rel": {"c2": ["1/2", "1/1"]},
        "topo": {"c1-c2": ["absent"]},
    }
    assert gio.decode_properties(json.loads(gio.dumps(encoded)), universe) == p
    assert gio.decode_properties(None, universe) == P.top
    assert gio.encode_properties(P.top) == {"rel": {}, "topo": {}}
    with pytest.raises(ElementError):
        gio.decode_properties({"rel": {}, "cost": {}}, universe)


def test_box_elements(universe):
    f = domains.ReliabilityFormalism(universe)
    box = gio.decode_element(f, {"allowed": {"c1": "[0.9,1]"}})
    assert box == f.model({"c1": ["9/10", "1"]})
    assert gio.encode_element(f, box) == {
        "formalism": "reliability",
        "allowed": {"c1": ["9/10", "1/1"]},
    }
    topo = domains.TopologyFormalism(universe)
    assert gio.decode_element(topo, {"allowed": {"c1-c2": "present"}}) == \
        topo.model({"c1-c2": ["present"]})


def test_assignment_elements():
    universe = domains.Universe(["c1"], grid=2)
    f = domains.PowersetHullFormalism(universe)
    element = gio.decode_element(
        f, {"assignments": [{"c1": "1"}, {"c1": "1/2"}]})
    assert element == frozenset({(("c1", F(1)),), (("c1", F(1, 2)),)})
    assert gio.encode_element(f, element) == {
        "formalism": "powerset-hull",
        "assignments": [{"c1": "1/2"}, {"c1": "1/1"}],
    }


def test_models(universe):
    f = domains.ReliabilityFormalism(universe)
    model = gio.decode_model(f, {"c2": "0.3", "c1": "1"})
    assert model == (("c1", F(1)), ("c2", F(3, 10)))
    assert gio.encode_model(model) == {"c1": "1/1", "c2": "3/10"}
    topo = domains.TopologyFormalism(universe)
    assert gio.decode_model(topo, {"c1-c2": "absent"}) == (("c1-c2", "absent"),)
    with pytest.raises(ElementError):
        gio.decode_model(topo, {"c2-c3": "absent"})
    with pytest.raises(ElementError):
        gio.decode_model(f, {"c1": "0.35"})
