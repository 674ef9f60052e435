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
import pytest


def test_api():
    import galoistrans
    from galoistrans.galois import GaloisConnection

    assert galoistrans.GaloisConnection is GaloisConnection
    assert galoistrans.lattice.PowersetLattice
    assert galoistrans.domains.ReliabilityFormalism


def test_lazy_imports():
    import galoistrans

    galoistrans.allow_lazy_imports()
    assert galoistrans.scenario.Scenario
    with pytest.raises(AttributeError):
        galoistrans.does_not_exist
    with pytest.raises(AttributeError):
        galoistrans._private
