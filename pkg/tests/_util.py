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
import pathlib

import pytest

import galoistrans.lattice as lattice

SCENARIOS = pathlib.Path(__file__).resolve().parent.parent / "scenarios"


def scenario_path(name: str) -> pathlib.Path:
    """Path of a bundled scenario file."""
    return SCENARIOS / f"{name}.json"


def small_budget(**kwargs) -> lattice.Budget:
    """A law checker budget that keeps unit tests fast."""
    return lattice.Budget(**{"max_checks": 20_000, **kwargs})


def _pytest_params(fast_arguments, slow_arguments):
    pytest_params = []
    for marks, arguments in ((pytest.mark.fast, fast_arguments),
                             (pytest.mark.slow, slow_arguments)):
        for arg in arguments:
            if isinstance(arg, tuple):  # if more than one argument
                pytest_params.append(pytest.param(*arg, marks=marks))
            else:
                pytest_params.append(pytest.param(arg, marks=marks))
    return pytest_params


def parametrize_slow(arg_names, fast_arguments, slow_arguments):
    return pytest.mark.parametrize(
        arg_names,
        _pytest_params(fast_arguments, slow_arguments),
    )
