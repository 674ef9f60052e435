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
import argparse
import json

import pytest

import galoistrans.config
import galoistrans.util as util
from galoistrans.config import Config


def _parse(*argv):
    parser = galoistrans.config.add_arguments(argparse.ArgumentParser())
    return Config.from_args(parser.parse_args(list(argv)))


def test_defaults():
    config = _parse()
    assert config == Config()
    assert config.grid is None
    assert not config.progress
    budget = config.budget_for_laws()
    assert (budget.subset_size, budget.max_checks, budget.max_elements) == (
        3, 200_000, 20_000)
    assert (budget.seed, budget.jobs, budget.progress) == (0, 1, False)


def test_flags():
    config = _parse("--budget", "500", "--subset-size", "2", "--grid", "4",
                    "--seed", "7", "--jobs", "2", "--progress", "--timing",
                    "--max-edges", "5")
    assert config.budget == 500
    assert config.subset_size == 2
    assert config.grid == 4
    assert config.max_edges == 5
    assert config.timing
    budget = config.budget_for_laws()
    assert (budget.max_checks, budget.seed, budget.jobs, budget.progress) == (
        500, 7, 2, True)


def test_as_json():
    config = Config(seed=3)
    assert json.loads(config.as_json())["seed"] == 3
    assert config.asdict()["system_budget"] == 2**16


@pytest.mark.parametrize("log_format", ["tqdm", "off"])
def test_progress_bar(log_format):
    bar = util.ProgressBar(range(3), log_format, total=3)
    seen = []
    for item in bar:
        seen.append(item)
        bar.set_description({"law": "reflexivity", "checked": item})
    assert seen == [0, 1, 2]
    assert bar.use_tqdm == (log_format == "tqdm")


def test_progress_bar_format():
    with pytest.raises(ValueError):
        util.ProgressBar(range(3), "rich")
    assert not util.progress([], enabled=False).use_tqdm


def test_stopwatch():
    with util.Stopwatch() as stopwatch:
        sum(range(100))
    assert stopwatch.elapsed >= 0
