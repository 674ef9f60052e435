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
"""Progress display and timing for long-running law suites."""

import time
from collections.abc import Iterable
from typing import Dict, Optional

import literate_dataclasses as dataclasses
import tqdm


def _description(stats: Dict[str, object]) -> str:
    return " ".join(f"{key}: {value}" for key, value in stats.items())


class Stopwatch:
    """Measure wall-clock time spent in a block."""

    __slots__ = ["_start", "elapsed"]

    def __init__(self):
        self._start = None
        self.elapsed: Optional[float] = None

    def __enter__(self) -> "Stopwatch":
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc_info):
        self.elapsed = time.perf_counter() - self._start
        return False


@dataclasses.dataclass
class ProgressBar:
    "Display progress while iterating over a collection of checks."

    items: Iterable
    log_format: str
    total: Optional[int] = None

    _valid_formats = ["tqdm", "off"]

    @property
    def use_tqdm(self) -> bool:
        """Display ``tqdm`` as the progress bar."""
        return self.log_format == "tqdm"

    def __post_init__(self):
        if self.log_format not in self._valid_formats:
            raise ValueError(f"log_format must be one of {self._valid_formats}, "
                             f"but got {self.log_format}")

    def __iter__(self):
        self.iterator = self.items
        if self.use_tqdm:
            self.iterator = tqdm.tqdm(self.items, total=self.total, leave=False)
        yield from self.iterator

    def set_description(self, stats: Dict[str, object]):
        """Update the progress bar description with ``key: value`` pairs.

        Does nothing unless the ``tqdm`` format is selected.
        """
        if self.use_tqdm:
            self.iterator.set_description(_description(stats))


def progress(items: Iterable, enabled: bool, total: Optional[int] = None):
    """Wrap ``items`` in a :py:class:`ProgressBar` that is either ``tqdm`` or off."""
    return ProgressBar(items, "tqdm" if enabled else "off", total)
