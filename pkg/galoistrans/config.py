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
"""Command line configuration shared by all ``galoistrans`` commands."""

import argparse
import json

import literate_dataclasses as dataclasses

import galoistrans.lattice.laws as laws

SUBSET_SIZE = 3
MAX_CHECKS = 200_000
MAX_ELEMENTS = 20_000
MAX_UNIVERSE = 12
HASSE_MAX_ELEMENTS = 64
SYSTEM_BUDGET = 2**16
MAX_EDGES = 20
GRID_DENOMINATOR = 20


@dataclasses.dataclass
class Config:
    subset_size: int = dataclasses.field(
        default=SUBSET_SIZE,
        doc="""Largest sub-collection size used when checking that meets and
    joins exist for every collection. The empty and the full collection are
    always checked in addition.""",
    )

    budget: int = dataclasses.field(
        default=MAX_CHECKS,
        doc="""Maximum number of cases per law. Laws with more cases are
    checked on this many seeded random cases instead, and reported as
    not exhaustive.""",
    )

    max_elements: int = dataclasses.field(
        default=MAX_ELEMENTS,
        doc="""Largest lattice the law checker accepts.""")

    max_universe: int = dataclasses.field(
        default=MAX_UNIVERSE,
        doc="""Largest universe a powerset lattice may be built over.""")

    hasse_max_elements: int = dataclasses.field(
        default=HASSE_MAX_ELEMENTS,
        doc="""Largest lattice rendered as a Hasse diagram.""")

    system_budget: int = dataclasses.field(
        default=SYSTEM_BUDGET,
        doc="""Maximum number of systems enumerated when bounding reliability.
    Exceeding it is an error, never an approximation.""",
    )

    max_edges: int = dataclasses.field(
        default=MAX_EDGES,
        doc="""Maximum number of edges for the two-terminal reliability
    analyzer.""",
    )

    grid: int = dataclasses.field(
        default=None,
        doc="""Override the reliability grid denominator of the scenario.""")

    seed: int = dataclasses.field(
        default=0, doc="""Seed for sampled law checks.""")

    jobs: int = dataclasses.field(
        default=1,
        doc="""Number of laws evaluated in parallel (threads).""")

    progress: bool = dataclasses.field(
        default=False, doc="""Show a tqdm progress bar while checking laws.""")

    timing: bool = dataclasses.field(
        default=False,
        doc="""Include timings in reports. Reports with timings are not
    byte-identical across runs.""",
    )

    @classmethod
    def _add_arguments(cls, parser, **override_kwargs):
        for field in dataclasses.fields(cls):
            flag = "--" + field.name.replace("_", "-")
            if field.type == bool:
                kwargs = dict(action="store_true",
                              help=f"{str(field.metadata['doc'])}")
            else:
                kwargs = dict(
                    type=field.type,
                    metavar=field.default,
                    default=field.default,
                    help=f"{str(field.metadata['doc'])}",
                )
            kwargs.update(override_kwargs.get(field.name, {}))
            parser.add_argument(flag, **kwargs)
        return parser

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        """Add arguments to the argument parser."""
        cls._add_arguments(parser, grid={"metavar": "N"})
        return parser

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "Config":
        """Collect the configuration fields from parsed arguments."""
        return cls(**{
            field.name: getattr(args, field.name)
            for field in dataclasses.fields(cls)
            if hasattr(args, field.name)
        })

    def budget_for_laws(self) -> laws.Budget:
        """The law checker budget described by this configuration."""
        return laws.Budget(
            subset_size=self.subset_size,
            max_checks=self.budget,
            max_elements=self.max_elements,
            seed=self.seed,
            jobs=self.jobs,
            progress=self.progress,
        )

    def asdict(self):
        return dict(self.__dict__)

    def as_json(self) -> str:
        return json.dumps(self.asdict(), sort_keys=True)


def add_arguments(parser):
    """Add ``galoistrans`` command line arguments to an argparser."""
    return Config.add_arguments(parser)
