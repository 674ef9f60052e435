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
"""galoistrans command line interface.

Exit codes: 0 on success, 1 if a law fails or the analysis finds a semantic
problem (inconsistent models, capacity or budget exceeded, a failed pipeline
step), 2 if the scenario or the command line cannot be parsed.
"""

import argparse
import sys
from typing import List, Optional

import galoistrans
import galoistrans.config
import galoistrans.io as gio
import galoistrans.pipeline as pipeline
from galoistrans.scenario import Scenario
from galoistrans.scenario import ScenarioError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class _Fail(Exception):
    """Abort a command with an exit code and a message for stderr."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _setup(parser: argparse.ArgumentParser):
    parser.add_argument("scenario", help="Path to the scenario JSON file.")
    parser.add_argument("--out",
                        default=None,
                        help="Write the output to this file instead of stdout.")
    parser.add_argument("--no-verify",
                        action="store_true",
                        help="Skip the law checks of the connections. "
                        "Soundness of the results is not claimed.")
    galoistrans.config.add_arguments(parser)
    return parser


def _load(args) -> Scenario:
    try:
        return Scenario.load(args.scenario,
                             grid=args.grid,
                             max_universe=args.max_universe)
    except ScenarioError as e:
        raise _Fail(EXIT_USAGE, str(e)) from e


def check(parser, argv):
    """Check the laws of lattices, connections and relations."""
    parser.add_argument("--laws",
                        choices=pipeline.LAW_SUITES,
                        default="all",
                        help="The law suites to run.")
    args = _setup(parser).parse_args(argv)
    config = galoistrans.config.Config.from_args(args)
    report = pipeline.run_check(_load(args), args.laws, config)
    gio.write(gio.dumps(report), args.out)
    return EXIT_OK if report["status"] == "pass" else EXIT_FAILURE


def transform(parser, argv):
    """Transform a named model into another formalism."""
    parser.add_argument("--from", dest="model", required=True,
                        help="Name of the model in the scenario.")
    parser.add_argument("--to", dest="target", required=True,
                        help="Name of the target formalism.")
    args = _setup(parser).parse_args(argv)
    config = galoistrans.config.Config.from_args(args)
    scenario = _load(args)
    try:
        report = pipeline.run_transform(scenario, args.model, args.target,
                                        config, verify=not args.no_verify)
    except ScenarioError as e:
        raise _Fail(EXIT_USAGE, str(e)) from e
    gio.write(gio.dumps(report), args.out)
    return EXIT_OK


def run(parser, argv):
    """Run the pipeline of a scenario and print its trace."""
    args = _setup(parser).parse_args(argv)
    config = galoistrans.config.Config.from_args(args)
    scenario = _load(args)
    try:
        report = pipeline.run_pipeline(scenario, config,
                                       verify=not args.no_verify)
    except pipeline.PipelineError as e:
        raise _Fail(EXIT_FAILURE, str(e)) from e
    gio.write(gio.dumps(report), args.out)
    return EXIT_OK


def hasse(parser, argv):
    """Write the Hasse diagram of a lattice in DOT format."""
    parser.add_argument("--lattice", default="properties",
                        help="A lattice of the scenario, 'properties' or a "
                        "formalism name.")
    args = _setup(parser).parse_args(argv)
    config = galoistrans.config.Config.from_args(args)
    scenario = _load(args)
    try:
        dot = pipeline.run_hasse(scenario, args.lattice, config)
    except ScenarioError as e:
        raise _Fail(EXIT_USAGE, str(e)) from e
    gio.write(dot, args.out)
    return EXIT_OK


def bound(parser, argv):
    """Bound the two-terminal reliability over the described systems."""
    parser.add_argument("--source", default=None, help="Source node.")
    parser.add_argument("--sink", default=None, help="Sink node.")
    args = _setup(parser).parse_args(argv)
    config = galoistrans.config.Config.from_args(args)
    scenario = _load(args)
    try:
        report = pipeline.run_bound(scenario, args.source, args.sink, config)
    except ScenarioError as e:
        raise _Fail(EXIT_USAGE, str(e)) from e
    gio.write(gio.dumps(report), args.out)
    return EXIT_OK


def consistency(parser, argv):
    """Check models of different formalisms for contradictions."""
    parser.add_argument("--models", default=None,
                        help="Comma separated model names, all by default.")
    args = _setup(parser).parse_args(argv)
    scenario = _load(args)
    models = None if args.models is None else [
        name.strip() for name in args.models.split(",") if name.strip()
    ]
    try:
        report = pipeline.run_consistency(scenario, models)
    except ScenarioError as e:
        raise _Fail(EXIT_USAGE, str(e)) from e
    gio.write(gio.dumps(report), args.out)
    return EXIT_OK if report["consistent"] else EXIT_FAILURE


def main(argv: Optional[List[str]] = None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = argparse.ArgumentParser(
        "galoistrans", formatter_class=argparse.RawTextHelpFormatter,
        add_help=False)
    commands = {
        "check": check,
        "transform": transform,
        "pipeline": run,
        "hasse": hasse,
        "bound": bound,
        "consistency": consistency,
    }
    parser.add_argument("--version", action="store_true")
    parser.add_argument(
        "command",
        nargs="?",
        choices=list(commands.keys()),
        help="The subcommand to run:\n" +
        "\n".join(f"{name}\t{cmd.__doc__}" for name, cmd in commands.items()),
        metavar="command",
    )
    args, kwargs = parser.parse_known_args(argv)
    if args.version:
        print(f"galoistrans {galoistrans.__version__}.")
        sys.exit(EXIT_OK)
    if args.command is None:
        parser.print_help(sys.stderr)
        sys.exit(EXIT_USAGE)
    command = commands.get(args.command)

    parser = argparse.ArgumentParser(f"galoistrans {args.command}")
    try:
        code = command(parser, kwargs)
    except _Fail as e:
        print(f"galoistrans {args.command}: {e}", file=sys.stderr)
        code = e.code
    except (RuntimeError, ValueError) as e:
        print(f"galoistrans {args.command}: {type(e).__name__}: {e}",
              file=sys.stderr)
        code = EXIT_FAILURE
    sys.exit(code)


if __name__ == "__main__":
    main()
