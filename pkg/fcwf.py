"""Free-choice net well-formedness toolkit.

Command-line entry point: python fcwf.py <command> FILE [options]

Exit codes: 0 yes/live/bounded, 1 no, 2 usage or input error,
3 inconclusive (a cap was hit).
"""

import argparse
import sys
from typing import List, Optional

from loguru import logger

from factories.command_factory import CommandFactory
from utils.logger import LoggerSetup


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments.

    Args:
        argv: Argument list (defaults to sys.argv[1:]).

    Returns:
        argparse.Namespace: Command line arguments.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('file', help='Net document')
    common.add_argument('--json', action='store_true',
                        help='Print the result as JSON')
    common.add_argument('-v', '--verbose', action='store_true',
                        help='Log DEBUG messages to stderr')

    parser = argparse.ArgumentParser(prog='fcwf', description='Free-choice net well-formedness toolkit')
    sub = parser.add_subparsers(dest='command', required=True)

    sub.add_parser('check-fc', parents=[common], help='Is the net free-choice?')
    sub.add_parser('clusters', parents=[common], help='List the clusters')
    sub.add_parser('wf', parents=[common], help='Decide well-formedness')
    sub.add_parser('tcover', parents=[common], help='Cover by semi-T-components')
    sub.add_parser('scover', parents=[common], help='Cover by semi-S-components')
    sub.add_parser('rd', parents=[common], help='Print the reverse-dual net')

    trap = sub.add_parser('trap', parents=[common], help='Maximal trap inside a place set')
    trap.add_argument('--places', required=True,
                      help='Comma-separated place names')

    siphons = sub.add_parser('siphons', parents=[common], help='Minimal siphons')
    siphons.add_argument('--cap', type=int, default=None,
                         help='Maximum number of siphons to enumerate')

    sub.add_parser('commoner', parents=[common], help='Liveness of the document marking')

    oracle = sub.add_parser('oracle', parents=[common], help='Explicit-state checks')
    oracle.add_argument('--max-states', type=int, default=None,
                        help='State cap for exploration')
    oracle.add_argument('--live', action='store_true',
                        help='Check liveness of the marking')
    oracle.add_argument('--bounded', action='store_true',
                        help='Check boundedness of the marking')
    oracle.add_argument('--wf', action='store_true',
                        help='Check well-formedness of the net')
    oracle.add_argument('--exhaustive', action='store_true',
                        help='With --wf, try every small marking instead of all-ones')

    dot = sub.add_parser('dot', parents=[common], help='Graphviz rendering')
    dot.add_argument('--highlight', default=None,
                     help='Comma-separated nodes to draw bold')

    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None, setup_logging: bool = True) -> int:
    """Main entry point for the script.

    Args:
        argv: Argument list (defaults to sys.argv[1:]).
        setup_logging: Whether to install the file and console log sinks.

    Returns:
        int: Exit code.
    """
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if setup_logging:
        LoggerSetup.setup_logger(args.command, level='DEBUG' if args.verbose else None)
    command = CommandFactory.get_command(args.command, args)
    code = command.run()
    logger.debug(f"Exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
