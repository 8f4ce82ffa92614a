"""
Base Command class that all CLI commands inherit from
"""
import argparse
import sys
from typing import Any, Dict, List, Optional, TextIO

from loguru import logger

from config.config import Config
from netio.export import to_json, to_payload
from netio.parser import NetDocument, load
from petri.components import Component
from petri.errors import EnumerationOverflow, NetError


class BaseCommand:
    """Base class for all CLI commands

    Subclasses implement execute() and report through finish(), which picks
    text or JSON output and maps the answer to an exit code.
    """

    name = "command"

    def __init__(self, args: argparse.Namespace, out: Optional[TextIO] = None):
        """Initialize the command with parsed arguments

        Args:
            args: Parsed command line arguments
            out: Stream for command output (defaults to stdout)
        """
        self.args = args
        self.out = out or sys.stdout

    def load_document(self) -> NetDocument:
        """Load the net document named on the command line"""
        return load(self.args.file)

    def write(self, text: str) -> None:
        self.out.write(text if text.endswith("\n") else text + "\n")

    def finish(self, answer: str, payload: Dict[str, Any], text: str) -> int:
        """Emit the result and return the exit code for answer

        Args:
            answer: One of the Config.EXIT_CODES keys
            payload: JSON fields besides the answer
            text: Human-readable rendering
        """
        if getattr(self.args, "json", False):
            self.write(to_json({**to_payload(payload), "answer": answer}))
        else:
            self.write(text)
        return Config.EXIT_CODES[answer]

    @staticmethod
    def describe(component: Component) -> str:
        line = f"{' '.join(component.sort_key())}  [{component.kind}]"
        evidence = component.evidence
        if evidence.excessive:
            line += f" excessive: {' '.join(evidence.excessive)}"
        if evidence.boundary_arcs:
            line += " arcs: " + " ".join(f"{a}->{b}" for a, b in evidence.boundary_arcs)
        return line

    @staticmethod
    def split_names(raw: Optional[str]) -> List[str]:
        return [name.strip() for name in (raw or "").split(",") if name.strip()]

    def execute(self) -> int:
        raise NotImplementedError

    def run(self) -> int:
        """Run the command, mapping library errors to exit codes

        Returns:
            Process exit code
        """
        logger.info(f"Running '{self.name}' on {self.args.file}")
        try:
            code = self.execute()
        except EnumerationOverflow as e:
            logger.error(f"'{self.name}' gave up: {e}")
            return Config.EXIT_CODES["inconclusive"]
        except NetError as e:
            logger.error(f"'{self.name}' failed: {e}")
            return Config.EXIT_CODES["error"]
        except OSError as e:
            logger.error(f"Cannot read {self.args.file}: {e}")
            return Config.EXIT_CODES["error"]
        logger.success(f"'{self.name}' finished with exit code {code}")
        return code
