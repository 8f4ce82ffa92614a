"""
Command Factory class for creating CLI command objects
"""
import argparse
from typing import Optional, TextIO

from commands.base_command import BaseCommand
from commands.oracle_command import OracleCommand
from commands.siphon_commands import CommonerCommand, SiphonsCommand, TrapCommand
from commands.structure_commands import (
    CheckFreeChoiceCommand,
    ClustersCommand,
    DotCommand,
    ReverseDualCommand,
)
from commands.wellformed_commands import SCoverCommand, TCoverCommand, WellFormedCommand

COMMANDS = {
    command.name: command
    for command in (
        CheckFreeChoiceCommand,
        ClustersCommand,
        WellFormedCommand,
        TCoverCommand,
        SCoverCommand,
        ReverseDualCommand,
        TrapCommand,
        SiphonsCommand,
        CommonerCommand,
        OracleCommand,
        DotCommand,
    )
}


class CommandFactory:
    """Factory class to create command objects"""

    @staticmethod
    def names():
        return list(COMMANDS)

    @staticmethod
    def get_command(command_name: str, args: argparse.Namespace, out: Optional[TextIO] = None) -> BaseCommand:
        """Get the command object for a CLI verb

        Args:
            command_name: Name of the verb (e.g. "wf", "check-fc")
            args: Parsed command line arguments
            out: Output stream passed to the command

        Returns:
            The command object

        Raises:
            ValueError: If the verb is unknown
        """
        try:
            return COMMANDS[command_name.lower()](args, out)
        except KeyError:
            raise ValueError(f"Invalid command name: {command_name}") from None
