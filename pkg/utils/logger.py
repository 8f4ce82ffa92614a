"""
Logging utility for the fcwf toolkit
"""
import datetime
import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from config.config import Config

FILE_FORMAT = ("<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
               "{extra[run]} | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - {message}")
CONSOLE_FORMAT = "<level>{level: <8}</level> | {extra[run]} | <level>{message}</level>"


class LoggerSetup:
    """Installs the loguru sinks for one CLI run or one test session"""

    @staticmethod
    def log_file_for(run_name: str, session: bool) -> Path:
        """Log file path under Config.LOG_DIR/<date>/<run_name>

        A session reuses session.log, emptied first; a single run gets a
        file named after its start time.
        """
        now = datetime.datetime.now()
        log_dir = Path(Config.LOG_DIR) / now.strftime("%Y-%m-%d") / run_name
        log_dir.mkdir(parents=True, exist_ok=True)
        if session:
            log_file = log_dir / "session.log"
            log_file.write_text("")
            return log_file
        return log_dir / f"{now.strftime('%H-%M-%S')}.log"

    @staticmethod
    def setup_logger(run_name: str, session: bool = False, level: Optional[str] = None):
        """Setup loguru with a DEBUG file sink and a stderr console sink

        Args:
            run_name: CLI command name or test worker id, bound as extra["run"]
            session: Whether all records of the process go to one session file
            level: Console level; defaults to Config.LOG_LEVEL

        Returns:
            The configured loguru logger
        """
        log_file = LoggerSetup.log_file_for(run_name, session)
        # stdout is reserved for command output
        logger.configure(
            handlers=[
                {"sink": log_file, "format": FILE_FORMAT, "level": "DEBUG", "rotation": "5 MB"},
                {"sink": sys.stderr, "format": CONSOLE_FORMAT, "level": (level or Config.LOG_LEVEL).upper()},
            ],
            extra={"run": run_name},
        )
        logger.debug(f"Logging {run_name} to {log_file}")
        return logger
