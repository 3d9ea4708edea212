"""Session holding the shared hierarchy table, run limits and logging."""

from __future__ import annotations

import logging
import sys
from pathlib import Path

from painleve_galois.dataset.vorobev_yablonski import VorobevYablonskiTable


class Session:
    """This class provides the shared polynomial table, the run limits and a logger."""

    def __init__(  # noqa: D107
        self: Session,
        max_n: int = 16,
        enumeration_limit: int = 20000,
        log_level: str = "WARNING",
        app_name: str = "painleve_galois",
    ) -> None:
        """Initialises the table and the logger.

        Args:
            max_n (int): Deepest index the polynomial table may grow to. Defaults to 16.
            enumeration_limit (int): Largest exponent product enumerated exhaustively. Defaults to 20000.
            log_level (str): Name of the logging level. Defaults to "WARNING".
            app_name (str): Logger name. Defaults to "painleve_galois".
        """
        self.max_n = max_n
        self.enumeration_limit = enumeration_limit
        self.table = VorobevYablonskiTable(max_n=max_n)
        self.logger = Log(app_name, log_level)

    def emit(self: Session, text: str, path: str | None = None) -> None:
        """Write a report to stdout or to a UTF-8 file.

        Args:
            text (str): report body
            path (str | None): output file; stdout when None
        """
        if not text.endswith("\n"):
            text += "\n"
        if path is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        Path(path).write_text(text, encoding="utf-8")
        self.logger.info(f"Report written to {path}")


class Log:
    """Logger class. This class provides a thin wrapper around the standard logging system."""

    def __init__(self: Log, name: str, level: str = "WARNING") -> None:
        """Attach a stderr handler to the named logger once.

        Args:
            name (str): logger name
            level (str): level name such as "INFO"
        """
        self.logger = logging.getLogger(name)
        self.logger.setLevel(level.upper())
        if not self.logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(
                logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
            )
            self.logger.addHandler(handler)

    def error(self: Log, message: str) -> None:
        """Log an error.

        Args:
            message (str): Error message to write to log
        """
        self.logger.error(message)

    def warn(self: Log, message: str) -> None:
        """Log a warning.

        Args:
            message (str): Warning message to write to log
        """
        self.logger.warning(message)

    def info(self: Log, message: str) -> None:
        """Log information.

        Args:
            message (str): Information message to write to log
        """
        self.logger.info(message)
