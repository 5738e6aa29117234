"""
Logging abstraction for the locator.

Messages go to standard error so that standard output stays reserved for
command results (CSV tables, estimate lines, scan text). When quiet=True all
output is suppressed; tests and the JSON output path use that.
"""

import sys
import threading
from typing import TextIO


class Logger:
    """Simple logger that can suppress output in quiet mode."""

    def __init__(self, quiet: bool = False, stream: TextIO | None = None):
        self.quiet = quiet
        self.stream = stream
        # Server connection threads share one logger.
        self._lock = threading.Lock()

    def _write(self, msg: str) -> None:
        if self.quiet:
            return
        with self._lock:
            print(msg, file=self.stream or sys.stderr, flush=True)

    def info(self, msg: str = ""):
        self._write(msg)

    def warning(self, msg: str = ""):
        self._write(msg)

    def error(self, msg: str = ""):
        self._write(msg)
