# framekit/util/logging_setup.py
from __future__ import annotations

import logging
import sys
from typing import Optional, TextIO

_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def init_logging(level: Optional[str] = None, stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Route the "framekit" logger tree to stderr (stdout is reserved for
    reports). Python warnings (e.g. scipy LinAlgWarning on near-singular
    solves) are captured into the same handler.
    """
    lvl = logging.getLevelName((level or "info").upper())
    if not isinstance(lvl, int):
        lvl = logging.INFO

    pkg = logging.getLogger("framekit")
    for h in list(pkg.handlers):
        pkg.removeHandler(h)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    pkg.addHandler(handler)
    pkg.setLevel(lvl)
    pkg.propagate = False

    logging.captureWarnings(True)
    py_warnings = logging.getLogger("py.warnings")
    py_warnings.handlers = [handler]
    py_warnings.propagate = False
    return pkg
