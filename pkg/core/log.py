import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = "WARNING") -> None:
    """Route library logs to stderr; stdout is reserved for query output."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_torsion", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._torsion = True
    root.addHandler(handler)
    root.setLevel(level.upper() if isinstance(level, str) else level)
