import logging

from rich.console import Console
from rich.logging import RichHandler

_HANDLER_NAME = "fat-aci-rich"


def configure_logging(level: str | int = "INFO") -> None:
    """Install a single rich handler on the root logger, writing to stderr."""
    root = logging.getLogger()
    if not any(getattr(h, "name", None) == _HANDLER_NAME for h in root.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
        handler.name = _HANDLER_NAME
        handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
        root.addHandler(handler)
    root.setLevel(level.upper() if isinstance(level, str) else level)
