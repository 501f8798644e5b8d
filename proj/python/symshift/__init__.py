"""Symbolic dynamics on Z: shifts of finite type, sofic shifts and local maps."""

from ._symshift import *  # noqa: F401,F403
from ._symshift import SymshiftError


def error_code(exc: SymshiftError) -> str:
    """The E_* identifier carried by a SymshiftError."""
    return str(exc).split(":", 1)[0]
