from .commands import HANDLERS, catalog_entries, resolve_group
from .config import CliConfig
from .main import main
from .parser import build_parser

__all__ = [
    "HANDLERS",
    "CliConfig",
    "build_parser",
    "catalog_entries",
    "main",
    "resolve_group",
]
