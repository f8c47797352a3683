from __future__ import annotations

import logging
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict
from rich.console import Console
from rich.logging import RichHandler

# Trial division runs below this limit before Pollard rho takes over.
TRIAL_DIVISION_LIMIT = 10**6

# First 13 primes; Miller-Rabin with these bases is deterministic below the bound.
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MILLER_RABIN_BOUND = 3_317_044_064_679_887_385_961_981

DEFAULT_SEARCH_BOUND = 10
DEFAULT_TABLE_MAX = 200


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="CUBICDISC_", env_file=".env", extra="ignore")

    log_level: str = "WARNING"
    table_workers: int = 1
    search_bound: int = DEFAULT_SEARCH_BOUND
    table_max: int = DEFAULT_TABLE_MAX


@lru_cache
def get_settings() -> Settings:
    return Settings()


def configure_logging(level: str | int | None = None) -> None:
    """Route every ``cubicdisc`` logger to stderr through rich."""
    if level is None:
        level = get_settings().log_level
    if isinstance(level, str):
        level = level.upper()

    root = logging.getLogger("cubicdisc")
    root.setLevel(level)
    for h in list(root.handlers):
        if isinstance(h, RichHandler):
            root.removeHandler(h)
    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=False)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
    root.propagate = False
