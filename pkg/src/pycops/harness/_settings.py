import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping, Optional

from .._solver import DEFAULT_STATE_BUDGET
from ..errors import InvalidParameterError

CACHE_DIR_VARIABLE = "PURSUIT_CACHE_DIR"
CATALOG_DIR_VARIABLE = "PURSUIT_CATALOG_DIR"
STATE_BUDGET_VARIABLE = "PURSUIT_STATE_BUDGET"

DEFAULT_CACHE_DIR = Path("~/.cache/pycops")
"""Where solve results are cached when ``PURSUIT_CACHE_DIR`` is not set."""


@dataclass(frozen=True)
class HarnessSettings:
    """Where the harness keeps its results and how much work it may do.

    Args:
        cache_dir: The directory of the solve cache, or None to solve without caching
        catalog_dir: The directory holding ``connected<N>.g6`` catalogs, if any
        state_budget: The largest number of canonical states a single solve may use
        workers: The number of processes claims and scans may use
        include_stretch: Whether to run the claims marked as stretch goals
    """

    cache_dir: Optional[Path] = DEFAULT_CACHE_DIR.expanduser()
    catalog_dir: Optional[Path] = None
    state_budget: int = DEFAULT_STATE_BUDGET
    workers: int = 1
    include_stretch: bool = False

    def __post_init__(self):
        if self.state_budget < 1:
            raise InvalidParameterError(
                "The state budget must be positive, got %d" % self.state_budget
            )
        if self.workers < 1:
            raise InvalidParameterError("Need at least one worker, got %d" % self.workers)

    @staticmethod
    def from_env(environ: Optional[Mapping[str, str]] = None, **overrides) -> "HarnessSettings":
        """Build settings from the ``PURSUIT_*`` environment variables.

        Args:
            environ: The variables to read, ``os.environ`` by default
            overrides: Fields to set regardless of the environment

        Raises:
            InvalidParameterError: If ``PURSUIT_STATE_BUDGET`` is not an integer
        """
        environ = os.environ if environ is None else environ
        settings = HarnessSettings()
        if environ.get(CACHE_DIR_VARIABLE):
            settings = replace(settings, cache_dir=Path(environ[CACHE_DIR_VARIABLE]).expanduser())
        if environ.get(CATALOG_DIR_VARIABLE):
            settings = replace(
                settings, catalog_dir=Path(environ[CATALOG_DIR_VARIABLE]).expanduser()
            )
        if environ.get(STATE_BUDGET_VARIABLE):
            try:
                budget = int(environ[STATE_BUDGET_VARIABLE])
            except ValueError:
                raise InvalidParameterError(
                    "%s must be an integer, got %r"
                    % (STATE_BUDGET_VARIABLE, environ[STATE_BUDGET_VARIABLE])
                )
            settings = replace(settings, state_budget=budget)
        return replace(settings, **overrides)

    def catalog_path(self, n: int) -> Optional[Path]:
        """Get the catalog of connected graphs of order ``n``, or None if there is none."""
        if self.catalog_dir is None:
            return None
        path = self.catalog_dir / ("connected%d.g6" % n)
        return path if path.is_file() else None
