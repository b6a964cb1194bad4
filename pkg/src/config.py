"""
Run configuration and logging setup.

RunConfig carries the global flags shared by every CLI subcommand and every
HTTP request: ball radius, tolerance, seed and output format.
"""

import logging
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_C = 1.0
DEFAULT_TOL = 1e-10
DEFAULT_SEED = 0

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class RunConfig(BaseModel):
    """Global settings for a single invocation."""

    model_config = ConfigDict(frozen=True)

    c: float = Field(default=DEFAULT_C, gt=0.0)
    tol: float = Field(default=DEFAULT_TOL, gt=0.0)
    seed: int = DEFAULT_SEED
    output_format: Optional[Literal["csv", "json"]] = None
    verbose: bool = False

    def format_for(self, default: str) -> str:
        """Resolve the output format, falling back to a command default."""
        return self.output_format or default


def configure_logging(verbose: bool = False) -> None:
    """
    Configure root logging for an entry point.

    Library modules only create loggers; handlers are installed here so that
    stdout stays reserved for data output.

    Args:
        verbose: INFO level when True, WARNING otherwise
    """
    level = logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
