"""config.py - Runtime configuration read from the environment."""

# Get packages.
import os
import logging
from dataclasses import dataclass, field
from typing import Optional
from dotenv import load_dotenv

# Set up logging.
logger = logging.getLogger(__name__)

# Constants.
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
TRUTHY = ("1", "true", "yes", "on")


@dataclass
class WorkbenchConfig():
    """Store the workbench configuration values.

    Attributes:
        threads (int): Worker threads used by law sweeps (VCWB_THREADS).
        dim_cap (int): Total-dimension cap applied when closing windows
            (VCWB_DIM_CAP).
        progress (bool): Show tqdm progress bars on stderr (VCWB_PROGRESS).
        log_level (str): Logging level name (VCWB_LOG_LEVEL)."""
    threads: int = field(default=1)
    dim_cap: int = field(default=16)
    progress: bool = field(default=False)
    log_level: str = field(default="INFO")

    def __post_init__(self):
        """Post-initialization method to validate the attributes."""
        # Validate the thread count.
        if int(self.threads) < 1:
            raise ValueError("VCWB_THREADS must be at least 1.")
        self.threads = int(self.threads)
        # Validate the dimension cap.
        if int(self.dim_cap) < 1:
            raise ValueError("The dimension cap must be at least 1.")
        self.dim_cap = int(self.dim_cap)
        self.log_level = str(self.log_level).upper()

    @classmethod
    def from_env(cls) -> "WorkbenchConfig":
        """Build the configuration from environment variables and .env.

        Returns:
            WorkbenchConfig: The configuration."""
        load_dotenv()
        try:
            threads = int(os.getenv("VCWB_THREADS", "1"))
            dim_cap = int(os.getenv("VCWB_DIM_CAP", "16"))
        except ValueError as error:
            raise ValueError(
                f"Invalid integer in environment: {error}") from error
        progress = os.getenv("VCWB_PROGRESS", "").lower() in TRUTHY
        log_level = os.getenv("VCWB_LOG_LEVEL", "INFO")
        return cls(threads=threads, dim_cap=dim_cap, progress=progress,
                   log_level=log_level)

    def validate(self) -> bool:
        """Check the configuration for suspicious values.

        Returns:
            bool: True if the config looks sensible, otherwise False."""
        is_valid = True
        cpus = os.cpu_count() or 1
        if self.threads > cpus:
            logger.warning("VCWB_THREADS=%d exceeds the %d available CPUs.",
                           self.threads, cpus)
            is_valid = False
        if self.log_level not in LOG_LEVELS:
            logger.warning("Unknown log level %s.", self.log_level)
            is_valid = False
        return is_valid

    def apply_logging(self):
        """Set the package log level."""
        level = self.log_level if self.log_level in LOG_LEVELS else "INFO"
        logging.getLogger("enriched_workbench").setLevel(level)


_config: Optional[WorkbenchConfig] = None


def get_config() -> WorkbenchConfig:
    """Return the cached configuration, reading the environment once."""
    global _config  # pylint: disable=global-statement
    if _config is None:
        _config = WorkbenchConfig.from_env()
    return _config


def set_config(config: Optional[WorkbenchConfig]):
    """Replace the cached configuration (None forces a re-read)."""
    global _config  # pylint: disable=global-statement
    _config = config
