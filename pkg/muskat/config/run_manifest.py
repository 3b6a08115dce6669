"""
What a command invocation was asked to do.
"""
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

COMMANDS = ("simulate", "verify", "sweep", "weights")
WORKERS_ENV = "MUSKAT_WORKERS"


@dataclass(frozen=True)
class RunManifest:
    command: str
    out_dir: Path
    config_path: Optional[Path] = None
    seed: Optional[int] = None
    version: str = ""
    workers: Optional[int] = None

    def __post_init__(self):
        """Validate parameters after initialization."""
        if self.command not in COMMANDS:
            raise ValueError(f"command must be one of {', '.join(COMMANDS)}, got {self.command!r}")
        if self.command in ("simulate", "sweep") and self.config_path is None:
            raise ValueError(f"{self.command} needs a config path")
        if self.seed is not None and self.seed < 0:
            raise ValueError(f"seed must be nonnegative, got {self.seed}")
        if self.workers is not None and self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        object.__setattr__(self, "out_dir", Path(self.out_dir))
        if self.config_path is not None:
            object.__setattr__(self, "config_path", Path(self.config_path))

    def prepare_output(self) -> Path:
        """Create the output directory and check it is writable."""
        self.out_dir.mkdir(parents=True, exist_ok=True)
        if not os.access(self.out_dir, os.W_OK):
            raise PermissionError(f"output directory is not writable: {self.out_dir}")
        return self.out_dir

    def worker_count(self) -> int:
        """--workers, else MUSKAT_WORKERS, else the CPU count."""
        if self.workers is not None:
            return self.workers
        env_value = os.getenv(WORKERS_ENV)
        if env_value:
            try:
                count = int(env_value)
            except ValueError:
                raise ValueError(f"{WORKERS_ENV} must be an integer, got {env_value!r}") from None
            if count < 1:
                raise ValueError(f"{WORKERS_ENV} must be positive, got {count}")
            return count
        return os.cpu_count() or 1
