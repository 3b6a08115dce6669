"""
Protocol definition for report generators.
"""
from pathlib import Path
from typing import Any, Protocol


class Reporter(Protocol):
    """Protocol for report generators that persist results in one format."""

    def generate_report(self, data: Any, path: Path, config_digest: str) -> str:
        """
        Write data to path.

        Args:
            data: the result object the reporter understands
            path: destination file
            config_digest: digest of the resolved configuration, embedded in the file

        Returns:
            str: Path to the generated report file
        """
        ...
