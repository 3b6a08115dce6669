"""
Configuration ingestion for the commands.

This package contains:
- ConfigReader/parse_config: validated documents with located errors
- SweepSpec: amplitude x cutoff x dt sweep axes
- RunManifest: command, paths, seed override and version of one run
"""

from .sweep_spec import SweepCell, SweepSpec
from .config_reader import ConfigDocument, ConfigReader, parse_config
from .run_manifest import COMMANDS, RunManifest

__all__ = [
    'SweepCell',
    'SweepSpec',
    'ConfigDocument',
    'ConfigReader',
    'parse_config',
    'COMMANDS',
    'RunManifest',
]
