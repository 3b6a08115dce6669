"""
Command front end: simulate, verify, sweep and weights.
"""

from .verification import CheckResult, VerificationSummary, VerifySettings, run_verification
from .commands import (
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_RUNTIME,
    EXIT_VERIFY,
    cmd_simulate,
    cmd_sweep,
    cmd_verify,
    cmd_weights,
    run_summary,
)

__all__ = [
    'CheckResult',
    'VerificationSummary',
    'VerifySettings',
    'run_verification',
    'EXIT_CONFIG',
    'EXIT_OK',
    'EXIT_RUNTIME',
    'EXIT_VERIFY',
    'cmd_simulate',
    'cmd_sweep',
    'cmd_verify',
    'cmd_weights',
    'run_summary',
]
