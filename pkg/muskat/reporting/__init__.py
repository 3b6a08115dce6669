"""
Report generators for traces, tables, summaries and plots.
"""

from .reporter import Reporter
from .csv_reporter import (
    SWEEP_COLUMNS,
    PhiTableCsvReporter,
    SweepCsvReporter,
    TraceCsvReporter,
    format_value,
    read_trace_csv,
)
from .json_reporter import JsonReporter
from .html_reporter import HtmlReporter
from .chart_generator import TraceChartReporter, generate_trace_chart

__all__ = [
    'Reporter',
    'SWEEP_COLUMNS',
    'PhiTableCsvReporter',
    'SweepCsvReporter',
    'TraceCsvReporter',
    'format_value',
    'read_trace_csv',
    'JsonReporter',
    'HtmlReporter',
    'TraceChartReporter',
    'generate_trace_chart',
]
