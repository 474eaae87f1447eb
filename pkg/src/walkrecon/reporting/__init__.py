"""
Reporting Module

Serializes command output:
- Canonical JSON envelopes (sorted keys, fixed float precision)
- CSV for tabular payloads with exact rationals as p/q
- Aligned terminal tables
"""

from .envelope import OutputEnvelope
from .json_exporter import JSONExporter
from .csv_exporter import CSVExporter
from .table_reporter import TableReporter
from .main import OutputFormat, ReportGenerator

__all__ = [
    "OutputEnvelope",
    "JSONExporter",
    "CSVExporter",
    "TableReporter",
    "OutputFormat",
    "ReportGenerator",
]
