"""
Report generator that coordinates all output formats

- JSON: the whole envelope, canonical
- CSV: the results table only
- table: the results, aligned for a terminal
"""

from enum import Enum
from typing import Any, Dict, Optional, Union
import logging

from ..core.errors import FormatUnsupported
from .csv_exporter import CSVExporter
from .envelope import OutputEnvelope
from .json_exporter import JSONExporter
from .table_reporter import TableReporter

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TABLE = "table"

    @classmethod
    def parse(cls, value: Union[str, "OutputFormat"]) -> "OutputFormat":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise FormatUnsupported(f"unknown output format {value!r}; choose json, csv or table")


class ReportGenerator:
    """
    Single entry point for emitting command envelopes.
    """

    def __init__(self, config: Optional[Any] = None):
        """
        Initialize report generator.

        Args:
            config: Configuration object
        """
        self.config = config
        self.logger = logging.getLogger(self.__class__.__name__)

        # Initialize exporters
        self.json_exporter = JSONExporter(config)
        self.csv_exporter = CSVExporter(config)
        self.table_reporter = TableReporter(config)

        self.default_format = OutputFormat.JSON
        if config is not None:
            self.default_format = OutputFormat.parse(config.reporting.output_format)

        # Statistics
        self.reports_generated = 0

    def emit(self, envelope: OutputEnvelope, output_format: Optional[Union[str, OutputFormat]] = None) -> str:
        """
        Serialize an envelope.

        Args:
            envelope: command output
            output_format: json, csv or table; the configured default when omitted

        Returns:
            str: serialized text

        Raises:
            FormatUnsupported: csv requested for a non-tabular payload
        """
        fmt = OutputFormat.parse(output_format) if output_format is not None else self.default_format
        if fmt is OutputFormat.JSON:
            text = self.json_exporter.render(envelope)
        elif fmt is OutputFormat.CSV:
            text = self.csv_exporter.render(envelope.results)
        else:
            text = self.table_reporter.render(envelope.results)

        self.reports_generated += 1
        self.logger.debug(f"Emitted {envelope.command} as {fmt.value} ({len(text)} chars)")
        return text

    def get_statistics(self) -> Dict[str, Any]:
        return {
            'reports_generated': self.reports_generated,
            'json_documents': self.json_exporter.documents_rendered,
            'csv_rows': self.csv_exporter.rows_exported,
            'tables': self.table_reporter.tables_rendered,
        }
