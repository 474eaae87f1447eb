"""
Human-readable aligned tables

Tabular payloads print as one aligned table; anything nested is flattened
to dotted key paths and shown as a two-column key/value listing.
"""

from typing import Any, Optional
import logging

import pandas as pd

from ..core.errors import FormatUnsupported
from .csv_exporter import CSVExporter
from .json_exporter import JSONExporter

logger = logging.getLogger(__name__)


class TableReporter:
    """Renders payloads with pandas for terminal reading"""

    def __init__(self, config: Optional[Any] = None):
        self.config = config
        self.logger = logging.getLogger(self.__class__.__name__)
        self._json = JSONExporter(config)
        self._csv = CSVExporter(config)
        self.tables_rendered = 0

    def render(self, results: Any) -> str:
        """
        Aligned text for a results payload.

        Args:
            results: any payload the JSON exporter accepts

        Returns:
            str: table text ending in a newline
        """
        try:
            rows = self._csv.extract_rows(results)
            frame = pd.DataFrame([{h: self._csv._cell(v, h) for h, v in row.items()} for row in rows])
        except FormatUnsupported:
            prepared = self._json._prepare_for_json(results)
            if not isinstance(prepared, dict):
                prepared = {'value': prepared}
            flat = pd.json_normalize(prepared, sep='.')
            record = flat.iloc[0].to_dict() if len(flat) else {}
            frame = pd.DataFrame({'key': list(record), 'value': [self._text(v) for v in record.values()]})

        self.tables_rendered += 1
        return frame.to_string(index=False) + '\n'

    def _text(self, value: Any) -> str:
        if isinstance(value, float):
            return self._json._format_float(value)
        if isinstance(value, list):
            if value and all(isinstance(v, dict) for v in value):
                return f"[{len(value)} entries]"
            return ', '.join(self._text(v) for v in value)
        if value is None:
            return '-'
        return str(value)
