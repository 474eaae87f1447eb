"""
CSV export for tabular walkrecon results

Only row-shaped payloads are representable: a flat mapping (one row), a
list of flat mappings, a mapping whose 'rows' entry is such a list, or an
object exposing table_rows().
"""

import csv
import io
import math
import os
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional
import logging

import numpy as np

from ..absorption.conjecture import RationalProb
from ..core.errors import FormatUnsupported

logger = logging.getLogger(__name__)


class CSVExporter:
    """
    Exports tabular results to CSV.

    Exact rationals are written as "p/q", complex values as "re+imj" and
    non-finite floats as empty cells.
    """

    def __init__(self, config: Optional[Any] = None):
        """
        Initialize CSV exporter.

        Args:
            config: Configuration object; reporting.float_digits sets the precision
        """
        self.config = config
        self.logger = logging.getLogger(self.__class__.__name__)

        # Export settings
        self.delimiter = ','
        self.quotechar = '"'
        self.encoding = 'utf-8'
        self.float_digits = config.reporting.float_digits if config is not None else 17

        # Statistics
        self.files_exported = 0
        self.rows_exported = 0

    def _cell(self, value: Any, column: str) -> str:
        if isinstance(value, RationalProb):
            return str(value)
        if isinstance(value, Fraction):
            return f"{value.numerator}/{value.denominator}"
        if isinstance(value, Enum):
            return str(value.value)
        if value is None:
            return ''
        if isinstance(value, (bool, np.bool_)):
            return 'true' if value else 'false'
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        if isinstance(value, (float, np.floating)):
            value = float(value)
            return format(value, f'.{self.float_digits}g') if math.isfinite(value) else ''
        if isinstance(value, (complex, np.complexfloating)):
            value = complex(value)
            return f"{value.real:.{self.float_digits}g}{value.imag:+.{self.float_digits}g}j"
        if isinstance(value, str):
            return value
        raise FormatUnsupported(f"column '{column}' holds a non-scalar {type(value).__name__}; use --format json")

    def extract_rows(self, results: Any) -> List[Dict[str, Any]]:
        """
        Row list for a results payload.

        Raises:
            FormatUnsupported: payload has no tabular shape
        """
        if hasattr(results, 'table_rows'):
            results = results.table_rows()
        elif hasattr(results, 'to_dict'):
            results = results.to_dict()
        if isinstance(results, dict) and isinstance(results.get('rows'), list):
            dropped = sorted(k for k in results if k != 'rows')
            if dropped:
                self.logger.debug(f"CSV keeps only the rows table, dropping {dropped}")
            results = results['rows']
        elif isinstance(results, dict):
            results = [results]
        if not isinstance(results, list) or not results:
            raise FormatUnsupported("payload is not a table; use --format json")

        rows = []
        for row in results:
            if hasattr(row, 'to_dict'):
                row = row.to_dict()
            if not isinstance(row, dict):
                raise FormatUnsupported("table rows must be mappings; use --format json")
            rows.append(row)
        return rows

    def render(self, results: Any) -> str:
        """
        CSV text with a header row.

        Args:
            results: tabular payload (see module docstring)

        Returns:
            str: CSV text

        Raises:
            FormatUnsupported: payload is not tabular
        """
        rows = self.extract_rows(results)
        headers: List[str] = []
        for row in rows:
            for key in row:
                if key not in headers:
                    headers.append(key)

        buffer = io.StringIO()
        writer = csv.writer(buffer, delimiter=self.delimiter, quotechar=self.quotechar, lineterminator='\n')
        writer.writerow(headers)
        for row in rows:
            writer.writerow([self._cell(row.get(h), h) for h in headers])
            self.rows_exported += 1
        return buffer.getvalue()

    def export(self, results: Any, output_path: str) -> bool:
        """
        Write CSV to a file.

        Returns:
            bool: Success status
        """
        text = self.render(results)
        try:
            os.makedirs(Path(output_path).parent, exist_ok=True)
            with open(output_path, 'w', newline='', encoding=self.encoding) as csvfile:
                csvfile.write(text)
            self.files_exported += 1
            self.logger.info(f"Exported CSV to {output_path}")
            return True
        except OSError as e:
            self.logger.error(f"Error exporting CSV to {output_path}: {e}")
            return False
