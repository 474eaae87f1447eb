"""
Canonical JSON export for walkrecon results

Keys are sorted, floats carry a fixed number of significant digits and
non-finite floats become null, so identical inputs give identical bytes.
"""

import dataclasses
import json
import math
import os
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional
import logging

import numpy as np

from ..absorption.conjecture import RationalProb

logger = logging.getLogger(__name__)

DEFAULT_FLOAT_DIGITS = 17


class JSONExporter:
    """
    Serializes envelopes and payloads to canonical JSON.

    Complex values become {"re", "im"} objects and exact rationals become
    {"exact": "p/q", "decimal": float}.
    """

    def __init__(self, config: Optional[Any] = None):
        """
        Initialize JSON exporter.

        Args:
            config: Configuration object; reporting.float_digits sets the precision
        """
        self.config = config
        self.logger = logging.getLogger(self.__class__.__name__)

        # Export settings
        self.indent = 2
        self.float_digits = DEFAULT_FLOAT_DIGITS
        if config is not None:
            self.float_digits = config.reporting.float_digits

        # Statistics
        self.documents_rendered = 0

    def _prepare_for_json(self, data: Any) -> Any:
        """Reduce data to dict/list/str/int/float/bool/None"""
        if isinstance(data, RationalProb):
            return {'exact': str(data), 'decimal': data.decimal}
        if isinstance(data, Fraction):
            return {'exact': f"{data.numerator}/{data.denominator}", 'decimal': float(data)}
        if isinstance(data, Enum):
            return self._prepare_for_json(data.value)
        if isinstance(data, (bool, np.bool_)):
            return bool(data)
        if isinstance(data, (int, np.integer)):
            return int(data)
        if isinstance(data, (float, np.floating)):
            value = float(data)
            return value if math.isfinite(value) else None
        if isinstance(data, (complex, np.complexfloating)):
            value = complex(data)
            return {'re': self._prepare_for_json(value.real), 'im': self._prepare_for_json(value.imag)}
        if isinstance(data, dict):
            return {str(key): self._prepare_for_json(value) for key, value in data.items()}
        if isinstance(data, (list, tuple, set)):
            items = sorted(data) if isinstance(data, set) else data
            return [self._prepare_for_json(item) for item in items]
        if isinstance(data, np.ndarray):
            return [self._prepare_for_json(item) for item in data.tolist()]
        if hasattr(data, 'to_dict'):
            return self._prepare_for_json(data.to_dict())
        if dataclasses.is_dataclass(data) and not isinstance(data, type):
            return self._prepare_for_json({f.name: getattr(data, f.name) for f in dataclasses.fields(data)})
        if data is None or isinstance(data, str):
            return data
        raise TypeError(f"Object of type {type(data)} is not JSON serializable")

    def _format_float(self, value: float) -> str:
        text = format(value, f'.{self.float_digits}g')
        # keep floats distinguishable from ints
        if text.lstrip('-').isdigit():
            text += '.0'
        return text

    def _encode(self, data: Any, level: int, out: List[str]) -> None:
        pad = ' ' * (self.indent * (level + 1))
        end_pad = ' ' * (self.indent * level)
        if data is None:
            out.append('null')
        elif data is True:
            out.append('true')
        elif data is False:
            out.append('false')
        elif isinstance(data, int):
            out.append(str(data))
        elif isinstance(data, float):
            out.append(self._format_float(data))
        elif isinstance(data, str):
            out.append(json.dumps(data, ensure_ascii=False))
        elif isinstance(data, dict):
            if not data:
                out.append('{}')
                return
            out.append('{\n')
            for i, key in enumerate(sorted(data)):
                out.append(f"{pad}{json.dumps(key, ensure_ascii=False)}: ")
                self._encode(data[key], level + 1, out)
                out.append(',\n' if i < len(data) - 1 else '\n')
            out.append(end_pad + '}')
        else:
            if not data:
                out.append('[]')
                return
            out.append('[\n')
            for i, item in enumerate(data):
                out.append(pad)
                self._encode(item, level + 1, out)
                out.append(',\n' if i < len(data) - 1 else '\n')
            out.append(end_pad + ']')

    def render(self, data: Any) -> str:
        """
        Canonical JSON text for data.

        Args:
            data: envelope, dict, or any value _prepare_for_json accepts

        Returns:
            str: JSON text ending in a newline
        """
        out: List[str] = []
        self._encode(self._prepare_for_json(data), 0, out)
        self.documents_rendered += 1
        return ''.join(out) + '\n'

    def export(self, data: Any, output_path: str) -> bool:
        """
        Write canonical JSON to a file.

        Returns:
            bool: Success status
        """
        try:
            os.makedirs(Path(output_path).parent, exist_ok=True)
            with open(output_path, 'w', encoding='utf-8') as f:
                f.write(self.render(data))
            self.logger.info(f"Exported JSON to {output_path}")
            return True
        except OSError as e:
            self.logger.error(f"Error exporting JSON to {output_path}: {e}")
            return False
