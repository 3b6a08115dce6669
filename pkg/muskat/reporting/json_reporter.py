"""
JSON writer for run summaries, ratio reports and verification summaries.
"""
import json
import math
from enum import Enum
from pathlib import Path
from typing import Any, Dict

import numpy as np


def _json_serializer(obj: Any) -> Any:
    """Custom JSON serializer for numpy scalars, arrays, enums and paths."""
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Path):
        return str(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def _finite_or_label(value: Any) -> Any:
    """JSON has no inf/nan; they are written as strings."""
    if isinstance(value, float) and not math.isfinite(value):
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    if isinstance(value, dict):
        return {k: _finite_or_label(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite_or_label(v) for v in value]
    return value


class JsonReporter:
    """Writes a mapping with its config digest, sorted keys and two-space indent."""

    def generate_report(self, data: Dict[str, Any], path: Path, config_digest: str) -> str:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        document = dict(data)
        document["config_digest"] = config_digest
        # round trip through the serializer so nonfinite floats inside to_dict() results are caught too
        plain = json.loads(json.dumps(document, default=_json_serializer, allow_nan=True))
        with open(path, 'w', encoding='utf-8') as json_file:
            json.dump(_finite_or_label(plain), json_file, indent=2, sort_keys=True, allow_nan=False)
            json_file.write("\n")
        return str(path)
