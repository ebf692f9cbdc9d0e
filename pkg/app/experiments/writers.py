"""
Result files: JSON reports, CSV tables and SVG figures
"""
import csv
import json
import logging
import os

import matplotlib
import numpy as np
from django.core.serializers.json import DjangoJSONEncoder

logger = logging.getLogger(__name__)


class LabJSONEncoder(DjangoJSONEncoder):
    """
    Encodes numpy scalars and arrays next to the Django types
    """

    def default(self, o):
        if isinstance(o, np.generic):
            return o.item()
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, tuple):
            return list(o)
        return super().default(o)


def dumps(data) -> str:
    """Deterministic JSON text: sorted keys, fixed indentation"""

    return json.dumps(data, cls=LabJSONEncoder, indent=2, sort_keys=True)


def write_json(path: str, data) -> str:
    with open(path, "w") as handle:
        handle.write(dumps(data))
        handle.write("\n")
    logger.info("Wrote %s", path)
    return path


def write_table(path: str, header, rows) -> str:
    """CSV with floats written by repr, so values round-trip exactly"""

    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [repr(float(v)) if _is_float(v) else v for v in row]
            )
    logger.info("Wrote %s", path)
    return path


def _is_float(value) -> bool:
    return isinstance(value, (float, np.floating))


def write_figure(path: str, figure) -> str:
    """SVG without a creation date and with stable element ids"""

    with matplotlib.rc_context({"svg.hashsalt": "diffusion-lab"}):
        figure.savefig(path, format="svg", metadata={"Date": None})
    logger.info("Wrote %s", path)
    return path


def ensure_directory(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    if not os.access(path, os.W_OK):
        raise PermissionError(f"Output directory is not writable: {path}")
    return path
