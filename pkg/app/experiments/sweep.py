"""
Parameter sweeps: one child experiment per point of a cartesian grid
"""
import copy
import itertools
import json
import logging
import os

from rest_framework import serializers

from core.exceptions import LabError

from .runner import ExperimentResult, run
from .writers import LabJSONEncoder

logger = logging.getLogger(__name__)

PASSED = "passed"
ACCEPTANCE_FAILURE = "acceptance-failure"
VALIDATION_ERROR = "validation-error"
RUNTIME_ERROR = "runtime-error"


def expand_grid(grid: dict) -> list:
    """
    Points of the cartesian product of `grid` ({"dotted.path": [...]}),
    in sorted key order. An empty grid, or an empty value list, has no
    points.
    """
    if not grid:
        return []
    keys = sorted(grid)
    return [
        dict(zip(keys, values))
        for values in itertools.product(*(grid[key] for key in keys))
    ]


def assign(config: dict, path: str, value) -> dict:
    """Sets config[a][b][c] = value for path "a.b.c", creating sections"""

    *sections, leaf = path.split(".")
    node = config
    for name in sections:
        node = node.setdefault(name, {})
    node[leaf] = value
    return config


def _run_row(index: int, point: dict, attrs: dict, out_dir: str) -> dict:
    child = copy.deepcopy(attrs["sweep"]["base"])
    for path, value in point.items():
        assign(child, path, value)
    child.setdefault("seed", attrs["seed"])
    row = {
        "index": index,
        "params": point,
        "status": PASSED,
        "error": None,
        "verdicts": {},
    }
    try:
        result = run(child, os.path.join(out_dir, f"row-{index:03d}"))
    except serializers.ValidationError as exc:
        row["status"], row["error"] = VALIDATION_ERROR, exc.detail
    except LabError as exc:
        row["status"], row["error"] = RUNTIME_ERROR, str(exc)
    else:
        row["verdicts"] = result.verdicts
        if not result.passed:
            row["status"] = ACCEPTANCE_FAILURE

    if row["status"] != PASSED:
        logger.warning(
            "Sweep row %d %s: %s", index, row["status"], row["error"]
        )
    return row


def run_sweep(attrs: dict, out_dir: str) -> ExperimentResult:
    """
    Runs the rows sequentially; a failing row never stops the sweep. The
    sweep passes unless every row (of a non-empty grid) fails.
    """
    points = expand_grid(attrs["sweep"].get("grid") or {})
    rows = [
        _run_row(index, point, attrs, out_dir)
        for index, point in enumerate(points)
    ]
    passed = not rows or any(row["status"] == PASSED for row in rows)
    table = [
        (
            row["index"],
            json.dumps(row["params"], cls=LabJSONEncoder, sort_keys=True),
            row["status"],
            json.dumps(row["verdicts"], cls=LabJSONEncoder, sort_keys=True),
        )
        for row in rows
    ]
    return ExperimentResult(
        "sweep",
        {"rows": rows},
        {"passed_rows": sum(row["status"] == PASSED for row in rows)},
        {"sweep": (["index", "params", "status", "verdicts"], table)},
        {},
        passed,
    )
