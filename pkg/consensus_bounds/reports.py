"""Text and JSON rendering of analysis results."""
import json
from typing import Any, Dict, Iterable, Tuple

from .analyzers import CheckSuite
from .controllability import ControllabilityMatrix
from .entities import BoundsReport, DistanceSequence, Partition, SequenceEntry
from .errors import ParseError

FORMATS = ("text", "json")


def _dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2) + "\n"


def format_entry(entry: SequenceEntry) -> str:
    """``(0*,3)``: the vector with its chosen coordinate starred."""
    coords = [f"{x}*" if j == entry.k else str(x) for j, x in enumerate(entry.vector)]
    return f"({','.join(coords)})"


def format_sequence(seq: DistanceSequence) -> str:
    return " ".join(format_entry(entry) for entry in seq) or "(empty)"


def format_cells(cells: Iterable[Tuple[int, ...]]) -> str:
    return " ".join("{" + ",".join(str(node) for node in cell) + "}" for cell in cells)


def render_report(report: BoundsReport, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps(report.to_dict())
    lines = [
        f"bounds:  {report.lower} <= {report.rank} <= {report.upper}" + ("  (tight)" if report.tight else ""),
        f"witness: {format_sequence(report.witness)}",
        f"eep:     {len(report.eep)} cells  {format_cells(report.eep)}",
    ]
    if report.distance_partition_size is not None:
        lines.append(f"distance partition: {report.distance_partition_size} cells")
    return "\n".join(lines) + "\n"


def loads_report(text: str) -> BoundsReport:
    try:
        return BoundsReport.from_dict(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ParseError(f"not a bounds report: {e}") from e


def render_rank(gamma: ControllabilityMatrix, fmt: str = "text") -> str:
    rows, cols = gamma.matrix.shape
    if fmt == "json":
        return _dumps({"rank": gamma.rank, "rows": rows, "cols": cols})
    return f"rank(Gamma) = {gamma.rank}  ({rows}x{cols})\n"


def render_eep(partition: Partition, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps({"size": len(partition), "cells": partition.to_lists()})
    return f"{len(partition)} cells  {format_cells(partition)}\n"


def render_lower_bound(length: int, witness: DistanceSequence, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps({"lower": length, "witness_sequence": witness.to_dicts()})
    return f"|D*| = {length}\nwitness: {format_sequence(witness)}\n"


def render_check(suite: CheckSuite, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps(suite.to_dict())
    width = max(len(result.name) for result in suite.results)
    lines = [f"{result.status.upper():<7} {result.name:<{width}}  {result.detail}".rstrip()
             for result in suite.results]
    lines.append("all checks passed" if suite.passed else "CHECKS FAILED")
    return "\n".join(lines) + "\n"
