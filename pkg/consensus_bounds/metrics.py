from typing import TextIO

from prometheus_client import REGISTRY, Counter, Histogram

METRIC_PREFIX = "consensus_bounds_"

OP_DURATION = Histogram("consensus_bounds_op_duration_seconds",
                        "Time taken by analysis operations",
                        ["operation"])
OP_ERRORS = Counter("consensus_bounds_op_errors_total",
                    "Failed analysis operations",
                    ["operation", "error"])

SLOW_OPERATION_SECONDS = 1.0


def write_metrics(out: TextIO, prefix: str = METRIC_PREFIX) -> int:
    """Dump every recorded sample of this package's metrics; returns the number of lines written."""
    written = 0
    for metric in REGISTRY.collect():
        if not metric.name.startswith(prefix):
            continue
        for sample in metric.samples:
            if sample.name.endswith("_created"):
                continue
            labels = ",".join(f'{key}="{value}"' for key, value in sorted(sample.labels.items()))
            out.write(f"{sample.name}{{{labels}}} {sample.value}\n")
            written += 1
    return written


def sample_value(name: str, labels: dict) -> float:
    value = REGISTRY.get_sample_value(name, labels)
    return 0.0 if value is None else value
