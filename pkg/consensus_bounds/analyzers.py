import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple, TypeVar

from .bounds import bounds_report, lower_bound
from .controllability import (DEFAULT_SIZE_WARNING_NODES, ControllabilityMatrix, check_zero_pattern,
                              controllability_matrix, witness_submatrix)
from .entities import BoundsReport, DistanceSequence, Network, Partition
from .graph import bfs_distances, require_connected
from .linalg import rank
from .metrics import OP_DURATION, OP_ERRORS, SLOW_OPERATION_SECONDS
from .partitions import maximal_leader_invariant_eep
from .sequences import DEFAULT_BRUTE_FORCE_CAP, brute_force_max_sequence, distance_vector_set, \
    maximum_sequences, satisfies_greedy_minimum

logger = logging.getLogger(__name__)

T = TypeVar("T")

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""
    counts: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "status": self.status, "detail": self.detail, "counts": dict(self.counts)}


@dataclass(frozen=True)
class CheckSuite:
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def __getitem__(self, name: str) -> CheckResult:
        return next(result for result in self.results if result.name == name)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "checks": [result.to_dict() for result in self.results]}


class NetworkAnalyzer:
    """Entry point for every analysis the command line offers; each call is timed and counted."""

    def __init__(self, brute_force_cap: int = DEFAULT_BRUTE_FORCE_CAP,
                 size_warning_nodes: int = DEFAULT_SIZE_WARNING_NODES) -> None:
        self.brute_force_cap = brute_force_cap
        self.size_warning_nodes = size_warning_nodes

    def _observe(self, operation: str, fn: Callable[[], T]) -> T:
        start = time.perf_counter()
        try:
            return fn()
        except Exception as e:
            OP_ERRORS.labels(operation, type(e).__name__).inc()
            logger.warning(f"[{operation}] failed: {type(e).__name__}: {e}")
            raise
        finally:
            duration = time.perf_counter() - start
            OP_DURATION.labels(operation).observe(duration)
            if duration > SLOW_OPERATION_SECONDS:
                logger.warning(f"[SLOW OPERATION] {operation} took {duration:.2f}s")

    def analyze(self, net: Network) -> BoundsReport:
        return self._observe("analyze", lambda: bounds_report(net, self.size_warning_nodes))

    def rank(self, net: Network) -> ControllabilityMatrix:
        return self._observe("rank", lambda: controllability_matrix(
            require_connected(net), size_warning_nodes=self.size_warning_nodes))

    def eep(self, net: Network) -> Partition:
        return self._observe("eep", lambda: maximal_leader_invariant_eep(require_connected(net)))

    def lower_bound(self, net: Network) -> Tuple[int, DistanceSequence]:
        return self._observe("lower_bound", lambda: lower_bound(net))

    def check(self, net: Network) -> CheckSuite:
        return self._observe("check", lambda: self._run_checks(require_connected(net)))

    def _run_checks(self, net: Network) -> CheckSuite:
        vectors = distance_vector_set(bfs_distances(net))
        length, witness = lower_bound(net)
        gamma = controllability_matrix(net, size_warning_nodes=self.size_warning_nodes)
        upper = len(maximal_leader_invariant_eep(net))

        results = [
            self._check_zero_pattern(net),
            self._check_witness_rank(net, witness),
            self._check_oracle(vectors, net.m, length),
            self._check_greedy_minimum(vectors, net.m, witness),
            CheckResult(
                "sandwich",
                PASS if length <= gamma.rank <= upper else FAIL,
                f"{length} <= {gamma.rank} <= {upper}",
                {"lower": length, "rank": gamma.rank, "upper": upper},
            ),
            self._check_kalman_truncation(net, gamma.rank),
        ]
        for result in results:
            log = logger.info if result.passed else logger.error
            log(f"[Check] {result.name}: {result.status} {result.detail}".rstrip())
        return CheckSuite(tuple(results))

    @staticmethod
    def _check_zero_pattern(net: Network) -> CheckResult:
        violations = check_zero_pattern(net)
        counts = {"pairs": net.n * net.m, "violations": len(violations)}
        detail = "; ".join(str(v) for v in violations[:3])
        return CheckResult("zero-pattern", FAIL if violations else PASS, detail, counts)

    @staticmethod
    def _check_witness_rank(net: Network, witness: DistanceSequence) -> CheckResult:
        witness_rank = rank(witness_submatrix(net, witness))
        status = PASS if witness_rank == len(witness) else FAIL
        return CheckResult("witness-rank", status, f"rank {witness_rank} for {len(witness)} columns",
                           {"columns": len(witness), "rank": witness_rank})

    def _skip_above_cap(self, name: str, vectors) -> Optional[CheckResult]:
        if len(vectors) <= self.brute_force_cap:
            return None
        detail = f"{len(vectors)} vectors exceed the brute-force cap of {self.brute_force_cap}"
        return CheckResult(name, SKIPPED, detail, {"vectors": len(vectors)})

    def _check_oracle(self, vectors, m: int, length: int) -> CheckResult:
        skipped = self._skip_above_cap("oracle-agreement", vectors)
        if skipped:
            return skipped
        oracle_length, _ = brute_force_max_sequence(vectors, m, self.brute_force_cap)
        return CheckResult("oracle-agreement", PASS if oracle_length == length else FAIL,
                           f"level-wise {length}, exhaustive {oracle_length}",
                           {"vectors": len(vectors), "level_wise": length, "exhaustive": oracle_length})

    def _check_greedy_minimum(self, vectors, m: int, witness: DistanceSequence) -> CheckResult:
        skipped = self._skip_above_cap("greedy-minimum", vectors)
        if skipped:
            return skipped
        checked = failed = 0
        for seq in [witness, *maximum_sequences(vectors, m, self.brute_force_cap)]:
            checked += 1
            if not satisfies_greedy_minimum(seq, vectors):
                failed += 1
        return CheckResult("greedy-minimum", FAIL if failed else PASS, f"{failed} of {checked} sequences deviate",
                           {"sequences": checked, "violations": failed})

    def _check_kalman_truncation(self, net: Network, gamma_rank: int) -> CheckResult:
        horizon = 2 * net.n + 1
        extended = controllability_matrix(net, horizon=horizon, size_warning_nodes=self.size_warning_nodes).rank
        return CheckResult("kalman-truncation", PASS if extended == gamma_rank else FAIL,
                           f"rank {gamma_rank} at horizon {net.n}, {extended} at horizon {horizon}",
                           {"rank": gamma_rank, "extended_rank": extended})

