import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .entities import DistanceSequence, Network
from .errors import InvalidSequenceError
from .graph import adjacency, bfs_distances, laplacian
from .linalg import BigIntMatrix, hstack, mat_mul, rank
from .sequences import check_rule, distance_vector_set

logger = logging.getLogger(__name__)

DEFAULT_SIZE_WARNING_NODES = 64

InputMatrix = BigIntMatrix


@dataclass(frozen=True)
class ControllabilityMatrix:
    blocks: Tuple[BigIntMatrix, ...]
    matrix: BigIntMatrix
    rank: int

    def block(self, r: int) -> BigIntMatrix:
        return self.blocks[r]


@dataclass(frozen=True)
class PatternViolation:
    node: int
    leader_index: int
    power: int
    expected: int
    actual: int

    def __str__(self):
        return (f"[(-L)^{self.power} b_{self.leader_index}]_{self.node} = {self.actual}, "
                f"expected {self.expected}")


def input_matrix(net: Network) -> InputMatrix:
    """n x m matrix; column k is the unit vector of ``leaders[k]``."""
    entries = [0] * (net.n * net.m)
    for k, leader in enumerate(net.leaders):
        entries[leader * net.m + k] = 1
    return BigIntMatrix(net.n, net.m, tuple(entries))


def krylov_blocks(net: Network, count: int) -> Tuple[BigIntMatrix, ...]:
    """``(B, (-L)B, ..., (-L)^(count-1) B)``, each block one product away from the last."""
    neg_laplacian = -laplacian(net)
    blocks: List[BigIntMatrix] = []
    block = input_matrix(net)
    for _ in range(count):
        blocks.append(block)
        block = mat_mul(neg_laplacian, block)
    return tuple(blocks)


def controllability_matrix(net: Network, horizon: Optional[int] = None,
                           size_warning_nodes: int = DEFAULT_SIZE_WARNING_NODES) -> ControllabilityMatrix:
    """Kalman matrix ``[B, (-L)B, ..., (-L)^(horizon-1) B]`` and its exact rank.

    ``horizon`` defaults to n; longer horizons never raise the rank.
    """
    if net.n > size_warning_nodes:
        logger.warning(f"[Gamma] n={net.n} exceeds {size_warning_nodes} nodes; exact rank will be slow")
    blocks = krylov_blocks(net, net.n if horizon is None else horizon)
    matrix = hstack(*blocks)
    gamma_rank = rank(matrix)
    logger.debug(f"[Gamma] {matrix.rows}x{matrix.cols} rank={gamma_rank}")
    return ControllabilityMatrix(blocks=blocks, matrix=matrix, rank=gamma_rank)


def is_completely_controllable(net: Network) -> bool:
    return controllability_matrix(net).rank == net.n


def check_zero_pattern(net: Network) -> List[PatternViolation]:
    """Compare the zero pattern of ``(-L)^r b_k`` against the hop distances.

    For node i and leader k at distance d, entries for r < d must vanish and the entry for
    r = d must equal the (positive) count of shortest i-k walks, ``[A^d]_{i, leader_k}``.
    Powers beyond d are not constrained.
    """
    distances = bfs_distances(net)
    depth = max((max(row) for row in distances), default=0)
    blocks = krylov_blocks(net, depth + 1)

    a = adjacency(net)
    walks = [BigIntMatrix.identity(net.n)]
    for _ in range(depth):
        walks.append(mat_mul(walks[-1], a))

    violations = []
    for i in range(net.n):
        for k, leader in enumerate(net.leaders):
            d = distances[i][k]
            expected_at_d = walks[d][i, leader]
            for r in range(d + 1):
                actual = blocks[r][i, k]
                expected = 0 if r < d else expected_at_d
                if actual != expected or (r == d and expected <= 0):
                    violations.append(PatternViolation(i, k, r, expected, actual))
    if violations:
        logger.warning(f"[Gamma] {len(violations)} zero-pattern violations on {net}")
    return violations


def witness_submatrix(net: Network, seq: DistanceSequence) -> BigIntMatrix:
    """Columns ``(-L)^{r_p} b_{k_p}`` with ``r_p = d^p[k_p]``; full column rank for a valid sequence."""
    vectors = distance_vector_set(bfs_distances(net))
    if any(len(entry.vector) != net.m for entry in seq):
        raise InvalidSequenceError(f"sequence vectors must have dimension {net.m}")
    if not check_rule(seq):
        raise InvalidSequenceError("sequence violates the strict-increase rule")
    unknown = [entry.vector for entry in seq if entry.vector not in vectors]
    if unknown:
        raise InvalidSequenceError(f"vectors {unknown} are not distance vectors of {net}")
    if not len(seq):
        return BigIntMatrix(net.n, 0, ())

    blocks = krylov_blocks(net, max(entry.vector[entry.k] for entry in seq) + 1)
    columns = [blocks[entry.vector[entry.k]].select_columns([entry.k]) for entry in seq]
    return hstack(*columns)
