import logging
from typing import Tuple

from .controllability import DEFAULT_SIZE_WARNING_NODES, controllability_matrix
from .entities import BoundsReport, DistanceSequence, Network
from .errors import InvalidSequenceError, SandwichViolationError
from .graph import bfs_distances, require_connected
from .partitions import distance_partition, maximal_leader_invariant_eep
from .sequences import check_rule, distance_vector_set, level_search

logger = logging.getLogger(__name__)


def lower_bound(net: Network) -> Tuple[int, DistanceSequence]:
    """|D*| for the network's distance vectors, with a witness sequence."""
    require_connected(net)
    vectors = distance_vector_set(bfs_distances(net))
    length, witness = level_search(vectors, net.m)
    if not check_rule(witness) or len(witness) != length:
        raise InvalidSequenceError(f"witness {witness} does not certify |D*|={length}")
    return length, witness


def bounds_report(net: Network, size_warning_nodes: int = DEFAULT_SIZE_WARNING_NODES) -> BoundsReport:
    """|D*| <= rank(Gamma) <= |pi*|, each side computed independently."""
    require_connected(net)
    lower, witness = lower_bound(net)
    gamma = controllability_matrix(net, size_warning_nodes=size_warning_nodes)
    eep = maximal_leader_invariant_eep(net)
    report = BoundsReport(
        lower=lower,
        rank=gamma.rank,
        upper=len(eep),
        witness=witness,
        eep=eep,
        distance_partition_size=len(distance_partition(net, 0)) if net.m == 1 else None,
    )
    if not report.lower <= report.rank <= report.upper:
        logger.error(f"[Bounds] sandwich violated on {net}: {report.lower} <= {report.rank} <= {report.upper}")
        raise SandwichViolationError(
            f"expected {report.lower} <= {report.rank} <= {report.upper} on {net}"
        )
    logger.info(f"[Bounds] {net}: {report.lower} <= {report.rank} <= {report.upper}")
    return report
