"""External equitable partitions (EEPs).

In an EEP every node of a cell has the same number of neighbors in each *other* cell;
neighbors inside the node's own cell are not counted.
"""
import logging
import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .entities import Network, Partition
from .errors import InvalidParamsError, InvalidPartitionError
from .graph import bfs_distances, require_connected

logger = logging.getLogger(__name__)


def validate_partition(net: Network, p: Partition) -> Partition:
    covered = [node for cell in p for node in cell]
    if any(not cell for cell in p):
        raise InvalidPartitionError("partition has an empty cell")
    if len(covered) != len(set(covered)):
        raise InvalidPartitionError("partition cells overlap")
    if sorted(covered) != list(range(net.n)):
        raise InvalidPartitionError(f"partition does not cover exactly the nodes 0..{net.n - 1}")
    return p


def _signature(net: Network, node: int, cell_of: Dict[int, int]) -> Tuple[Tuple[int, int], ...]:
    own = cell_of[node]
    counts = Counter(cell_of[u] for u in net.neighbors(node) if cell_of[u] != own)
    return tuple(sorted(counts.items()))


def is_eep(net: Network, p: Partition) -> bool:
    validate_partition(net, p)
    cell_of = p.cell_of
    return all(
        len({_signature(net, node, cell_of) for node in cell}) == 1
        for cell in p
    )


def is_leader_invariant(net: Network, p: Partition) -> bool:
    return all(len(p.cells[p.cell_of[leader]]) == 1 for leader in net.leaders)


@dataclass
class RefinementTrace:
    passes: int = 0


def maximal_leader_invariant_eep(net: Network, shuffle_seed: Optional[int] = None,
                                 trace: Optional[RefinementTrace] = None) -> Partition:
    """Coarsest EEP with every leader alone in its cell.

    Starts from the leader singletons plus one cell of all followers and splits every cell
    by external-neighbor-count signature until nothing changes. Each pass either adds cells
    or stops, so at most n passes run. ``shuffle_seed`` permutes the cell order before
    each pass; the fixed point does not depend on it. The pass count, the final unchanged pass
    included, is recorded in ``trace``.
    """
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    cells: List[List[int]] = [[leader] for leader in net.leaders]
    if net.followers:
        cells.append(list(net.followers))

    passes = 0
    while True:
        passes += 1
        if rng is not None:
            rng.shuffle(cells)
        cell_of = {node: index for index, cell in enumerate(cells) for node in cell}
        refined: List[List[int]] = []
        for cell in cells:
            groups: Dict[tuple, List[int]] = defaultdict(list)
            for node in cell:
                groups[_signature(net, node, cell_of)].append(node)
            refined.extend(groups.values())
        if len(refined) == len(cells):
            break
        cells = refined

    if trace is not None:
        trace.passes = passes
    result = Partition.from_cells(cells)
    logger.debug(f"[EEP] {len(result)} cells after {passes} passes on {net}")
    return result


def merge_cells(p: Partition, a: int, b: int) -> Partition:
    """Partition with cells ``a`` and ``b`` fused into one."""
    if a == b:
        raise InvalidPartitionError("cannot merge a cell with itself")
    merged = p.cells[a] + p.cells[b]
    rest = [cell for index, cell in enumerate(p.cells) if index not in (a, b)]
    return Partition.from_cells(rest + [merged])


def distance_partition(net: Network, leader_index: int) -> Partition:
    """Nodes grouped by hop distance to ``leaders[leader_index]``."""
    require_connected(net)
    if not 0 <= leader_index < net.m:
        raise InvalidParamsError(f"leader index {leader_index} outside 0..{net.m - 1}")
    return Partition.from_labels(bfs_distances(net).column(leader_index))


def upper_bound(net: Network) -> int:
    require_connected(net)
    return len(maximal_leader_invariant_eep(net))
