import logging
from typing import Iterable, Sequence, Tuple

import networkx as nx

from .entities import DistanceMatrix, Network
from .errors import (DisconnectedError, DuplicateEdgeError, DuplicateLeaderError, EmptyLeaderSetError,
                     InvalidNodeCountError, LeaderOutOfRangeError, NodeOutOfRangeError, SelfLoopError)
from .linalg import BigIntMatrix

logger = logging.getLogger(__name__)


def validate(n: int, edges: Iterable[Sequence[int]], leaders: Iterable[int]) -> Network:
    """Check raw input and return the canonical :class:`Network`.

    Connectivity is not required here; it is recorded on ``Network.connected`` and enforced
    by the analyses that need it.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidNodeCountError(f"node count must be a positive integer, got {n!r}")

    canonical = set()
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise NodeOutOfRangeError(f"edge ({u}, {v}) references a node outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at node {u}")
        key = (min(u, v), max(u, v))
        if key in canonical:
            raise DuplicateEdgeError(f"edge {key} listed twice")
        canonical.add(key)

    leaders = tuple(leaders)
    if not leaders:
        raise EmptyLeaderSetError("at least one leader is required")
    seen = set()
    for leader in leaders:
        if not 0 <= leader < n:
            raise LeaderOutOfRangeError(f"leader {leader} outside 0..{n - 1}")
        if leader in seen:
            raise DuplicateLeaderError(f"leader {leader} listed twice")
        seen.add(leader)

    net = Network(n=n, edges=tuple(sorted(canonical)), leaders=leaders)
    logger.debug(f"[Graph] validated {net} connected={net.connected}")
    return net


def from_networkx(graph: nx.Graph, leaders: Iterable[int]) -> Network:
    """Validate a networkx graph whose nodes are already labeled ``0..n-1``."""
    return validate(graph.number_of_nodes(), graph.edges(), leaders)


def require_connected(net: Network) -> Network:
    if not net.connected:
        raise DisconnectedError(f"{net} is not connected")
    return net


def adjacency(net: Network) -> BigIntMatrix:
    entries = [0] * (net.n * net.n)
    for u, v in net.edges:
        entries[u * net.n + v] = 1
        entries[v * net.n + u] = 1
    return BigIntMatrix(net.n, net.n, tuple(entries))


def degree(net: Network) -> BigIntMatrix:
    return BigIntMatrix.diagonal([len(net.neighbors(i)) for i in range(net.n)])


def laplacian(net: Network) -> BigIntMatrix:
    return degree(net) - adjacency(net)


def bfs_distances(net: Network) -> DistanceMatrix:
    """Hop distance from every node to every leader, one BFS per leader."""
    graph = net.to_networkx()
    columns = []
    for k, leader in enumerate(net.leaders):
        lengths = nx.single_source_shortest_path_length(graph, leader)
        if len(lengths) != net.n:
            missing = sorted(set(range(net.n)) - set(lengths))
            raise DisconnectedError(f"nodes {missing} unreachable from leader {leader} (index {k})")
        columns.append(lengths)
    rows: Tuple[Tuple[int, ...], ...] = tuple(
        tuple(columns[k][i] for k in range(net.m)) for i in range(net.n)
    )
    return DistanceMatrix(rows)


def is_connected(net: Network) -> bool:
    return net.connected
