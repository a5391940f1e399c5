"""Controllability bounds for leader-follower consensus networks.

For a connected graph with a set of leader nodes this package computes the exact rank of the
controllability matrix of ``x' = -Lx + Bu`` together with a graph-theoretic lower bound
(longest distance-vector sequence) and upper bound (cell count of the maximal
leader-invariant external equitable partition).
"""
from .bounds import bounds_report, lower_bound
from .controllability import controllability_matrix
from .entities import BoundsReport, DistanceSequence, Network, Partition
from .graph import validate
from .partitions import maximal_leader_invariant_eep

__all__ = [
    "BoundsReport",
    "DistanceSequence",
    "Network",
    "Partition",
    "bounds_report",
    "controllability_matrix",
    "lower_bound",
    "maximal_leader_invariant_eep",
    "validate",
]
