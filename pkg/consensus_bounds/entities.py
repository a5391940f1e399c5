from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class Network:
    """Undirected simple graph on nodes ``0..n-1`` with an ordered leader list.

    Build it through :func:`consensus_bounds.graph.validate`, which canonicalizes the edge
    list (smaller endpoint first, sorted) and rejects malformed input.
    """

    n: int
    edges: Tuple[Tuple[int, int], ...]
    leaders: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.leaders)

    @property
    def followers(self) -> Tuple[int, ...]:
        leader_set = set(self.leaders)
        return tuple(i for i in range(self.n) if i not in leader_set)

    @cached_property
    def adjacency_lists(self) -> Tuple[Tuple[int, ...], ...]:
        lists: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in lists)

    def neighbors(self, i: int) -> Tuple[int, ...]:
        return self.adjacency_lists[i]

    @cached_property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency_lists), default=0)

    @cached_property
    def connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def __repr__(self):
        return "{0}(n={1}, edges={2}, leaders={3})".format(
            self.__class__.__name__, self.n, len(self.edges), list(self.leaders)
        )


@dataclass(frozen=True)
class DistanceMatrix:
    """``rows[i][k]`` is the hop distance from node ``i`` to ``leaders[k]``."""

    rows: Tuple[Vector, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, i: int) -> Vector:
        return self.rows[i]

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.rows)

    def column(self, k: int) -> Tuple[int, ...]:
        return tuple(row[k] for row in self.rows)


@dataclass(frozen=True)
class Partition:
    """Disjoint cells covering the nodes; cells sorted by smallest member."""

    cells: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]]) -> "Partition":
        sorted_cells = [tuple(sorted(cell)) for cell in cells]
        sorted_cells.sort(key=lambda cell: cell[0] if cell else -1)
        return cls(tuple(sorted_cells))

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable]) -> "Partition":
        groups: Dict[Hashable, List[int]] = {}
        for node, label in enumerate(labels):
            groups.setdefault(label, []).append(node)
        return cls.from_cells(groups.values())

    @cached_property
    def cell_of(self) -> Dict[int, int]:
        return {node: index for index, cell in enumerate(self.cells) for node in cell}

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.cells)

    def to_lists(self) -> List[List[int]]:
        return [list(cell) for cell in self.cells]


@dataclass(frozen=True)
class SequenceEntry:
    vector: Vector
    k: int

    def to_dict(self) -> Dict[str, Any]:
        return {"vector": list(self.vector), "k": self.k}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SequenceEntry":
        return cls(tuple(int(x) for x in data["vector"]), int(data["k"]))


@dataclass(frozen=True)
class DistanceSequence:
    entries: Tuple[SequenceEntry, ...] = ()

    @classmethod
    def of(cls, *pairs: Tuple[Sequence[int], int]) -> "DistanceSequence":
        return cls(tuple(SequenceEntry(tuple(vector), k) for vector, k in pairs))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[SequenceEntry]:
        return iter(self.entries)

    def __getitem__(self, p: int) -> SequenceEntry:
        return self.entries[p]

    @property
    def vectors(self) -> Tuple[Vector, ...]:
        return tuple(entry.vector for entry in self.entries)

    def to_dicts(self) -> List[Dict[str, Any]]:
        return [entry.to_dict() for entry in self.entries]

    @classmethod
    def from_dicts(cls, items: Iterable[Dict[str, Any]]) -> "DistanceSequence":
        return cls(tuple(SequenceEntry.from_dict(item) for item in items))


@dataclass(frozen=True)
class CandidateSet:
    """Vectors still eligible at one sequence position, sorted and deduplicated."""

    vectors: Tuple[Vector, ...]

    @classmethod
    def of(cls, vectors: Iterable[Sequence[int]]) -> "CandidateSet":
        return cls(tuple(sorted({tuple(v) for v in vectors})))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.vectors)

    def column_min(self, j: int) -> int:
        return min(v[j] for v in self.vectors)

    def remove_column_min(self, j: int) -> Tuple[Vector, "CandidateSet"]:
        """Drop every vector achieving the minimum of coordinate ``j``.

        Returns the lexicographically smallest dropped vector with the remaining set.
        """
        low = self.column_min(j)
        # vectors are sorted, so the first hit is the lexicographic minimum
        picked = next(v for v in self.vectors if v[j] == low)
        return picked, CandidateSet(tuple(v for v in self.vectors if v[j] != low))


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    rank: int
    upper: int
    witness: DistanceSequence
    eep: Partition
    distance_partition_size: Optional[int] = None

    @property
    def tight(self) -> bool:
        return self.lower == self.rank == self.upper

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "lower": self.lower,
            "rank": self.rank,
            "upper": self.upper,
            "witness_sequence": self.witness.to_dicts(),
            "eep_cells": self.eep.to_lists(),
        }
        if self.distance_partition_size is not None:
            data["distance_partition_size"] = self.distance_partition_size
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BoundsReport":
        size = data.get("distance_partition_size")
        return cls(
            lower=int(data["lower"]),
            rank=int(data["rank"]),
            upper=int(data["upper"]),
            witness=DistanceSequence.from_dicts(data["witness_sequence"]),
            eep=Partition.from_cells(data["eep_cells"]),
            distance_partition_size=None if size is None else int(size),
        )
