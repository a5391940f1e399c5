"""Distance-vector sequences.

A sequence ``(d^1, k_1), (d^2, k_2), ...`` follows the rule when every later vector is
strictly larger than ``d^p`` in coordinate ``k_p``. The longest such sequence over the
distance vectors of a network, |D*|, lower-bounds the controllable subspace dimension.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .entities import CandidateSet, DistanceMatrix, DistanceSequence, SequenceEntry, Vector
from .errors import DimensionMismatchError, TooLargeError

logger = logging.getLogger(__name__)

DEFAULT_BRUTE_FORCE_CAP = 10


def distance_vector_set(dm: DistanceMatrix) -> FrozenSet[Vector]:
    return frozenset(dm.rows)


def check_rule(seq: DistanceSequence) -> bool:
    for p, entry in enumerate(seq):
        k = entry.k
        if not 0 <= k < len(entry.vector):
            return False
        for later in seq.entries[p + 1:]:
            if len(later.vector) != len(entry.vector) or later.vector[k] <= entry.vector[k]:
                return False
    return True


def satisfies_greedy_minimum(seq: DistanceSequence, vectors: Iterable[Sequence[int]]) -> bool:
    """True when each step picks the minimum of its chosen coordinate over what is still eligible.

    ``vectors`` is the starting set S; the eligible set shrinks as C_{p+1} = C_p minus every
    vector not strictly above ``d^p`` in coordinate ``k_p``.
    """
    candidates = {tuple(v) for v in vectors}
    for entry in seq:
        if entry.vector not in candidates:
            return False
        if entry.vector[entry.k] != min(v[entry.k] for v in candidates):
            return False
        candidates = {v for v in candidates if v[entry.k] > entry.vector[entry.k]}
    return True


def _check_dimensions(vectors: Iterable[Sequence[int]], m: int) -> CandidateSet:
    if m < 1:
        raise DimensionMismatchError(f"leader count must be positive, got {m}")
    candidates = CandidateSet.of(vectors)
    for v in candidates:
        if len(v) != m:
            raise DimensionMismatchError(f"vector {v} has dimension {len(v)}, expected {m}")
    return candidates


@dataclass
class _Node:
    candidates: CandidateSet
    parent: Optional["_Node"] = None
    step: Optional[SequenceEntry] = None

    def path(self) -> List[SequenceEntry]:
        steps = []
        node = self
        while node.step is not None:
            steps.append(node.step)
            node = node.parent
        return steps[::-1]


@dataclass
class LevelTrace:
    """Frontier width per level, i.e. the number of tree nodes at each depth."""

    level_sizes: List[int] = field(default_factory=list)
    deduplicated: bool = True


def level_search(vectors: Iterable[Sequence[int]], m: int, deduplicate: bool = True,
                 trace: Optional[LevelTrace] = None) -> Tuple[int, DistanceSequence]:
    """Maximum rule-satisfying sequence length, level by level.

    Every candidate set in the frontier spawns one child per coordinate by deleting the
    vectors that attain that coordinate's minimum; empty children are dropped. The number
    of levels until the frontier empties is |D*|. Equal children within a level are merged
    when ``deduplicate`` is set, since what follows depends only on the set itself.

    Returns the length together with one witness sequence, recovered from parent links.
    """
    root = _check_dimensions(vectors, m)
    if trace is not None:
        trace.deduplicated = deduplicate
    if not root.vectors:
        return 0, DistanceSequence()

    frontier: List[_Node] = [_Node(root)]
    level = 0
    last: Optional[_Node] = None
    while frontier:
        children: Dict[CandidateSet, _Node] = {}
        expanded: List[_Node] = []
        terminal: Optional[_Node] = None
        for node in frontier:
            for j in range(m):
                picked, child_set = node.candidates.remove_column_min(j)
                child = _Node(child_set, node, SequenceEntry(picked, j))
                if not child_set.vectors:
                    terminal = terminal or child
                elif deduplicate:
                    children.setdefault(child_set, child)
                else:
                    expanded.append(child)
        level += 1
        # the final level empties every child, so its first terminal ends a longest path
        last = terminal or last
        frontier = list(children.values()) if deduplicate else expanded
        if trace is not None:
            trace.level_sizes.append(len(frontier))
        logger.debug(f"[Sequences] level {level}: {len(frontier)} candidate sets")

    witness = DistanceSequence(tuple(last.path()))
    logger.debug(f"[Sequences] |D*|={level} for {len(root)} vectors, m={m}")
    return level, witness


def _eligible_after(candidates: FrozenSet[Vector], d: Vector, k: int) -> FrozenSet[Vector]:
    return frozenset(v for v in candidates if v[k] > d[k])


def _longest_from(m: int):
    @lru_cache(maxsize=None)
    def best(candidates: FrozenSet[Vector]) -> int:
        return max((1 + best(_eligible_after(candidates, d, k)) for d in candidates for k in range(m)),
                   default=0)

    return best


def _oracle_setup(vectors: Iterable[Sequence[int]], m: int, cap: int):
    candidates = _check_dimensions(vectors, m)
    if len(candidates) > cap:
        raise TooLargeError(f"{len(candidates)} distinct vectors exceed the brute-force cap of {cap}")
    return frozenset(candidates.vectors), _longest_from(m)


def brute_force_max_sequence(vectors: Iterable[Sequence[int]], m: int,
                             cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Tuple[int, DistanceSequence]:
    """Exhaustive search over every vector choice and index choice.

    Any vector may be placed next, not just a minimal one; placing ``d`` with index ``k``
    leaves exactly the vectors strictly above ``d`` in coordinate ``k`` eligible. Lengths are
    memoized per eligible set.
    """
    remaining, best = _oracle_setup(vectors, m, cap)
    length = best(remaining)

    steps = []
    while remaining:
        target = best(remaining)
        for d, k in ((d, k) for d in sorted(remaining) for k in range(m)):
            child = _eligible_after(remaining, d, k)
            if 1 + best(child) == target:
                steps.append(SequenceEntry(d, k))
                remaining = child
                break
    return length, DistanceSequence(tuple(steps))


def maximum_sequences(vectors: Iterable[Sequence[int]], m: int,
                      cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Iterator[DistanceSequence]:
    """Yield every maximum-length rule-satisfying sequence."""
    start, best = _oracle_setup(vectors, m, cap)

    def extend(remaining: FrozenSet[Vector], prefix: Tuple[SequenceEntry, ...]):
        if not remaining:
            yield DistanceSequence(prefix)
            return
        target = best(remaining)
        for d in sorted(remaining):
            for k in range(m):
                child = _eligible_after(remaining, d, k)
                if 1 + best(child) == target:
                    yield from extend(child, prefix + (SequenceEntry(d, k),))

    yield from extend(start, ())
