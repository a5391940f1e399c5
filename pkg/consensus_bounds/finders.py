"""Graph readers and writers.

Two formats are understood:

* JSON: ``{"n": int, "edges": [[u, v], ...], "leaders": [k0, ...]}``
* edge list: a header line ``n m_edges m_leaders``, one ``u v`` line per edge, then one
  line with the leader ids.

Both reject anything left over after the graph.
"""
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, List, Optional, TextIO

from .entities import Network
from .errors import ParseError
from .graph import validate

logger = logging.getLogger(__name__)

NetworkFactory = Callable[..., Network]


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def parse_json(text: str, network_factory: NetworkFactory = validate) -> Network:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    unknown = set(data) - {"n", "edges", "leaders"}
    if unknown:
        raise ParseError(f"unexpected keys {sorted(unknown)}")
    try:
        n, edges, leaders = data["n"], data["edges"], data["leaders"]
    except KeyError as e:
        raise ParseError(f"missing key {e}") from e
    if not isinstance(edges, list) or not isinstance(leaders, list):
        raise ParseError("'edges' and 'leaders' must be lists")
    pairs = []
    for edge in edges:
        if not isinstance(edge, list) or len(edge) != 2:
            raise ParseError(f"edge {edge!r} is not a [u, v] pair")
        pairs.append((_int(edge[0], "edge endpoint"), _int(edge[1], "edge endpoint")))
    return network_factory(_int(n, "n"), pairs, [_int(k, "leader") for k in leaders])


def _ints(line: str, lineno: int) -> List[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError as e:
        raise ParseError(f"line {lineno}: {e}") from e


def parse_edge_list(text: str, network_factory: NetworkFactory = validate) -> Network:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty edge list")
    header = _ints(lines[0], 1)
    if len(header) != 3:
        raise ParseError(f"line 1: expected 'n m_edges m_leaders', got {lines[0]!r}")
    n, edge_count, leader_count = header
    if edge_count < 0 or leader_count < 0:
        raise ParseError("line 1: counts must be non-negative")

    expected = 1 + edge_count + (1 if leader_count else 0)
    if len(lines) < expected:
        raise ParseError(f"expected {expected} lines, got {len(lines)}")
    if len(lines) > expected:
        raise ParseError(f"line {expected + 1}: trailing content {lines[expected]!r}")

    edges = []
    for lineno, line in enumerate(lines[1:1 + edge_count], start=2):
        pair = _ints(line, lineno)
        if len(pair) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append(tuple(pair))
    leaders = _ints(lines[expected - 1], expected) if leader_count else []
    if len(leaders) != leader_count:
        raise ParseError(f"line {expected}: expected {leader_count} leader ids, got {len(leaders)}")
    return network_factory(n, edges, leaders)


def loads(text: str, network_factory: NetworkFactory = validate) -> Network:
    """Parse either format; JSON is recognized by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text, network_factory)
    return parse_edge_list(text, network_factory)


def dumps_json(net: Network) -> str:
    return json.dumps({"n": net.n, "edges": [list(e) for e in net.edges], "leaders": list(net.leaders)}) + "\n"


def dumps_edge_list(net: Network) -> str:
    lines = [f"{net.n} {len(net.edges)} {net.m}"]
    lines += [f"{u} {v}" for u, v in net.edges]
    lines.append(" ".join(str(k) for k in net.leaders))
    return "\n".join(lines) + "\n"


class GraphFinder:
    def __init__(self, network_factory: NetworkFactory) -> None:
        self._network_factory = network_factory

    def find(self) -> Network:
        raise NotImplementedError()


class JsonGraphFinder(GraphFinder):
    def __init__(self, network_factory: NetworkFactory, path: str) -> None:
        self._path = Path(path)
        super().__init__(network_factory)

    def find(self) -> Network:
        logger.info(f"[Graph] READ json {self._path}")
        return parse_json(self._path.read_text(), self._network_factory)


class EdgeListGraphFinder(GraphFinder):
    def __init__(self, network_factory: NetworkFactory, path: str) -> None:
        self._path = Path(path)
        super().__init__(network_factory)

    def find(self) -> Network:
        logger.info(f"[Graph] READ edge list {self._path}")
        return parse_edge_list(self._path.read_text(), self._network_factory)


class StreamGraphFinder(GraphFinder):
    """Reads either format from an open text stream, standard input by default."""

    def __init__(self, network_factory: NetworkFactory, stream: Optional[TextIO] = None) -> None:
        self._stream = stream
        super().__init__(network_factory)

    def find(self) -> Network:
        stream = self._stream or sys.stdin
        return loads(stream.read(), self._network_factory)
