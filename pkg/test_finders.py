import io
import json

import pytest

from conftest import path, star
from consensus_bounds.errors import DuplicateEdgeError, LeaderOutOfRangeError, ParseError, SelfLoopError
from consensus_bounds.finders import (EdgeListGraphFinder, JsonGraphFinder, StreamGraphFinder, dumps_edge_list,
                                      dumps_json, loads, parse_edge_list, parse_json)
from consensus_bounds.graph import validate

P4_JSON = '{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]], "leaders": [0]}\n'
P4_EDGE_LIST = "4 3 1\n0 1\n1 2\n2 3\n0\n"


@pytest.fixture
def graph_files(tmp_path):
    json_path = tmp_path / "p4.json"
    json_path.write_text(P4_JSON)
    edge_list_path = tmp_path / "p4.txt"
    edge_list_path.write_text(P4_EDGE_LIST)
    return json_path, edge_list_path


def test_dumps_are_canonical():
    net = validate(4, [(3, 2), (1, 0), (2, 1)], [0])
    assert dumps_json(net) == P4_JSON
    assert dumps_edge_list(net) == P4_EDGE_LIST


def test_parse_both_formats():
    assert parse_json(P4_JSON) == path(4)
    assert parse_edge_list(P4_EDGE_LIST) == path(4)
    assert loads("  \n" + P4_JSON) == path(4)
    assert loads(P4_EDGE_LIST) == path(4)


def test_edge_list_allows_trailing_blank_lines():
    assert parse_edge_list(P4_EDGE_LIST + "\n\n") == path(4)


def test_serialization_is_stable_through_parse():
    net = star(6, leaders=(3, 0))
    assert dumps_json(loads(dumps_json(net))) == dumps_json(net)
    assert dumps_edge_list(loads(dumps_edge_list(net))) == dumps_edge_list(net)


@pytest.mark.parametrize("text", [
    "{not json",
    "[1, 2, 3]",
    '{"n": 2, "edges": [[0, 1]]}',
    '{"n": 2, "edges": [[0, 1]], "leaders": [0], "extra": 1}',
    '{"n": 2, "edges": [[0, 1, 2]], "leaders": [0]}',
    '{"n": 2, "edges": [[0, "1"]], "leaders": [0]}',
    '{"n": 2.0, "edges": [[0, 1]], "leaders": [0]}',
    '{"n": true, "edges": [[0, 1]], "leaders": [0]}',
    '{"n": 2, "edges": [[0, 1]], "leaders": [0]} trailing',
])
def test_parse_json_rejects(text):
    with pytest.raises(ParseError):
        parse_json(text)


@pytest.mark.parametrize("text", [
    "",
    "4 3\n0 1\n",
    "3 2 1\n0 1\n0\n",
    "3 2 1\n0 1\n1 x\n0\n",
    "3 2 1\n0 1\n1 2 3\n0\n",
    "3 2 1\n0 1\n1 2\n0 2\n",
    "3 2 1\n0 1\n1 2\n0\n5 6\n",
])
def test_parse_edge_list_rejects(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


@pytest.mark.parametrize("text, error", [
    ('{"n": 3, "edges": [[0, 0]], "leaders": [0]}', SelfLoopError),
    ('{"n": 3, "edges": [[0, 1], [1, 0]], "leaders": [0]}', DuplicateEdgeError),
    ("3 1 1\n0 1\n7\n", LeaderOutOfRangeError),
])
def test_parsed_graphs_are_validated(text, error):
    with pytest.raises(error):
        loads(text)


def test_finders_read_files(graph_files):
    json_path, edge_list_path = graph_files
    assert JsonGraphFinder(validate, str(json_path)).find() == path(4)
    assert EdgeListGraphFinder(validate, str(edge_list_path)).find() == path(4)


def test_stream_finder_detects_format():
    assert StreamGraphFinder(validate, io.StringIO(P4_EDGE_LIST)).find() == path(4)
    assert StreamGraphFinder(validate, io.StringIO(P4_JSON)).find() == path(4)


def test_finder_uses_injected_factory():
    built = []

    def factory(n, edges, leaders):
        built.append((n, list(edges), list(leaders)))
        return validate(n, edges, leaders)

    StreamGraphFinder(factory, io.StringIO(json.dumps({"n": 2, "edges": [[0, 1]], "leaders": [1]}))).find()
    assert built == [(2, [(0, 1)], [1])]


def test_sample_fixtures_parse(tmp_path):
    from data.fixtures import SAMPLE_GRAPHS, create_samples

    create_samples(SAMPLE_GRAPHS, tmp_path)
    for name, _ in SAMPLE_GRAPHS:
        from_json = loads((tmp_path / f"{name}.json").read_text())
        assert loads((tmp_path / f"{name}.txt").read_text()) == from_json
        assert from_json.connected
