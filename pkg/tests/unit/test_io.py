"""Tests for graph and point file formats."""

import pytest

from cutpoly.exceptions import GraphFormatError, InvalidInputError
from cutpoly.io import graph_digest, load_graph, load_point, parse_graph, parse_point, point_digest
from cutpoly.lattice.vectors import DilatedPoint

K3_JSON = '{"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}'
K3_TEXT = """c triangle
p cut 3 3
e 0 1
e 0 2
e 1 2
"""


class TestParseGraph:
    """Tests for parse_graph."""

    def test_json(self, k3):
        """Should parse the JSON format."""
        assert parse_graph(K3_JSON) == k3

    def test_text(self, k3):
        """Should parse the 'p cut' text format, skipping comments."""
        assert parse_graph(K3_TEXT) == k3

    def test_parallel_edges(self, digon):
        """Repeated pairs become parallel edges."""
        assert parse_graph('{"n": 2, "edges": [[0, 1], [0, 1]]}') == digon

    @pytest.mark.parametrize(
        "text",
        [
            '{"n": 2, "edges": [[0, 0]]}',
            '{"n": 2, "edges": [[0, 2]]}',
            '{"n": -1, "edges": []}',
            '{"n": 2, "edges": [], "extra": 1}',
            '{"n": 2, "edges": [[0]]}',
            "p cut 3 2\ne 0 1\n",
            "e 0 1\np cut 2 1\n",
            "p cut 2 1\np cut 2 1\ne 0 1\n",
            "p cut 2 1\ne 0 x\n",
            "q 1 2\n",
            "",
        ],
    )
    def test_malformed_rejected(self, text):
        """Malformed input, loops and bad vertices raise GraphFormatError."""
        with pytest.raises(GraphFormatError):
            parse_graph(text)

    def test_load_graph(self, tmp_path, k3):
        """Should read graph files from disk."""
        path = tmp_path / "k3.json"
        path.write_text(K3_JSON)
        assert load_graph(path) == k3

    def test_missing_file(self, tmp_path):
        """A missing file is a format error."""
        with pytest.raises(GraphFormatError):
            load_graph(tmp_path / "missing.json")


class TestParsePoint:
    """Tests for parse_point."""

    def test_point(self):
        """Should parse k and x."""
        assert parse_point('{"k": 3, "x": [2, 2, 2]}') == DilatedPoint((2, 2, 2), 3)

    @pytest.mark.parametrize("text", ['{"k": 0, "x": [1]}', '{"x": [1]}', "[1, 2]"])
    def test_malformed_rejected(self, text):
        """Bad levels and shapes raise InvalidInputError."""
        with pytest.raises(InvalidInputError):
            parse_point(text)

    def test_load_point(self, tmp_path):
        """Should read point files from disk."""
        path = tmp_path / "p.json"
        path.write_text('{"k": 2, "x": [1, 1, 0]}')
        assert load_point(path) == DilatedPoint((1, 1, 0), 2)


class TestDigests:
    """Tests for input digests."""

    def test_graph_digest_is_stable(self, k3):
        """The digest depends only on the graph and is 16 hex chars."""
        digest = graph_digest(k3)
        assert digest == graph_digest(parse_graph(K3_TEXT))
        assert len(digest) == 16
        int(digest, 16)

    def test_graph_digest_distinguishes(self, k3, path3):
        """Different graphs get different digests."""
        assert graph_digest(k3) != graph_digest(path3)

    def test_point_digest(self):
        """Level is part of the point digest."""
        assert point_digest(DilatedPoint((1, 1), 2)) != point_digest(DilatedPoint((1, 1), 3))
