"""Graph and point file formats, plus input digests for report provenance."""

import hashlib
import json
import logging
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .exceptions import GraphFormatError, InvalidInputError
from .graph.multigraph import Multigraph
from .lattice.vectors import DilatedPoint

logger = logging.getLogger(__name__)


class GraphFile(BaseModel):
    """JSON graph format: ``{"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}``.

    Edge order defines edge ids.
    """

    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=0)
    edges: list[tuple[int, int]] = Field(default_factory=list)

    def to_multigraph(self) -> Multigraph:
        return Multigraph.from_pairs(self.n, self.edges)


class PointFile(BaseModel):
    """JSON point format: ``{"k": 3, "x": [2, 2, 2]}``, aligned with the graph's edge order."""

    model_config = ConfigDict(extra="forbid")

    k: int = Field(ge=1)
    x: list[int]

    def to_point(self) -> DilatedPoint:
        return DilatedPoint(tuple(self.x), self.k)


def _parse_text_graph(text: str) -> Multigraph:
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        try:
            if fields[0] == "p" and len(fields) == 4 and fields[1] == "cut":
                if header is not None:
                    raise GraphFormatError(f"Line {line_number}: duplicate problem line")
                header = (int(fields[2]), int(fields[3]))
            elif fields[0] == "e" and len(fields) == 3:
                if header is None:
                    raise GraphFormatError(f"Line {line_number}: edge before 'p cut' line")
                pairs.append((int(fields[1]), int(fields[2])))
            else:
                raise GraphFormatError(f"Line {line_number}: cannot parse {line!r}")
        except ValueError as e:
            raise GraphFormatError(f"Line {line_number}: {e}") from e

    if header is None:
        raise GraphFormatError("Missing 'p cut <n> <m>' line")
    n, m = header
    if n < 0:
        raise GraphFormatError(f"Negative vertex count {n}")
    if len(pairs) != m:
        raise GraphFormatError(f"Header declares {m} edges, found {len(pairs)}")
    return Multigraph.from_pairs(n, pairs)


def parse_graph(text: str) -> Multigraph:
    """Parse either graph format, detecting JSON by its leading brace.

    Raises:
        GraphFormatError: On malformed input, loops or out-of-range vertices
    """
    if text.lstrip().startswith("{"):
        try:
            return GraphFile.model_validate_json(text).to_multigraph()
        except ValidationError as e:
            raise GraphFormatError(f"Invalid graph JSON: {e.errors()[0]['msg']}") from e
    return _parse_text_graph(text)


def load_graph(path: str | Path) -> Multigraph:
    """Read a graph file.

    Args:
        path: JSON or text graph file

    Returns:
        The parsed multigraph

    Raises:
        GraphFormatError: If the file is missing or malformed
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise GraphFormatError(f"Cannot read graph file {path}: {e}") from e
    g = parse_graph(text)
    logger.info(f"Loaded graph from {path}: {g.vertex_count} vertices, {g.edge_count} edges")
    return g


def parse_point(text: str) -> DilatedPoint:
    """Parse the JSON point format.

    Raises:
        InvalidInputError: On malformed JSON or a level below 1
    """
    try:
        return PointFile.model_validate_json(text).to_point()
    except ValidationError as e:
        raise InvalidInputError(f"Invalid point JSON: {e.errors()[0]['msg']}") from e


def load_point(path: str | Path) -> DilatedPoint:
    """Read a point file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InvalidInputError(f"Cannot read point file {path}: {e}") from e
    return parse_point(text)


def _digest(payload: object) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()[:16]


def graph_digest(g: Multigraph) -> str:
    """Short SHA-256 of the canonical JSON form of g."""
    return _digest({"n": g.vertex_count, "edges": [list(pair) for pair in g.pairs()]})


def point_digest(p: DilatedPoint) -> str:
    """Short SHA-256 of the canonical JSON form of p."""
    return _digest({"k": p.level, "x": list(p.vector)})
