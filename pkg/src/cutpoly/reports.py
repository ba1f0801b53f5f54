"""Pydantic report models emitted by the command-line front end."""

import json
from typing import Literal

from pydantic import BaseModel, Field

from .audit.verdicts import GapReport, NormalityVerdict, SeminormalityVerdict, VeryAmpleVerdict
from .graph.multigraph import Cut

OutputFormat = Literal["json", "text"]


class CommandReport(BaseModel):
    """Fields shared by every report.

    Attributes:
        command: Subcommand that produced the report
        graph_digest: Short SHA-256 of the canonical input graph
        point_digest: Short SHA-256 of the input point, when one was given
    """

    command: str
    graph_digest: str | None = None
    point_digest: str | None = None


class CutsReport(CommandReport):
    vertex_count: int
    edge_count: int
    cuts: list[list[int]] = Field(default_factory=list)
    vectors: list[list[int]] = Field(default_factory=list)


class LatticeReport(CommandReport):
    """Lattice points of kP plus the lattice's parity and HNF descriptions."""

    k: int
    lattice_index: int
    parity_constraints: list[list[int]] = Field(default_factory=list)
    hnf_basis: list[list[int]] = Field(default_factory=list)
    count: int = 0
    points: list[list[int]] = Field(default_factory=list)


class GapsReport(GapReport, CommandReport):
    pass


class NormalReport(NormalityVerdict, CommandReport):
    pass


class SeminormalReport(SeminormalityVerdict, CommandReport):
    pass


class VeryAmpleReport(VeryAmpleVerdict, CommandReport):
    dimension: int = 0
    simplices: int = 0
    candidates: int = 0


class DecomposeReport(CommandReport):
    """k cuts, each given by its canonical side, whose vectors sum to the point."""

    k: int
    point: list[int]
    cuts: list[list[int]] = Field(default_factory=list)
    vectors: list[list[int]] = Field(default_factory=list)


class FourColorReport(CommandReport):
    colors: list[int]
    classes: list[list[int]]
    balanced_cuts: list[list[int]]
    recovered_colors: list[int]


class MinorReport(CommandReport):
    planar: bool
    has_k5_minor: bool
    branch_sets: list[list[int]] | None = None


class DualReport(CommandReport):
    """Faces of the embedding as edge-id walks, and the dual edges in primal edge order."""

    face_count: int
    faces: list[list[int]] = Field(default_factory=list)
    dual_edges: list[tuple[int, int]] = Field(default_factory=list)


class SwitchReport(CommandReport):
    """Image of every cut, and of the point when one was given, under the switching."""

    base_cut: list[int]
    crossing_set: list[int]
    images: list[tuple[list[int], list[int]]] = Field(default_factory=list)
    point: list[int] | None = None
    switched_point: list[int] | None = None


class ScanRow(BaseModel):
    has_k5_minor: bool
    gap_found: bool
    graphs: int


class ScanReport(CommandReport):
    """Contingency table of K5 minors against gaps over small connected graphs.

    Attributes:
        gap_graphs: Atlas indices of graphs where a gap was found
        counterexamples: Atlas indices contradicting "normal iff no K5 minor"
            up to k_max (a K5-minor graph with no gap found is not counted,
            since gaps may sit above k_max)
        skipped: Atlas indices whose enumeration exceeded a resource bound
    """

    max_n: int
    k_max: int
    planar_only: bool = False
    sample: int | None = None
    seed: int | None = None
    scanned: int = 0
    table: list[ScanRow] = Field(default_factory=list)
    gap_graphs: list[int] = Field(default_factory=list)
    counterexamples: list[int] = Field(default_factory=list)
    skipped: list[int] = Field(default_factory=list)


def cut_sides(cuts: list[Cut]) -> list[list[int]]:
    return [c.sorted_side() for c in cuts]


def render(report: BaseModel, fmt: OutputFormat = "json") -> str:
    """Serialize a report.

    Args:
        report: Any report model
        fmt: "json" for one stable JSON object, "text" for ``key: value`` lines

    Returns:
        The rendered report without a trailing newline
    """
    if fmt == "json":
        return report.model_dump_json()
    lines = []
    for key, value in report.model_dump(mode="json").items():
        if value is None:
            continue
        rendered = value if isinstance(value, str) else json.dumps(value, separators=(",", ":"))
        lines.append(f"{key}: {rendered}")
    return "\n".join(lines)
