"""Command-line front end.

Exit codes:
    0  command completed; negative verdicts live in the report
    1  internal contradiction, worker failure, or a verdict matched --fail-on
    2  invalid input
    3  resource limit exceeded
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any

from pydantic import BaseModel

from .audit.enumerate import enumerate_lattice_points
from .audit.verdicts import check_normal, check_seminormal, check_very_ample, find_gaps
from .decompose import balanced_three_cuts, decompose_planar, four_coloring_from_decomposition
from .exceptions import CutpolyError, InvalidInputError, NotPlanarError, ResourceLimitError
from .graph.coloring import four_color
from .graph.minors import has_K5_minor
from .graph.multigraph import Cut, Multigraph, cut_vector, enumerate_cuts
from .graph.planar import dual_graph, is_planar
from .io import graph_digest, load_graph, load_point, point_digest
from .lattice.membership import lattice_description, lattice_index
from .lattice.vectors import DilatedPoint, check_dimension
from .limits import get_limits, use_limits
from .parallel import get_backend
from .reports import (
    CutsReport,
    DecomposeReport,
    DualReport,
    FourColorReport,
    GapsReport,
    LatticeReport,
    MinorReport,
    NormalReport,
    SeminormalReport,
    SwitchReport,
    VeryAmpleReport,
    cut_sides,
    render,
)
from .scan import conjecture_scan
from .switching import SwitchMap, switch_cut, switch_point

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_LIMIT = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

Handler = Callable[[argparse.Namespace, Multigraph], BaseModel]


def _base(
    args: argparse.Namespace, g: Multigraph, point: DilatedPoint | None = None
) -> dict[str, Any]:
    return {
        "command": args.command,
        "graph_digest": graph_digest(g),
        "point_digest": point_digest(point) if point is not None else None,
    }


def _cuts(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    cuts = enumerate_cuts(g)
    return CutsReport(
        **_base(args, g),
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        cuts=cut_sides(cuts),
        vectors=[list(cut_vector(g, c)) for c in cuts],
    )


def _lattice(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    if args.k is None:
        raise InvalidInputError("lattice needs --k")
    ld = lattice_description(g)
    with get_backend() as backend:
        points = enumerate_lattice_points(g, ld, args.k, backend)
    return LatticeReport(
        **_base(args, g),
        k=args.k,
        lattice_index=lattice_index(ld),
        parity_constraints=[sorted(cycle) for cycle in ld.parity_constraints],
        hnf_basis=[list(row) for row in ld.hnf_basis],
        count=len(points),
        points=[list(p) for p in points],
    )


def _gaps(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    with get_backend() as backend:
        report = find_gaps(g, args.kmax, backend)
    return GapsReport(**_base(args, g), **report.model_dump())


def _check_normal(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    with get_backend() as backend:
        verdict = check_normal(g, args.kmax, backend)
    return NormalReport(**_base(args, g), **verdict.model_dump())


def _check_seminormal(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    with get_backend() as backend:
        verdict = check_seminormal(g, args.kmax, backend)
    return SeminormalReport(**_base(args, g), **verdict.model_dump())


def _check_very_ample(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    verdict, basis = check_very_ample(g)
    return VeryAmpleReport(
        **_base(args, g),
        **verdict.model_dump(),
        dimension=basis.dimension,
        simplices=basis.simplices,
        candidates=basis.candidates,
    )


def _decompose(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    if args.point is None:
        raise InvalidInputError("decompose needs --point")
    point = load_point(args.point)
    if args.k is not None and args.k != point.level:
        raise InvalidInputError(f"--k {args.k} disagrees with the point's level {point.level}")
    cuts = decompose_planar(g, point.vector, point.level)
    return DecomposeReport(
        **_base(args, g, point),
        k=point.level,
        point=list(point.vector),
        cuts=cut_sides(cuts),
        vectors=[list(cut_vector(g, c)) for c in cuts],
    )


def _four_color(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    coloring = four_color(g)
    balanced = balanced_three_cuts(g, coloring)
    recovered = four_coloring_from_decomposition(g, balanced)
    return FourColorReport(
        **_base(args, g),
        colors=list(coloring.colors),
        classes=[sorted(c) for c in coloring.classes()],
        balanced_cuts=cut_sides(balanced),
        recovered_colors=list(recovered.colors),
    )


def _minor_k5(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    witness = has_K5_minor(g)
    return MinorReport(
        **_base(args, g),
        planar=is_planar(g) is not None,
        has_k5_minor=witness is not None,
        branch_sets=[list(b) for b in witness.branch_sets] if witness is not None else None,
    )


def _dual(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    embedding = is_planar(g)
    if embedding is None:
        raise NotPlanarError("dual requires a planar graph")
    dual = dual_graph(g, embedding)
    return DualReport(
        **_base(args, g),
        face_count=embedding.face_count,
        faces=[[edge_id for edge_id, _ in face] for face in embedding.faces],
        dual_edges=dual.dual.pairs(),
    )


def _parse_side(text: str, g: Multigraph) -> Cut:
    try:
        side = [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise InvalidInputError(f"--cut must be comma-separated vertices, got {text!r}") from e
    if any(not 0 <= v < g.vertex_count for v in side):
        raise InvalidInputError(f"--cut vertices out of range 0..{g.vertex_count - 1}")
    return Cut.of(side, g.vertex_count)


def _switch(args: argparse.Namespace, g: Multigraph) -> BaseModel:
    if args.cut is None:
        raise InvalidInputError("switch needs --cut")
    s = SwitchMap.of(g, _parse_side(args.cut, g))
    images = [(c.sorted_side(), switch_cut(s, c).sorted_side()) for c in enumerate_cuts(g)]
    point = load_point(args.point) if args.point is not None else None
    switched = None
    if point is not None:
        check_dimension(point.vector, g.edge_count)
        switched = list(switch_point(s, point).vector)
    return SwitchReport(
        **_base(args, g, point),
        base_cut=s.base_cut.sorted_side(),
        crossing_set=sorted(s.crossing_set),
        images=images,
        point=list(point.vector) if point is not None else None,
        switched_point=switched,
    )


HANDLERS: dict[str, Handler] = {
    "cuts": _cuts,
    "lattice": _lattice,
    "gaps": _gaps,
    "check-normal": _check_normal,
    "check-seminormal": _check_seminormal,
    "check-very-ample": _check_very_ample,
    "decompose": _decompose,
    "four-color": _four_color,
    "minor-k5": _minor_k5,
    "dual": _dual,
    "switch": _switch,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--kmax", type=int, default=None, help="highest dilation level")
    common.add_argument(
        "--limit-vertices", type=int, default=None, help="vertex bound for cut and minor search"
    )
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--workers", type=int, default=None, help="worker processes")
    common.add_argument(
        "--fail-on", default=None, metavar="VERDICT", help="exit 1 when the verdict matches"
    )
    common.add_argument("-v", "--verbose", action="count", default=0)

    with_graph = argparse.ArgumentParser(add_help=False)
    with_graph.add_argument("--graph", required=True, help="graph file (JSON or 'p cut' text)")
    with_graph.add_argument("--point", default=None, help="point file (JSON)")
    with_graph.add_argument("--k", type=int, default=None, help="dilation level")
    with_graph.add_argument("--cut", default=None, help="switch base side, e.g. 1,2")

    parser = argparse.ArgumentParser(
        prog="cutpoly",
        description="Exact lattice-point audits and decompositions for cut polytopes.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name in HANDLERS:
        commands.add_parser(name, parents=[common, with_graph])
    scan = commands.add_parser("conjecture-scan", parents=[common])
    scan.add_argument("--max-n", type=int, default=5)
    scan.add_argument("--planar-only", action="store_true")
    scan.add_argument("--sample", type=int, default=None)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT)


def _limit_overrides(args: argparse.Namespace) -> dict[str, Any]:
    overrides: dict[str, Any] = {}
    if args.kmax is not None:
        overrides["k_max"] = args.kmax
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.limit_vertices is not None:
        overrides["max_cut_vertices"] = args.limit_vertices
        overrides["max_minor_vertices"] = args.limit_vertices
    return overrides


def _dispatch(args: argparse.Namespace) -> BaseModel:
    if args.command == "conjecture-scan":
        with get_backend() as backend:
            return conjecture_scan(
                args.max_n,
                get_limits().k_max,
                planar_only=args.planar_only,
                sample=args.sample,
                seed=args.seed,
                backend=backend,
            )
    g = load_graph(args.graph)
    return HANDLERS[args.command](args, g)


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command, printing its report to stdout.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        with use_limits(**_limit_overrides(args)):
            report = _dispatch(args)
    except InvalidInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE_LIMIT
    except CutpolyError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILURE

    print(render(report, args.format))
    verdict = getattr(report, "verdict", None)
    if args.fail_on is not None and verdict == args.fail_on:
        return EXIT_FAILURE
    return EXIT_OK


def main() -> None:
    sys.exit(run())
