"""Empirical scan of "normal iff no K5 minor" over small connected graphs."""

import logging
import random
from collections import Counter

import networkx as nx

from .audit.verdicts import check_normal
from .exceptions import ResourceLimitError
from .graph.minors import has_K5_minor
from .graph.multigraph import Multigraph
from .graph.planar import is_planar
from .limits import check_limit, get_limits
from .parallel import ExecutionBackend, get_backend
from .reports import ScanReport, ScanRow

logger = logging.getLogger(__name__)

# networkx ships every graph on up to 7 vertices, one per isomorphism class
ATLAS_MAX_VERTICES = 7


def atlas_indices(max_n: int) -> list[int]:
    """Atlas positions of the connected graphs with 1..max_n vertices."""
    return [
        index
        for index, graph in enumerate(nx.graph_atlas_g())
        if 1 <= graph.number_of_nodes() <= max_n and nx.is_connected(graph)
    ]


def conjecture_scan(
    max_n: int,
    k_max: int | None = None,
    planar_only: bool = False,
    sample: int | None = None,
    seed: int | None = None,
    backend: ExecutionBackend | None = None,
) -> ScanReport:
    """Tabulate has_K5_minor against check_normal for small connected graphs.

    Evidence only: a graph with a K5 minor and no gap up to k_max is not a
    counterexample, because its gaps may lie above k_max.

    Args:
        max_n: Largest vertex count
        k_max: Highest dilation level checked (default: the k_max limit)
        planar_only: Skip nonplanar graphs
        sample: Scan this many graphs, chosen with random.Random(seed)
        seed: Seed for sampling
        backend: Execution backend for the enumerations

    Returns:
        ScanReport

    Raises:
        ResourceLimitError: If max_n exceeds max_scan_vertices or the atlas
    """
    check_limit("max_scan_vertices", max_n)
    if max_n > ATLAS_MAX_VERTICES:
        raise ResourceLimitError(
            f"The graph atlas stops at {ATLAS_MAX_VERTICES} vertices, got max_n={max_n}",
            limit="max_scan_vertices",
            value=max_n,
            bound=ATLAS_MAX_VERTICES,
        )
    top = get_limits().k_max if k_max is None else k_max
    atlas = nx.graph_atlas_g()
    indices = atlas_indices(max_n)
    if sample is not None and sample < len(indices):
        indices = sorted(random.Random(seed).sample(indices, sample))

    report = ScanReport(
        command="conjecture-scan",
        max_n=max_n,
        k_max=top,
        planar_only=planar_only,
        sample=sample,
        seed=seed,
    )
    counts: Counter[tuple[bool, bool]] = Counter()
    owned = backend is None
    runner = get_backend() if backend is None else backend
    try:
        for index in indices:
            g = Multigraph.from_networkx(atlas[index])
            if planar_only and is_planar(g) is None:
                continue
            minor = has_K5_minor(g) is not None
            try:
                verdict = check_normal(g, top, runner)
            except ResourceLimitError as e:
                logger.warning(f"Skipping atlas graph {index}: {e}")
                report.skipped.append(index)
                continue
            gap = verdict.verdict == "gap_found"
            counts[(minor, gap)] += 1
            report.scanned += 1
            if gap:
                report.gap_graphs.append(index)
                if not minor:
                    report.counterexamples.append(index)
    finally:
        if owned:
            runner.close()

    report.table = [
        ScanRow(has_k5_minor=minor, gap_found=gap, graphs=counts[(minor, gap)])
        for minor in (False, True)
        for gap in (False, True)
    ]
    logger.info(
        f"Scanned {report.scanned} graphs up to {max_n} vertices: "
        f"{len(report.gap_graphs)} with gaps, {len(report.counterexamples)} counterexamples"
    )
    return report
