"""Simple benchmarks for enumeration, decomposition and the Hilbert basis."""

import random
import sys
import time
from pathlib import Path

import networkx as nx

# Add src to path for direct execution
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from cutpoly import (
    Multigraph,
    check_very_ample,
    decompose3_planar,
    enumerate_cuts,
    has_K5_minor,
    lattice_description,
)
from cutpoly.audit.enumerate import classify_lattice_points
from cutpoly.graph.multigraph import cut_vector
from cutpoly.lattice.vectors import vector_sum
from cutpoly.parallel import ProcessPoolBackend, SerialBackend


def _header(title: str) -> None:
    print("\n" + "=" * 80)
    print(title)
    print("=" * 80)


def _summary(timings: list[float]) -> None:
    print(f"Runs: {len(timings)}")
    print(f"Average: {sum(timings) / len(timings):.2f}ms")
    print(f"Median: {sorted(timings)[len(timings) // 2]:.2f}ms")
    print(f"Min: {min(timings):.2f}ms")
    print(f"Max: {max(timings):.2f}ms")


def benchmark_enumeration():
    """Benchmark lattice point classification of 2 * Cut(K4)."""
    _header("Lattice Points of 2P, K4")

    g = Multigraph.from_networkx(nx.complete_graph(4))
    ld = lattice_description(g)

    # Warm up
    classify_lattice_points(g, ld, 1, SerialBackend())

    timings = []
    for _ in range(5):
        start = time.perf_counter()
        points, gaps = classify_lattice_points(g, ld, 2, SerialBackend())
        timings.append((time.perf_counter() - start) * 1000)

    print(f"Points: {len(points)}, gaps: {len(gaps)}")
    _summary(timings)


def benchmark_parallel_enumeration():
    """Benchmark serial against pooled classification of 3 * Cut(K4)."""
    _header("Serial vs Process Pool, 3P of K4")

    g = Multigraph.from_networkx(nx.complete_graph(4))
    ld = lattice_description(g)

    start = time.perf_counter()
    serial = classify_lattice_points(g, ld, 3, SerialBackend())
    serial_ms = (time.perf_counter() - start) * 1000

    with ProcessPoolBackend(4) as pool:
        # Warm up the workers
        classify_lattice_points(g, ld, 1, pool)
        start = time.perf_counter()
        pooled = classify_lattice_points(g, ld, 3, pool)
        pooled_ms = (time.perf_counter() - start) * 1000

    print(f"Serial: {serial_ms:.2f}ms")
    print(f"Pool (4 workers): {pooled_ms:.2f}ms")
    print(f"Speedup: {serial_ms / pooled_ms:.1f}x")
    print(f"Identical results: {serial == pooled}")


def benchmark_decomposition():
    """Benchmark decompose3_planar on random points of a 3x3 grid."""
    _header("Decompose 3P, 3x3 grid")

    g = Multigraph.from_networkx(nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 3)))
    rng = random.Random(0)
    cuts = enumerate_cuts(g)
    points = [
        vector_sum((cut_vector(g, rng.choice(cuts)) for _ in range(3)), g.edge_count)
        for _ in range(20)
    ]

    # Warm up
    decompose3_planar(g, points[0])

    timings = []
    for point in points:
        start = time.perf_counter()
        decompose3_planar(g, point)
        timings.append((time.perf_counter() - start) * 1000)

    _summary(timings)


def benchmark_hilbert_basis():
    """Benchmark check_very_ample on K4."""
    _header("Hilbert Basis at the Empty Cut, K4")

    g = Multigraph.from_networkx(nx.complete_graph(4))
    start = time.perf_counter()
    verdict, report = check_very_ample(g)
    total_ms = (time.perf_counter() - start) * 1000

    print(f"Verdict: {verdict.verdict}")
    print(f"Dimension: {report.dimension}, simplices: {report.simplices}")
    print(f"Candidates: {report.candidates}, basis: {len(report.basis)}")
    print(f"Total time: {total_ms:.2f}ms")


def benchmark_minor_search():
    """Benchmark has_K5_minor on planar and nonplanar graphs."""
    _header("K5 Minor Search")

    graphs = {
        "Petersen": nx.petersen_graph(),
        "K6": nx.complete_graph(6),
        "3x4 grid": nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 4)),
    }
    for name, graph in graphs.items():
        g = Multigraph.from_networkx(graph)
        start = time.perf_counter()
        witness = has_K5_minor(g)
        duration = (time.perf_counter() - start) * 1000
        print(f"{name}: {duration:.2f}ms, minor={'yes' if witness else 'no'}")


def main():
    """Run all benchmarks."""
    _header("cutpoly Performance Benchmarks")

    try:
        benchmark_enumeration()
        benchmark_parallel_enumeration()
        benchmark_decomposition()
        benchmark_hilbert_basis()
        benchmark_minor_search()

        _header("Benchmarks Complete!")
        print("\nKey metrics to watch:")
        print("  - Enumeration median: Lower is better")
        print("  - Pool speedup: Higher is better, results must stay identical")
        print("  - Decomposition max: Should stay close to the median")

    except Exception as e:
        print(f"\n❌ Benchmark failed: {e}")
        import traceback

        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
