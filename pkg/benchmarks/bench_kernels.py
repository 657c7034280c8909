"""Time the pure and compiled search kernels on the same instances.

Run as:  python3 benchmarks/bench_kernels.py [repeats]

Each case enumerates the full homeomorphism group of an encoded graph or
random preorder through one backend at a time; the wrapper-level colour
refinement is shared, so the comparison isolates the backtracking search.
"""

from __future__ import annotations

import itertools
import sys
import time

from scatterkit._kernels import pure, refine_colors
from scatterkit.finite import FiniteSpace
from scatterkit.graphs import Graph, encode

try:
    from scatterkit._kernels import _native as native
except ImportError:
    native = None


def complete_graph(n):
    names = [f"v{i}" for i in range(n)]
    return Graph(names, list(itertools.combinations(names, 2)))


def petersen():
    names = [f"v{i}" for i in range(10)]
    outer = [(names[i], names[(i + 1) % 5]) for i in range(5)]
    inner = [(names[5 + i], names[5 + (i + 2) % 5]) for i in range(5)]
    spokes = [(names[i], names[i + 5]) for i in range(5)]
    return Graph(names, outer + inner + spokes)


def fan_forest(widths):
    """Disjoint fans: per fan, isolated leaves under one centre point."""
    table = {}
    order = []
    for f, width in enumerate(widths):
        leaves = [f"f{f}l{i}" for i in range(width)]
        centre = f"f{f}c"
        for leaf in leaves:
            table[leaf] = {leaf}
        table[centre] = set(leaves) | {centre}
        order.extend(leaves + [centre])
    return FiniteSpace(order, table)


def cases():
    yield "K6 encoding (21 points, |G| = 720)", encode(complete_graph(6))
    yield "K7 encoding (28 points, |G| = 5040)", encode(complete_graph(7))
    yield "Petersen encoding (25 points, |G| = 120)", encode(petersen())
    yield "three fans of width 3 (12 points)", fan_forest((3, 3, 3))
    yield "fans of widths 4 and 5 (11 points)", fan_forest((4, 5))


def prepared(space):
    masks = list(space._masks)
    refined = refine_colors(masks, masks)
    colors_a, colors_b = refined
    n = len(masks)
    cand = []
    for i in range(n):
        m = 0
        for j in range(n):
            if colors_b[j] == colors_a[i]:
                m |= 1 << j
        cand.append(m)
    return masks, cand


def bench(backend, masks, cand, repeats):
    best = float("inf")
    count = 0
    for _ in range(repeats):
        start = time.perf_counter()
        found = backend.search(masks, masks, list(cand), 0)
        best = min(best, time.perf_counter() - start)
        count = len(found)
    return best, count


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    print(f"{'case':44} {'|G|':>6} {'pure':>10} {'native':>10} {'speedup':>8}")
    for label, space in cases():
        masks, cand = prepared(space)
        t_pure, count = bench(pure, masks, cand, repeats)
        if native is not None:
            t_native, count_native = bench(native, masks, cand, repeats)
            assert count_native == count
            ratio = f"{t_pure / t_native:7.1f}x"
            native_s = f"{t_native * 1000:8.1f}ms"
        else:
            ratio, native_s = "-", "not built"
        print(f"{label:44} {count:>6} {t_pure * 1000:8.1f}ms {native_s:>10} {ratio:>8}")


if __name__ == "__main__":
    main()
