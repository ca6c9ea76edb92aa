#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times the three hot paths (closure evaluation, full next-closure
enumeration, facet scanning) on both backends and prints a table.

    python benchmarks/compare_backends.py [--d 4]
"""

from __future__ import annotations

import argparse
import random
import time

from bsp.kernel import get_backend
from bsp.polytope import _construction_vertices


def time_closures(impl, d: int, n: int = 2000) -> float:
    rng = random.Random(1)
    ssets = []
    for _ in range(n):
        sset = 0
        for m in rng.sample(range(1, 1 << d), rng.randint(d, (1 << d) - 1)):
            sset |= 1 << m
        ssets.append(sset)
    t0 = time.perf_counter()
    for s in ssets:
        impl.closure_and_rank(d, s)
    return time.perf_counter() - t0


def time_enumeration(impl, d: int) -> tuple[float, int]:
    top = 4 if d >= 4 else 0
    t0 = time.perf_counter()
    total = 0
    for p in range(1 << top):
        visited, _, _ = impl.enum_branch(d, top, p)
        total += visited
    return time.perf_counter() - t0, total


def time_facets(impl, kind: str, d: int) -> tuple[float, int]:
    verts = [tuple(int(c) for c in v) for v in _construction_vertices(kind, d)]
    t0 = time.perf_counter()
    out = impl.facet_scan(d, verts)
    return time.perf_counter() - t0, len(out)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--d", type=int, default=4, help="enumeration dimension")
    args = ap.parse_args()

    backends = {}
    for name in ("c", "python"):
        try:
            backends[name] = get_backend(name)
        except (ImportError, ValueError):
            print(f"backend {name!r} unavailable")
    rows = []
    for name, impl in backends.items():
        t_clo = time_closures(impl, args.d)
        t_enum, visited = time_enumeration(impl, args.d)
        t_fac, nf = time_facets(impl, "suspension-cube", 5)
        rows.append((name, t_clo, t_enum, visited, t_fac, nf))
    print(f"{'backend':<8} {'2000 closures':>14} {'enumerate d=' + str(args.d):>16} "
          f"{'facets susp-d5':>15}")
    for name, t_clo, t_enum, visited, t_fac, nf in rows:
        print(f"{name:<8} {t_clo:>12.3f}s {t_enum:>13.3f}s ({visited}) "
              f"{t_fac:>12.3f}s ({nf})")
    if len(rows) == 2:
        print(f"speedup: closures x{rows[1][1] / rows[0][1]:.1f}, "
              f"enumeration x{rows[1][2] / rows[0][2]:.1f}, "
              f"facets x{rows[1][4] / rows[0][4]:.1f}")


if __name__ == "__main__":
    main()
