"""Benchmark the compiled enumeration kernel against the uncompiled path.

Run as `python -m sumrank.bench`.  Builds codes of increasing dimension on
the F8 tower (n = 9, blocks of size 3 over F2) and times the exhaustive
minimum-weight enumeration through both kernel paths, verifying that the
results agree.
"""

from __future__ import annotations

import argparse
import json
import time

from .codes import LinearCode, Partition, _tables_for
from .kernels import HAVE_NUMBA, USE_NUMBA, min_weight
from .tower import build_tower


def _sample_code(t, k: int) -> LinearCode:
    """A deterministic k-dimensional code on the n=9 tower."""
    gf = t.F
    n = t.ell * t.N
    rows = []
    for i in range(k):
        # pseudo-structured rows: shifted geometric progressions
        row = [gf.pow(gf.gen, (i + 1) * (j + 1) % (gf.order - 1)) for j in range(n)]
        row[i] = 1
        rows.append(row)
    return LinearCode(t, rows, Partition.equal(t.ell, t.N))


def _time(fn, repeats: int) -> float:
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def run(dims, repeats: int) -> dict:
    t = build_tower(2, 1, 3, 2, 3, 3)
    tables = _tables_for(t, "F", "E")
    results = []
    for k in dims:
        C = _sample_code(t, k)
        parts = C.partition.parts
        d_jit = min_weight(C.G, tables, parts)  # includes compile on first call
        d_pure = min_weight(C.G, tables, parts, pure=True)
        assert d_jit == d_pure, (d_jit, d_pure)
        t_jit = _time(lambda: min_weight(C.G, tables, parts), repeats)
        t_pure = _time(lambda: min_weight(C.G, tables, parts, pure=True), repeats)
        results.append(
            {
                "k": C.k,
                "codewords": t.F.order**C.k,
                "d": d_jit,
                "jit_seconds": round(t_jit, 6),
                "pure_seconds": round(t_pure, 6),
                "speedup": round(t_pure / t_jit, 2) if t_jit > 0 else None,
            }
        )
    return {
        "numba_available": HAVE_NUMBA,
        "numba_active": USE_NUMBA,
        "tower": "F8 over F2, ell=3 blocks of size 3",
        "results": results,
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="python -m sumrank.bench",
        description="Compare the compiled and uncompiled enumeration kernels.",
    )
    ap.add_argument(
        "--dims", default="3,4,5", help="comma-separated code dimensions to time"
    )
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args(argv)
    dims = [int(x) for x in args.dims.split(",")]
    print(json.dumps(run(dims, args.repeats), indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
