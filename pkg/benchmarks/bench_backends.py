"""Benchmark the compiled kernels against the numpy fallback.

Times the three hot loops (meet/join table construction, the covering-law
scan, the weak-modularity scan) on growing Boolean lattices, MOn lattices,
and the MO3 (x) MO3 separated-product lattice. Run with:

    python3 benchmarks/bench_backends.py
"""

import sys
import time

import numpy as np

from quantax.backends import pure
from quantax.zoo import mo_lattice, mo_sps, powerset_lattice
from quantax.sepprod import separated_product

try:
    from quantax.backends import _core
except ImportError:
    _core = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0, out


def bench_lattice(label, lattice, ortho, rows):
    atoms = np.asarray(lattice.atoms, dtype=np.int32)
    omap = ortho.as_array() if ortho is not None else None
    backends = [("pure", pure)] + ([("compiled", _core)] if _core else [])

    times = {}
    for name, impl in backends:
        t_tab, (meet, join, bad) = timed(impl.meet_join_tables, lattice.leq)
        assert bad is None
        t_cov, cov = timed(impl.covering_scan, lattice.leq, lattice.join, atoms)
        t_wm = None
        if omap is not None:
            t_wm, _ = timed(
                impl.weak_modularity_scan, lattice.leq, lattice.meet, lattice.join, omap
            )
        times[name] = (t_tab, t_cov, t_wm)

    def fmt(ms):
        return f"{ms:9.2f}" if ms is not None else "        -"

    for kernel, idx in (("tables", 0), ("covering", 1), ("weak_mod", 2)):
        p = times["pure"][idx]
        if "compiled" in times:
            c = times["compiled"][idx]
            speedup = f"{p / c:6.1f}x" if (p and c) else "      -"
            rows.append(f"{label:18s} {lattice.n:5d}  {kernel:9s} {fmt(p)} {fmt(c)} {speedup}")
        else:
            rows.append(f"{label:18s} {lattice.n:5d}  {kernel:9s} {fmt(p)}         -       -")


def main():
    if _core is None:
        print("note: compiled backend not built; showing pure timings only")
    rows = []
    header = f"{'model':18s} {'n':>5s}  {'kernel':9s} {'pure ms':>9s} {'comp ms':>9s} {'speedup':>7s}"
    print(header)
    print("-" * len(header))

    for k in (6, 7, 8, 9):
        lattice, ortho = powerset_lattice(k)
        bench_lattice(f"powerset{k}", lattice, ortho, rows)
    for n in (4, 8):
        lattice, ortho = mo_lattice(n)
        bench_lattice(f"mo{n}", lattice, ortho, rows)

    product = separated_product(mo_sps(3), mo_sps(3))
    bench_lattice("mo3 (x) mo3", product.lattice, product.ortho, rows)

    print("\n".join(rows))
    return 0


if __name__ == "__main__":
    sys.exit(main())
