"""Time the compiled lattice kernel against the pure-Python fallback.

Usage::

    python benchmarks/bench_kernel.py [--repeat 3] [--quick]

Both backends are asked the same counting questions; the counts are
compared before any timing is reported.
"""

from __future__ import annotations

import argparse
import time

from sobwidth.lattice import _ckernel, count_lattice, use_backend
from sobwidth.profile import make_profile

# (label, R, budget); a mix of exact-integer and float mode, low and high d
CASES = [
    ("R=(1,2) T=1e6", [1, 2], 1e6),
    ("R=(1,1,1) T=2e3", [1, 1, 1], 2e3),
    ("R=1^6 T=60", [1] * 6, 60),
    ("R=(0.7,1.3,2.1) T=3e3", [0.7, 1.3, 2.1], 3e3),
    ("R=(0.5,0.5,1.5,2) T=500", [0.5, 0.5, 1.5, 2], 500),
    ("R=1^12 T=12", [1] * 12, 12),
]
QUICK = CASES[:3]


def _time(profile, T, repeat):
    best = float("inf")
    count = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        count = count_lattice(profile, T).count
        best = min(best, time.perf_counter() - t0)
    return count, best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="only the three smallest cases")
    args = ap.parse_args(argv)
    if _ckernel is None:
        raise SystemExit("compiled kernel not built; run `pip install --no-build-isolation -e .` first")

    print(f"{'case':<28}{'count':>14}{'compiled s':>12}{'python s':>12}{'speedup':>9}")
    for label, R, T in QUICK if args.quick else CASES:
        prof = make_profile(R)
        with use_backend("compiled"):
            nc, tc = _time(prof, T, args.repeat)
        with use_backend("python"):
            npy, tp = _time(prof, T, args.repeat)
        if nc != npy:
            raise SystemExit(f"{label}: backends disagree ({nc} vs {npy})")
        print(f"{label:<28}{nc:>14}{tc:>12.4f}{tp:>12.4f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
