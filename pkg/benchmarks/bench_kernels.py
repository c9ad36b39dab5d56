"""Times the numeric kernels: compiled extension vs pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [n_bars]

Builds one synthetic price/volume column pair of n_bars rows (default
1,000,000), runs every kernel through both backends, and prints the per-
call timings with the speedup factor. Results are also sanity-checked for
bit equality between backends while timing.
"""

from __future__ import annotations

import random
import sys
import time
from array import array

from marketentropy._kernels import pure

try:
    from marketentropy._kernels import _core as compiled
except ImportError:
    compiled = None


def build_columns(n: int) -> tuple[array, array]:
    rng = random.Random(9)
    closes = array("d", (rng.uniform(0.01, 1e4) for _ in range(n)))
    volumes = array(
        "d", (0.0 if rng.random() < 0.01 else rng.uniform(0.0, 1e6) for _ in range(n))
    )
    return closes, volumes


def best_of(callable_, repeats: int = 5) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = callable_()
        elapsed = time.perf_counter() - start
        best = min(best, elapsed)
    return best, result


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    closes, volumes = build_columns(n)
    positive = array("d", (c if c > 0.0 else 1.0 for c in closes))

    activities = pure.activity_values(closes, volumes, 0)
    steps, codes = pure.normalized_steps(activities)

    jobs = [
        ("activity_values(pv)", lambda b: b.activity_values(closes, volumes, 0)),
        ("normalized_steps", lambda b: b.normalized_steps(activities)),
        ("step_diffs", lambda b: b.step_diffs(closes)),
        ("log_step_diffs", lambda b: b.log_step_diffs(positive)),
        ("masked_mean", lambda b: b.masked_mean(steps, codes, False)),
    ]

    print(f"kernel timings over {n:,} bars (best of 5, seconds)")
    if compiled is None:
        print("compiled extension not built; timing the pure backend only")
    header = f"{'kernel':<22}{'pure':>12}"
    if compiled is not None:
        header += f"{'compiled':>12}{'speedup':>10}"
    print(header)
    for name, job in jobs:
        pure_time, pure_result = best_of(lambda: job(pure))
        line = f"{name:<22}{pure_time:>12.4f}"
        if compiled is not None:
            compiled_time, compiled_result = best_of(lambda: job(compiled))
            check(name, pure_result, compiled_result)
            line += f"{compiled_time:>12.4f}{pure_time / compiled_time:>9.1f}x"
        print(line)


def check(name: str, a: object, b: object) -> None:
    pairs = zip(a, b) if isinstance(a, tuple) else [(a, b)]
    for left, right in pairs:
        same = (
            left.tobytes() == right.tobytes()
            if isinstance(left, array)
            else left == right or left != left and right != right
        )
        if not same:
            raise SystemExit(f"backend mismatch in {name}")


if __name__ == "__main__":
    main()
