"""Compare the compiled and pure-Python solver kernels.

    python3 benchmarks/bench_kernels.py [--count N] [--seed S]

Every workload runs on both backends and the results are checked for
equality before timings are reported.
"""

import argparse
import time

from reentry import _backend
from reentry.exact import brute_force_optimum, dp_optimum, exhaustive_sequence_optimum
from reentry.generate import GenConfig, generate_random_instance

WORKLOADS = {
    "dp (study ranges)": (
        dict(n_range=(4, 8), m_range=(2, 6), loops_range=(1, 20), weight_range=(1, 20)),
        lambda inst, b: dp_optimum(inst, backend=b)[0],
    ),
    "brute force (n<=7, m<=4)": (
        dict(n_range=(5, 7), m_range=(2, 4), loops_range=(1, 10), weight_range=(1, 20)),
        lambda inst, b: brute_force_optimum(inst, backend=b)[0],
    ),
    "sequence search (<=10 loops)": (
        dict(n_range=(4, 5), m_range=(2, 3), loops_range=(1, 2), weight_range=(1, 20)),
        lambda inst, b: exhaustive_sequence_optimum(inst, max_loops=10, backend=b),
    ),
}


def run(count, seed):
    backends = _backend.available()
    if len(backends) < 2:
        print("compiled kernels are not built; only the python backend is available")
    header = f"{'workload':30}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, (ranges, solve) in WORKLOADS.items():
        cfg = GenConfig(seed=seed, count=count, **ranges)
        instances = [generate_random_instance(cfg, i) for i in range(count)]
        timings, answers = {}, {}
        for b in backends:
            t0 = time.perf_counter()
            answers[b] = [solve(inst, b) for inst in instances]
            timings[b] = time.perf_counter() - t0
        if len({tuple(a) for a in answers.values()}) != 1:
            raise SystemExit(f"{name}: backends disagree")
        row = f"{name:30}" + "".join(f"{timings[b]:>11.3f}s" for b in backends)
        if len(backends) == 2:
            row += f"{timings['python'] / timings['cython']:>9.1f}x"
        print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()
    run(args.count, args.seed)


if __name__ == "__main__":
    main()
