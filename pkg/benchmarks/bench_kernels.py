"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py            # orders 4, 5 and the order-6 proper solid search
    python3 benchmarks/bench_kernels.py --quick    # skip order 6 on the pure-Python kernel
"""

import argparse
import time

from wbcc.enumeration import _flags
from wbcc.enumeration.kernel import KERNELS

CASES = [
    ("order 4, all", 4, _flags.LEXMIN),
    ("order 5, all", 5, _flags.LEXMIN),
    ("order 5, proper", 5, _flags.LEXMIN | _flags.NOT_BCC),
    ("order 6, proper solid", 6, _flags.LEXMIN | _flags.NOT_BCC | _flags.SOLID),
]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [b for b in ("compiled", "python") if b in KERNELS]
    print(f"{'case':<24}{'backend':<10}{'tables':>8}{'nodes':>12}{'seconds':>10}")
    for label, n, flags in CASES:
        times = {}
        outputs = {}
        for backend in backends:
            if args.quick and backend == "python" and n == 6:
                continue
            repeat = 1 if backend == "python" and n >= 5 else args.repeat
            secs, (tables, nodes) = best_of(lambda: KERNELS[backend](n, flags), repeat)
            times[backend] = secs
            outputs[backend] = tables
            print(f"{label:<24}{backend:<10}{len(tables):>8}{nodes:>12}{secs:>10.3f}")
        if len(outputs) == 2:
            assert outputs["compiled"] == outputs["python"], f"kernels disagree on {label}"
            print(f"{'':<24}speedup {times['python'] / times['compiled']:.0f}x")


if __name__ == "__main__":
    main()
