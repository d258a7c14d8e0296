"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each workload is taken from the library's own hot paths: specializing a
universal action table, checking associativity and the module axiom of
integer tables, and multiplying integer matrices.
"""

import argparse
import random
import timeit

from formring import _pykernels
from formring.forms import BinaryForm
from formring.ringmod import build_module, build_ring
from formring.ringmod.build import universal_action

try:
    from formring import _ckernels
except ImportError:
    _ckernels = None


def workloads(rng):
    n = 7
    coeffs = [rng.randint(-10**6, 10**6) for _ in range(n + 1)]
    f = BinaryForm(n, tuple(coeffs))
    polys = []

    def flat(x):
        if isinstance(x, tuple):
            for y in x:
                flat(y)
        else:
            polys.append(list(x.terms.items()))

    flat(universal_action(n, n - 3))
    c = [[list(v) for v in row] for row in build_ring(f).c]
    d = [[list(v) for v in row] for row in build_module(f, n - 3).d]
    A = [[rng.randint(-10**9, 10**9) for _ in range(40)] for _ in range(40)]
    return {
        "eval_poly_table (n=7 action table)": lambda k: k.eval_poly_table(polys, coeffs),
        "assoc_defects_int (n=7)": lambda k: k.assoc_defects_int(c, n),
        "module_defects_int (n=7)": lambda k: k.module_defects_int(c, d, n, n),
        "matmul_int (40x40)": lambda k: k.matmul_int(A, A),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'workload':40s}" + "".join(f"{name:>12s}" for name, _ in backends) + "   speedup")
    for label, job in workloads(rng).items():
        results = [job(k) for _, k in backends]
        assert all(r == results[0] for r in results), label
        times = [min(timeit.repeat(lambda k=k: job(k), number=1, repeat=args.repeat))
                 for _, k in backends]
        line = f"{label:40s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            line += f"   {times[0] / times[1]:6.2f}x"
        print(line)
    if _ckernels is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
