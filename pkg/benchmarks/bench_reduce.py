"""Compare the compiled and pure-Python reduction kernels.

Two workloads:

* ``nf``: normal forms of random monomials modulo a fixed set of quadratic
  rewrite rules (the fiber candidate of a small 3-dimensional diagram);
* ``gb``: a full Buchberger run on the spanning kernel binomials of the same
  instance.

Usage::

    python3 benchmarks/bench_reduce.py --words 20000 --degree 6 --repeat 3
"""

from __future__ import annotations

import argparse
import random
import time

from ferrers_rees._kernels import BACKENDS
from ferrers_rees.fixtures import ex36
from ferrers_rees.groebner import buchberger
from ferrers_rees.oracle import ToricInstance, kernel_binomials
from ferrers_rees.presentation import fiber_candidate


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_nf(backend: str, r: int, n_words: int, degree: int, repeat: int, seed: int) -> tuple[float, int]:
    basis = fiber_candidate(ex36(), r)
    codec = basis.codec()
    rules = [codec.encode_binomial(b) for b in basis]
    rng = random.Random(seed)
    words = [tuple(sorted((rng.randrange(len(codec)) for _ in range(degree)), reverse=True)) for _ in range(n_words)]

    def run():
        red = BACKENDS[backend](len(codec))
        for lead, trail in rules:
            red.add(lead, trail)
        return red.normal_forms(words)

    digest = hash(tuple(run()))
    return _best(run, repeat), digest


def bench_gb(backend: str, r: int, max_t_degree: int, repeat: int) -> tuple[float, int]:
    gens = kernel_binomials(ToricInstance.uniform(ex36(), r), max_t_degree)
    out = []

    def run():
        out[:] = [buchberger(gens, backend=backend)]

    t = _best(run, repeat)
    return t, len(out[0])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, default=2, help="number of copies of the diagram")
    ap.add_argument("--words", type=int, default=20000, help="monomials per normal-form batch")
    ap.add_argument("--degree", type=int, default=6, help="degree of the random monomials")
    ap.add_argument("--gb-degree", type=int, default=3, help="T-degree bound for the Buchberger workload")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--skip-gb", action="store_true")
    args = ap.parse_args(argv)

    names = sorted(BACKENDS)
    print(f"backends: {', '.join(names)}")
    nf = {b: bench_nf(b, args.r, args.words, args.degree, args.repeat, args.seed) for b in names}
    for b in names:
        t, _ = nf[b]
        print(f"nf  {b:<7} {t * 1e3:9.1f} ms  ({args.words / t:,.0f} words/s)")
    if len({d for _, d in nf.values()}) != 1:
        print("warning: backends disagree on normal forms")
        return 1
    if not args.skip_gb:
        gb = {b: bench_gb(b, args.r, args.gb_degree, args.repeat) for b in names}
        for b in names:
            t, size = gb[b]
            print(f"gb  {b:<7} {t * 1e3:9.1f} ms  ({size} basis elements)")
    if "cython" in nf:
        print(f"nf speedup: {nf['python'][0] / nf['cython'][0]:.2f}x")
        if not args.skip_gb:
            print(f"gb speedup: {gb['python'][0] / gb['cython'][0]:.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
