"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--n 4] [--repeat 3]
"""

import argparse
import timeit

from fencemonoid import kernels
from fencemonoid.core import enumerate_elements, to_mask
from fencemonoid.ideals import elements_of_ideal, enumerate_ideals
from fencemonoid.oracle import monoid_table


def cases(n):
    t = monoid_table(n)
    elems = enumerate_elements(n)
    doms = [to_mask(e.dom) for e in elems]
    imgs = [to_mask(e.img) for e in elems]
    ideals = [t.indices(elements_of_ideal(f)) for f in enumerate_ideals(n)]
    small = [i for i in ideals if len(i) <= 16]
    biggest = max(ideals, key=len)

    def layers(members):
        out = {}
        for x in members:
            out.setdefault(int(t.ranks[x]), []).append(x)
        return out.values()

    return {
        "product_table": lambda k: k.product_table(doms, imgs, n),
        "factor_free (all ideals)": lambda k: [k.factor_free(t.product, i, t.ranks) for i in ideals],
        "closure (all ideals)": lambda k: [k.closure(t.product, i[:3]) for i in ideals],
        "subset scan (ideals <= 16)": lambda k: [k.strategy_a(t.product, i) for i in small],
        "layer scan (largest ideal)": lambda k: [
            k.strategy_b(t.product, biggest, t.ranks, layer) for layer in layers(biggest)
        ],
    }


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    backends = kernels.available_backends()
    names = sorted(backends)
    print(f"n={args.n}, best of {args.repeat}, seconds")
    print(f"{'kernel':30s}" + "".join(f"{b:>12s}" for b in names) + f"{'speedup':>10s}")
    for label, fn in cases(args.n).items():
        times = {b: min(timeit.repeat(lambda: fn(backends[b]), number=1, repeat=args.repeat)) for b in names}
        speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else ""
        print(f"{label:30s}" + "".join(f"{times[b]:12.4f}" for b in names) + speed)


if __name__ == "__main__":
    main()
