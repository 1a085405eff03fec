#!/usr/bin/env python3
"""Measure basis-construction scaling on generated graphs.

Both constructions are expected to scale around m*n at desk scale; this
script reports measured seconds and the per-(m*n) constant instead of
asserting a bound, and also reports the emitted extension-sequence length
against m (the length is not obviously O(m) for heavy parallel classes,
so we measure).
"""

import argparse
import time

from cyclelattice.lattice_basis import semi_fundamental_basis
from cyclelattice.topo_extension import compatible_chain, extension_sequence, gen


def measure(n_target: int, seed: int):
    steps = 2 * n_target + 1  # m = n + steps - 1 ~ 3n once n hits the cap
    G = gen(steps=steps, seed=seed, max_vertices=n_target)
    t0 = time.time()
    basis, _ = semi_fundamental_basis(G)
    semi = time.time() - t0
    t0 = time.time()
    seq = extension_sequence(G)
    seq_time = time.time() - t0
    t0 = time.time()
    chain = compatible_chain(G, keep_prefixes=False)
    topo = time.time() - t0
    assert len(basis.cycles) == G.m
    assert len(chain.final_basis.cycles) == G.m
    return {
        "n": G.n,
        "m": G.m,
        "semi_s": semi,
        "seq_s": seq_time,
        "topo_s": topo,
        "seq_len": len(seq.steps),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="50,100,200,400,800,1000")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    header = (
        f"{'n':>6} {'m':>7} {'semi s':>8} {'semi/(mn)':>11} "
        f"{'topo s':>8} {'topo/(mn)':>11} {'seq len':>8} {'seq/m':>6}"
    )
    print(header)
    print("-" * len(header))
    for n in sizes:
        row = measure(n, args.seed)
        mn = row["m"] * row["n"]
        print(
            f"{row['n']:>6} {row['m']:>7} {row['semi_s']:>8.3f} "
            f"{row['semi_s'] / mn * 1e6:>10.4f}u {row['topo_s']:>8.3f} "
            f"{row['topo_s'] / mn * 1e6:>10.4f}u {row['seq_len']:>8} "
            f"{row['seq_len'] / row['m']:>6.3f}"
        )


if __name__ == "__main__":
    main()
