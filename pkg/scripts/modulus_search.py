"""Search random groups for subsets whose closure has a larger |dim|.

For H generated by u_1..u_m and K generated by a subset, the closure of K
lies inside the closure of H, so p(K) <= p(H) and p(K)+r(K) <= p(H)+r(H).
The modulus sqrt(p^2 + r^2) is not monotone, though: a discrete lattice
of full rank has modulus q while adding one irrational generator trades
one unit of r for one unit of p.  This script counts how often that
happens on random instances.
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass
from fractions import Fraction

from complexdim import GroupSpec, RealElement, complex_dimension_closure


@dataclass
class Config:
    seed: int = 0
    instances: int = 500
    max_dim: int = 4
    max_gens: int = 8
    radicands: tuple[int, ...] = (2, 3, 5, 7)


def random_entry(rng: random.Random, radicands: tuple[int, ...]) -> RealElement:
    u = rng.random()
    if u < 0.3:
        return RealElement()
    if u < 0.55:
        return RealElement.rational(Fraction(rng.randint(-20, 20), rng.randint(1, 5)))
    terms = {rng.choice((1,) + radicands): Fraction(rng.randint(1, 20), rng.randint(1, 5)) for _ in range(2)}
    return RealElement(terms)


def main(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    hits = 0
    first = None
    for _ in range(cfg.instances):
        n, m = rng.randint(1, cfg.max_dim), rng.randint(1, cfg.max_gens)
        G = GroupSpec(n, tuple(tuple(random_entry(rng, cfg.radicands) for _ in range(n)) for _ in range(m)))
        keep = sorted(rng.sample(range(m), rng.randint(1, m)))
        big, small = complex_dimension_closure(G), complex_dimension_closure(G.subset(keep))
        assert small.p <= big.p and small.p + small.r <= big.p + big.r
        if small.modulus_squared > big.modulus_squared:
            hits += 1
            first = first or (G, keep, big, small)
    print(f"{hits}/{cfg.instances} subsets have a larger modulus than the full group")
    if first:
        G, keep, big, small = first
        print("first instance:")
        for k, g in enumerate(G.generators):
            mark = "*" if k in keep else " "
            print(f"  {mark} u{k + 1} = ({', '.join(map(str, g))})")
        print(f"  H: {big} (|.|^2 = {big.modulus_squared}); K (starred): {small} (|.|^2 = {small.modulus_squared})")
    H = GroupSpec.from_strings([["1", "0"], ["sqrt(2)", "0"], ["0", "1"]])
    print(f"minimal case: Z^2 -> {complex_dimension_closure(H.subset([0, 2]))}, Z^2 + Z sqrt2 e1 -> {complex_dimension_closure(H)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--instances", type=int, default=500)
    a = ap.parse_args()
    main(Config(seed=a.seed, instances=a.instances))
