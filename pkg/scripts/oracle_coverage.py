"""Epsilon-net verdicts for densified Z^2 over a grid of (K, eps).

With one free generator the oracle has (2K+1) points on the 2-torus, and
balls of radius eps around them cover at most (2K+1) * pi * eps^2 of it,
so no verdict of density is possible below that threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from complexdim import GroupSpec, densify
from complexdim.oracle import epsilon_net_oracle


@dataclass
class Config:
    bounds: tuple[int, ...] = (100, 1000, 3000, 10000)
    epsilons: tuple[float, ...] = (0.05, 0.02, 0.01)


def main(cfg: Config) -> None:
    _, G = densify(GroupSpec.from_strings([["1", "0"], ["0", "1"]]))
    print("u =", [str(x) for x in G.generators[-1]])
    print("     K    eps  area bound  verdict")
    for K in cfg.bounds:
        for eps in cfg.epsilons:
            area = (2 * K + 1) * math.pi * eps**2
            print(f"{K:6d}  {eps:5.2f}  {area:10.2f}  {epsilon_net_oracle(G, K, eps)}")


if __name__ == "__main__":
    main(Config())
