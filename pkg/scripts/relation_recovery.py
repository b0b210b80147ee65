"""Planted integer relation recovery rate against precision and dimension."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass, field

from complexdim.relation import find_integer_relation, relation_residual


@dataclass
class Config:
    seed: int = 1
    trials: int = 300
    dims: tuple[int, ...] = (2, 3, 4, 5, 6)
    digits: tuple[int, ...] = (8, 10, 12, 15)
    max_c: int = 100
    tolerance: float = 1e-8
    results: dict = field(default_factory=dict)


def planted(rng: random.Random, n: int, max_c: int, digits: int) -> tuple[list[str], list[int]]:
    c = [rng.randint(-max_c, max_c) for _ in range(n)]
    c[-1] = c[-1] or 1
    xs = [rng.uniform(-1, 1) for _ in range(n - 1)]
    xs.append(-sum(a * b for a, b in zip(c, xs)) / c[-1])
    return [f"{x:.{digits}f}" for x in xs], c


def main(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    print("digits  " + "  ".join(f"n={n:<5d}" for n in cfg.dims))
    for s in cfg.digits:
        row = []
        for n in cfg.dims:
            t0 = time.perf_counter()
            ok = 0
            for _ in range(cfg.trials):
                xs, _ = planted(rng, n, cfg.max_c, s)
                res = find_integer_relation(xs, s)
                ok += res is not None and relation_residual(xs, res.coefficients) <= max(cfg.tolerance, 10.0 ** (2 - s))
            cfg.results[(s, n)] = (ok / cfg.trials, time.perf_counter() - t0)
            row.append(f"{ok / cfg.trials:7.3f}")
        print(f"{s:6d}  " + "  ".join(row))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=300)
    main(Config(trials=ap.parse_args().trials))
