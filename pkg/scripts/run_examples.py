"""Print the M_H trace for the two worked examples shipped in data/."""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from complexdim import GroupSpec, build_MH, parse

DATA = Path(__file__).resolve().parent.parent / "data"


@dataclass
class Config:
    files: tuple[str, ...] = ("example1.json", "example2.json")
    forced: bool = True


def load(path: Path, forced: bool) -> GroupSpec:
    job = json.loads(path.read_text())
    gens = tuple(tuple(parse(x) for x in g) for g in job["generators"])
    force = None
    if forced and job.get("force_I"):
        force = {int(k) - 1: [j - 1 for j in v] for k, v in job["force_I"].items()}
    return GroupSpec(job["ambient_dim"], gens, force)


def main(cfg: Config) -> None:
    for name in cfg.files:
        rep = build_MH(load(DATA / name, cfg.forced))
        print(f"== {name} (forced={cfg.forced})")
        for k in sorted(rep.I):
            coords = ", ".join(str(a) for a in rep.coords[k])
            print(f"  u{k + 1}: coords ({coords})  I={[i + 1 for i in rep.I[k]]}  d={rep.d[k]}")
            for j, col in sorted(rep.u_prime[k].items()):
                print(f"      u'_{k + 1},{j + 1} = {col}")
        print("  M_H rows:")
        for row in rep.MH:
            print("   ", row)
        print(f"  rank {rep.rank}, complex dimension {rep.complex_dim}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--greedy", action="store_true", help="ignore force_I and use greedy choices")
    args = ap.parse_args()
    main(Config(forced=not args.greedy))
