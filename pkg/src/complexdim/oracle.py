"""Brute-force epsilon-net density oracle.

Independent of the M_H pipeline: it only needs a basis of vect(H) among the
generators (so that the lattice they span lies in H) and floating point
coordinates of the remaining generators.  Group elements
``sum_k c_k u_k`` with ``|c_k| <= K`` for the non-basis generators are
reduced modulo the basis lattice into the unit torus of span coordinates;
the target is declared covered when every center of an ``eps``-spaced grid
on its unit box has a sample within ``eps`` (torus distance).
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .dimension import GroupSpec, reduce_to_span
from .errors import BudgetExceeded

DEFAULT_SAMPLE_CAP = 5_000_000
DEFAULT_GRID_CAP = 2_000_000


def torus_samples(coords: Sequence[Sequence[float]], bound: int, q: int, sample_cap: int = DEFAULT_SAMPLE_CAP) -> np.ndarray:
    """All ``sum_k c_k alpha_k mod 1`` with ``|c_k| <= bound``, shape (N, q)."""
    count = (2 * bound + 1) ** len(coords)
    if count > sample_cap:
        raise BudgetExceeded(f"{count} samples exceed the cap of {sample_cap}")
    pts = np.zeros((1, q))
    c = np.arange(-bound, bound + 1, dtype=float)
    for alpha in coords:
        step = np.outer(c, np.asarray(alpha, dtype=float))
        pts = np.mod(pts[:, None, :] + step[None, :, :], 1.0).reshape(-1, q)
    return pts


def epsilon_net_oracle(
    G: GroupSpec,
    bound: int,
    eps: float,
    target: Sequence[Sequence[float]] | None = None,
    sample_cap: int = DEFAULT_SAMPLE_CAP,
    grid_cap: int = DEFAULT_GRID_CAP,
) -> bool:
    """Is ``H`` eps-dense in the unit box of ``target``?

    ``target`` is a list of span-coordinate vectors spanning the subspace to
    test; ``None`` means all of vect(H).
    """
    if bound < 1 or eps <= 0:
        raise ValueError("need bound >= 1 and eps > 0")
    basis, coords = reduce_to_span(G)
    q = len(basis)
    if target is None:
        target = np.eye(q)
    W = np.asarray(target, dtype=float).reshape(-1, q)
    s = W.shape[0]
    if s == 0 or q == 0:
        return True
    free = [[float(x) for x in coords[k]] for k in range(G.m) if k not in basis]
    pts = torus_samples(free, bound, q, sample_cap)

    ticks = math.ceil(1 / eps)
    if ticks**s > grid_cap:
        raise BudgetExceeded(f"{ticks ** s} grid centers exceed the cap of {grid_cap}")
    axis = (np.arange(ticks) + 0.5) / ticks
    grid = np.stack(np.meshgrid(*([axis] * s), indexing="ij"), axis=-1).reshape(-1, s)
    centers = np.mod(grid @ W, 1.0)
    # periodic KD-tree needs points strictly inside [0, 1)
    tree = cKDTree(np.mod(pts, 1.0) % 1.0, boxsize=1.0)
    dist, _ = tree.query(centers % 1.0, k=1)
    return bool(np.all(dist < eps))
