"""Element-by-element reference evaluation of the Weyl average of
``det(1 + s w)^n``.

Deliberately shares nothing with :mod:`repseries.classes`: the closure keeps
every element in a Python set, and determinants come from Laplace expansion
with memoised minors instead of power traces.  No class table is formed.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from ..exactpoly import UniPoly
from ..groups import WeylElement


class CapExceeded(RuntimeError):
    def __init__(self, size: int, cap: int):
        self.estimate = size
        self.cap = cap
        super().__init__(f"closure exceeded {cap} elements (WEYL_ENUM_CAP)")


def closure(generators: list[WeylElement], rank: int, cap: int) -> np.ndarray:
    """All products of ``generators`` as an ``(N, rank, rank)`` int64 stack."""
    ident = np.eye(rank, dtype=np.int64)
    seen = {ident.tobytes()}
    elements = [ident[None]]
    frontier = ident[None]
    gens = np.array([g.matrix for g in generators], dtype=np.int64).reshape(-1, rank, rank)
    width = np.dtype((np.void, rank * rank * 8))
    while frontier.shape[0] and gens.shape[0]:
        new = []
        for g in gens:
            prods = np.ascontiguousarray(frontier @ g)
            keys = prods.reshape(prods.shape[0], -1).view(width).ravel().tolist()
            for i, key in enumerate(keys):
                if key not in seen:
                    seen.add(key)
                    new.append(prods[i])
            if len(seen) > cap:
                raise CapExceeded(len(seen), cap)
        frontier = np.array(new, dtype=np.int64).reshape(-1, rank, rank)
        elements.append(frontier)
    return np.concatenate(elements)


def det_one_plus_sw(stack: np.ndarray) -> np.ndarray:
    """Coefficients of ``det(I + s W)`` for each matrix, shape ``(N, r+1)``.

    Laplace expansion along successive rows; minors over the bottom rows are
    memoised by column set, so the cost is ``r 2^r`` vectorised steps.
    """
    n, r, _ = stack.shape
    # entry (i, j) of I + sW is [i == j] + w_ij s; minors are stored
    # coefficient-major, shape (degree + 1, n)
    entries = np.ascontiguousarray(stack.transpose(1, 2, 0))
    live = entries.any(axis=2)
    minors = {(): np.ones((1, n), dtype=np.int64)}
    for size in range(1, r + 1):
        row = r - size
        nxt = {}
        for cols in combinations(range(r), size):
            acc = np.zeros((size + 1, n), dtype=np.int64)
            for pos, j in enumerate(cols):
                if not live[row, j] and row != j:
                    continue
                sub = minors[cols[:pos] + cols[pos + 1:]]
                if pos % 2:
                    sub = -sub
                if live[row, j]:
                    acc[1:] += entries[row, j] * sub
                if row == j:
                    acc[:-1] += sub
            nxt[cols] = acc
        minors = nxt
    return minors[tuple(range(r))].T


def _poly_power_rows(p: np.ndarray, k: int) -> np.ndarray:
    # coefficients of det(1+sw)^k are bounded by binomials in k*r <= 32; int64 is safe
    out = np.ones((p.shape[0], 1), dtype=np.int64)
    for _ in range(k):
        nxt = np.zeros((p.shape[0], out.shape[1] + p.shape[1] - 1), dtype=np.int64)
        for i in range(p.shape[1]):
            nxt[:, i:i + out.shape[1]] += p[:, i:i + 1] * out
        out = nxt
    return out


def brute_rep_series(generators: list[WeylElement], n: int, cap: int,
                     rank: int | None = None) -> UniPoly:
    """``(1/|W|) sum_w det(1 + s w)^n`` summed over every element of the
    group generated by ``generators``."""
    return brute_rep_series_many(generators, [n], cap, rank)[0]


def brute_rep_series_many(generators: list[WeylElement], ns: list[int], cap: int,
                          rank: int | None = None, chunk: int = 32768) -> list[UniPoly]:
    """:func:`brute_rep_series` for several exponents over one closure."""
    if rank is None:
        rank = generators[0].rank if generators else 0
    if rank == 0:
        return [UniPoly("s", (1,)) for _ in ns]
    elems = closure(generators, rank, cap)
    totals = [np.zeros(n * rank + 1, dtype=object) for n in ns]
    for start in range(0, elems.shape[0], chunk):
        dets = det_one_plus_sw(elems[start:start + chunk])
        for n, total in zip(ns, totals):
            powered = _poly_power_rows(dets, n).sum(axis=0)
            total[: len(powered)] += [int(c) for c in powered]
    order = elems.shape[0]
    return [UniPoly("s", (Fraction(int(c), order) for c in total)) for total in totals]
