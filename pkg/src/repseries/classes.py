"""Characteristic-polynomial class tables of Weyl groups.

Every series computed by this package depends on a Weyl group element ``w``
only through ``det(1 + s w)``, so a :class:`ClassTable` records, for each
characteristic polynomial occurring in ``W``, how many elements have it.

Two independent constructions are provided: :func:`enumerate_class_table`
closes the generating reflections under multiplication, and
:func:`combinatorial_class_table` reads the table off (signed) cycle types for
the classical families.  :func:`class_table` picks the cheap one per factor.
"""
from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exactpoly import UniPoly
from .groups import CartanFactor, GroupSpec, WeylElement, reflection_generators

DEFAULT_ENUM_CAP = 5_000_000
CAP_ENV = "WEYL_ENUM_CAP"


class CapExceeded(RuntimeError):
    def __init__(self, estimate: int, cap: int):
        self.estimate = estimate
        self.cap = cap
        super().__init__(
            f"Weyl group has {estimate} elements, above the enumeration cap {cap}; "
            f"set {CAP_ENV} to raise the cap"
        )


class UnsupportedFactor(ValueError):
    pass


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be a positive integer, got {raw!r}") from None
    if cap <= 0:
        raise ValueError(f"{CAP_ENV} must be a positive integer, got {raw!r}")
    return cap


@dataclass(frozen=True)
class ClassRecord:
    char_poly: UniPoly          # det(x I - w)
    size: int
    det_one_plus_sw: UniPoly
    det_one_minus_q2w: UniPoly

    @classmethod
    def from_det(cls, det_coeffs: tuple[int, ...], rank: int, size: int) -> ClassRecord:
        """Build a record from the coefficients of ``det(1 + s w)``."""
        e = list(det_coeffs) + [0] * (rank + 1 - len(det_coeffs))
        char = [(-1) ** (rank - i) * e[rank - i] for i in range(rank + 1)]
        q2 = [0] * (2 * rank + 1)
        for j in range(rank + 1):
            q2[2 * j] = (-1) ** j * e[j]
        return cls(UniPoly("x", char), size, UniPoly("s", e), UniPoly("q", q2))

    def sort_key(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.char_poly.coeffs)


@dataclass(frozen=True)
class ClassTable:
    group: GroupSpec
    records: tuple[ClassRecord, ...]
    weyl_order: int

    @property
    def rank(self) -> int:
        return self.group.rank

    def sizes(self) -> list[int]:
        return [r.size for r in self.records]

    def det_multiset(self) -> Counter:
        """``{det(1+sw) coefficient tuple: number of elements}``."""
        out: Counter = Counter()
        for r in self.records:
            out[tuple(int(c) for c in r.det_one_plus_sw.coeffs)] += r.size
        return out


def _table_from_counts(g: GroupSpec, counts: dict[tuple[int, ...], int]) -> ClassTable:
    recs = [ClassRecord.from_det(d, g.rank, n) for d, n in counts.items() if n]
    recs.sort(key=ClassRecord.sort_key)
    return ClassTable(g, tuple(recs), sum(r.size for r in recs))


# --- enumeration ------------------------------------------------------------

def _det_from_power_traces(traces: tuple[int, ...]) -> tuple[int, ...]:
    """Elementary symmetric functions of the eigenvalues from power sums
    (Newton's identities); these are the coefficients of ``det(1 + s w)``."""
    e = [Fraction(1)]
    for k in range(1, len(traces) + 1):
        acc = sum(((-1) ** (i - 1) * e[k - i] * traces[i - 1] for i in range(1, k + 1)), Fraction(0))
        e.append(acc / k)
    assert all(x.denominator == 1 for x in e)
    return tuple(int(x) for x in e)


def _power_traces(batch: np.ndarray) -> np.ndarray:
    """``trace(w^k)`` for ``k = 1..r`` for a stack of ``r x r`` matrices."""
    r = batch.shape[1]
    m = batch.astype(np.int64)
    p = m
    out = np.empty((batch.shape[0], r), dtype=np.int64)
    out[:, 0] = np.trace(m, axis1=1, axis2=2)
    for k in range(1, r):
        p = np.matmul(p, m)
        out[:, k] = np.trace(p, axis1=1, axis2=2)
    return out


def _left_multiply(g: np.ndarray, layer: np.ndarray) -> np.ndarray:
    # one BLAS call for the whole stack; entries are small so float64 is exact
    b, r, _ = layer.shape
    x = layer.astype(np.float64).transpose(1, 0, 2).reshape(r, b * r)
    y = (g @ x).reshape(r, b, r).transpose(1, 0, 2)
    return np.rint(y).astype(np.int64)


def _as_keys(stack: np.ndarray) -> np.ndarray:
    flat = np.ascontiguousarray(stack.reshape(stack.shape[0], -1).astype(np.int8))
    return flat.view(np.dtype((np.void, flat.shape[1]))).ravel()


def _closure_counts(gens: list[np.ndarray], rank: int, cap: int) -> dict[tuple[int, ...], int]:
    """Breadth-first closure of ``gens`` (each an involution), bucketing each
    element by ``det(1 + s w)`` as it is produced.

    With an inverse-closed generating set the neighbours of BFS layer ``L``
    lie in layers ``L-1``, ``L`` and ``L+1``, so only two layers are kept.
    """
    ident = np.eye(rank, dtype=np.int64)[None]
    gmats = [np.asarray(g, dtype=np.float64) for g in gens]
    counts: Counter = Counter()
    prev_keys = np.empty(0, dtype=_as_keys(ident).dtype)
    layer = ident
    layer_keys = _as_keys(layer)
    total = 0
    while layer.shape[0]:
        total += layer.shape[0]
        if total > cap:
            raise CapExceeded(total, cap)
        traces, n = np.unique(_power_traces(layer), axis=0, return_counts=True)
        for t, c in zip(traces, n):
            counts[tuple(int(x) for x in t)] += int(c)
        if not gmats:
            break
        cand = np.concatenate([_left_multiply(g, layer) for g in gmats])
        if np.abs(cand).max() > 127:
            raise OverflowError("matrix entries exceed the int8 key range")
        keys, idx = np.unique(_as_keys(cand), return_index=True)
        fresh = ~(np.isin(keys, prev_keys) | np.isin(keys, layer_keys))
        prev_keys, layer_keys = layer_keys, keys[fresh]
        layer = cand[idx[fresh]]
    return {_det_from_power_traces(t): c for t, c in counts.items()}


def enumerate_class_table(g: GroupSpec, cap: int | None = None) -> ClassTable:
    """Class table of ``g`` by exhaustive closure of its reflection generators.

    Raises :class:`CapExceeded` before doing any work when ``|W|`` is above
    ``cap`` (default: ``WEYL_ENUM_CAP`` or 5,000,000).
    """
    cap = default_cap() if cap is None else cap
    if g.weyl_order > cap:
        raise CapExceeded(g.weyl_order, cap)
    if g.rank == 0:
        return _table_from_counts(g, {(1,): 1})
    gens = [np.array(w.matrix) for w in reflection_generators(g)]
    for w in gens:
        if not (w @ w == np.eye(g.rank, dtype=w.dtype)).all():
            raise ValueError("generators must be involutions")
    return _table_from_counts(g, _closure_counts(gens, g.rank, cap))


# --- combinatorial fast path ------------------------------------------------

def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _div_one_plus_s(a: tuple[int, ...]) -> tuple[int, ...]:
    # synthetic division by (1 + s), remainder must vanish
    q = []
    carry = 0
    for c in a[:-1]:
        carry = c - carry
        q.append(carry)
    if a[-1] - carry != 0:
        raise ArithmeticError("not divisible by 1 + s")
    return tuple(q)


def _cycle(k: int, negative: bool) -> tuple[int, ...]:
    """``det(1 + s w)`` of a positive or negative k-cycle: ``1 -+ (-s)^k``."""
    c = [0] * (k + 1)
    c[0] = 1
    c[k] = (-1) ** k * (1 if negative else -1)
    return tuple(c)


def partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _centralizer(parts: tuple[int, ...], base: int) -> int:
    """``prod_k (base*k)^{m_k} m_k!`` over the multiplicities ``m_k``."""
    z = 1
    for k, m in Counter(parts).items():
        z *= (base * k) ** m * math.factorial(m)
    return z


def _symmetric_counts(k: int) -> Counter:
    out: Counter = Counter()
    for lam in partitions(k):
        det = (1,)
        for part in lam:
            det = _pmul(det, _cycle(part, False))
        out[det] += math.factorial(k) // _centralizer(lam, 1)
    return out


def _hyperoctahedral_counts(m: int, even_only: bool) -> Counter:
    out: Counter = Counter()
    order = 2**m * math.factorial(m)
    for a in range(m + 1):
        for pos in partitions(a):
            for neg in partitions(m - a):
                if even_only and len(neg) % 2:
                    continue
                det = (1,)
                for part in pos:
                    det = _pmul(det, _cycle(part, False))
                for part in neg:
                    det = _pmul(det, _cycle(part, True))
                out[det] += order // (_centralizer(pos, 2) * _centralizer(neg, 2))
    return out


def _factor_counts(f: CartanFactor) -> Counter:
    if f.kind == "T":
        return Counter({tuple(math.comb(f.k, i) for i in range(f.k + 1)): 1})
    if f.kind == "U":
        return _symmetric_counts(f.k)
    rt = f.root_type
    if rt is None:
        return Counter({(1,): 1})
    letter, m = rt
    if letter == "A":
        return Counter({_div_one_plus_s(d): n for d, n in _symmetric_counts(m + 1).items()})
    if letter in ("B", "C"):
        return _hyperoctahedral_counts(m, even_only=False)
    if letter == "D":
        return _hyperoctahedral_counts(m, even_only=True)
    raise UnsupportedFactor(f"no combinatorial class table for {f.name}")


def combine_counts(a: dict, b: dict) -> Counter:
    """Class data of a product group from the data of its two factors."""
    out: Counter = Counter()
    for da, na in a.items():
        for db, nb in b.items():
            out[_pmul(da, db)] += na * nb
    return out


def combinatorial_class_table(g: GroupSpec) -> ClassTable:
    """Class table from cycle types; classical factors only."""
    counts: Counter = Counter({(1,): 1})
    for f in g.factors:
        counts = combine_counts(counts, _factor_counts(f))
    return _table_from_counts(g, counts)


@lru_cache(maxsize=None)
def _cached_factor_counts(f: CartanFactor, cap: int) -> Counter:
    if f.is_classical:
        return _factor_counts(f)
    return enumerate_class_table(GroupSpec((f,)), cap).det_multiset()


def class_table(g: GroupSpec, cap: int | None = None) -> ClassTable:
    """Class table of ``g``, enumerating only the exceptional factors."""
    cap = default_cap() if cap is None else cap
    counts: Counter = Counter({(1,): 1})
    for f in g.factors:
        counts = combine_counts(counts, _cached_factor_counts(f, cap))
    return _table_from_counts(g, counts)


__all__ = [
    "CapExceeded", "ClassRecord", "ClassTable", "UnsupportedFactor", "WeylElement",
    "class_table", "combinatorial_class_table", "enumerate_class_table", "partitions",
]
