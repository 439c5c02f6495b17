"""Poincare and Hilbert-Poincare series computed from a class table.

Every formula is an average over the Weyl group of a function of
``det(1 + s w)``; sums run over class records weighted by their size.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .classes import ClassTable
from .exactpoly import (
    BiPoly,
    TruncatedSeries,
    UniPoly,
    poly_eval,
    poly_pow,
    series_inverse,
    series_mul,
)
from .groups import DegreeTable, GroupSpec

DEFAULT_COMM_ORDER = 16

FORMULAS = ("rep", "rep_hilbert", "smash", "comm", "comm_hilbert", "xq", "hom", "euler")


class TruncationInsufficient(ArithmeticError):
    """The truncation window was too small for a polynomial answer."""


@dataclass(frozen=True)
class SeriesResult:
    formula_id: str
    group: GroupSpec
    parameter: int
    value: Union[UniPoly, BiPoly, TruncatedSeries, Fraction]

    def __post_init__(self):
        if self.formula_id not in FORMULAS:
            raise ValueError(f"unknown formula {self.formula_id!r}")


def _average(table: ClassTable, terms) -> UniPoly:
    total = None
    for rec, poly in zip(table.records, terms):
        term = poly * rec.size
        total = term if total is None else total + term
    return total * Fraction(1, table.weyl_order)


def rep_series(table: ClassTable, n: int) -> UniPoly:
    """Poincare polynomial of the identity component of Rep(Z^n, G):
    the Weyl average of ``det(1 + s w)^n``.

    The same polynomial serves any finitely generated nilpotent group whose
    abelianization has rank ``n`` (e.g. free nilpotent groups).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _average(table, (poly_pow(r.det_one_plus_sw, n) for r in table.records))


def smash_series(table: ClassTable, k: int) -> UniPoly:
    """Weyl average of ``(det(1 + s w) - 1)^k``: the series of the k-fold
    smash power of the torus modulo W."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _average(table, (poly_pow(r.det_one_plus_sw - 1, k) for r in table.records))


def rep_hilbert_series(table: ClassTable, n: int) -> BiPoly:
    """Bigraded series: the t^k part is ``C(n, k) * smash_series(k)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return BiPoly((k, smash_series(table, k) * math.comb(n, k)) for k in range(n + 1))


def comm_hilbert_series(table: ClassTable, s_order: int = DEFAULT_COMM_ORDER) -> BiPoly:
    """Bigraded series of Comm(G)_1/G truncated at ``s^s_order``.

    ``(det(1+sw) - 1)^k`` has s-valuation at least k, so tensor degrees above
    ``s_order`` contribute nothing to the window.
    """
    if s_order < 1:
        raise ValueError("s_order must be positive")
    parts = []
    reduced = [TruncatedSeries.from_poly(r.det_one_plus_sw - 1, s_order) for r in table.records]
    powers = [TruncatedSeries("s", s_order, (1,)) for _ in table.records]
    for k in range(s_order + 1):
        acc = TruncatedSeries("s", s_order)
        for rec, p in zip(table.records, powers):
            acc = acc + p * rec.size
        parts.append((k, acc * Fraction(1, table.weyl_order)))
        powers = [series_mul(p, x) for p, x in zip(powers, reduced)]
    return BiPoly(parts)


def comm_series(table: ClassTable, s_order: int = DEFAULT_COMM_ORDER) -> TruncatedSeries:
    """Poincare series of Comm(G)_1/G up to ``s^s_order``."""
    total = TruncatedSeries("s", s_order)
    for _, part in comm_hilbert_series(table, s_order).parts:
        total = total + part
    return total


# X(q, G)_1/G has the Comm(G)_1/G series for every q >= 2
xq_hilbert_series = comm_hilbert_series
xq_series = comm_series


def hom_series(table: ClassTable, deg: DegreeTable, n: int) -> UniPoly:
    """Poincare polynomial of the identity component of Hom(Z^n, G).

    Computed as a truncated power series in q up to ``n * dim G`` (the space
    sits inside G^n); the tail of the window must vanish.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    dim = sum(2 * d - 1 for d in deg.degrees)
    # headroom past the bound so a wrong bound shows up as a nonzero tail
    order = n * dim + 2 * max(deg.degrees, default=1)
    acc = TruncatedSeries("q", order)
    for rec in table.records:
        num = poly_pow(rec.det_one_plus_sw, n)
        num = UniPoly("q", num.coeffs)
        term = series_mul(TruncatedSeries.from_poly(num, order),
                          series_inverse(TruncatedSeries.from_poly(rec.det_one_minus_q2w, order)))
        acc = acc + term * rec.size
    prod = UniPoly("q", (1,))
    for d in deg.degrees:
        prod = prod * UniPoly.monomial("q", 2 * d, -1) + prod
    acc = series_mul(acc, TruncatedSeries.from_poly(prod, order)) * Fraction(1, table.weyl_order)
    poly = acc.to_poly()
    if poly.degree > n * dim:
        raise TruncationInsufficient(
            f"series for {table.group} at n={n} does not terminate below q^{n * dim + 1}"
        )
    return poly


def euler_characteristic(table: ClassTable, n: int) -> Fraction:
    """``rep_series(table, n)`` evaluated at ``s = -1``."""
    return poly_eval(rep_series(table, n), -1)
