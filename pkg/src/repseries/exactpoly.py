"""Exact polynomial arithmetic over the rationals.

Three value types, all immutable:

* :class:`UniPoly` -- dense univariate polynomial tagged with its variable.
* :class:`BiPoly` -- polynomial in ``(s, t)`` stored as t-graded parts.
* :class:`TruncatedSeries` -- power series known modulo ``x^(order+1)``.

Scalars are exact rationals: :class:`fractions.Fraction` (always reduced,
positive denominator), stored as plain ``int`` whenever integral so that the
common integer case runs at integer speed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

VARIABLES = ("s", "q", "x", "t")


class VariableMismatch(ValueError):
    """Raised when two values in different variables are combined."""


class NotInvertible(ArithmeticError):
    """Raised when inverting a series whose constant term is zero."""


def _check_var(a: str, b: str) -> None:
    if a != b:
        raise VariableMismatch(f"cannot combine polynomials in {a!r} and {b!r}")


def canon(x: Scalar) -> Scalar:
    """Exact rational in canonical storage: ``int`` if integral, else Fraction."""
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _trim(coeffs: Iterable[Scalar]) -> tuple[Scalar, ...]:
    c = [canon(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class UniPoly:
    """Dense polynomial, coefficients in ascending degree.

    >>> UniPoly("s", (1, 1)) * UniPoly("s", (1, -1))
    UniPoly('1 - s^2')
    """

    variable: str
    coeffs: tuple[Scalar, ...]

    def __init__(self, variable: str, coeffs: Iterable[Scalar] = ()):
        if variable not in VARIABLES:
            raise ValueError(f"unknown variable tag {variable!r}")
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, variable: str, c: Scalar) -> UniPoly:
        return cls(variable, (c,))

    @classmethod
    def monomial(cls, variable: str, degree: int, c: Scalar = 1) -> UniPoly:
        return cls(variable, [0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            _check_var(self.variable, other.variable)
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly(self.variable, (other,))
        return NotImplemented

    def __add__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.variable, (self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(self.variable, (-c for c in self.coeffs))

    def __sub__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> UniPoly:
        return (-self) + other

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, (int, Fraction)):
            return UniPoly(self.variable, (c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        return poly_pow(self, n)

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def __str__(self) -> str:
        return format_poly(self.coeffs, self.variable)

    def __repr__(self) -> str:
        return f"UniPoly('{self}')"


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_mul(a: UniPoly, b: UniPoly) -> UniPoly:
    """Exact product of two polynomials in the same variable.

    >>> s = UniPoly("s", (0, 1))
    >>> str(poly_mul(1 - s**2, 1 + s**2))
    '1 - s^4'
    """
    _check_var(a.variable, b.variable)
    return UniPoly(a.variable, _convolve(a.coeffs, b.coeffs))


def poly_pow(a: UniPoly, n: int) -> UniPoly:
    """``a**n`` by repeated squaring; ``a**0 == 1`` (including ``0**0``)."""
    if n < 0:
        raise ValueError("negative exponent")
    result = UniPoly(a.variable, (1,))
    base = a
    while n:
        if n & 1:
            result = poly_mul(result, base)
        n >>= 1
        if n:
            base = poly_mul(base, base)
    return result


def poly_eval(a: UniPoly, x: Scalar) -> Fraction:
    """Horner evaluation."""
    acc = 0
    x = canon(x)
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return Fraction(acc)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series modulo ``variable^(order+1)``.

    The coefficient tuple always has exactly ``order + 1`` entries.
    Binary operations between series of different orders truncate to the
    smaller order.
    """

    variable: str
    order: int
    coeffs: tuple[Scalar, ...]

    def __init__(self, variable: str, order: int, coeffs: Iterable[Scalar] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        if variable not in VARIABLES:
            raise ValueError(f"unknown variable tag {variable!r}")
        c = [canon(x) for x in coeffs][: order + 1]
        c += [0] * (order + 1 - len(c))
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> TruncatedSeries:
        return cls(p.variable, order, p.coeffs)

    def to_poly(self) -> UniPoly:
        return UniPoly(self.variable, self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.variable, min(order, self.order), self.coeffs)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            _check_var(self.variable, other.variable)
            return other
        if isinstance(other, UniPoly):
            _check_var(self.variable, other.variable)
            return TruncatedSeries.from_poly(other, self.order)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.variable, self.order, (other,))
        return NotImplemented

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.variable, n, (self.coeffs[i] + other.coeffs[i] for i in range(n + 1))
        )

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.variable, self.order, (-c for c in self.coeffs))

    def __sub__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.variable, self.order, (c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_poly(self.coeffs, self.variable) + f" + O({self.variable}^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries('{self}')"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_var(a.variable, b.variable)
    n = min(a.order, b.order)
    out = [0] * (n + 1)
    for i in range(n + 1):
        x = a.coeffs[i]
        if x == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return TruncatedSeries(a.variable, n, out)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse modulo ``x^(order+1)``.

    >>> q2 = TruncatedSeries("q", 6, (1, 0, -1))
    >>> str(series_inverse(q2))
    '1 + q^2 + q^4 + q^6 + O(q^7)'
    """
    c0 = a.coeffs[0]
    if c0 == 0:
        raise NotInvertible("constant term is zero")
    inv = [0] * (a.order + 1)
    inv[0] = Fraction(1) / c0
    unit = c0 in (1, -1)
    for k in range(1, a.order + 1):
        acc = sum(a.coeffs[j] * inv[k - j] for j in range(1, k + 1) if a.coeffs[j])
        inv[k] = -acc * c0 if unit else Fraction(-acc) / c0
    inv = [canon(x) for x in inv]
    return TruncatedSeries(a.variable, a.order, inv)


def series_divide(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return series_mul(a, series_inverse(b))


@dataclass(frozen=True)
class BiPoly:
    """Polynomial in ``(s, t)`` stored as ``{t_degree: s_part}``.

    ``parts`` is a tuple of ``(t_degree, s_part)`` pairs with strictly
    increasing t-degree and no zero s-part.  An s-part is a :class:`UniPoly`
    or, for series truncated in s, a :class:`TruncatedSeries`.
    """

    parts: tuple[tuple[int, Union[UniPoly, TruncatedSeries]], ...]

    def __init__(self, parts: Iterable[tuple[int, Union[UniPoly, TruncatedSeries]]] = ()):
        merged: dict[int, Union[UniPoly, TruncatedSeries]] = {}
        for k, p in parts:
            if k < 0:
                raise ValueError("negative t-degree")
            merged[k] = merged[k] + p if k in merged else p
        kept = tuple((k, merged[k]) for k in sorted(merged) if not _is_zero_part(merged[k]))
        object.__setattr__(self, "parts", kept)

    def part(self, k: int):
        for d, p in self.parts:
            if d == k:
                return p
        return None

    @property
    def t_degrees(self) -> list[int]:
        return [k for k, _ in self.parts]

    def __add__(self, other: BiPoly) -> BiPoly:
        return BiPoly(self.parts + other.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "0"
        terms = []
        orders = []
        for k, p in self.parts:
            if isinstance(p, TruncatedSeries):
                orders.append(p.order)
                body = format_poly(p.coeffs, p.variable)
            else:
                body = str(p)
            tk = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(body if not tk else f"({body})*{tk}")
        tail = f" + O(s^{min(orders) + 1})" if orders else ""
        return " + ".join(terms) + tail

    def __repr__(self) -> str:
        return f"BiPoly('{self}')"


def _is_zero_part(p) -> bool:
    if isinstance(p, UniPoly):
        return p.is_zero()
    return all(c == 0 for c in p.coeffs)


def bipoly_collapse(b: BiPoly, variable: str = "s"):
    """Set ``t = 1``: the sum of all s-parts.

    Truncated parts give a :class:`TruncatedSeries` at the minimum order.
    """
    if not b.parts:
        return UniPoly(variable)
    total = b.parts[0][1]
    for _, p in b.parts[1:]:
        total = total + p
    return total


def format_poly(coeffs: Sequence[Fraction], variable: str) -> str:
    """Ascending-degree text form, e.g. ``1 + 3s + s^2``."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (variable if i == 1 else f"{variable}^{i}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        else:
            body = f"{mag}{mono}" if mag.denominator == 1 else f"({mag}){mono}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"
