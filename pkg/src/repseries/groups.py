"""Compact connected Lie groups as products of factors, and their Weyl data.

A group is written as a product of factors separated by ``x``::

    U(3)   SU(2)xT^1   G2   Spin(8) x Sp(2)   A_3   E6

Accepted factors (case-insensitive, whitespace ignored):

========================  ==========================================
``U(k)``, ``PU(k)``       unitary group, k >= 1
``SU(k)``, ``PSU(k)``     special unitary group, k >= 1
``SO(k)``, ``Spin(k)``    k >= 2; ``SO(2)`` is a circle
``Sp(k)``                 compact symplectic group, k >= 1
``A_k``                   same as ``SU(k+1)``, k >= 1
``B_k``, ``C_k``          k >= 2
``D_k``                   k >= 3
``G2 F4 E6 E7 E8``        exceptional groups
``T^k``, ``T``            k-dimensional torus, k >= 1
``1``                     trivial group (rank 0)
========================  ==========================================

The forms ``A(k)``, ``Ak`` and ``T(k)`` are also accepted.  Only the rational
action of the Weyl group on the Lie algebra of the maximal torus matters
downstream, so isogenous groups (``SO``/``Spin``, ``SU``/``PSU``) share data.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

Matrix = tuple[tuple[int, ...], ...]


class ParseError(ValueError):
    """Malformed group specification."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


# (kind, root-system type) for each supported factor family.
_EXCEPTIONAL = {"G2": ("G", 2), "F4": ("F", 4), "E6": ("E", 6), "E7": ("E", 7), "E8": ("E", 8)}

_DEGREES_EXCEPTIONAL = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}

_WEYL_ORDER_EXCEPTIONAL = {"G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}


@dataclass(frozen=True)
class CartanFactor:
    """One factor of a product group.

    ``kind`` is one of ``U SU SO Spin Sp B C D G2 F4 E6 E7 E8 T``; ``k`` is the
    family parameter (0 for exceptional kinds).
    """

    kind: str
    k: int = 0

    @property
    def name(self) -> str:
        if self.kind in _EXCEPTIONAL:
            return self.kind
        if self.kind == "T":
            return f"T^{self.k}"
        if self.kind in ("B", "C", "D"):
            return f"{self.kind}_{self.k}"
        return f"{self.kind}({self.k})"

    @property
    def root_type(self) -> tuple[str, int] | None:
        """Cartan type ``(letter, rank)`` of the semisimple part, or None."""
        kind, k = self.kind, self.k
        if kind in _EXCEPTIONAL:
            return _EXCEPTIONAL[kind]
        if kind in ("B", "C", "D"):
            return (kind, k)
        if kind == "SU":
            return ("A", k - 1) if k >= 2 else None
        if kind == "Sp":
            return ("C", k)
        if kind in ("SO", "Spin"):
            m = k // 2
            return ("B", m) if k % 2 else ("D", m)
        return None

    @property
    def rank(self) -> int:
        if self.kind in ("U", "T"):
            return self.k
        rt = self.root_type
        return rt[1] if rt else 0

    @property
    def central_rank(self) -> int:
        return self.k if self.kind == "T" else (1 if self.kind == "U" else 0)

    @property
    def weyl_order(self) -> int:
        if self.kind == "U":
            return math.factorial(self.k)
        rt = self.root_type
        if rt is None:
            return 1
        return _weyl_order(*rt)

    @property
    def is_classical(self) -> bool:
        return self.kind not in _EXCEPTIONAL

    @property
    def degrees(self) -> tuple[int, ...]:
        if self.kind == "T":
            return (1,) * self.k
        if self.kind == "U":
            return tuple(range(1, self.k + 1))
        if self.kind in _DEGREES_EXCEPTIONAL:
            return _DEGREES_EXCEPTIONAL[self.kind]
        rt = self.root_type
        if rt is None:
            return ()
        letter, m = rt
        if letter == "A":
            return tuple(range(2, m + 2))
        if letter in ("B", "C"):
            return tuple(range(2, 2 * m + 1, 2))
        return tuple(sorted(list(range(2, 2 * m - 1, 2)) + [m]))


def _weyl_order(letter: str, m: int) -> int:
    if letter == "A":
        return math.factorial(m + 1)
    if letter in ("B", "C"):
        return 2**m * math.factorial(m)
    if letter == "D":
        return 2 ** (m - 1) * math.factorial(m)
    return _WEYL_ORDER_EXCEPTIONAL[f"{letter}{m}"]


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple[CartanFactor, ...]

    @property
    def canonical_name(self) -> str:
        return "x".join(f.name for f in self.factors) if self.factors else "1"

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def central_torus_rank(self) -> int:
        return sum(f.central_rank for f in self.factors)

    @property
    def weyl_order(self) -> int:
        return math.prod(f.weyl_order for f in self.factors)

    @property
    def is_classical(self) -> bool:
        return all(f.is_classical for f in self.factors)

    @property
    def dimension(self) -> int:
        return sum(2 * d - 1 for d in degrees(self).degrees)

    def __str__(self) -> str:
        return self.canonical_name


_FACTOR_RE = re.compile(
    r"""
    (?P<paren>PSU|SU|PU|U|SO|SPIN|SP|A|T)\((?P<pk>\d+)\)
  | (?P<series>[ABCD])_?(?P<sk>\d+)
  | (?P<torus>T)(?:\^(?P<tk>\d+))?
  | (?P<exc>G2|F4|E6|E7|E8)
  | (?P<trivial>1)
    """,
    re.VERBOSE,
)

_MIN_PARAM = {"U": 1, "SU": 1, "PU": 1, "PSU": 1, "SO": 2, "SPIN": 2, "SP": 1,
              "A": 1, "B": 2, "C": 2, "D": 3, "T": 1}


def _make_factor(kind: str, k: int, text: str, pos: int) -> CartanFactor | None:
    if k < _MIN_PARAM[kind]:
        raise ParseError(f"parameter {k} out of range for {kind}", text, pos)
    if kind == "PU":
        kind = "U"
    elif kind == "PSU":
        kind = "SU"
    elif kind == "A":
        return CartanFactor("SU", k + 1)
    elif kind == "SPIN":
        kind = "Spin"
    elif kind == "SP":
        kind = "Sp"
    if kind in ("SO", "Spin") and k == 2:
        return CartanFactor("T", 1)
    return CartanFactor(kind, k)


def parse_group(spec: str) -> GroupSpec:
    """Parse a product-of-factors group specification.

    >>> parse_group("SU(2) x T^1").canonical_name
    'SU(2)xT^1'
    >>> parse_group("A_2").canonical_name
    'SU(3)'
    """
    # keep a map from stripped positions back to the user's text for error reports
    chars = [(i, c.upper()) for i, c in enumerate(spec) if not c.isspace()]
    text = "".join(c for _, c in chars).replace("×", "X").replace("*", "X")

    def orig(p: int) -> int:
        return chars[p][0] if p < len(chars) else len(spec)

    if text in ("", "1"):
        return GroupSpec(())
    factors: list[CartanFactor] = []
    pos = 0
    while True:
        m = _FACTOR_RE.match(text, pos)
        if m is None or m.group("trivial"):
            raise ParseError("expected a group factor", spec, orig(pos))
        if m.group("paren"):
            f = _make_factor(m.group("paren"), int(m.group("pk")), spec, orig(pos))
        elif m.group("series"):
            f = _make_factor(m.group("series"), int(m.group("sk")), spec, orig(pos))
        elif m.group("torus"):
            f = _make_factor("T", int(m.group("tk") or 1), spec, orig(pos))
        else:
            f = CartanFactor(m.group("exc"))
        factors.append(f)
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "X":
            raise ParseError("expected 'x' between factors", spec, orig(pos))
        pos += 1
    return GroupSpec(tuple(factors))


@dataclass(frozen=True)
class DegreeTable:
    group: GroupSpec
    degrees: tuple[int, ...]

    @property
    def product(self) -> int:
        return math.prod(self.degrees)


def degrees(g: GroupSpec) -> DegreeTable:
    """Characteristic degrees of the Weyl group acting on the Lie algebra of
    the maximal torus; central directions contribute degree 1."""
    ds: list[int] = []
    for f in g.factors:
        ds.extend(f.degrees)
    return DegreeTable(g, tuple(sorted(ds)))


# --- root data --------------------------------------------------------------

def _simple_root_gram(letter: str, m: int) -> list[list[Fraction]]:
    """Gram matrix of the simple roots (any positive scaling)."""
    if letter == "A":
        vecs = [_e(i, m + 1) - _e(i + 1, m + 1) for i in range(m)]
    elif letter == "B":
        vecs = [_e(i, m) - _e(i + 1, m) for i in range(m - 1)] + [_e(m - 1, m)]
    elif letter == "C":
        vecs = [_e(i, m) - _e(i + 1, m) for i in range(m - 1)] + [2 * _e(m - 1, m)]
    elif letter == "D":
        vecs = [_e(i, m) - _e(i + 1, m) for i in range(m - 1)] + [_e(m - 2, m) + _e(m - 1, m)]
    elif letter == "G":
        return [[Fraction(2), Fraction(-3)], [Fraction(-3), Fraction(6)]]
    elif letter == "F":
        half = Fraction(1, 2)
        vecs = [_e(1, 4) - _e(2, 4), _e(2, 4) - _e(3, 4), _e(3, 4),
                _Vec([half, -half, -half, -half])]
    elif letter == "E":
        # Bourbaki labelling: chain 1-3-4-5-...-m with node 2 attached to 4
        edges = {(1, 3), (3, 4), (2, 4)} | {(j, j + 1) for j in range(4, m)}
        return [[Fraction(2 if i == j else (-1 if (min(i, j), max(i, j)) in edges else 0))
                 for j in range(1, m + 1)] for i in range(1, m + 1)]
    else:
        raise ValueError(f"unknown root system {letter}{m}")
    return [[u.dot(v) for v in vecs] for u in vecs]


class _Vec(list):
    def __sub__(self, other):
        return _Vec(a - b for a, b in zip(self, other))

    def __add__(self, other):
        return _Vec(a + b for a, b in zip(self, other))

    def __rmul__(self, c):
        return _Vec(c * a for a in self)

    def dot(self, other) -> Fraction:
        return sum((Fraction(a) * b for a, b in zip(self, other)), Fraction(0))


def _e(i: int, n: int) -> _Vec:
    return _Vec(1 if j == i else 0 for j in range(n))


def cartan_matrix(letter: str, m: int) -> list[list[int]]:
    """``A[i][j] = 2 (a_i, a_j) / (a_i, a_i)`` for simple roots ``a_i``."""
    gram = _simple_root_gram(letter, m)
    out = []
    for i, row in enumerate(gram):
        entries = [2 * x / gram[i][i] for x in row]
        assert all(e.denominator == 1 for e in entries)
        out.append([int(e) for e in entries])
    return out


def simple_reflections(letter: str, m: int) -> list[Matrix]:
    """Simple reflections acting on the root lattice, simple-root basis.

    ``s_i(a_j) = a_j - A[i][j] a_i``, so column ``j`` of ``s_i`` is
    ``e_j - A[i][j] e_i``.
    """
    A = cartan_matrix(letter, m)
    mats = []
    for i in range(m):
        rows = [[1 if r == c else 0 for c in range(m)] for r in range(m)]
        for j in range(m):
            rows[i][j] -= A[i][j]
        mats.append(tuple(tuple(r) for r in rows))
    return mats


def _transpositions(k: int) -> list[Matrix]:
    mats = []
    for i in range(k - 1):
        perm = list(range(k))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        mats.append(tuple(tuple(1 if perm[r] == c else 0 for c in range(k)) for r in range(k)))
    return mats


@dataclass(frozen=True)
class WeylElement:
    """Integer matrix of a Weyl group element acting on an integral lattice."""

    matrix: Matrix

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __matmul__(self, other: WeylElement) -> WeylElement:
        b = other.matrix
        n = len(b)
        return WeylElement(tuple(
            tuple(sum(row[t] * b[t][j] for t in range(n)) for j in range(n)) for row in self.matrix
        ))

    @cached_property
    def is_identity(self) -> bool:
        return all(v == (1 if i == j else 0) for i, row in enumerate(self.matrix) for j, v in enumerate(row))


def factor_generators(f: CartanFactor) -> list[Matrix]:
    if f.kind == "U":
        return _transpositions(f.k)
    rt = f.root_type
    if rt is None:
        return []
    return simple_reflections(*rt)


def reflection_generators(g: GroupSpec) -> list[WeylElement]:
    """Generating reflections, block-diagonal across the factors of ``g``."""
    r = g.rank
    gens: list[WeylElement] = []
    offset = 0
    for f in g.factors:
        for block in factor_generators(f):
            rows = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
            for i, brow in enumerate(block):
                for j, v in enumerate(brow):
                    rows[offset + i][offset + j] = v
            gens.append(WeylElement(tuple(tuple(row) for row in rows)))
        offset += f.rank
    return gens
