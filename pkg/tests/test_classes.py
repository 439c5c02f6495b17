import time
from itertools import combinations_with_replacement
from math import comb

import pytest

from repseries import (
    CapExceeded,
    UniPoly,
    UnsupportedFactor,
    class_table,
    combinatorial_class_table,
    degrees,
    enumerate_class_table,
    parse_group,
)
from repseries.classes import DEFAULT_ENUM_CAP, partitions

from .conftest import CLASSICAL_RANK_LE_6

s = UniPoly("s", (0, 1))


def dets(table):
    return {tuple(r.det_one_plus_sw.coeffs): r.size for r in table.records}


def P(*c):
    return tuple(UniPoly("s", c).coeffs)


def test_u3_sizes():
    t = enumerate_class_table(parse_group("U(3)"))
    assert sorted(t.sizes()) == [1, 2, 3]
    assert dets(t) == {P(1, 3, 3, 1): 1, P(1, 1, -1, -1): 3, P(1, 0, 0, 1): 2}


def test_u4_matches_class_sizes_and_closed_form():
    t = enumerate_class_table(parse_group("U(4)"))
    assert sorted(t.sizes()) == [1, 3, 6, 6, 8]
    expected = {
        (1 + s) ** 4: 1,
        (1 - s**2) * (1 + s) ** 2: 6,
        (1 + s**3) * (1 + s): 8,
        (1 - s**2) ** 2: 3,
        1 - s**4: 6,
    }
    assert dets(t) == {tuple(p.coeffs): n for p, n in expected.items()}


def test_g2_dihedral():
    t = enumerate_class_table(parse_group("G2"))
    expected = {
        (1 + s) ** 2: 1,
        1 - s**2: 6,
        (1 - s) ** 2: 1,
        1 + s + s**2: 2,
        1 - s + s**2: 2,
    }
    assert dets(t) == {tuple(p.coeffs): n for p, n in expected.items()}


def test_rank_zero():
    t = enumerate_class_table(parse_group("1"))
    assert t.sizes() == [1]
    assert t.records[0].det_one_plus_sw == UniPoly("s", (1,))
    assert combinatorial_class_table(parse_group("1")) == t


@pytest.mark.parametrize("spec, order", [("G2", 12), ("F4", 1152), ("E6", 51840)])
def test_enumerated_weyl_orders(spec, order):
    t = enumerate_class_table(parse_group(spec))
    assert t.weyl_order == order
    assert sum(t.sizes()) == order


@pytest.mark.slow
def test_e7_weyl_order_and_degrees():
    g = parse_group("E7")
    t = class_table(g)
    assert t.weyl_order == 2903040
    assert degrees(g).product == t.weyl_order


def test_e8_refused_at_default_cap():
    with pytest.raises(CapExceeded) as exc:
        enumerate_class_table(parse_group("E8"))
    assert exc.value.cap == DEFAULT_ENUM_CAP
    assert "WEYL_ENUM_CAP" in str(exc.value)


def test_env_cap(monkeypatch):
    monkeypatch.setenv("WEYL_ENUM_CAP", "100")
    with pytest.raises(CapExceeded):
        enumerate_class_table(parse_group("SO(9)"))
    assert enumerate_class_table(parse_group("U(4)")).weyl_order == 24


def test_explicit_cap_checked_during_closure():
    with pytest.raises(CapExceeded):
        enumerate_class_table(parse_group("G2"), cap=11)


def test_combinatorial_rejects_exceptional():
    with pytest.raises(UnsupportedFactor):
        combinatorial_class_table(parse_group("G2xU(1)"))


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@pytest.mark.parametrize("spec", CLASSICAL_RANK_LE_6)
def test_combinatorial_equals_enumeration(spec):
    g = parse_group(spec)
    assert combinatorial_class_table(g) == enumerate_class_table(g)


_SMALL = ["U(1)", "U(2)", "U(3)", "SU(2)", "SU(3)", "SU(4)", "SO(3)", "SO(4)", "SO(5)",
          "SO(6)", "SO(7)", "Sp(2)", "Sp(3)", "T^1", "T^2"]
_PAIRS = [f"{a}x{b}" for a, b in combinations_with_replacement(_SMALL, 2)] + [
    "SO(13)xSU(2)", "U(6)xSp(2)", "SO(12)xT^2", "Sp(6)xU(2)", "SU(7)xSO(5)", "SO(8)xSO(7)",
]


@pytest.mark.parametrize("spec", _PAIRS)
def test_combinatorial_equals_enumeration_products(spec):
    g = parse_group(spec)
    assert combinatorial_class_table(g) == enumerate_class_table(g)


@pytest.mark.parametrize("spec", ["G2xSU(2)", "F4xT^1", "U(2)xG2"])
def test_mixed_products_factorwise(spec):
    g = parse_group(spec)
    assert class_table(g) == enumerate_class_table(g)


@pytest.mark.parametrize("spec", CLASSICAL_RANK_LE_6 + ["G2", "F4", "E6", "G2xU(3)", "1"])
def test_table_invariants(spec):
    g = parse_group(spec)
    t = class_table(g)
    r = g.rank
    assert sum(t.sizes()) == t.weyl_order == g.weyl_order
    identity = tuple(comb(r, i) for i in range(r + 1))
    assert sum(1 for rec in t.records if tuple(rec.det_one_plus_sw.coeffs) == identity) == 1
    assert sum(rec.size * rec.det_one_plus_sw[1] for rec in t.records) == t.weyl_order * g.central_torus_rank
    keys = [rec.sort_key() for rec in t.records]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for rec in t.records:
        d = rec.det_one_plus_sw
        assert d[0] == 1 and d.degree <= r and d.is_integral()
        assert all(abs(d[i]) <= comb(r, i) for i in range(r + 1))
        # det(1 + s w) = (-s)^r char(-1/s), coefficient by coefficient
        for i in range(r + 1):
            assert d[i] == (-1) ** i * rec.char_poly[r - i]
        # det(1 - q^2 w) = q^(2r) char(1/q^2)
        q2 = rec.det_one_minus_q2w
        assert q2[0] == 1
        for j in range(r + 1):
            assert q2[2 * j] == rec.char_poly[r - j]
            assert q2[2 * j + 1] == 0 if 2 * j + 1 <= 2 * r else True
        assert rec.char_poly[r] == 1


def test_isogeny_u2():
    a, b = class_table(parse_group("U(2)")), class_table(parse_group("SU(2)xT^1"))
    assert a.det_multiset() == b.det_multiset()


def test_deterministic_and_immutable():
    g = parse_group("SO(8)")
    assert enumerate_class_table(g) == enumerate_class_table(g)
    t = enumerate_class_table(g)
    with pytest.raises(AttributeError):
        t.records[0].size = 3


def test_e6_enumeration_time():
    t0 = time.perf_counter()
    t = enumerate_class_table(parse_group("E6"))
    assert time.perf_counter() - t0 < 60
    assert degrees(parse_group("E6")).product == t.weyl_order
