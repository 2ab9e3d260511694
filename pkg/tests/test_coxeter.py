import math

import pytest

from dworkbench.coxeter import (
    BudgetExceededError,
    CoxeterType,
    GroupMismatchError,
    UnsupportedTypeError,
    build_group,
    coxeter_element,
    element_order,
    p_regular_part,
    perm_order,
)


def test_descriptor_parsing():
    assert CoxeterType.parse("A4") == CoxeterType("A", 4)
    assert CoxeterType.parse("b3") == CoxeterType("B", 3)
    assert CoxeterType.parse("I2:7") == CoxeterType("I", 2, 7)
    assert CoxeterType.parse("I2(9)") == CoxeterType("I", 2, 9)
    assert CoxeterType.parse("  e6 ") == CoxeterType("E", 6)


@pytest.mark.parametrize("bad", ["A0", "B1", "D3", "E5", "E9", "F5", "H2", "H5", "I2:2", "G2x", "Q1", "I2"])
def test_unsupported_descriptors(bad):
    with pytest.raises(UnsupportedTypeError):
        CoxeterType.parse(bad)


def test_m_only_for_dihedral():
    with pytest.raises(UnsupportedTypeError):
        CoxeterType("A", 3, 5)


@pytest.mark.parametrize(
    "name,order",
    [
        ("A1", 2),
        ("A2", 6),          # |S_3|
        ("A5", 720),
        ("B2", 8),
        ("B4", 384),
        ("D4", 192),
        ("D5", 1920),
        ("I2:7", 14),
        ("I2:12", 24),
        ("H3", 120),
        ("F4", 1152),       # published normalizer column starts at 1152
    ],
)
def test_group_orders(name, order, ws):
    assert ws.group(name).order == order


def test_generators_are_involutions_and_braid_orders(ws):
    for name in ("A3", "B3", "D4", "H3", "I2:7", "F4"):
        g = ws.group(name)
        for i, s in enumerate(g.generators):
            assert (s * s).index == 0
            for j, t in enumerate(g.generators):
                if i != j:
                    assert element_order(s * t) == g.coxeter_matrix[i][j]


def test_lengths(ws):
    g = ws.group("A2")
    assert g.identity.length == 0
    assert max(w.length for w in g.elements()) == 3
    f = ws.group("F4")
    # longest element inverts every positive root of the constructed system
    assert f.n_positive == 24
    assert int(f.lengths.max()) == 24


def test_length_equals_inversion_count(ws):
    g = ws.group("B3")
    n = g.n_positive
    for w in g.elements():
        assert w.length == int((w.perm[:n] >= n).sum())


def test_length_subadditive_and_inverse_invariant(ws):
    g = ws.group("A3")
    els = list(g.elements())
    for w in els:
        assert w.inverse().length == w.length
        for v in els[:8]:
            assert (w * v).length <= w.length + v.length


def test_each_generator_negates_exactly_one_positive_root(ws):
    for name in ("A3", "B3", "H3", "F4", "I2:7"):
        g = ws.group(name)
        n = g.n_positive
        for s in range(g.rank):
            row = g.gen_perms[s]
            assert int((row[:n] >= n).sum()) == 1
            assert row[g.simple_root_indices[s]] >= n


def test_group_axioms_sample(ws):
    g = ws.group("B3")
    els = [g.element(i) for i in range(0, g.order, 7)]
    e = g.identity
    for w in els:
        assert w * e == w and e * w == w
        assert w * w.inverse() == e
        for v in els[:6]:
            for u in els[:6]:
                assert (w * v) * u == w * (v * u)


def test_cross_group_multiplication_rejected(ws):
    a = ws.group("A2")
    b = ws.group("B2")
    with pytest.raises(GroupMismatchError):
        a.identity * b.identity


def test_coxeter_element(ws):
    a2 = ws.group("A2")
    assert coxeter_element(a2, 0) == a2.identity
    assert element_order(coxeter_element(a2, 0b11)) == 3
    f4 = ws.group("F4")
    c = coxeter_element(f4, 0b1111)
    assert element_order(c) == 12
    # the product really is s0 s1 s2 s3
    g = f4.generators
    assert c == g[0] * g[1] * g[2] * g[3]


def test_element_order_matches_brute_force(ws):
    g = ws.group("B3")
    for i in range(0, g.order, 5):
        w = g.element(i)
        n = 1
        v = w
        while v != g.identity:
            v = v * w
            n += 1
        assert element_order(w) == n


def test_perm_order_helper():
    import numpy as np

    assert perm_order(np.array([1, 0, 3, 2])) == 2
    assert perm_order(np.array([1, 2, 0])) == 3
    assert perm_order(np.arange(5)) == 1


def brute_force_p_regular(group, w, p):
    """The unique power of w that is p-regular while the cofactor has
    p-power order."""
    n = element_order(w)
    for e in range(n):
        cand = w ** e
        m = element_order(cand)
        if m % p == 0:
            continue
        rest = w * cand.inverse()
        k = element_order(rest)
        while k % p == 0:
            k //= p
        if k == 1 and cand * rest == rest * cand:
            return cand
    raise AssertionError("no p-regular part found")


def test_p_regular_part_trivial_cases(ws):
    g = ws.group("A2")
    s = g.generators[0]
    assert p_regular_part(s, 3) == s            # p does not divide |w|
    assert p_regular_part(s, 2) == g.identity   # |w| = 2, p = 2


def test_p_regular_part_order_six():
    g = build_group("I2:6")
    c = coxeter_element(g, 0b11)
    assert element_order(c) == 6
    assert p_regular_part(c, 3) == c ** 3
    assert p_regular_part(c, 2) == c ** 4


@pytest.mark.parametrize("p", [2, 3, 5])
def test_p_regular_part_against_brute_force(p, ws):
    g = ws.group("H3")
    for i in range(g.order):
        w = g.element(i)
        wp = p_regular_part(w, p)
        assert element_order(wp) % p != 0
        rest = w * wp.inverse()
        k = element_order(rest)
        while k % p == 0:
            k //= p
        assert k == 1
        assert wp == brute_force_p_regular(g, w, p)


def test_budget_rejections():
    with pytest.raises(BudgetExceededError):
        build_group("E8")
    with pytest.raises(BudgetExceededError):
        build_group("E7")  # needs the raised budget
    with pytest.raises(BudgetExceededError):
        build_group("A3", budget=10)
    build_group("A3", budget=24)


def test_dihedral_bypass_matches_coordinates():
    # same abstract group data through both construction routes
    for m, name in ((5, "I2:5"), (6, "I2:6")):
        g = build_group(name)
        assert g.order == 2 * m
        assert g.n_positive == m
        assert int(g.lengths.max()) == m
    big = build_group("I2:11")
    assert big.order == 22
    assert big.positive_roots is None  # coordinate-free model
    assert element_order(coxeter_element(big, 0b11)) == 11


def test_crystallographic_roots_are_rational(ws):
    f4 = ws.group("F4")
    assert all(x.b == 0 for root in f4.positive_roots for x in root)
    h3 = ws.group("H3")
    assert any(x.b != 0 for root in h3.positive_roots for x in root)


def test_words_are_reduced(ws):
    g = ws.group("B3")
    for i in range(g.order):
        word = g.word_idx(i)
        assert len(word) == g.length_idx(i)
        acc = g.identity
        for s in word:
            acc = acc * g.generators[s]
        assert acc.index == i


def test_order_formula_for_a_family():
    for n in range(1, 5):
        assert build_group("A%d" % n).order == math.factorial(n + 1)
