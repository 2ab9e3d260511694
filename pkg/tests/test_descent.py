import random
from fractions import Fraction

import pytest

from dworkbench.coxeter import coxeter_element
from dworkbench.descent import (
    DescentElement,
    StructureConstants,
    cayley_table,
    group_algebra_descent_product,
    multiply,
    radical_basis_char0,
    radical_basis_mod_p,
    structure_constants,
    theta,
    x_basis,
)
from dworkbench.linalg import RowSpace
from dworkbench.marks import build_marks_table
from dworkbench.modular import modular_index, primes_dividing
from dworkbench.parabolic import (
    all_subsets,
    class_index,
    min_coset_rep_indices,
    parabolic_subgroup,
)


def test_a2_structure_constants_spec_values(ws):
    g = ws.group("A2")
    sc = ws.sc("A2")
    full = 0b11
    # x_S x_K = x_K
    for k in all_subsets(2):
        assert sc.pair(full, k) == {k: 1}
    # x_0 x_0 = |W| x_0
    assert sc.pair(0, 0) == {0: g.order}
    # the square of a singleton: brute-forced expansion in the group algebra
    assert sc.pair(1, 1) == {0: 1, 1: 1}
    assert structure_constants(g, 1, 1) == {0: 1, 1: 1}


@pytest.mark.parametrize("name", ("A2", "A3", "B2", "B3", "I2:5", "I2:8", "H3"))
def test_oracle_agreement(name, ws):
    g = ws.group(name)
    sc = ws.sc(name)
    for j in all_subsets(g.rank):
        for k in all_subsets(g.rank):
            assert sc.pair(j, k) == group_algebra_descent_product(g, j, k), (j, k)


def test_mass_check(ws):
    """sum_L a_JKL |W|/|W_L| = (|W|/|W_J|) (|W|/|W_K|)."""
    g = ws.group("B3")
    sc = ws.sc("B3")
    size = {m: g.order // parabolic_subgroup(g, m).order for m in all_subsets(3)}
    for j in all_subsets(3):
        for k in all_subsets(3):
            lhs = sum(a * size[l] for l, a in sc.pair(j, k).items())
            assert lhs == size[j] * size[k]


def test_support_condition(ws):
    # a_JKL = 0 unless L is contained in K
    g = ws.group("B3")
    sc = ws.sc("B3")
    for j in all_subsets(3):
        for k in all_subsets(3):
            for l in sc.pair(j, k):
                assert l & ~k == 0


def test_x_s_is_identity(ws):
    g = ws.group("B3")
    sc = ws.sc("B3")
    xs = x_basis(g, (1 << g.rank) - 1)
    for mask in all_subsets(g.rank):
        xm = x_basis(g, mask)
        assert multiply(xs, xm, sc).coeffs == xm.coeffs
        assert multiply(xm, xs, sc).coeffs == xm.coeffs


def test_associativity_exhaustive_rank3(ws):
    for name in ("A3", "B3"):
        g = ws.group(name)
        sc = ws.sc(name)
        xs = [x_basis(g, m) for m in all_subsets(3)]
        for a in xs:
            for b in xs:
                ab = multiply(a, b, sc)
                for c in xs:
                    assert multiply(ab, c, sc).coeffs == multiply(
                        a, multiply(b, c, sc), sc
                    ).coeffs


def test_associativity_random_rank4(ws):
    g = ws.group("B4")
    sc = ws.sc("B4")
    rng = random.Random(7)
    masks = all_subsets(4)
    for _ in range(40):
        a = x_basis(g, rng.choice(masks))
        b = x_basis(g, rng.choice(masks))
        c = x_basis(g, rng.choice(masks))
        assert multiply(multiply(a, b, sc), c, sc).coeffs == multiply(
            a, multiply(b, c, sc), sc
        ).coeffs


def test_theta_values(ws):
    g = ws.group("A3")
    sc = ws.sc("A3")
    m = ws.marks("A3")
    e = class_index(g)
    r = len(e)
    full = (1 << g.rank) - 1
    assert theta(x_basis(g, full), m) == tuple([1] * r)
    for j, cls in enumerate(e):
        assert theta(x_basis(g, cls.representative), m) == tuple(m.matrix[j])
    # multiplicativity on all basis pairs
    for jm in all_subsets(3):
        for km in all_subsets(3):
            lhs = theta(multiply(x_basis(g, jm), x_basis(g, km), sc), m)
            a = theta(x_basis(g, jm), m)
            b = theta(x_basis(g, km), m)
            assert lhs == tuple(x * y for x, y in zip(a, b))


def test_radical_char0(ws):
    g = ws.group("A2")
    basis = radical_basis_char0(g)
    assert basis.dimension == 1
    (vec,) = basis.elements
    assert vec.coeffs == (0, Fraction(-1), Fraction(1), 0) or vec.coeffs == (
        0,
        Fraction(1),
        Fraction(-1),
        0,
    )
    f4 = ws.group("F4")
    assert radical_basis_char0(f4).dimension == 2 ** 4 - 12
    # theta kills the radical exactly
    m = ws.marks("F4")
    for el in radical_basis_char0(f4).elements:
        assert all(v == 0 for v in theta(el, m))


def test_radical_mod_p_dimensions(ws):
    f4 = ws.group("F4")
    mf = ws.marks("F4")
    assert radical_basis_mod_p(f4, 2).dimension == 15  # s = 1
    assert len(modular_index(mf, 2)) == 1
    a2 = ws.group("A2")
    assert radical_basis_mod_p(a2, 3).dimension == 2
    h3 = ws.group("H3")
    mh = ws.marks("H3")
    assert len(modular_index(mh, 5)) == 5
    assert radical_basis_mod_p(h3, 5).dimension == 2 ** 3 - 5


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_a2_difference_squares_to_zero(p, ws):
    g = ws.group("A2")
    sc = ws.sc("A2")
    d = x_basis(g, 1, p) - x_basis(g, 2, p)
    assert multiply(d, d, sc).is_zero()


def test_radical_linear_independence(ws):
    for name in ("A3", "B3", "H3"):
        g = ws.group(name)
        for p in (0,) + tuple(primes_dividing(g.order)):
            basis = (
                radical_basis_char0(g) if p == 0 else radical_basis_mod_p(g, p)
            )
            space = RowSpace(p)
            for el in basis.elements:
                assert space.add(el.coeffs)
            assert space.dimension == basis.dimension


def test_char0_radical_is_nilpotent_ideal(ws):
    from dworkbench.verify import radical_power_dimensions, spans_ideal

    for name in ("A3", "B3", "I2:5"):
        g = ws.group(name)
        sc = ws.sc(name)
        basis = radical_basis_char0(g)
        dims = radical_power_dimensions(g, sc, basis, g.rank + 2)
        assert dims[-1] == 0 and len(dims) <= g.rank + 1
        assert spans_ideal(g, sc, basis)


def test_marks_columns_are_homomorphisms(ws):
    # lambda_K(x_I x_J) = lambda_K(x_I) lambda_K(x_J) on every basis pair
    for name in ("B3", "F4"):
        g = ws.group(name)
        sc = ws.sc(name)
        m = ws.marks(name)
        for jm in all_subsets(g.rank):
            a = theta(x_basis(g, jm), m)
            for km in all_subsets(g.rank):
                b = theta(x_basis(g, km), m)
                lhs = theta(multiply(x_basis(g, jm), x_basis(g, km), sc), m)
                assert lhs == tuple(x * y for x, y in zip(a, b))


def test_domain_mismatch_rejected(ws):
    g = ws.group("A2")
    with pytest.raises(ValueError):
        x_basis(g, 1, 2) + x_basis(g, 1, 3)
    with pytest.raises(ValueError):
        x_basis(g, 1) + x_basis(g, 1, 2)


def test_reduce_mod(ws):
    g = ws.group("A2")
    el = x_basis(g, 1).scaled(Fraction(3, 5)) - x_basis(g, 2).scaled(2)
    red = el.reduce_mod(7)
    assert red.characteristic == 7
    assert red.coeffs[1] == (3 * pow(5, -1, 7)) % 7
    assert red.coeffs[2] == 5
    with pytest.raises(ValueError):
        el.reduce_mod(5)


def test_cayley_table_small(ws):
    g = ws.group("A2")
    t = cayley_table(g)
    for i in range(g.order):
        for j in range(g.order):
            assert t[i][j] == g.multiply_idx(i, j)


def test_cayley_table_rejects_large():
    from dworkbench import build_group

    g = build_group("H4")
    with pytest.raises(ValueError):
        cayley_table(g)
