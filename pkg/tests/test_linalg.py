from fractions import Fraction

from dworkbench.linalg import RowSpace, rank_int, rank_mod_p, solve_lower_triangular


def test_rank_int():
    assert rank_int([[1, 2], [2, 4]]) == 1
    assert rank_int([[1, 2], [3, 4]]) == 2
    assert rank_int([[0, 0], [0, 0]]) == 0
    assert rank_int([]) == 0
    # needs exact arithmetic: ill-conditioned integer matrix
    m = [[10 ** 12, 10 ** 12 - 1], [10 ** 12 + 1, 10 ** 12]]
    assert rank_int(m) == 2
    assert rank_int([[2, 4, 6], [1, 2, 3], [3, 6, 9]]) == 1


def test_rank_mod_p():
    m = [[2, 4], [1, 3]]
    assert rank_mod_p(m, 2) == 1  # reduces to [[0,0],[1,1]]
    assert rank_mod_p(m, 3) == 2
    assert rank_mod_p([[6, 3], [4, 2]], 3) == 1
    assert rank_mod_p([[0]], 5) == 0


def test_rowspace_rational():
    s = RowSpace()
    assert s.add([1, 2, 3])
    assert not s.add([2, 4, 6])
    assert s.contains([Fraction(1, 2), 1, Fraction(3, 2)])
    assert not s.contains([1, 0, 0])
    assert s.add([0, 1, 0])
    assert s.dimension == 2


def test_rowspace_mod_p():
    s = RowSpace(5)
    assert s.add([1, 2])
    assert not s.add([3, 6])
    assert s.add([0, 1])
    assert s.dimension == 2
    assert s.contains([4, 3])


def test_solve_lower_triangular_rational():
    m = [[2, 0], [3, 4]]
    x = solve_lower_triangular(m, [1, 2])
    assert x == [Fraction(1, 2), Fraction(1, 8)]
    # check by substitution
    assert m[0][0] * x[0] == 1
    assert m[1][0] * x[0] + m[1][1] * x[1] == 2


def test_solve_lower_triangular_mod_p():
    m = [[2, 0], [3, 4]]
    x = solve_lower_triangular(m, [1, 2], p=7)
    assert (2 * x[0]) % 7 == 1
    assert (3 * x[0] + 4 * x[1]) % 7 == 2
