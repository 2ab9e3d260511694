"""Small exact linear algebra kernel.

Everything here works over exact domains only: fraction-free (Bareiss)
elimination over the integers for ranks of integer matrices, ordinary
Gaussian elimination over Fraction for solving and span tests, and modular
elimination over F_p.  Matrices are lists of lists; nothing is ever
converted to floating point.
"""

from __future__ import annotations

from fractions import Fraction


def rank_int(rows):
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [[int(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, len(m)):
            rv = m[r][col]
            if rv == 0 and prev == 1:
                continue
            for c in range(col, ncols):
                m[r][c] = (pv * m[r][c] - rv * m[rank][c]) // prev
        prev = pv
        rank += 1
    return rank


def rank_mod_p(rows, p):
    """Rank over F_p of a matrix of integers."""
    m = [[int(x) % p for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


class RowSpace(object):
    """Incremental row space over Fraction (characteristic 0) or F_p.

    Rows are kept in echelon form; `contains` tests membership without
    mutating, `add` inserts a new row and reports whether the space grew.
    """

    def __init__(self, p=0):
        self.p = p
        self.rows = []  # list of (pivot_col, row list)

    def _reduce(self, vec):
        if self.p:
            v = [int(x) % self.p for x in vec]
        else:
            v = [Fraction(x) for x in vec]
        for pivot, row in self.rows:
            coef = v[pivot]
            if coef:
                if self.p:
                    v = [(a - coef * b) % self.p for a, b in zip(v, row)]
                else:
                    v = [a - coef * b for a, b in zip(v, row)]
        return v

    def contains(self, vec):
        return not any(self._reduce(vec))

    def add(self, vec):
        v = self._reduce(vec)
        for pivot, x in enumerate(v):
            if x:
                if self.p:
                    inv = pow(int(x), -1, self.p)
                    v = [(a * inv) % self.p for a in v]
                else:
                    v = [a / x for a in v]
                self.rows.append((pivot, v))
                self.rows.sort(key=lambda t: t[0])
                return True
        return False

    @property
    def dimension(self):
        return len(self.rows)


def solve_lower_triangular(matrix, rhs, p=0):
    """Solve L x = rhs for lower triangular L with invertible diagonal.

    Over Fraction when p == 0, otherwise over F_p.  Entries of `matrix` and
    `rhs` are integers or Fractions.
    """
    n = len(matrix)
    xs = []
    for i in range(n):
        acc = rhs[i] if not p else int(rhs[i]) % p
        for j in range(i):
            if p:
                acc = (acc - matrix[i][j] * xs[j]) % p
            else:
                acc = acc - Fraction(matrix[i][j]) * xs[j]
        d = matrix[i][i]
        if p:
            xs.append((acc * pow(int(d) % p, -1, p)) % p)
        else:
            xs.append(Fraction(acc) / Fraction(d))
    return xs
