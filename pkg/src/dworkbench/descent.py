"""Solomon's descent algebra and its p-modular reduction.

The algebra Sigma_W lives on the basis {x_K : K subseteq S} with x_K the sum
of the minimal coset representatives X_K; the integer structure constants
a_JKL count distinguished double coset representatives g with
g^{-1} J g n K = L.  Reducing the constants mod p gives Sigma(W, p).

Elements are coefficient vectors over the 2^|S| basis; characteristic 0
coefficients are Fractions, characteristic p coefficients are ints in
[0, p).  A brute-force group algebra oracle (literally multiplying coset
sums inside the group algebra and re-expressing the product in the x-basis)
is provided for cross-checking on groups of order at most 5000.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .parabolic import (
    class_index,
    conjugation_masks,
    double_coset_rep_indices,
    mask_bits,
    mask_of,
    min_coset_rep_indices,
)

ORACLE_MAX_ORDER = 5000


class StructureConstants(object):
    """Lazy table of Solomon structure constants for one group.

    pair(J, K) returns the sparse map {L: a_JKL}; computed pairs are cached.
    """

    def __init__(self, group):
        self.group = group
        self._table = {}

    def pair(self, jmask, kmask):
        jmask = mask_of(self.group, jmask)
        kmask = mask_of(self.group, kmask)
        key = (jmask, kmask)
        if key not in self._table:
            reps = double_coset_rep_indices(self.group, jmask, kmask)
            if kmask == 0:
                sparse = {0: len(reps)}
            else:
                lmasks = conjugation_masks(self.group, reps, jmask, kmask)
                counts = np.bincount(lmasks, minlength=1)
                sparse = {int(l): int(c) for l, c in enumerate(counts) if c}
            self._table[key] = sparse
        return self._table[key]

    def fill(self):
        """Compute every (J, K) pair; needed before serialization."""
        n = 1 << self.group.rank
        for j in range(n):
            for k in range(n):
                self.pair(j, k)
        return self

    def known_pairs(self):
        return dict(self._table)


def structure_constants(group, jmask, kmask, sc=None):
    """The sparse map L -> a_JKL for one pair of subsets."""
    sc = sc if sc is not None else StructureConstants(group)
    return dict(sc.pair(jmask, kmask))


# ---------------------------------------------------------------------------
# algebra elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DescentElement:
    """Coefficient vector on the x-basis, tagged with its characteristic.

    characteristic 0: Fraction coefficients; characteristic p: ints mod p.
    """

    group: object
    coeffs: tuple
    characteristic: int = 0

    def __post_init__(self):
        if len(self.coeffs) != 1 << self.group.rank:
            raise ValueError("coefficient vector has wrong length")

    def _wrap(self, coeffs):
        return DescentElement(self.group, tuple(coeffs), self.characteristic)

    def _check(self, other):
        if other.group is not self.group or other.characteristic != self.characteristic:
            raise ValueError("operands live in different algebras")

    def __add__(self, other):
        self._check(other)
        p = self.characteristic
        if p:
            return self._wrap((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        return self._wrap(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        p = self.characteristic
        if p:
            return self._wrap((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        return self._wrap(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        p = self.characteristic
        if p:
            return self._wrap((-a) % p for a in self.coeffs)
        return self._wrap(-a for a in self.coeffs)

    def scaled(self, c):
        p = self.characteristic
        if p:
            return self._wrap((a * c) % p for a in self.coeffs)
        return self._wrap(a * Fraction(c) for a in self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def reduce_mod(self, p):
        if self.characteristic:
            raise ValueError("already modular")
        out = []
        for a in self.coeffs:
            f = Fraction(a)
            if f.denominator % p == 0:
                raise ValueError("denominator not invertible mod %d" % p)
            out.append(f.numerator * pow(f.denominator, -1, p) % p)
        return DescentElement(self.group, tuple(out), p)

    def support(self):
        return [m for m, c in enumerate(self.coeffs) if c]


def x_basis(group, mask, p=0):
    """The basis element x_K (or its image mod p)."""
    mask = mask_of(group, mask)
    coeffs = [0] * (1 << group.rank)
    coeffs[mask] = 1 if p else Fraction(1)
    return DescentElement(group, tuple(coeffs), p)


def zero_element(group, p=0):
    return DescentElement(group, tuple([0] * (1 << group.rank)), p)


def multiply(a, b, sc):
    """Product in Sigma_W (or Sigma(W, p)) via the structure constants."""
    a._check(b)
    p = a.characteristic
    n = 1 << a.group.rank
    out = [0] * n
    for j, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for k, cb in enumerate(b.coeffs):
            if not cb:
                continue
            cab = ca * cb
            for l, c in sc.pair(j, k).items():
                out[l] += cab * c
    if p:
        out = [c % p for c in out]
    else:
        out = [Fraction(c) for c in out]
    return DescentElement(a.group, tuple(out), p)


def theta(x, marks):
    """The character vector (lambda_K(x))_{K in E}.

    lambda_K(x_J) is the K-entry of row class(J) of the parabolic table of
    marks; theta is the algebra map onto the character ring.  Values are
    reduced mod p for modular elements.
    """
    e = class_index(x.group)
    r = len(e)
    out = [0] * r
    for mask, c in enumerate(x.coeffs):
        if not c:
            continue
        row = marks.matrix[e.position_of(mask)]
        for k in range(r):
            out[k] += c * row[k]
    if x.characteristic:
        return tuple(int(v) % x.characteristic for v in out)
    return tuple(out)


# ---------------------------------------------------------------------------
# radical bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RadicalBasis:
    elements: tuple
    characteristic: int
    dimension: int


def radical_basis_char0(group):
    """Basis {x_J - x_rep(J)} of rad Sigma_W over the non-representative
    subsets; dimension 2^|S| - r."""
    e = class_index(group)
    basis = []
    for cls in e:
        for member in cls.members:
            if member != cls.representative:
                basis.append(x_basis(group, member) - x_basis(group, cls.representative))
    return RadicalBasis(tuple(basis), 0, len(basis))


def radical_basis_mod_p(group, p):
    """Basis of rad Sigma(W, p): the conjugacy differences together with the
    x_J whose class has p | [N_W(W_J) : W_J]; dimension 2^|S| - s."""
    e = class_index(group)
    basis = []
    for cls in e:
        for member in cls.members:
            if member != cls.representative:
                basis.append(
                    x_basis(group, member, p) - x_basis(group, cls.representative, p)
                )
        if cls.normalizer_index % p == 0:
            basis.append(x_basis(group, cls.representative, p))
    return RadicalBasis(tuple(basis), p, len(basis))


# ---------------------------------------------------------------------------
# brute-force group algebra oracle
# ---------------------------------------------------------------------------

def cayley_table(group):
    """Full multiplication table on element indices; only for small groups."""
    if group.order > ORACLE_MAX_ORDER:
        raise ValueError("Cayley table restricted to order <= %d" % ORACLE_MAX_ORDER)
    if group._cayley is not None:
        return group._cayley
    order = group.order
    table = np.empty((order, order), dtype=np.int32)
    table[0] = np.arange(order, dtype=np.int32)
    gen_rows = {}
    for s in range(group.rank):
        moved = group.gen_perms[s][group.perms]
        gen_rows[s] = np.fromiter(
            (group._index[row.tobytes()] for row in moved), dtype=np.int32, count=order
        )
    # BFS order guarantees the parent's row exists before the child needs it
    for i in range(1, order):
        s = int(group._genletter[i])
        u = int(group._parent[i])
        table[i] = gen_rows[s][table[u]]
    group._cayley = table
    return table


def group_algebra_descent_product(group, jmask, kmask):
    """x_J * x_K computed literally in the group algebra and re-expressed in
    the x-basis.

    The product vector must be constant on descent classes; the x-basis
    coefficients then come out by inclusion-exclusion over ascent sets.
    """
    jmask = mask_of(group, jmask)
    kmask = mask_of(group, kmask)
    table = cayley_table(group)
    xj = min_coset_rep_indices(group, jmask)
    xk = min_coset_rep_indices(group, kmask)
    counts = np.bincount(
        table[np.ix_(xj, xk)].ravel(), minlength=group.order
    ).astype(np.int64)

    nsub = 1 << group.rank
    ascents = group.ascent_mask_array()
    value = [0] * nsub
    for d in range(nsub):
        vals = counts[ascents == d]
        if len(vals) == 0:
            raise AssertionError("ascent class %d is empty" % d)
        if (vals != vals[0]).any():
            raise AssertionError(
                "group algebra product is not constant on the descent class "
                "of mask %d" % d
            )
        value[d] = int(vals[0])
    coeffs = [0] * nsub
    for d in sorted(range(nsub), key=lambda m: (m.bit_count(), m)):
        acc = value[d]
        sub = (d - 1) & d
        while sub != d:
            acc -= coeffs[sub]
            if sub == 0:
                break
            sub = (sub - 1) & d
        coeffs[d] = acc
    return {m: c for m, c in enumerate(coeffs) if c}
