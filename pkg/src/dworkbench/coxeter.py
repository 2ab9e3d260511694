"""Finite Coxeter groups as exact permutation groups on their root systems.

A group is built from its type descriptor in three steps: write down the
Cartan-style matrix of the type, close the simple roots under the simple
reflections to get the full root system (coordinates live in Q(sqrt 5), with
irrational part zero for the crystallographic types), then enumerate the
group breadth-first as permutations of the 2N root indices.  Dihedral types
I2(m) with m outside {3,4,5,6} skip coordinates entirely and use the exact
permutation model of the m-gon's 2m boundary points.

Every element is a row of one shared (|W| x 2N) integer matrix; index i < N
is the i-th positive root and i + N its negative, so lengths, descents and
conjugation are plain array operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sqrt5 import Sqrt5, PHI

ZERO = Sqrt5(0)
ONE = Sqrt5(1)

DEFAULT_BUDGET = 10 ** 6


class UnsupportedTypeError(ValueError):
    """Descriptor does not name a supported finite Coxeter type."""


class BudgetExceededError(RuntimeError):
    """Group order exceeds the configured element budget."""


class GroupMismatchError(ValueError):
    """Operands belong to different groups."""


# ---------------------------------------------------------------------------
# type descriptors
# ---------------------------------------------------------------------------

_E_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}
_E_NPOS = {6: 36, 7: 63, 8: 120}


@dataclass(frozen=True)
class CoxeterType:
    """Descriptor of a finite Coxeter type: family, rank and (for I2) m."""

    family: str
    rank: int
    m: int | None = None

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = (
            (f == "A" and n >= 1)
            or (f == "B" and n >= 2)
            or (f == "D" and n >= 4)
            or (f == "E" and n in (6, 7, 8))
            or (f == "F" and n == 4)
            or (f == "H" and n in (3, 4))
            or (f == "I" and n == 2 and self.m is not None and self.m >= 3)
        )
        if not ok:
            raise UnsupportedTypeError("unsupported Coxeter type %r" % (self.label(),))
        if f != "I" and self.m is not None:
            raise UnsupportedTypeError("m parameter only valid for I2(m)")

    @staticmethod
    def parse(text):
        """Parse descriptors like 'A4', 'B3', 'I2:7' or 'I2(7)'."""
        s = text.strip().upper()
        if s.startswith("I2"):
            rest = s[2:].lstrip(":(").rstrip(")")
            if not rest.isdigit():
                raise UnsupportedTypeError("cannot parse dihedral descriptor %r" % text)
            return CoxeterType("I", 2, int(rest))
        if len(s) >= 2 and s[0].isalpha() and s[1:].isdigit():
            return CoxeterType(s[0], int(s[1:]))
        raise UnsupportedTypeError("cannot parse type descriptor %r" % text)

    def label(self):
        if self.family == "I":
            return "I2(%d)" % (self.m,)
        return "%s%d" % (self.family, self.rank)

    def order(self):
        f, n = self.family, self.rank
        if f == "A":
            return math.factorial(n + 1)
        if f == "B":
            return (2 ** n) * math.factorial(n)
        if f == "D":
            return (2 ** (n - 1)) * math.factorial(n)
        if f == "E":
            return _E_ORDERS[n]
        if f == "F":
            return 1152
        if f == "H":
            return 120 if n == 3 else 14400
        return 2 * self.m

    def n_positive_roots(self):
        f, n = self.family, self.rank
        if f == "A":
            return n * (n + 1) // 2
        if f == "B":
            return n * n
        if f == "D":
            return n * (n - 1)
        if f == "E":
            return _E_NPOS[n]
        if f == "F":
            return 24
        if f == "H":
            return 15 if n == 3 else 60
        return self.m

    def coxeter_matrix(self):
        """Symmetric matrix of orders m(s_i, s_j), with 1 on the diagonal."""
        n = self.rank
        m = [[2] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = 1

        def bond(i, j, val=3):
            m[i][j] = m[j][i] = val

        f = self.family
        if f in ("A", "B", "F", "H"):
            for i in range(n - 1):
                bond(i, i + 1)
            if f == "B":
                bond(0, 1, 4)
            if f == "F":
                bond(1, 2, 4)
            if f == "H":
                bond(0, 1, 5)
        elif f == "D":
            bond(0, 2)
            for i in range(1, n - 1):
                bond(i, i + 1)
        elif f == "E":
            bond(0, 2)
            bond(1, 3)
            for i in range(2, n - 1):
                bond(i, i + 1)
        else:  # I2(m)
            bond(0, 1, self.m)
        return tuple(tuple(row) for row in m)

    def cartan_matrix(self):
        """Exact Cartan-style matrix over Q(sqrt 5), or None for the
        coordinate-free dihedral construction (I2(m), m not in {3,4,5,6})."""
        f = self.family
        if f == "I" and self.m not in (3, 4, 5, 6):
            return None
        n = self.rank
        cartan = [[ZERO] * n for _ in range(n)]
        cox = self.coxeter_matrix()
        for i in range(n):
            cartan[i][i] = Sqrt5(2)
        for i in range(n):
            for j in range(n):
                if i == j or cox[i][j] == 2:
                    continue
                order = cox[i][j]
                if order == 3:
                    cartan[i][j] = Sqrt5(-1)
                elif order == 5:
                    cartan[i][j] = -PHI
                elif order in (4, 6):
                    # asymmetric pair (-1, -k); put -k on the row of the
                    # lower-numbered node
                    k = 2 if order == 4 else 3
                    cartan[i][j] = Sqrt5(-k) if i < j else Sqrt5(-1)
                else:  # pragma: no cover - excluded by construction
                    raise UnsupportedTypeError("no exact Cartan entry for m=%d" % order)
        return tuple(tuple(row) for row in cartan)


# ---------------------------------------------------------------------------
# root systems
# ---------------------------------------------------------------------------

def _reflect(cartan, i, v):
    """Image of root v (coordinates in the simple basis) under s_i."""
    c = ZERO
    for j, vj in enumerate(v):
        if not vj.is_zero():
            c = c + cartan[i][j] * vj
    out = list(v)
    out[i] = v[i] - c
    return tuple(out)


def _root_sign(v):
    """+1 for a positive root, -1 for a negative one."""
    pos = neg = False
    for x in v:
        s = x.sign()
        if s > 0:
            pos = True
        elif s < 0:
            neg = True
    if pos and neg:
        raise AssertionError("root with mixed-sign coordinates")
    return -1 if neg else 1


def _build_root_system(cartan, rank):
    """All positive roots (simples first) and the generator permutations of
    the full set of 2N root indices."""
    simples = [tuple(ONE if j == i else ZERO for j in range(rank)) for i in range(rank)]
    index = {v: i for i, v in enumerate(simples)}
    roots = list(simples)
    head = 0
    while head < len(roots):
        v = roots[head]
        head += 1
        for i in range(rank):
            w = _reflect(cartan, i, v)
            if _root_sign(w) < 0:
                w = tuple(-x for x in w)
            if w not in index:
                index[w] = len(roots)
                roots.append(w)
    npos = len(roots)
    dtype = np.int8 if 2 * npos <= 127 else np.int16
    gens = np.empty((rank, 2 * npos), dtype=dtype)
    for i in range(rank):
        for k, v in enumerate(roots):
            w = _reflect(cartan, i, v)
            if _root_sign(w) < 0:
                gens[i][k] = npos + index[tuple(-x for x in w)]
            else:
                gens[i][k] = index[w]
        # negatives mirror the positives; widen before the shift to keep the
        # arithmetic out of the storage dtype
        half = gens[i][:npos].astype(np.int32)
        gens[i][npos:] = ((half + npos) % (2 * npos)).astype(dtype)
    return tuple(roots), gens


def _dihedral_generators(m):
    """Permutation model of I2(m) on the 2m boundary points of the m-gon.

    Point k sits at angle pi*k/m; indices 0..m-1 are the positive roots and
    k+m is the negative of k.  The two simple reflections fix points 0 and
    m-1 respectively.
    """
    n2 = 2 * m
    dtype = np.int8 if n2 <= 127 else np.int16
    k = np.arange(n2)
    s0 = ((m - k) % n2).astype(dtype)
    s1 = ((3 * m - 2 - k) % n2).astype(dtype)
    return np.stack([s0, s1])


# ---------------------------------------------------------------------------
# permutation helpers
# ---------------------------------------------------------------------------

def perm_order(row):
    """Multiplicative order of a permutation row (lcm of cycle lengths)."""
    n = len(row)
    seen = np.zeros(n, dtype=bool)
    out = 1
    for start in range(n):
        if seen[start]:
            continue
        ln = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = int(row[j])
            ln += 1
        out = out * ln // math.gcd(out, ln)
    return out


def perm_power(row, e):
    """e-th power of a permutation row, by binary powering."""
    result = np.arange(len(row), dtype=row.dtype)
    base = row
    while e:
        if e & 1:
            result = base[result]
        base = base[base]
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# the group
# ---------------------------------------------------------------------------

class CoxeterGroup(object):
    """A fully enumerated finite Coxeter group.

    Immutable after construction; all arrays may be shared freely between
    readers.  Heavy algorithms work on element *indices* into the BFS-ordered
    element list (index 0 is the identity, indices are graded by length).
    """

    def __init__(self, descriptor, budget=DEFAULT_BUDGET):
        if not isinstance(descriptor, CoxeterType):
            descriptor = CoxeterType.parse(descriptor)
        self.descriptor = descriptor
        self.rank = descriptor.rank
        self.coxeter_matrix = descriptor.coxeter_matrix()
        self.order = descriptor.order()
        if budget is not None and self.order > budget:
            raise BudgetExceededError(
                "group %s has order %d, above the element budget %d"
                % (descriptor.label(), self.order, budget)
            )

        cartan = descriptor.cartan_matrix()
        if cartan is None:
            self.positive_roots = None
            self.gen_perms = _dihedral_generators(descriptor.m)
            self.n_positive = descriptor.m
            self.simple_root_indices = (0, descriptor.m - 1)
        else:
            roots, gens = _build_root_system(cartan, self.rank)
            self.positive_roots = roots
            self.gen_perms = gens
            self.n_positive = len(roots)
            self.simple_root_indices = tuple(range(self.rank))
        if self.n_positive != descriptor.n_positive_roots():
            raise AssertionError(
                "root closure of %s gave %d positive roots"
                % (descriptor.label(), self.n_positive)
            )
        self._check_coxeter_relations()
        self._enumerate()
        self._conjugacy = None
        self._class_index = None
        self._cayley = None
        self._ascent_masks = None

    # -- construction --------------------------------------------------

    def _check_coxeter_relations(self):
        for i in range(self.rank):
            pi = self.gen_perms[i]
            if perm_order(pi) != 2:
                raise AssertionError("generator %d is not an involution" % i)
            for j in range(i + 1, self.rank):
                prod = pi[self.gen_perms[j]]
                if perm_order(prod) != self.coxeter_matrix[i][j]:
                    raise AssertionError(
                        "braid relation (%d,%d) violated: order %d != %d"
                        % (i, j, perm_order(prod), self.coxeter_matrix[i][j])
                    )

    def _enumerate(self):
        n2 = 2 * self.n_positive
        dtype = self.gen_perms.dtype
        order = self.order
        perms = np.empty((order, n2), dtype=dtype)
        parent = np.empty(order, dtype=np.int32)
        genletter = np.empty(order, dtype=np.int8)
        lengths = np.empty(order, dtype=np.int16)
        perms[0] = np.arange(n2, dtype=dtype)
        parent[0] = -1
        genletter[0] = -1
        lengths[0] = 0
        index = {perms[0].tobytes(): 0}
        count = 1
        head = 0
        while head < count:
            w = perms[head]
            lw = lengths[head]
            for s in range(self.rank):
                u = self.gen_perms[s][w]
                key = u.tobytes()
                if key not in index:
                    if count >= order:
                        raise AssertionError("enumeration exceeded the type order")
                    index[key] = count
                    perms[count] = u
                    parent[count] = head
                    genletter[count] = s
                    lengths[count] = lw + 1
                    count += 1
            head += 1
        if count != order:
            raise AssertionError(
                "enumerated %d elements for %s, expected %d"
                % (count, self.descriptor.label(), order)
            )
        self.perms = perms
        self.perms.setflags(write=False)
        self._parent = parent
        self._genletter = genletter
        self.lengths = lengths
        self._index = index
        # length must equal the number of positive roots sent negative
        neg = (perms[:, : self.n_positive] >= self.n_positive).sum(axis=1)
        if not np.array_equal(neg, lengths):
            raise AssertionError("BFS level disagrees with inversion count")
        # invert in chunks: a full argsort of the table would allocate an
        # int64 array of the same shape
        self.inverse_index = np.empty(order, dtype=np.int32)
        chunk = 65536
        for start in range(0, order, chunk):
            block = perms[start : start + chunk]
            inv_rows = np.argsort(block, axis=1).astype(dtype)
            for offset, row in enumerate(inv_rows):
                self.inverse_index[start + offset] = index[row.tobytes()]

    # -- elementary index operations ------------------------------------

    def index_of_perm(self, row):
        return self._index[np.ascontiguousarray(row, dtype=self.perms.dtype).tobytes()]

    def multiply_idx(self, i, j):
        return self.index_of_perm(self.perms[i][self.perms[j]])

    def inverse_idx(self, i):
        return int(self.inverse_index[i])

    def length_idx(self, i):
        return int(self.lengths[i])

    def order_idx(self, i):
        return perm_order(self.perms[i])

    def power_idx(self, i, e):
        e %= self.order_idx(i)
        return self.index_of_perm(perm_power(self.perms[i], e))

    def word_idx(self, i):
        """A reduced word (generator indices, leftmost first) for element i."""
        out = []
        while i != 0:
            out.append(int(self._genletter[i]))
            i = int(self._parent[i])
        return tuple(out)

    def generator_index(self, s):
        return self.index_of_perm(self.gen_perms[s])

    def coxeter_element_idx(self, mask):
        row = np.arange(2 * self.n_positive, dtype=self.perms.dtype)
        for s in range(self.rank - 1, -1, -1):
            if mask >> s & 1:
                row = self.gen_perms[s][row]
        return self.index_of_perm(row)

    def ascent_mask_array(self):
        """For every element, the bitmask of generators s with
        length(w s) > length(w); cached."""
        if self._ascent_masks is None:
            arr = np.zeros(self.order, dtype=np.int64)
            for s, r in enumerate(self.simple_root_indices):
                arr |= (self.perms[:, r] < self.n_positive).astype(np.int64) << s
            arr.setflags(write=False)
            self._ascent_masks = arr
        return self._ascent_masks

    def descent_free_mask(self, i):
        """Bitmask of generators s with length(w s) > length(w)."""
        return int(self.ascent_mask_array()[i])

    # -- conjugacy -------------------------------------------------------

    def conjugacy_classes(self):
        """(class_id array, tuple of representative indices); cached."""
        if self._conjugacy is None:
            class_id = np.full(self.order, -1, dtype=np.int32)
            reps = []
            for start in range(self.order):
                if class_id[start] >= 0:
                    continue
                cid = len(reps)
                reps.append(start)
                class_id[start] = cid
                frontier = [start]
                while frontier:
                    nxt = []
                    for j in frontier:
                        rw = self.perms[j]
                        for s in range(self.rank):
                            rs = self.gen_perms[s]
                            u = rs[rw[rs]]
                            k = self._index[u.tobytes()]
                            if class_id[k] < 0:
                                class_id[k] = cid
                                nxt.append(k)
                    frontier = nxt
            self._conjugacy = (class_id, tuple(reps))
        return self._conjugacy

    def are_conjugate_idx(self, i, j):
        class_id, _ = self.conjugacy_classes()
        return class_id[i] == class_id[j]

    # -- elements ---------------------------------------------------------

    def element(self, i):
        return GroupElement(self, int(i))

    @property
    def identity(self):
        return self.element(0)

    @property
    def generators(self):
        return [self.element(self.generator_index(s)) for s in range(self.rank)]

    def elements(self):
        return (self.element(i) for i in range(self.order))

    def __len__(self):
        return self.order

    def __repr__(self):
        return "CoxeterGroup(%s, order=%d)" % (self.descriptor.label(), self.order)


class GroupElement(object):
    """A group element: a reference into the group's permutation table."""

    __slots__ = ("group", "index")

    def __init__(self, group, index):
        self.group = group
        self.index = index

    @property
    def perm(self):
        return self.group.perms[self.index]

    @property
    def length(self):
        return self.group.length_idx(self.index)

    def order(self):
        return self.group.order_idx(self.index)

    def inverse(self):
        return GroupElement(self.group, self.group.inverse_idx(self.index))

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group is not self.group:
            raise GroupMismatchError("elements belong to different groups")
        return GroupElement(self.group, self.group.multiply_idx(self.index, other.index))

    def __pow__(self, e):
        return GroupElement(self.group, self.group.power_idx(self.index, e))

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and other.group is self.group
            and other.index == self.index
        )

    def __hash__(self):
        return hash((id(self.group), self.index))

    def word(self):
        return self.group.word_idx(self.index)

    def __repr__(self):
        w = "*".join("s%d" % s for s in self.word()) or "e"
        return "<%s in %s>" % (w, self.group.descriptor.label())


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def build_group(descriptor, budget=DEFAULT_BUDGET):
    """Construct and fully enumerate the group of the given type."""
    return CoxeterGroup(descriptor, budget=budget)


def multiply(w, v):
    return w * v


def inverse(w):
    return w.inverse()


def length(w):
    return w.length


def element_order(w):
    return w.order()


def coxeter_element(group, mask):
    """Product of the generators in the subset, in ascending index order."""
    return group.element(group.coxeter_element_idx(mask))


def p_regular_part(w, p):
    """The p-regular part of w: the power of w of order coprime to p whose
    complementary factor has p-power order."""
    if p < 2:
        raise ValueError("p must be a prime")
    n = w.order()
    pa = 1
    m = n
    while m % p == 0:
        m //= p
        pa *= p
    if pa == 1:
        return w
    t = pow(pa, -1, m) if m > 1 else 0
    return w ** ((pa * t) % n if m > 1 else 0)
