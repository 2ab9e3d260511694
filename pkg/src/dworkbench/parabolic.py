"""Parabolic subgroups, minimal coset representatives and subset conjugacy.

Subsets of the generating set S are plain Python ints used as bitmasks; bit s
set means generator s belongs to the subset.  The canonical ordering of
subsets (and of their conjugacy classes, the index set E) is by popcount and
then by mask value, which makes the parabolic table of marks lower
triangular.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coxeter import CoxeterGroup


def mask_of(group, subset):
    """Normalize a subset argument (mask int or iterable of indices)."""
    if isinstance(subset, (int, np.integer)):
        mask = int(subset)
    else:
        mask = 0
        for s in subset:
            mask |= 1 << int(s)
    if mask < 0 or mask >= (1 << group.rank):
        raise ValueError("subset mask %r out of range for rank %d" % (subset, group.rank))
    return mask


def mask_bits(mask):
    """Indices of the set bits, ascending."""
    out = []
    s = 0
    while mask:
        if mask & 1:
            out.append(s)
        mask >>= 1
        s += 1
    return out


def subset_sort_key(mask):
    return (mask.bit_count(), mask)


def all_subsets(rank):
    """All subsets of S in canonical (popcount, value) order."""
    return sorted(range(1 << rank), key=subset_sort_key)


# ---------------------------------------------------------------------------
# coset representatives
# ---------------------------------------------------------------------------

def coset_rep_flags(group, mask):
    """Boolean array over element indices: True iff the element lies in X_K,
    i.e. maps every simple root of K to a positive root."""
    mask = mask_of(group, mask)
    if mask == 0:
        return np.ones(group.order, dtype=bool)
    cols = [group.simple_root_indices[s] for s in mask_bits(mask)]
    return (group.perms[:, cols] < group.n_positive).all(axis=1)


def min_coset_rep_indices(group, mask):
    """Element indices of X_K, ascending (graded by length)."""
    return np.nonzero(coset_rep_flags(group, mask))[0].astype(np.int32)


def min_coset_reps(group, mask):
    """The minimal length representatives of the left cosets of W_K."""
    return [group.element(i) for i in min_coset_rep_indices(group, mask)]


def double_coset_rep_indices(group, jmask, kmask):
    """Indices of X_J^{-1} n X_K, the distinguished (W_J, W_K) double coset
    representatives."""
    jmask = mask_of(group, jmask)
    kmask = mask_of(group, kmask)
    flags = coset_rep_flags(group, kmask) & coset_rep_flags(group, jmask)[group.inverse_index]
    return np.nonzero(flags)[0].astype(np.int32)


def double_coset_reps(group, jmask, kmask):
    return [group.element(i) for i in double_coset_rep_indices(group, jmask, kmask)]


@dataclass(frozen=True)
class ParabolicSubgroup:
    mask: int
    element_indices: tuple
    order: int


def parabolic_subgroup(group, mask):
    """The standard parabolic subgroup generated by the subset."""
    mask = mask_of(group, mask)
    gens = [group.generator_index(s) for s in mask_bits(mask)]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for g in gens:
                j = group.multiply_idx(i, g)
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    elements = tuple(sorted(seen))
    return ParabolicSubgroup(mask, elements, len(elements))


# ---------------------------------------------------------------------------
# conjugation of generator subsets
# ---------------------------------------------------------------------------

def conjugation_masks(group, rep_indices, jmask, kmask):
    """For each g in rep_indices, the mask of {t in K : g t g^{-1} in J}.

    For distinguished double coset representatives this is the subset L with
    g^{-1} W_J g n W_K = W_L, the quantity behind Solomon's structure
    constants and the double-coset count of marks.
    """
    jmask = mask_of(group, jmask)
    kmask = mask_of(group, kmask)
    reps = np.asarray(rep_indices)
    mat_g = group.perms[reps]
    mat_ginv = group.perms[group.inverse_index[reps]]
    lmask = np.zeros(len(reps), dtype=np.int64)
    for t in mask_bits(kmask):
        rt = group.gen_perms[t]
        conj = np.take_along_axis(mat_g, rt[mat_ginv], axis=1)
        hit = np.zeros(len(reps), dtype=bool)
        for s in mask_bits(jmask):
            hit |= (conj == group.gen_perms[s]).all(axis=1)
        lmask |= hit.astype(np.int64) << t
    return lmask


def subsets_conjugate(group, jmask, kmask, brute_force=False):
    """True iff the two subsets of S are conjugate in W.

    The production route searches the distinguished double coset
    representatives for a conjugating element (one always exists there when
    the subsets are conjugate); `brute_force` scans the whole group instead
    and is only sensible for small ranks.
    """
    jmask = mask_of(group, jmask)
    kmask = mask_of(group, kmask)
    if jmask == kmask:
        return True
    if jmask.bit_count() != kmask.bit_count():
        return False
    if brute_force:
        jset = {group.gen_perms[s].tobytes() for s in mask_bits(jmask)}
        kbits = mask_bits(kmask)
        for g in range(group.order):
            mg = group.perms[g]
            mginv = group.perms[group.inverse_index[g]]
            conj = {mg[group.gen_perms[t][mginv]].tobytes() for t in kbits}
            if conj == jset:
                return True
        return False
    if iso_label(group, jmask) != iso_label(group, kmask):
        return False
    reps = double_coset_rep_indices(group, jmask, kmask)
    return bool((conjugation_masks(group, reps, jmask, kmask) == kmask).any())


def normalizer_index(group, jmask):
    """[N_W(W_J) : W_J], computed as the Solomon count a_JJJ."""
    jmask = mask_of(group, jmask)
    reps = double_coset_rep_indices(group, jmask, jmask)
    if jmask == 0:
        return int(len(reps))
    return int((conjugation_masks(group, reps, jmask, jmask) == jmask).sum())


# ---------------------------------------------------------------------------
# isomorphism type labels
# ---------------------------------------------------------------------------

_FAMILY_SORT = {"A": 0, "B": 1, "D": 2, "E": 3, "F": 4, "G": 5, "H": 6, "I": 7}


def _classify_component(nodes, cox):
    k = len(nodes)
    if k == 1:
        return (1, "A", "A1")
    adj = {a: [] for a in nodes}
    orders = {}
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if cox[a][b] > 2:
                adj[a].append(b)
                adj[b].append(a)
                orders[frozenset((a, b))] = cox[a][b]
    degrees = {a: len(adj[a]) for a in nodes}
    branch = [a for a in nodes if degrees[a] == 3]
    if branch:
        if len(branch) != 1 or any(v > 3 for v in orders.values()):
            raise ValueError("unrecognized branched diagram")
        c = branch[0]
        arms = []
        for start in adj[c]:
            ln = 1
            prev, cur = c, start
            while degrees[cur] == 2:
                nxt = [x for x in adj[cur] if x != prev][0]
                prev, cur = cur, nxt
                ln += 1
            arms.append(ln)
        arms.sort()
        if arms[:2] == [1, 1]:
            return (k, "D", "D%d" % k)
        if arms == [1, 2, 2]:
            return (6, "E", "E6")
        if arms == [1, 2, 3]:
            return (7, "E", "E7")
        if arms == [1, 2, 4]:
            return (8, "E", "E8")
        raise ValueError("unrecognized branched diagram with arms %r" % (arms,))
    # a path: walk it from one endpoint
    ends = [a for a in nodes if degrees[a] <= 1]
    cur = min(ends)
    seq = [cur]
    prev = None
    while len(seq) < k:
        nxt = [x for x in adj[cur] if x != prev][0]
        prev, cur = cur, nxt
        seq.append(cur)
    bonds = [orders[frozenset((seq[i], seq[i + 1]))] for i in range(k - 1)]
    if k == 2:
        m = bonds[0]
        name = {3: "A2", 4: "B2", 5: "I2(5)", 6: "G2"}.get(m, "I2(%d)" % m)
        fam = {3: "A", 4: "B", 5: "I", 6: "G"}.get(m, "I")
        return (2, fam, name)
    specials = [(i, b) for i, b in enumerate(bonds) if b != 3]
    if not specials:
        return (k, "A", "A%d" % k)
    if len(specials) == 1:
        i, b = specials[0]
        if b == 4 and i in (0, k - 2):
            if k == 4 and i == 1:
                return (4, "F", "F4")
            return (k, "B", "B%d" % k)
        if b == 4 and k == 4 and i == 1:
            return (4, "F", "F4")
        if b == 5 and (i == 0 or i == k - 2) and k in (3, 4):
            return (k, "H", "H%d" % k)
    raise ValueError("unrecognized linear diagram with bonds %r" % (bonds,))


def iso_label(group, mask):
    """Isomorphism type of the standard parabolic W_K, e.g. 'A2xA1'.

    The empty set is labelled '1'.  Components are sorted by decreasing rank,
    then by family.
    """
    mask = mask_of(group, mask)
    if mask == 0:
        return "1"
    nodes = mask_bits(mask)
    cox = group.coxeter_matrix
    remaining = set(nodes)
    comps = []
    while remaining:
        start = min(remaining)
        comp = {start}
        frontier = [start]
        while frontier:
            a = frontier.pop()
            for b in list(remaining - comp):
                if cox[a][b] > 2:
                    comp.add(b)
                    frontier.append(b)
        remaining -= comp
        comps.append(sorted(comp))
    parts = [_classify_component(c, cox) for c in comps]
    parts.sort(key=lambda t: (-t[0], _FAMILY_SORT.get(t[1], 9), t[2]))
    return "x".join(p[2] for p in parts)


# ---------------------------------------------------------------------------
# the class index E
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubsetClass:
    representative: int
    members: tuple
    normalizer_index: int
    iso_type: str


class ClassIndexE(object):
    """Representatives of the conjugacy classes of subsets of S, in the
    canonical (popcount, mask) order of their minimal members."""

    def __init__(self, classes, position):
        self.classes = tuple(classes)
        self.position = dict(position)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def position_of(self, mask):
        return self.position[mask]

    def representative_masks(self):
        return [c.representative for c in self.classes]


def class_index(group):
    """Partition all subsets of S into conjugacy classes; cached per group."""
    if group._class_index is not None:
        return group._class_index
    reps = []  # list of [repmask, members, label]
    position = {}
    for mask in all_subsets(group.rank):
        label = iso_label(group, mask)
        placed = False
        for pos, entry in enumerate(reps):
            if entry[2] != label:
                continue
            if subsets_conjugate(group, entry[0], mask):
                entry[1].append(mask)
                position[mask] = pos
                placed = True
                break
        if not placed:
            position[mask] = len(reps)
            reps.append([mask, [mask], label])
    classes = [
        SubsetClass(entry[0], tuple(entry[1]), normalizer_index(group, entry[0]), entry[2])
        for entry in reps
    ]
    group._class_index = ClassIndexE(classes, position)
    return group._class_index


# ---------------------------------------------------------------------------
# coset actions
# ---------------------------------------------------------------------------

class CosetAction(object):
    """Action of the generators on the coset space W/W_J via minimal
    representatives.

    For w in X_J and s in S either s*w is again in X_J (the coset moves) or
    s*w = w*t with t in J (the coset is fixed), so one composition plus one
    membership check per pair fills the whole table.  The regular action
    (J empty) is not tabulated: only the identity fixes anything there.
    """

    def __init__(self, group, jmask):
        jmask = mask_of(group, jmask)
        self.group = group
        self.jmask = jmask
        self.regular = jmask == 0
        if self.regular:
            self.size = group.order
            self.sigma = None
            return
        self.rep_indices = min_coset_rep_indices(group, jmask)
        self.size = len(self.rep_indices)
        mat = group.perms[self.rep_indices]
        pos_of = {row.tobytes(): i for i, row in enumerate(mat)}
        npos = group.n_positive
        cols = [group.simple_root_indices[s] for s in mask_bits(jmask)]
        self.sigma = np.empty((group.rank, self.size), dtype=np.int32)
        for s in range(group.rank):
            moved = group.gen_perms[s][mat]
            inside = (moved[:, cols] < npos).all(axis=1)
            tgt = np.arange(self.size, dtype=np.int32)
            for i in np.nonzero(inside)[0]:
                tgt[i] = pos_of[moved[i].tobytes()]
            self.sigma[s] = tgt

    def fixed_flags_of_generator(self, s):
        if self.regular:
            return np.zeros(self.size, dtype=bool)
        return self.sigma[s] == np.arange(self.size)

    def action_of_word(self, word):
        """Coset permutation of the element with the given reduced word."""
        if self.regular:
            raise ValueError("regular action is not tabulated")
        v = np.arange(self.size, dtype=np.int32)
        for s in reversed(word):
            v = self.sigma[s][v]
        return v

    def fixed_flags_of_word(self, word):
        if self.regular:
            idx = 0
            for s in word:
                idx = self.group.multiply_idx(idx, self.group.generator_index(s))
            return np.full(self.size, idx == 0, dtype=bool)
        return self.action_of_word(word) == np.arange(self.size)

    def fixed_count_of_subgroup(self, words):
        """Number of cosets fixed by every generator word in `words`."""
        if self.regular:
            for word in words:
                if not self.fixed_flags_of_word(word).all():
                    return 0
            return self.size
        flags = np.ones(self.size, dtype=bool)
        for word in words:
            flags &= self.fixed_flags_of_word(word)
        return int(flags.sum())


def coset_action(group, jmask):
    """Memoized CosetAction for the subset (cached on the group)."""
    jmask = mask_of(group, jmask)
    cache = getattr(group, "_coset_action_cache", None)
    if cache is None:
        cache = {}
        group._coset_action_cache = cache
    if jmask not in cache:
        cache[jmask] = CosetAction(group, jmask)
    return cache[jmask]


def parabolic_closure_class(group, u, marks):
    """Class position in E of the parabolic closure of u.

    `u` is a GroupElement (read as the cyclic group it generates) or an
    iterable of GroupElements generating a subgroup.  The closure class is
    identified by matching the fixed point fingerprint of u on all W/W_J
    against the columns of the parabolic table of marks.
    """
    if hasattr(u, "word"):
        words = [u.word()]
    else:
        words = [w.word() for w in u]
    e = class_index(group)
    fingerprint = [
        coset_action(group, cls.representative).fixed_count_of_subgroup(words)
        for cls in e
    ]
    matches = [
        k
        for k in range(len(e))
        if all(marks.matrix[j][k] == fingerprint[j] for j in range(len(e)))
    ]
    if len(matches) != 1:
        raise AssertionError(
            "fixed point fingerprint %r matched %d columns" % (fingerprint, len(matches))
        )
    return matches[0]


# ---------------------------------------------------------------------------
# partition labels and normalizer oracles for the classical families
# ---------------------------------------------------------------------------

def _runs(present):
    """Lengths of maximal runs of consecutive True values."""
    out = []
    ln = 0
    for f in present:
        if f:
            ln += 1
        elif ln:
            out.append(ln)
            ln = 0
    if ln:
        out.append(ln)
    return out


def a_type_partition_label(group, mask):
    """Cycle type of a Coxeter element of W_K in A_{n-1} = S_n, as a
    partition of n (fixed points contribute parts 1)."""
    if group.descriptor.family != "A":
        raise ValueError("A-type labels need an A-type group")
    mask = mask_of(group, mask)
    n = group.rank + 1
    parts = [r + 1 for r in _runs([bool(mask >> s & 1) for s in range(group.rank)])]
    parts += [1] * (n - sum(parts))
    return tuple(sorted(parts, reverse=True))


def b_type_partition_label(group, mask):
    """Partition recording the positive cycles of a Coxeter element of W_K in
    B_n (fixed points count as parts 1; the +/- cycle block is dropped)."""
    if group.descriptor.family != "B":
        raise ValueError("B-type labels need a B-type group")
    mask = mask_of(group, mask)
    n = group.rank
    block = 0
    while block < n and mask >> block & 1:
        block += 1
    if not mask & 1:
        block = 0
    rest = [bool(mask >> s & 1) for s in range(block + 1, n)]
    parts = [r + 1 for r in _runs(rest)]
    m = n - block
    parts += [1] * (m - sum(parts))
    return tuple(sorted(parts, reverse=True))


def d_type_partition_label(group, mask):
    """Partition label of K in D_n: the cycle type of the symmetric-group
    part of a Coxeter element, ignoring the D-type block."""
    if group.descriptor.family != "D":
        raise ValueError("D-type labels need a D-type group")
    mask = mask_of(group, mask)
    n = group.rank
    if mask & 1 and mask & 2:
        n0 = 2
        while n0 < n and mask >> n0 & 1:
            n0 += 1
        rest = [bool(mask >> s & 1) for s in range(n0 + 1, n)]
    else:
        n0 = 0
        if mask & 2:  # inside S' = {s_1, ..., s_{n-1}}
            rest = [True] + [bool(mask >> s & 1) for s in range(2, n)]
        elif mask & 1:  # inside S'' = {u, s_2, ..., s_{n-1}}
            rest = [True] + [bool(mask >> s & 1) for s in range(2, n)]
        else:
            rest = [False] + [bool(mask >> s & 1) for s in range(2, n)]
    parts = [r + 1 for r in _runs(rest)]
    m = n - n0
    parts += [1] * (m - sum(parts))
    return tuple(sorted(parts, reverse=True))


def a_type_normalizer_oracle(partition):
    """[N(W_K):W_K] in type A from the partition label: product of the
    factorials of the part multiplicities."""
    out = 1
    for part in set(partition):
        out *= math.factorial(partition.count(part))
    return out


def b_type_normalizer_oracle(partition):
    """[N(W_K):W_K] in type B: 2^t times the multiplicity factorials, with t
    the number of parts."""
    out = 2 ** len(partition)
    for part in set(partition):
        out *= math.factorial(partition.count(part))
    return out


def d_type_normalizer_oracle(n, partition):
    """[N(W_K):W_K] in type D_n from the partition label.

    The value is prod_i 2^{m_i} m_i! times a, where a = 1/2 exactly when the
    partition has total n and an odd part.
    """
    partition = tuple(sorted((int(p) for p in partition), reverse=True))
    if any(p < 1 for p in partition):
        raise ValueError("parts must be positive")
    m = sum(partition)
    if m > n or m == n - 1:
        raise ValueError("%r is not a valid D_%d label" % (partition, n))
    out = 1
    for part in set(partition):
        mult = partition.count(part)
        out *= (2 ** mult) * math.factorial(mult)
    if m == n and any(p % 2 for p in partition):
        if out % 2:
            raise AssertionError("halving an odd normalizer value")
        out //= 2
    return out
