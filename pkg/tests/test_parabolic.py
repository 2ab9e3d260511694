import pytest

from dworkbench.coxeter import build_group, coxeter_element
from dworkbench.parabolic import (
    a_type_normalizer_oracle,
    a_type_partition_label,
    all_subsets,
    b_type_normalizer_oracle,
    b_type_partition_label,
    class_index,
    coset_action,
    d_type_normalizer_oracle,
    d_type_partition_label,
    double_coset_rep_indices,
    double_coset_reps,
    iso_label,
    mask_bits,
    min_coset_rep_indices,
    min_coset_reps,
    normalizer_index,
    parabolic_closure_class,
    parabolic_subgroup,
    subsets_conjugate,
)
from dworkbench.partitions import partitions_count


def brute_left_cosets(group, mask):
    """Partition of the group into left cosets of W_K, as frozensets."""
    sub = parabolic_subgroup(group, mask).element_indices
    cosets = set()
    for i in range(group.order):
        coset = frozenset(group.multiply_idx(i, h) for h in sub)
        cosets.add(coset)
    return cosets


def brute_double_cosets(group, jmask, kmask):
    subj = parabolic_subgroup(group, jmask).element_indices
    subk = parabolic_subgroup(group, kmask).element_indices
    cosets = set()
    for i in range(group.order):
        coset = frozenset(
            group.multiply_idx(group.multiply_idx(a, i), b)
            for a in subj
            for b in subk
        )
        cosets.add(coset)
    return cosets


def test_parabolic_subgroup_basics(ws):
    g = ws.group("A2")
    assert parabolic_subgroup(g, 0).order == 1
    assert parabolic_subgroup(g, 0b11).order == 6
    assert parabolic_subgroup(g, 0b01).order == 2
    b3 = ws.group("B3")
    for mask in all_subsets(3):
        assert b3.order % parabolic_subgroup(b3, mask).order == 0


def test_min_coset_reps_a2_against_brute_force(ws):
    g = ws.group("A2")
    reps = min_coset_reps(g, [0])
    assert len(reps) == 3 == len(brute_left_cosets(g, 0b01))
    assert min_coset_rep_indices(g, 0b11).tolist() == [0]
    assert len(min_coset_rep_indices(g, 0)) == g.order


def test_min_coset_reps_are_minimal_and_distinct(ws):
    for name in ("A3", "B3", "I2:7"):
        g = ws.group(name)
        for mask in all_subsets(g.rank):
            idx = min_coset_rep_indices(g, mask)
            sub = parabolic_subgroup(g, mask)
            assert len(idx) * sub.order == g.order
            cosets = brute_left_cosets(g, mask)
            assert {frozenset(g.multiply_idx(i, h) for h in sub.element_indices) for i in idx} == cosets
            # every rep maps the simple roots of the subset to positive roots
            for i in idx:
                for s in mask_bits(mask):
                    assert g.perms[i][g.simple_root_indices[s]] < g.n_positive


def test_double_coset_reps(ws):
    g = ws.group("A2")
    full = (1 << g.rank) - 1
    assert [w.index for w in double_coset_reps(g, full, full)] == [0]
    assert len(double_coset_reps(g, 0, 0)) == g.order
    assert len(double_coset_reps(g, 1, 1)) == 2 == len(brute_double_cosets(g, 1, 1))


def test_double_coset_counts_against_brute_force(ws):
    g = ws.group("B3")
    for jmask in all_subsets(3):
        for kmask in all_subsets(3):
            got = len(double_coset_rep_indices(g, jmask, kmask))
            assert got == len(brute_double_cosets(g, jmask, kmask))


def test_subsets_conjugate_basic(ws):
    a2 = ws.group("A2")
    assert subsets_conjugate(a2, 0b01, 0b10)
    assert subsets_conjugate(a2, 0b01, 0b01)
    f4 = ws.group("F4")
    assert not subsets_conjugate(f4, 0b0001, 0b0100)  # long A1 vs short A1
    assert subsets_conjugate(f4, 0b0001, 0b0010)


def test_subsets_conjugate_matches_brute_force(ws):
    for name in ("B3", "D4"):
        g = ws.group(name)
        for j in all_subsets(g.rank):
            for k in all_subsets(g.rank):
                assert subsets_conjugate(g, j, k) == subsets_conjugate(
                    g, j, k, brute_force=True
                ), (name, j, k)


def test_class_index_sizes(ws):
    assert len(class_index(ws.group("A4"))) == partitions_count(5)
    assert len(class_index(ws.group("F4"))) == 12
    # type B: one class per partition of m, 0 <= m <= n
    assert len(class_index(ws.group("B3"))) == sum(
        partitions_count(m) for m in range(4)
    )
    # members partition the powerset
    e = class_index(ws.group("B3"))
    seen = [m for cls in e for m in cls.members]
    assert sorted(seen) == list(range(1 << 3))


def test_class_index_ordering_refines_popcount(ws):
    for name in ("B3", "F4", "H3", "D4"):
        e = class_index(ws.group(name))
        pops = [cls.representative.bit_count() for cls in e]
        assert pops == sorted(pops)
        for cls in e:
            assert cls.representative == min(cls.members)


def test_conjugate_subsets_share_normalizer_index(ws):
    for name in ("A3", "B3", "D4"):
        g = ws.group(name)
        for cls in class_index(g):
            for member in cls.members:
                assert normalizer_index(g, member) == cls.normalizer_index


def test_normalizer_index_a_type(ws):
    # product of factorials of the part multiplicities
    for name in ("A3", "A4", "A5"):
        g = ws.group(name)
        for mask in all_subsets(g.rank):
            label = a_type_partition_label(g, mask)
            assert normalizer_index(g, mask) == a_type_normalizer_oracle(label)


def test_normalizer_index_b_type(ws):
    for name in ("B2", "B3", "B4"):
        g = ws.group(name)
        for mask in all_subsets(g.rank):
            label = b_type_partition_label(g, mask)
            assert normalizer_index(g, mask) == b_type_normalizer_oracle(label)


def test_normalizer_index_d_type(ws):
    for name in ("D4", "D5"):
        g = ws.group(name)
        for mask in all_subsets(g.rank):
            label = d_type_partition_label(g, mask)
            assert normalizer_index(g, mask) == d_type_normalizer_oracle(
                g.rank, label
            ), (name, bin(mask), label)


def test_d_type_oracle_spec_values():
    assert d_type_normalizer_oracle(4, ()) == 1          # K = S
    assert d_type_normalizer_oracle(5, (5,)) == 1        # odd part, a = 1/2
    assert d_type_normalizer_oracle(4, (2, 2)) == 8      # all even, a = 1
    assert d_type_normalizer_oracle(4, (1, 1, 1, 1)) == 2 ** 4 * 24 // 2
    with pytest.raises(ValueError):
        d_type_normalizer_oracle(4, (3,))               # m = n - 1 impossible
    with pytest.raises(ValueError):
        d_type_normalizer_oracle(4, (5,))
    with pytest.raises(ValueError):
        d_type_normalizer_oracle(4, (0, 2))


def test_h3_normalizer_diagonal(ws):
    e = class_index(ws.group("H3"))
    assert sorted((c.normalizer_index for c in e), reverse=True) == [120, 4, 2, 2, 2, 1]


def test_d_type_even_partition_splitting(ws):
    """Subsets with the same all-even partition of n split into the S'/S''
    pair of classes; any other shared partition merges."""
    for name in ("D4", "D5"):
        g = ws.group(name)
        n = g.rank
        by_label = {}
        for mask in all_subsets(n):
            by_label.setdefault(d_type_partition_label(g, mask), []).append(mask)
        e = class_index(g)
        for label, masks in by_label.items():
            npos = len({e.position_of(m) for m in masks})
            full_even = sum(label) == n and all(part % 2 == 0 for part in label)
            assert npos == (2 if full_even else 1), (name, label)


def test_iso_labels(ws):
    g = ws.group("F4")
    assert iso_label(g, 0) == "1"
    assert iso_label(g, 0b11) == "A2"
    assert iso_label(g, 0b110) == "B2"
    assert iso_label(g, 0b111) == "B3"
    assert iso_label(g, 0b1111) == "F4"
    assert iso_label(g, 0b1011) == "A2xA1"
    h = ws.group("H4")
    assert iso_label(h, 0b0011) == "I2(5)"
    assert iso_label(h, 0b0111) == "H3"
    assert iso_label(h, 0b1111) == "H4"
    assert iso_label(h, 0b1011) == "I2(5)xA1"
    d = ws.group("D5")
    assert iso_label(d, 0b11111) == "D5"
    assert iso_label(d, 0b00111) == "A3"
    e6 = build_group("E6")
    assert iso_label(e6, 0b111111) == "E6"
    assert iso_label(e6, 0b111110) == "D5"  # branch node 3 keeps both short arms
    assert iso_label(e6, 0b111101) == "A5"  # dropping node 1 leaves a path


def test_closure_classes(ws):
    g = ws.group("B3")
    marks = ws.marks("B3")
    e = class_index(g)
    # identity closes to the empty class
    assert parabolic_closure_class(g, g.identity, marks) == 0
    # Coxeter elements close onto their own class
    for k, cls in enumerate(e):
        c = coxeter_element(g, cls.representative)
        assert parabolic_closure_class(g, c, marks) == k
    # single reflections close onto the class of their singleton
    for s in range(g.rank):
        assert parabolic_closure_class(
            g, g.generators[s], marks
        ) == e.position_of(1 << s)
    # generating sets: the whole parabolic subgroup closes onto its class
    for k, cls in enumerate(e):
        gens = [g.generators[s] for s in mask_bits(cls.representative)]
        if gens:
            assert parabolic_closure_class(g, gens, marks) == k


def test_closure_constant_on_conjugacy_classes(ws):
    g = ws.group("H3")
    marks = ws.marks("H3")
    class_id, reps = g.conjugacy_classes()
    want = {}
    for rep in reps:
        want[class_id[rep]] = parabolic_closure_class(g, g.element(rep), marks)
    for i in range(0, g.order, 3):
        assert parabolic_closure_class(g, g.element(i), marks) == want[class_id[i]]


def test_coset_action_consistency(ws):
    # the generator action on cosets matches brute-force coset permutation
    g = ws.group("B3")
    for mask in (0b010, 0b011, 0b110):
        action = coset_action(g, mask)
        sub = parabolic_subgroup(g, mask).element_indices
        reps = action.rep_indices
        coset_of = {}
        for pos, i in enumerate(reps):
            for h in sub:
                coset_of[g.multiply_idx(i, h)] = pos
        for s in range(g.rank):
            srow = [coset_of[g.multiply_idx(g.generator_index(s), i)] for i in reps]
            assert srow == action.sigma[s].tolist()
