import pytest

from dworkbench.partitions import (
    all_partitions,
    no_part_divisible_count,
    p_part_split,
    p_regular_cycle_type,
    partitions_count,
    restricted_count,
)

KNOWN_PI = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231]


def test_partition_counts_small():
    for n, value in enumerate(KNOWN_PI):
        assert partitions_count(n) == value


def test_all_partitions_agree_with_count():
    for n in range(12):
        parts = all_partitions(n)
        assert len(parts) == partitions_count(n)
        assert len(set(parts)) == len(parts)
        assert all(sum(p) == n for p in parts)
        assert all(tuple(sorted(p, reverse=True)) == p for p in parts)


def test_restricted_count_by_enumeration():
    # independent check: filter the explicit partition list
    for n in range(14):
        for p in (2, 3, 5, 7):
            direct = sum(
                1
                for lam in all_partitions(n)
                if all(lam.count(part) < p for part in set(lam))
            )
            assert restricted_count(n, p) == direct


def test_no_part_divisible_by_enumeration():
    for n in range(14):
        for p in (2, 3, 5, 7):
            direct = sum(
                1
                for lam in all_partitions(n)
                if all(part % p for part in lam)
            )
            assert no_part_divisible_count(n, p) == direct


def test_spec_values():
    assert partitions_count(3) == 3
    assert restricted_count(3, 2) == 2          # [3], [2,1]
    assert no_part_divisible_count(3, 2) == 2   # [3], [1,1,1]
    for p in (2, 3, 5, 7):
        assert restricted_count(0, p) == 1


def test_glaisher_equality_small():
    for n in range(25):
        for p in (2, 3, 5, 7):
            assert restricted_count(n, p) == no_part_divisible_count(n, p)


def test_p_part_split():
    assert p_part_split(12, 2) == (4, 3)
    assert p_part_split(12, 3) == (3, 4)
    assert p_part_split(7, 2) == (1, 7)
    assert p_part_split(1, 5) == (1, 1)


def test_p_regular_cycle_type():
    assert p_regular_cycle_type((6,), 2) == (3, 3)
    assert p_regular_cycle_type((6,), 3) == (2, 2, 2)
    assert p_regular_cycle_type((4, 2, 1), 2) == (1, 1, 1, 1, 1, 1, 1)
    assert p_regular_cycle_type((5, 3), 7) == (5, 3)


def test_input_validation():
    with pytest.raises(ValueError):
        partitions_count(-1)
    with pytest.raises(ValueError):
        restricted_count(3, 1)
    with pytest.raises(ValueError):
        no_part_divisible_count(-2, 3)
