"""Integer partition combinatorics used by the modular theory.

Two restricted counts matter here: pi(n, p) counts partitions of n in which
no part is repeated p or more times, and by Glaisher's bijection this equals
the number of partitions of n into parts not divisible by p.  Both sides are
computed by independent recurrences so they can be checked against each
other.
"""

from __future__ import annotations

from functools import lru_cache


def partitions_count(n):
    """pi(n), the number of partitions of n (pi(0) = 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def restricted_count(n, p):
    """pi(n, p): partitions of n with every part repeated at most p-1 times."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if p < 2:
        raise ValueError("p must be at least 2")
    table = [1] + [0] * n
    for part in range(1, n + 1):
        new = list(table)
        for mult in range(1, p):
            add = part * mult
            if add > n:
                break
            for total in range(add, n + 1):
                new[total] += table[total - add]
        table = new
    return table[n]


def no_part_divisible_count(n, p):
    """Partitions of n into parts not divisible by p."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if p < 2:
        raise ValueError("p must be at least 2")
    table = [1] + [0] * n
    for part in range(1, n + 1):
        if part % p == 0:
            continue
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


@lru_cache(maxsize=None)
def _partition_tuples(n, maxpart):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def all_partitions(n):
    """All partitions of n as weakly decreasing tuples."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partition_tuples(n, n if n else 1))


def p_part_split(k, p):
    """Split k as p**a * m with p not dividing m; returns (p**a, m)."""
    pa = 1
    while k % p == 0:
        k //= p
        pa *= p
    return pa, k


def p_regular_cycle_type(partition, p):
    """Cycle type of the p-regular part of a permutation of given cycle type.

    A cycle of length p**a * m (p not dividing m) contributes p**a cycles of
    length m.  Returned sorted decreasingly.
    """
    parts = []
    for length in partition:
        pa, m = p_part_split(length, p)
        parts.extend([m] * pa)
    return tuple(sorted(parts, reverse=True))
