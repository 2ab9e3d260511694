"""The parabolic table of marks M^c(W).

Entry beta_JK is the number of cosets in W/W_J fixed pointwise by W_K, for J
and K running over the class representatives E.  Two independent
computations are available: the geometric route counts common fixed points
of the K-generators acting on minimal coset representatives (the production
default), and the Solomon route counts distinguished double coset
representatives g with J^g n K = K (beta_JK = a_JKK).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .parabolic import (
    ClassIndexE,
    class_index,
    conjugation_masks,
    coset_action,
    double_coset_rep_indices,
    mask_bits,
    mask_of,
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RowLabel:
    index: int  # 1-based position in the E ordering
    mask: int
    iso_type: str
    beta: int


@dataclass(frozen=True)
class MarksTable:
    descriptor: str
    labels: tuple
    matrix: tuple  # tuple of tuples of python ints, E x E

    def __len__(self):
        return len(self.labels)

    def diagonal(self):
        return tuple(self.matrix[i][i] for i in range(len(self.labels)))

    def column(self, k):
        return tuple(row[k] for row in self.matrix)

    def beta_by_position(self, j, k):
        return self.matrix[j][k]

    def to_payload(self):
        return {
            "descriptor": self.descriptor,
            "labels": [
                {
                    "index": l.index,
                    "iso_type": l.iso_type,
                    "mask": l.mask,
                    "beta": str(l.beta),
                }
                for l in self.labels
            ],
            "matrix": [[str(v) for v in row] for row in self.matrix],
        }

    @staticmethod
    def from_payload(payload):
        labels = tuple(
            RowLabel(l["index"], l["mask"], l["iso_type"], int(l["beta"]))
            for l in payload["labels"]
        )
        matrix = tuple(tuple(int(v) for v in row) for row in payload["matrix"])
        return MarksTable(payload["descriptor"], labels, matrix)


def beta(group, jmask, kmask):
    """Number of cosets of W_J fixed pointwise by W_K (geometric count)."""
    jmask = mask_of(group, jmask)
    kmask = mask_of(group, kmask)
    action = coset_action(group, jmask)
    flags = np.ones(action.size, dtype=bool)
    for s in mask_bits(kmask):
        flags &= action.fixed_flags_of_generator(s)
    return int(flags.sum())


def beta_by_double_cosets(group, jmask, kmask):
    """The Solomon count a_JKK; must agree with the geometric beta."""
    jmask = mask_of(group, jmask)
    kmask = mask_of(group, kmask)
    if kmask.bit_count() > jmask.bit_count():
        return 0
    reps = double_coset_rep_indices(group, jmask, kmask)
    if kmask == 0:
        return int(len(reps))
    return int((conjugation_masks(group, reps, jmask, kmask) == kmask).sum())


def build_marks_table(group, route="geometric"):
    """The full E x E parabolic table of marks.

    route is 'geometric' (default) or 'double-coset'; both must give the same
    table and the test-suite asserts they do on every small type.
    """
    e = class_index(group)
    r = len(e)
    rows = []
    for j, cls in enumerate(e):
        if route == "geometric":
            action = coset_action(group, cls.representative)
            fixed = [action.fixed_flags_of_generator(s) for s in range(group.rank)]
            row = []
            for k in range(r):
                kmask = e[k].representative
                flags = np.ones(action.size, dtype=bool)
                for s in mask_bits(kmask):
                    flags &= fixed[s]
                row.append(int(flags.sum()))
        elif route == "double-coset":
            row = [
                beta_by_double_cosets(group, cls.representative, e[k].representative)
                for k in range(r)
            ]
        else:
            raise ValueError("unknown route %r" % (route,))
        rows.append(tuple(row))

    matrix = tuple(rows)
    _sanity_check(matrix, e)
    labels = tuple(
        RowLabel(j + 1, cls.representative, cls.iso_type, matrix[j][j])
        for j, cls in enumerate(e)
    )
    return MarksTable(group.descriptor.label(), labels, matrix)


def _sanity_check(matrix, e):
    r = len(e)
    for j in range(r):
        if matrix[j][j] == 0:
            raise AssertionError("zero diagonal mark at %d" % j)
        if matrix[j][j] != e[j].normalizer_index:
            raise AssertionError(
                "diagonal mark %d != normalizer index %d at %d"
                % (matrix[j][j], e[j].normalizer_index, j)
            )
        for k in range(r):
            if k > j and matrix[j][k] != 0:
                raise AssertionError("table of marks is not lower triangular")
            if matrix[j][k] % matrix[j][j]:
                raise AssertionError("diagonal does not divide row %d" % j)
    for k1 in range(r):
        for k2 in range(k1 + 1, r):
            if all(matrix[j][k1] == matrix[j][k2] for j in range(r)):
                raise AssertionError("columns %d and %d coincide" % (k1, k2))


def chi_value(group, jmask, w):
    """Permutation character of W on W/W_J evaluated at w (fixed cosets)."""
    jmask = mask_of(group, jmask)
    action = coset_action(group, jmask)
    return int(action.fixed_flags_of_word(w.word()).sum())
