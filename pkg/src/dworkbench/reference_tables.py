"""Curated reference decomposition data for the exceptional types.

For each type the table lists, per class of parabolic subgroups (rows), the
isomorphism type, the normalizer index beta, and for each relevant prime the
arrow cell: the classes reachable from this one under taking p-regular
parts, headed by the target of the Coxeter element, with the class
representative in parentheses when it differs from the first entry.  A dot
means the row only reaches itself and is its own representative.

Row numbering of the reference data need not match the canonical E ordering
of this library; `compare_reference` builds the row bijection from the
isomorphism labels and beta values (trying both assignments for the few
primed/doubly-primed pairs that share a label and beta) and then checks
every cell.
"""

from __future__ import annotations

from itertools import permutations, product

from .modular import modular_index

# rows: (label, beta, cell_p1, cell_p2, ...), aligned with "primes"
REFERENCE_DECOMP = {
    "E6": {
        "primes": (2, 3, 5),
        "rows": (
            ("1", 51840, ".", ".", "."),
            ("A1", 720, "1", ".", "."),
            ("A1xA1", 48, "1", ".", "."),
            ("A2", 72, "4 (1)", "1", "."),
            ("A1xA1xA1", 12, "1", ".", "."),
            ("A2xA1", 6, "4 (1)", "2", "."),
            ("A3", 8, "1", ".", "."),
            ("A2xA1xA1", 2, "4 (1)", "3", "."),
            ("A2xA2", 12, ".", "1", "."),
            ("A3xA1", 2, "1", ".", "."),
            ("A4", 2, ".", ".", "1"),
            ("D4", 6, "4, 1 (1)", "12 (1)", "."),
            ("A2xA2xA1", 2, "9", "2", "."),
            ("A4xA1", 1, "11", ".", "2"),
            ("A5", 2, "9", "5", "."),
            ("D5", 1, "1, 4", ".", "."),
            ("E6", 1, "17, 9 (9)", "12, 1 (1)", "."),
        ),
    },
    "E7": {
        "primes": (2, 3, 5, 7),
        "rows": (
            ("1", 2903040, ".", ".", ".", "."),
            ("A1", 23040, "1", ".", ".", "."),
            ("A1xA1", 768, "1", ".", ".", "."),
            ("A2", 1440, "4 (1)", "1", ".", "."),
            ("A1xA1xA1'", 1152, "1", ".", ".", "."),
            ("A1xA1xA1''", 96, "1", ".", ".", "."),
            ("A2xA1", 48, "4 (1)", "2", ".", "."),
            ("A3", 96, "1", ".", ".", "."),
            ("A1xA1xA1xA1", 48, "1", ".", ".", "."),
            ("A2xA1xA1", 8, "4 (1)", "3", ".", "."),
            ("A2xA2", 24, "11 (1)", "1", ".", "."),
            ("A3xA1'", 48, "1", ".", ".", "."),
            ("A3xA1''", 8, "1", ".", ".", "."),
            ("A4", 12, "14 (1)", ".", "1", "."),
            ("D4", 48, "4, 1 (1)", "15 (1)", ".", "."),
            ("A2xA1xA1xA1", 12, "4 (1)", "5", ".", "."),
            ("A2xA2xA1", 4, "11 (1)", "2", ".", "."),
            ("A3xA1xA1", 4, "1", ".", ".", "."),
            ("A3xA2", 4, "4 (1)", "8", ".", "."),
            ("A4xA1", 2, "14 (1)", ".", "2", "."),
            ("D4xA1", 8, "4, 1 (1)", ".", ".", "."),
            ("A5'", 12, "11 (1)", "5", ".", "."),
            ("A5''", 4, "11 (1)", "6", ".", "."),
            ("D5", 4, "1, 4", ".", ".", "."),
            ("A3xA2xA1", 2, "4 (1)", "12", ".", "."),
            ("A4xA2", 2, "26 (1)", "14", "4", "."),
            ("A5xA1", 2, "11 (1)", "9", ".", "."),
            ("D5xA1", 2, "1, 4", ".", ".", "."),
            ("A6", 2, "29 (1)", ".", ".", "1"),
            ("D6", 2, "14, 1, 4, 11 (1)", ".", ".", "."),
            ("E6", 2, "31, 11 (1)", "15, 1 (1)", ".", "."),
            ("E7", 1, "31, 1, 4, 11, 14, 26, 29 (1)", "32, 5 (5)", ".", "."),
        ),
    },
    "F4": {
        "primes": (2, 3),
        "rows": (
            ("1", 1152, ".", "."),
            ("A1'", 48, "1", "."),
            ("A1''", 48, "1", "."),
            ("A1xA1", 4, "1", "."),
            ("A2'", 12, "5 (1)", "1"),
            ("A2''", 12, "6 (1)", "1"),
            ("B2", 8, "1", "."),
            ("A2xA1'", 2, "5 (1)", "2"),
            ("A2xA1''", 2, "6 (1)", "3"),
            ("B3'", 2, "5, 1 (1)", "."),
            ("B3''", 2, "6, 1 (1)", "."),
            ("F4", 1, "12, 1, 5, 6 (1)", "12, 1 (1)"),
        ),
    },
    "H3": {
        "primes": (2, 3, 5),
        "rows": (
            ("1", 120, ".", ".", "."),
            ("A1", 4, "1", ".", "."),
            ("A1xA1", 2, "1", ".", "."),
            ("A2", 2, "4 (1)", "1", "."),
            ("I2(5)", 2, "5 (1)", ".", "1"),
            ("H3", 1, "5, 1, 4 (1)", ".", "."),
        ),
    },
    "H4": {
        "primes": (2, 3, 5),
        "rows": (
            ("1", 14400, ".", ".", "."),
            ("A1", 120, "1", ".", "."),
            ("A1xA1", 8, "1", ".", "."),
            ("A2", 12, "4 (1)", "1", "."),
            ("I2(5)", 20, "5 (1)", ".", "1"),
            ("A2xA1", 2, "4 (1)", "2", "."),
            ("I2(5)xA1", 2, "5 (1)", ".", "2"),
            ("A3", 2, "1", ".", "."),
            ("H3", 2, "5, 1, 4 (1)", ".", "."),
            ("H4", 1, "10, 1, 4, 5 (1)", "10, 1 (1)", "10, 1 (1)"),
        ),
    },
}


def base_label(label):
    """Strip primed/doubly-primed marks from a reference label."""
    return label.rstrip("'")


def parse_cell(cell, own_row):
    """-> (targets list, first, representative), all in reference numbering."""
    cell = cell.strip()
    if cell == ".":
        return [own_row], own_row, own_row
    rep = None
    if "(" in cell:
        cell, reptext = cell.split("(")
        rep = int(reptext.rstrip(") "))
    targets = [int(tok) for tok in cell.replace(",", " ").split()]
    if rep is None:
        rep = targets[0]
    return targets, targets[0], rep


def _check_assignment(ref, assigned, arrows_by_p):
    """Check all cells under a paper-row -> class-position bijection.

    Returns a list of problem strings (empty means full agreement).
    """
    primes = ref["primes"]
    rows = ref["rows"]
    problems = []
    for rownum, row in enumerate(rows, start=1):
        pos = assigned[rownum]
        for pi, p in enumerate(primes):
            arrows = arrows_by_p[p]
            targets, first, rep = parse_cell(row[2 + pi], rownum)
            want_targets = {assigned[t] for t in targets}
            want_first = assigned[first]
            want_rep = assigned[rep]
            got_targets = set(arrows.direct_targets[pos])
            got_first = arrows.first_target[pos]
            got_rep = arrows.representative[arrows.component_of[pos]]
            if got_targets != want_targets:
                problems.append(
                    "row %d (%s) p=%d: targets %s != reference %s"
                    % (rownum, row[0], p, sorted(got_targets), sorted(want_targets))
                )
            if got_first != want_first:
                problems.append(
                    "row %d (%s) p=%d: first target %d != reference %d"
                    % (rownum, row[0], p, got_first, want_first)
                )
            if got_rep != want_rep:
                problems.append(
                    "row %d (%s) p=%d: representative %d != reference %d"
                    % (rownum, row[0], p, got_rep, want_rep)
                )
    return problems


def compare_reference(marks, arrows_by_p, name):
    """Compare computed decomposition data against the reference table.

    Returns a list of problem strings; empty means exact agreement (after
    resolving the primed-label ambiguities by trying both assignments).
    """
    if name not in REFERENCE_DECOMP:
        return ["no reference data for %s" % name]
    ref = REFERENCE_DECOMP[name]
    rows = ref["rows"]
    if len(rows) != len(marks.labels):
        return [
            "reference has %d rows, computed table has %d"
            % (len(rows), len(marks.labels))
        ]
    for p in ref["primes"]:
        if p not in arrows_by_p:
            return ["arrow data missing for p=%d" % p]

    # group rows and class positions by (base label, beta)
    ref_groups = {}
    for rownum, row in enumerate(rows, start=1):
        ref_groups.setdefault((base_label(row[0]), row[1]), []).append(rownum)
    my_groups = {}
    for pos, lab in enumerate(marks.labels):
        my_groups.setdefault((lab.iso_type, lab.beta), []).append(pos)
    if set(ref_groups) != set(my_groups):
        return [
            "label/beta multisets differ: only-reference %s, only-computed %s"
            % (
                sorted(set(ref_groups) - set(my_groups)),
                sorted(set(my_groups) - set(ref_groups)),
            )
        ]
    for key in ref_groups:
        if len(ref_groups[key]) != len(my_groups[key]):
            return ["class multiplicity differs for %s" % (key,)]

    fixed = {}
    open_groups = []
    for key, rownums in sorted(ref_groups.items()):
        if len(rownums) == 1:
            fixed[rownums[0]] = my_groups[key][0]
        else:
            open_groups.append((rownums, my_groups[key]))

    best = None
    for combo in product(*(permutations(g[1]) for g in open_groups)):
        assigned = dict(fixed)
        for (rownums, _), perm in zip(open_groups, combo):
            for rownum, pos in zip(rownums, perm):
                assigned[rownum] = pos
        problems = _check_assignment(ref, assigned, arrows_by_p)
        if not problems:
            return []
        if best is None or len(problems) < len(best):
            best = problems
    return best if best is not None else ["no assignment attempted"]
