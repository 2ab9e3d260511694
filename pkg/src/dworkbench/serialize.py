"""Payload builders, emitters and parsers for the CLI artifacts.

Every artifact has a canonical JSON payload whose integers are encoded as
strings (orders overflow 64-bit consumers), a text rendering and a CSV
rendering.  Output ordering always follows the E ordering of the parabolic
module, never hash order, so reruns are byte-identical.
"""

from __future__ import annotations

import json

from .marks import MarksTable
from .modular import decomposition_matrix, p_arrow_classes, primes_dividing

SCHEMA_VERSION = 1


def format_mask(mask):
    bits = []
    s = 0
    while mask:
        if mask & 1:
            bits.append("s%d" % s)
        mask >>= 1
        s += 1
    return "{%s}" % " ".join(bits)


def format_cell(index, targets, first, rep):
    """Arrow cell in table notation; all arguments 1-based."""
    if set(targets) == {index} and rep == index:
        return "."
    rest = sorted(t for t in targets if t != first)
    body = ", ".join(str(t) for t in [first] + rest)
    if rep != first:
        body += " (%d)" % rep
    return body


def labels_payload(marks):
    return [
        {"index": l.index, "iso_type": l.iso_type, "mask": l.mask, "beta": str(l.beta)}
        for l in marks.labels
    ]


# ---------------------------------------------------------------------------
# marks
# ---------------------------------------------------------------------------

def marks_payload(marks):
    return {
        "schema_version": SCHEMA_VERSION,
        "descriptor": marks.descriptor,
        "labels": labels_payload(marks),
        "matrix": [[str(v) for v in row] for row in marks.matrix],
    }


def marks_from_payload(payload):
    from .marks import RowLabel

    labels = tuple(
        RowLabel(l["index"], l["mask"], l["iso_type"], int(l["beta"]))
        for l in payload["labels"]
    )
    matrix = tuple(tuple(int(v) for v in row) for row in payload["matrix"])
    return MarksTable(payload["descriptor"], labels, matrix)


def emit_marks_text(payload):
    labels = payload["labels"]
    matrix = payload["matrix"]
    lines = [
        "parabolic table of marks: %s" % payload["descriptor"],
        "classes: %d" % len(labels),
    ]
    widths = [
        max(len(matrix[j][k]) for j in range(len(matrix))) for k in range(len(labels))
    ]
    isow = max(len(l["iso_type"]) for l in labels)
    for j, l in enumerate(labels):
        row = " ".join(v.rjust(widths[k]) for k, v in enumerate(matrix[j]))
        lines.append(
            "%3d  %-*s  %-12s  %s"
            % (l["index"], isow, l["iso_type"], format_mask(l["mask"]), row)
        )
    return "\n".join(lines) + "\n"


def emit_marks_csv(payload):
    labels = payload["labels"]
    head = ["index", "iso_type", "mask", "beta"] + [
        "c%d" % l["index"] for l in labels
    ]
    lines = [",".join(head)]
    for j, l in enumerate(labels):
        lines.append(
            ",".join(
                [str(l["index"]), l["iso_type"], str(l["mask"]), l["beta"]]
                + payload["matrix"][j]
            )
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------

def decomposition_payload(group, marks, primes):
    """Payload with F, D, and the arrow classes for each requested prime.

    Primes not dividing the group order get the trivial entry (D is the
    identity) without touching the group's conjugacy classes.
    """
    r = len(marks.labels)
    entries = []
    for p in sorted(set(primes)):
        d = decomposition_matrix(marks, p)
        if group is not None and group.order % p == 0:
            arrows = p_arrow_classes(group, marks, p)
            targets = [sorted(t + 1 for t in arrows.direct_targets[k]) for k in range(r)]
            firsts = [arrows.first_target[k] + 1 for k in range(r)]
            reps = [
                arrows.representative[arrows.component_of[k]] + 1 for k in range(r)
            ]
            classes = [
                {
                    "representative": arrows.representative[ci] + 1,
                    "members": sorted(m + 1 for m in comp),
                }
                for ci, comp in enumerate(arrows.components)
            ]
        else:
            targets = [[k + 1] for k in range(r)]
            firsts = [k + 1 for k in range(r)]
            reps = [k + 1 for k in range(r)]
            classes = [
                {"representative": k + 1, "members": [k + 1]} for k in range(r)
            ]
        rows = [
            {
                "index": k + 1,
                "targets": targets[k],
                "first": firsts[k],
                "representative": reps[k],
                "cell": format_cell(k + 1, targets[k], firsts[k], reps[k]),
            }
            for k in range(r)
        ]
        entries.append(
            {
                "p": p,
                "modular_index": [l + 1 for l in d.col_positions],
                "rows": rows,
                "classes": classes,
                "decomposition": [list(row) for row in d.matrix],
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "descriptor": marks.descriptor,
        "labels": labels_payload(marks),
        "primes": entries,
    }


def emit_decomp_text(payload):
    labels = payload["labels"]
    entries = payload["primes"]
    lines = ["decomposition data: %s" % payload["descriptor"]]
    isow = max(4, max(len(l["iso_type"]) for l in labels))
    betaw = max(4, max(len(l["beta"]) for l in labels))
    cellw = {
        e["p"]: max(6, *(len(r["cell"]) for r in e["rows"])) for e in entries
    }
    header = "  #  %-*s  %*s" % (isow, "type", betaw, "beta")
    for e in entries:
        header += "  %-*s" % (cellw[e["p"]], "p=%d" % e["p"])
    lines.append(header)
    for j, l in enumerate(labels):
        line = "%3d  %-*s  %*s" % (l["index"], isow, l["iso_type"], betaw, l["beta"])
        for e in entries:
            line += "  %-*s" % (cellw[e["p"]], e["rows"][j]["cell"])
        lines.append(line)
    for e in entries:
        lines.append(
            "p=%d: F = {%s}; s = %d"
            % (
                e["p"],
                ", ".join(str(i) for i in e["modular_index"]),
                len(e["modular_index"]),
            )
        )
        for c in e["classes"]:
            lines.append(
                "  class (%d): {%s}"
                % (c["representative"], ", ".join(str(m) for m in c["members"]))
            )
    return "\n".join(lines) + "\n"


def emit_decomp_csv(payload):
    lines = ["p,index,iso_type,beta,cell,first,representative,targets"]
    for e in payload["primes"]:
        for j, row in enumerate(e["rows"]):
            l = payload["labels"][j]
            lines.append(
                '%d,%d,%s,%s,"%s",%d,%d,"%s"'
                % (
                    e["p"],
                    row["index"],
                    l["iso_type"],
                    l["beta"],
                    row["cell"],
                    row["first"],
                    row["representative"],
                    " ".join(str(t) for t in row["targets"]),
                )
            )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# radical
# ---------------------------------------------------------------------------

def radical_payload(descriptor, basis):
    vectors = []
    for el in basis.elements:
        vectors.append(
            {str(m): str(c) for m, c in enumerate(el.coeffs) if c}
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "descriptor": descriptor,
        "characteristic": basis.characteristic,
        "dimension": basis.dimension,
        "basis": vectors,
    }


def _term(mask, coeff):
    if coeff == "1":
        return "x%s" % format_mask(int(mask))
    if coeff == "-1":
        return "-x%s" % format_mask(int(mask))
    return "%s*x%s" % (coeff, format_mask(int(mask)))


def emit_radical_text(payloads):
    lines = []
    for payload in payloads:
        lines.append(
            "radical basis: %s, characteristic %s, dimension %d"
            % (payload["descriptor"], payload["characteristic"], payload["dimension"])
        )
        for vec in payload["basis"]:
            terms = [
                _term(m, c) for m, c in sorted(vec.items(), key=lambda t: int(t[0]))
            ]
            body = terms[0]
            for t in terms[1:]:
                body += " - " + t[1:] if t.startswith("-") else " + " + t
            lines.append("  " + body)
    return "\n".join(lines) + "\n"


def emit_radical_csv(payloads):
    lines = ["characteristic,vector,mask,coefficient"]
    for payload in payloads:
        for i, vec in enumerate(payload["basis"]):
            for m, c in sorted(vec.items(), key=lambda t: int(t[0])):
                lines.append(
                    "%s,%d,%s,%s" % (payload["characteristic"], i, m, c)
                )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cartan
# ---------------------------------------------------------------------------

def cartan_payload(descriptor, c0, per_prime):
    """per_prime: list of (p, cartan_mod_p, decomposition, dtcd, equal)."""
    return {
        "schema_version": SCHEMA_VERSION,
        "descriptor": descriptor,
        "char0": {
            "positions": [i + 1 for i in c0.positions],
            "matrix": [[str(v) for v in row] for row in c0.matrix],
        },
        "primes": [
            {
                "p": p,
                "positions": [i + 1 for i in cp.positions],
                "cartan_mod_p": [[str(v) for v in row] for row in cp.matrix],
                "decomposition": [list(row) for row in d.matrix],
                "dt_c_d": [[str(v) for v in row] for row in dtcd],
                "equal": bool(equal),
            }
            for (p, cp, d, dtcd, equal) in per_prime
        ],
    }


def _matrix_lines(matrix, indent="  "):
    if not matrix:
        return [indent + "(empty)"]
    width = max(len(v) for row in matrix for v in row)
    return [indent + " ".join(v.rjust(width) for v in row) for row in matrix]


def emit_cartan_text(payload):
    lines = ["cartan matrices: %s" % payload["descriptor"]]
    lines.append("C (characteristic 0), rows/cols = E positions %s:"
                 % payload["char0"]["positions"])
    lines.extend(_matrix_lines(payload["char0"]["matrix"]))
    for e in payload["primes"]:
        lines.append("p = %d, F positions %s" % (e["p"], e["positions"]))
        lines.append("C~ (characteristic %d):" % e["p"])
        lines.extend(_matrix_lines(e["cartan_mod_p"]))
        lines.append("D^T C D:")
        lines.extend(_matrix_lines(e["dt_c_d"]))
        lines.append("verdict: %s" % ("EQUAL" if e["equal"] else "MISMATCH"))
    return "\n".join(lines) + "\n"


def emit_cartan_csv(payload):
    lines = ["characteristic,row,col,value"]
    for i, row in enumerate(payload["char0"]["matrix"]):
        for j, v in enumerate(row):
            lines.append("0,%d,%d,%s" % (i + 1, j + 1, v))
    for e in payload["primes"]:
        for i, row in enumerate(e["cartan_mod_p"]):
            for j, v in enumerate(row):
                lines.append("%d,%d,%d,%s" % (e["p"], i + 1, j + 1, v))
    return "\n".join(lines) + "\n"


def emit_json(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def parse_json(text):
    return json.loads(text)
