"""Irreducible representations, decomposition matrices and Cartan matrices.

The columns of the parabolic table of marks are the one-dimensional
irreducible representations of the descent algebra; reduced mod p they fall
together into s distinct columns indexed by the subset F of E where p does
not divide the diagonal.  The 0/1 decomposition matrix D records which
columns collapse, the arrow relation (built from p-regular parts of group
elements) describes the same partition intrinsically, and Cartan matrices in
characteristic 0 and p are computed from lifted orthogonal primitive
idempotents and compared through C~ = D^T C D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coxeter import p_regular_part
from .descent import (
    DescentElement,
    StructureConstants,
    multiply,
    theta,
    x_basis,
    zero_element,
)
from .linalg import RowSpace
from .parabolic import (
    a_type_partition_label,
    b_type_partition_label,
    class_index,
    d_type_partition_label,
    mask_of,
    parabolic_closure_class,
)
from .partitions import p_regular_cycle_type


def primes_dividing(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# decomposition matrix
# ---------------------------------------------------------------------------

def modular_index(marks, p):
    """F: positions in E whose diagonal mark is not divisible by p."""
    return tuple(j for j in range(len(marks)) if marks.matrix[j][j] % p)


@dataclass(frozen=True)
class DecompositionMatrix:
    p: int
    col_positions: tuple  # F, as positions into E
    matrix: tuple  # |E| x |F| of 0/1

    def column_of_row(self, k):
        """Position in E of the F-column that row k maps to."""
        return self.col_positions[self.matrix[k].index(1)]

    def row_partition(self):
        """Partition of E positions by their F-column."""
        groups = {}
        for k, row in enumerate(self.matrix):
            groups.setdefault(row.index(1), set()).add(k)
        return sorted((frozenset(v) for v in groups.values()), key=min)


def decomposition_matrix(marks, p):
    """D = (d_KL): d_KL = 1 iff columns K and L of the marks table agree mod p,
    with L running over F."""
    r = len(marks)
    fpos = modular_index(marks, p)
    cols = [tuple(marks.matrix[j][k] % p for j in range(r)) for k in range(r)]
    fcols = [cols[l] for l in fpos]
    if len(set(fcols)) != len(fcols):
        raise AssertionError("F-columns are not pairwise distinct mod %d" % p)
    rows = []
    for k in range(r):
        hits = [i for i, c in enumerate(fcols) if c == cols[k]]
        if len(hits) != 1:
            raise AssertionError(
                "column %d is congruent to %d F-columns mod %d" % (k, len(hits), p)
            )
        rows.append(tuple(1 if i == hits[0] else 0 for i in range(len(fpos))))
    d = DecompositionMatrix(p, tuple(fpos), tuple(rows))
    for i, l in enumerate(fpos):
        if d.matrix[l][i] != 1:
            raise AssertionError("d_LL != 1 for F-column %d" % l)
    return d


def distinct_columns_mod_p(marks, p):
    r = len(marks)
    return len({tuple(marks.matrix[j][k] % p for j in range(r)) for k in range(r)})


# ---------------------------------------------------------------------------
# the arrow relation on E
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArrowData:
    """The relation K -> L given by p-regular parts, per class position in E.

    direct_targets[k] is the set of L with K -> L; first_target[k] comes from
    the p-regular part of a Coxeter element of W_K and heads the printed
    list.  components partition E under the equivalence generated by the
    relation; representative[c] is the least member of the component in the E
    ordering."""

    p: int
    direct_targets: tuple
    first_target: tuple
    components: tuple
    component_of: tuple
    representative: tuple


def p_arrow_classes(group, marks, p):
    e = class_index(group)
    r = len(e)
    class_id, reps = group.conjugacy_classes()

    closure_of_class = {}

    def closure_of(widx):
        cid = int(class_id[widx])
        if cid not in closure_of_class:
            closure_of_class[cid] = parabolic_closure_class(
                group, group.element(widx), marks
            )
        return closure_of_class[cid]

    targets = [set() for _ in range(r)]
    for rep in reps:
        src = closure_of(rep)
        wreg = p_regular_part(group.element(rep), p)
        targets[src].add(closure_of(wreg.index))

    first = []
    for k, cls in enumerate(e):
        cidx = group.coxeter_element_idx(cls.representative)
        if closure_of(cidx) != k:
            raise AssertionError("Coxeter element of class %d closes elsewhere" % k)
        wreg = p_regular_part(group.element(cidx), p)
        first.append(closure_of(wreg.index))

    parent = list(range(r))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for k in range(r):
        for l in targets[k]:
            ra, rb = find(k), find(l)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    comp_members = {}
    for k in range(r):
        comp_members.setdefault(find(k), set()).add(k)
    components = sorted((frozenset(v) for v in comp_members.values()), key=min)
    component_of = [None] * r
    for ci, comp in enumerate(components):
        for k in comp:
            component_of[k] = ci

    representative = tuple(min(comp) for comp in components)

    return ArrowData(
        p,
        tuple(frozenset(t) for t in targets),
        tuple(first),
        tuple(components),
        tuple(component_of),
        representative,
    )


# ---------------------------------------------------------------------------
# verification reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Report:
    ok: bool
    checks: tuple  # (name, ok, detail)

    def failures(self):
        return [c for c in self.checks if not c[1]]


def _partition_mismatch_detail(left, right):
    for a in left:
        for b in right:
            if a & b and a != b:
                return "classes differ near positions %s vs %s" % (sorted(a), sorted(b))
    return "partitions differ"


def verify_decomp_equals_arrow(group, marks, p):
    """Check that the decomposition matrix partition equals the arrow
    equivalence, plus the type-specific descriptions for A, B and D."""
    e = class_index(group)
    checks = []
    d = decomposition_matrix(marks, p)
    arrows = p_arrow_classes(group, marks, p)
    dpart = d.row_partition()
    apart = sorted(arrows.components, key=min)
    ok = dpart == apart
    detail = "" if ok else _partition_mismatch_detail(set(dpart), set(apart))
    checks.append(("decomposition-equals-arrow-classes", ok, detail))

    family = group.descriptor.family
    fpos = d.col_positions
    if family == "A":
        labels = [a_type_partition_label(group, cls.representative) for cls in e]
        regular = [p_regular_cycle_type(l, p) for l in labels]
        groups = {}
        for k, t in enumerate(regular):
            groups.setdefault(t, set()).add(k)
        opart = sorted((frozenset(v) for v in groups.values()), key=min)
        ok = opart == dpart
        checks.append(
            (
                "type-A-p-regular-cycle-type-oracle",
                ok,
                "" if ok else "partition oracle disagrees with D",
            )
        )
    if family in ("B", "D"):
        if p != 2:
            bad = []
            class_id, _ = group.conjugacy_classes()
            pregs = []
            for cls in e:
                c = group.coxeter_element_idx(cls.representative)
                pregs.append(int(class_id[p_regular_part(group.element(c), p).index]))
            for k in range(len(e)):
                for i, l in enumerate(fpos):
                    same = pregs[k] == pregs[l]
                    if same != bool(d.matrix[k][i]):
                        bad.append((k, l))
            checks.append(
                (
                    "type-%s-conjugate-p-regular-parts" % family,
                    not bad,
                    "" if not bad else "offending (K, L) pairs: %s" % bad,
                )
            )
        else:
            n = group.rank
            full = (1 << n) - 1
            spos = e.position_of(full)
            if family == "B" or n % 2 == 0:
                ok = fpos == (spos,) and all(
                    row == (1,) for row in d.matrix
                )
                checks.append(
                    (
                        "type-%s-p2-single-column" % family,
                        ok,
                        "" if ok else "F=%s, expected {S}" % (fpos,),
                    )
                )
            else:
                sprime = e.position_of(mask_of(group, range(1, n)))
                ok = set(fpos) == {sprime, spos}
                if ok:
                    for k in range(len(e)):
                        col = d.column_of_row(k)
                        want = sprime if k == sprime else spos
                        if col != want:
                            ok = False
                            break
                checks.append(
                    (
                        "type-D-odd-p2-two-columns",
                        ok,
                        "" if ok else "F=%s or column pattern wrong" % (fpos,),
                    )
                )
    return Report(all(c[1] for c in checks), tuple(checks))


def p_special(group, mask, p):
    """Types B and D: K is p-special iff its partition label has no part
    divisible by p (the paired-cycle factor of c_K is then p-regular)."""
    family = group.descriptor.family
    if family == "B":
        label = b_type_partition_label(group, mask)
    elif family == "D":
        label = d_type_partition_label(group, mask)
    else:
        raise ValueError("p-special subsets are defined for types B and D only")
    return all(part % p for part in label)


# ---------------------------------------------------------------------------
# idempotents and Cartan matrices
# ---------------------------------------------------------------------------

_MAX_NEWTON = 16


def _newton_idempotent(u, sc):
    """Iterate e <- 3e^2 - 2e^3 until exactly idempotent."""
    for _ in range(_MAX_NEWTON):
        u2 = multiply(u, u, sc)
        if u2.coeffs == u.coeffs:
            return u
        u3 = multiply(u2, u, sc)
        u = u2.scaled(3) - u3.scaled(2)
    raise AssertionError("idempotent lifting failed to converge")


def lift_idempotents(group, sc, marks, p=0):
    """A complete set of orthogonal primitive idempotents.

    Characteristic 0 yields one idempotent per class in E, characteristic p
    one per F-position.  Each lifted idempotent has theta-profile equal to
    the indicator of its own column, they are pairwise orthogonal and sum to
    the identity x_S; all of this is asserted exactly.
    """
    e = class_index(group)
    r = len(e)
    positions = list(range(r)) if not p else list(modular_index(marks, p))
    m = marks.matrix

    lifted = []
    for i in positions:
        # back-substitute M^T c = delta_i on representative coordinates
        coeff = {}
        for lpos in reversed(positions):
            acc = (1 if lpos == i else 0)
            for j in positions:
                if j > lpos and coeff.get(j):
                    acc -= coeff[j] * m[j][lpos]
            if p:
                coeff[lpos] = acc * pow(m[lpos][lpos] % p, -1, p) % p
            else:
                coeff[lpos] = Fraction(acc) / m[lpos][lpos]
        y = zero_element(group, p)
        for j, c in coeff.items():
            if c:
                y = y + x_basis(group, e[j].representative, p).scaled(c)
        lifted.append(_newton_idempotent(y, sc))

    final = []
    f = zero_element(group, p)
    for u in lifted:
        fu = multiply(f, u, sc)
        uf = multiply(u, f, sc)
        fuf = multiply(fu, f, sc)
        u = u - fu - uf + fuf
        u = _newton_idempotent(u, sc)
        final.append(u)
        f = f + u

    identity = x_basis(group, (1 << group.rank) - 1, p)
    if f.coeffs != identity.coeffs:
        raise AssertionError("idempotents do not sum to the identity")
    for i, u in enumerate(final):
        prof = theta(u, marks)
        want = tuple(
            (1 if _column_matches(m, positions[i], k, p) else 0) for k in range(r)
        )
        got = tuple(v % p if p else v for v in prof)
        if got != want:
            raise AssertionError("idempotent %d has wrong character profile" % i)
    return final


def _column_matches(m, l, k, p):
    """Does column k of the marks matrix collapse onto column l?"""
    if not p:
        return k == l
    r = len(m)
    return all(m[j][k] % p == m[j][l] % p for j in range(r))


@dataclass(frozen=True)
class CartanMatrix:
    characteristic: int
    positions: tuple  # E positions (char 0) or F positions (char p)
    matrix: tuple

    def entry_sum(self):
        return sum(sum(row) for row in self.matrix)


def cartan_matrix(group, sc, marks, p=0):
    """Cartan matrix c_ij = dim(e_j A e_i) over the lifted idempotents."""
    idems = lift_idempotents(group, sc, marks, p)
    e = class_index(group)
    positions = tuple(range(len(e))) if not p else tuple(modular_index(marks, p))
    nsub = 1 << group.rank
    n = len(idems)
    xs = [x_basis(group, mask, p) for mask in range(nsub)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            space = RowSpace(p)
            for xm in xs:
                v = multiply(multiply(idems[j], xm, sc), idems[i], sc)
                space.add(v.coeffs)
            row.append(space.dimension)
        rows.append(tuple(row))
    c = CartanMatrix(p, positions, tuple(rows))
    if c.entry_sum() != nsub:
        raise AssertionError(
            "Cartan entry sum %d != algebra dimension %d" % (c.entry_sum(), nsub)
        )
    return c


def verify_CDC(group, sc, marks, p):
    """Independently compute C (char 0), C~ (char p) and D, and check the
    factorization C~ = D^T C D entry-wise."""
    c0 = cartan_matrix(group, sc, marks, 0)
    cp = cartan_matrix(group, sc, marks, p)
    d = decomposition_matrix(marks, p)
    r = len(class_index(group))
    s = len(d.col_positions)
    dtcd = tuple(
        tuple(
            sum(
                d.matrix[k][i] * c0.matrix[k][l] * d.matrix[l][j]
                for k in range(r)
                for l in range(r)
            )
            for j in range(s)
        )
        for i in range(s)
    )
    ok = dtcd == cp.matrix
    checks = (
        ("cartan-factorization", ok, "" if ok else "D^T C D != C~"),
        (
            "cartan-entry-sums",
            c0.entry_sum() == cp.entry_sum() == (1 << group.rank),
            "",
        ),
    )
    report = Report(all(c[1] for c in checks), checks)
    return report, c0, cp, d, dtcd
