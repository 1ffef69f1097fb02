"""Segments of marginally large tableaux and the bijection to Kostant partitions.

A k-segment of a tableau is a maximal run of k-boxes in a row, excluding the
forced run of i-boxes that begins row i.  The segment statistic seg(T) is the
number of segments corrected by a type-specific term, and the map xi sends a
tableau to a Kostant partition (a multiset of positive roots, stored as a
dict from root label to multiplicity) whose number of distinct parts is
exactly seg(T).  upsilon inverts xi.
"""

from __future__ import annotations

from typing import NamedTuple

from .cartan import DomainError, positive_roots, root_by_label
from .tableaux import MLTableau, nrows, reduced_rows, required_run, validate


class Segment(NamedTuple):
    row: int
    letter: int
    length: int


def segments(tab):
    """All segments in row order.  Forced leading runs are not segments."""
    out = []
    for ridx, row in enumerate(tab.rows, start=1):
        pos = 0
        while pos < len(row):
            letter = row[pos]
            end = pos
            while end < len(row) and row[end] == letter:
                end += 1
            if letter != ridx:
                out.append(Segment(ridx, letter, end - pos))
            pos = end
    return tuple(out)


def ell(tab, i, k):
    """Length of the k-segment in row i (0 if absent; 0 for the forced letter k = i)."""
    if k == i:
        return 0
    return tab.rows[i - 1].count(k)


def seg_prime(tab):
    """Total number of segments."""
    return len(segments(tab))


def e_correction_b(tab):
    """Number of rows containing both a 0-segment and a bar(i)-segment (type B)."""
    count = 0
    for i, row in enumerate(tab.rows, start=1):
        if 0 in row and -i in row:
            count += 1
    return count


def e_correction_d(tab):
    """Number of rows with a bar(i)-segment but no r- and no bar(r)-segment (type D)."""
    r = tab.lie.rank
    count = 0
    for i, row in enumerate(tab.rows, start=1):
        if -i in row and r not in row and -r not in row:
            count += 1
    return count


def g2_correction(tab):
    """1 when row 1 holds both a 0-segment and a bar(1)-segment, else 0 (type G2)."""
    row = tab.rows[0]
    return 1 if (0 in row and -1 in row) else 0


def seg(tab):
    """The segment statistic: seg' with the type-specific correction."""
    fam = tab.lie.family
    base = seg_prime(tab)
    if fam == "B":
        return base - e_correction_b(tab)
    if fam == "D":
        return base + e_correction_d(tab)
    if fam == "G":
        return base - g2_correction(tab)
    return base


def _add(kp, label, mult):
    if mult:
        kp[label] = kp.get(label, 0) + mult


def xi(tab):
    """The Kostant partition of a tableau: {root label: multiplicity}."""
    lie = tab.lie
    fam = lie.family
    r = lie.rank
    kp = {}
    for row, letter, length in segments(tab):
        i = row
        if fam == "A":
            _add(kp, f"beta({i},{letter - 1})", length)
        elif fam == "B":
            if letter > 0:
                _add(kp, f"beta({i},{letter - 1})", length)
            elif letter == 0:
                _add(kp, f"beta({i},{r})", length)
            elif letter == -i:
                _add(kp, f"beta({i},{r})", 2 * length)
            else:
                _add(kp, f"gamma({i},{-letter})", length)
        elif fam == "C":
            if letter > 0:
                _add(kp, f"beta({i},{letter - 1})", length)
            else:
                _add(kp, f"gamma({i},{-letter})", length)
        elif fam == "D":
            if letter == r:
                _add(kp, f"beta({i},{r - 1})", length)
            elif letter > 0:
                _add(kp, f"beta({i},{letter - 1})", length)
            elif letter == -r:
                _add(kp, f"beta({i},{r})", length)
            elif letter == -i:
                _add(kp, f"beta({i},{r - 1})", length)
                _add(kp, f"beta({i},{r})", length)
            else:
                _add(kp, f"gamma({i},{-letter})", length)
        else:
            if i == 2:
                _add(kp, "alpha2", length)
            elif letter == 2:
                _add(kp, "alpha1", length)
            elif letter == 3:
                _add(kp, "alpha1+alpha2", length)
            elif letter == 0:
                _add(kp, "2alpha1+alpha2", length)
            elif letter == -3:
                _add(kp, "3alpha1+alpha2", length)
            elif letter == -2:
                _add(kp, "3alpha1+2alpha2", length)
            else:
                _add(kp, "2alpha1+alpha2", 2 * length)
    return kp


def check_partition(lie, kp):
    """Validate a Kostant partition dict: known labels, nonnegative integers."""
    labels = root_by_label(lie)
    for label, mult in kp.items():
        if label not in labels:
            raise DomainError(f"{label!r} is not a positive-root label of {lie}")
        if not isinstance(mult, int) or mult < 0:
            raise DomainError(f"multiplicity of {label} must be a nonnegative integer")


def upsilon(lie, kp):
    """The tableau whose xi is the given Kostant partition.

    Segment letters and lengths are read off the multiplicities type by type
    (with the parity rule splitting the doubled-root coefficient in types B
    and G2, and the min/max rule in type D); rows are then assembled bottom-up
    with the forced prefixes and validated.
    """
    check_partition(lie, kp)
    fam = lie.family
    r = lie.rank

    def c(label):
        return kp.get(label, 0)

    n = nrows(lie)
    counts = [dict() for _ in range(n + 1)]  # 1-indexed rows

    def put(i, letter, mult):
        if mult:
            counts[i][letter] = counts[i].get(letter, 0) + mult

    if fam == "A":
        for i in range(1, r + 1):
            for k in range(i, r + 1):
                put(i, k + 1, c(f"beta({i},{k})"))
    elif fam == "B":
        for i in range(1, r + 1):
            for k in range(i, r):
                put(i, k + 1, c(f"beta({i},{k})"))
            m = c(f"beta({i},{r})")
            put(i, -i, m // 2)
            put(i, 0, m % 2)
            for k in range(i + 1, r + 1):
                put(i, -k, c(f"gamma({i},{k})"))
    elif fam == "C":
        for i in range(1, r + 1):
            for k in range(i, r):
                put(i, k + 1, c(f"beta({i},{k})"))
            for k in range(i, r + 1):
                put(i, -k, c(f"gamma({i},{k})"))
    elif fam == "D":
        for i in range(1, r):
            for k in range(i, r - 1):
                put(i, k + 1, c(f"beta({i},{k})"))
            a = c(f"beta({i},{r - 1})")
            b = c(f"beta({i},{r})")
            put(i, r, max(0, a - b))
            put(i, -r, max(0, b - a))
            put(i, -i, min(a, b))
            for k in range(i + 1, r):
                put(i, -k, c(f"gamma({i},{k})"))
    else:
        put(1, 2, c("alpha1"))
        put(1, 3, c("alpha1+alpha2"))
        m = c("2alpha1+alpha2")
        put(1, -1, m // 2)
        put(1, 0, m % 2)
        put(1, -3, c("3alpha1+alpha2"))
        put(1, -2, c("3alpha1+2alpha2"))
        put(2, 3, c("alpha2"))

    from .fundamental import letters  # ordering of segment letters

    order = letters(lie)
    rows = [None] * n
    for j in range(n - 1, -1, -1):
        i = j + 1
        body = []
        for letter in order:
            m = counts[i].get(letter, 0)
            if m:
                body.extend([letter] * m)
        prefix = len(rows[j + 1]) + 1 if j + 1 < n else 1
        rows[j] = (i,) * prefix + tuple(body)
    return validate(lie, rows)


def pr(lie, kp):
    """The weight of a Kostant partition: minus the sum of its parts, in root coordinates."""
    check_partition(lie, kp)
    by_label = root_by_label(lie)
    acc = [0] * lie.rank
    for label, mult in kp.items():
        vec = by_label[label].vector
        for k in range(lie.rank):
            acc[k] -= mult * vec[k]
    return tuple(acc)


def distinct_parts(kp):
    """Number of distinct roots appearing with positive multiplicity."""
    return sum(1 for m in kp.values() if m > 0)


def total_mult(kp):
    """Sum of all multiplicities."""
    return sum(m for m in kp.values() if m > 0)


def content(tab):
    """Box count of the reduced form, doubling bar(i) boxes in row i where
    the bijection sends them to two parts (types B and D, and row 1 of G2).

    Equals the total multiplicity of xi(tab).  Type C does not double: its
    bar(i) segment maps to a single long root per box.
    """
    lie = tab.lie
    fam = lie.family
    total = 0
    for j, row in enumerate(reduced_rows(tab)):
        i = j + 1
        total += len(row)
        if fam in ("B", "D") or (fam == "G" and i == 1):
            total += row.count(-i)
    return total


def sorted_items(lie, kp):
    """Partition items in canonical root order, zero multiplicities dropped."""
    order = {root.label: k for k, root in enumerate(positive_roots(lie))}
    items = [(label, mult) for label, mult in kp.items() if mult]
    items.sort(key=lambda lm: order[lm[0]])
    return items


def partition_text(lie, kp):
    items = sorted_items(lie, kp)
    if not items:
        return "0"
    return " + ".join(f"{m}*({label})" for label, m in items)
