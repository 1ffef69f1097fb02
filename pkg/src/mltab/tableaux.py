"""Marginally large semistandard Young tableaux and their crystal structure.

A tableau is marginally large when, for every i, the number of i-boxes in the
i-th row exceeds the total number of boxes in the (i+1)-st row by exactly
one.  The set of such tableaux (with the type-specific semistandardness
conditions below) carries the crystal structure of B(infinity): apply the
word operators to the far-Eastern reading and re-normalize by inserting or
deleting one basic column.

Rows are 1-indexed in error messages and the segment API; internally rows are
tuples of letter codes.
"""

from __future__ import annotations

from functools import lru_cache

from .cartan import DomainError, pairing, weight_to_root
from .fundamental import (
    is_letter,
    letter_e,
    letter_f,
    letter_key,
    letter_weight,
    word_e_position,
    word_f_position,
    _survivors,
)

ENUMERATION_GUARD = 10**6


class TableauError(DomainError):
    """A tableau failing validation; .errors lists the violated conditions."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class MLTableau:
    """A marginally large tableau of a fixed type."""

    __slots__ = ("lie", "rows")

    def __init__(self, lie, rows):
        self.lie = lie
        self.rows = tuple(tuple(row) for row in rows)

    def __eq__(self, other):
        return (
            isinstance(other, MLTableau)
            and self.lie == other.lie
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.lie, self.rows))

    def __repr__(self):
        return f"MLTableau({self.lie}, {self.rows!r})"

    def __str__(self):
        return to_text(self)


def nrows(lie):
    """Number of rows of every tableau of the type: r, or r-1 for D, or 2 for G2."""
    if lie.family == "D":
        return lie.rank - 1
    if lie.family == "G":
        return 2
    return lie.rank


def required_run(rows, j):
    """Required length of the leading j+1 run of 0-indexed row j."""
    return len(rows[j + 1]) + 1 if j + 1 < len(rows) else 1


@lru_cache(maxsize=None)
def t_infinity(lie):
    """The highest-weight element: row i is i repeated (rows below + 1) times."""
    n = nrows(lie)
    rows = [None] * n
    for j in range(n - 1, -1, -1):
        count = len(rows[j + 1]) + 1 if j + 1 < n else 1
        rows[j] = (j + 1,) * count
    return MLTableau(lie, rows)


def validate(lie, rows):
    """Check every defining condition; return the MLTableau or raise TableauError.

    Errors name the offending row and column (1-indexed).
    """
    rows = [tuple(row) for row in rows]
    errors = []
    n = nrows(lie)
    if len(rows) != n:
        raise TableauError([f"expected {n} rows for type {lie}, got {len(rows)}"])
    r = lie.rank
    for j, row in enumerate(rows):
        i = j + 1
        if not row:
            errors.append(f"row {i}: empty")
            continue
        for c, x in enumerate(row):
            if not is_letter(lie, x):
                errors.append(f"row {i}, column {c + 1}: {x} is not a letter of type {lie}")
        if any(not is_letter(lie, x) for x in row):
            continue
        keys = [letter_key(lie, x) for x in row]
        for c in range(1, len(row)):
            if keys[c] < keys[c - 1]:
                errors.append(f"row {i}, column {c + 1}: entries decrease along the row")
        # row bound: every entry at most bar(i) (trivial for type A)
        if lie.family in ("B", "C", "D"):
            bound = letter_key(lie, -i)
            for c, k in enumerate(keys):
                if k > bound:
                    errors.append(f"row {i}, column {c + 1}: entry exceeds {-i}")
        if lie.family in ("B", "G") and row.count(0) > 1:
            errors.append(f"row {i}: more than one 0 box")
        if lie.family == "D" and r in row and -r in row:
            errors.append(f"row {i}: contains both {r} and {-r}")
        if lie.family == "G" and i == 2:
            for c, x in enumerate(row):
                if x not in (2, 3):
                    errors.append(f"row 2, column {c + 1}: entry must be 2 or 3")
        need = len(rows[j + 1]) + 1 if j + 1 < n else 1
        have = row.count(i)
        if have != need:
            errors.append(
                f"row {i}: marginal largeness needs exactly {need} boxes with entry {i}, found {have}"
            )
    if not errors:
        # columns strictly increase; rows already known weakly increasing
        for j in range(1, n):
            upper, lower = rows[j - 1], rows[j]
            if len(lower) > len(upper):
                errors.append(f"row {j + 1}: longer than row {j}")
                continue
            for c in range(len(lower)):
                if letter_key(lie, lower[c]) <= letter_key(lie, upper[c]):
                    errors.append(f"row {j + 1}, column {c + 1}: column does not strictly increase")
    if errors:
        raise TableauError(errors)
    return MLTableau(lie, rows)


def reduced_rows(tab):
    """Rows with the forced leading runs removed."""
    rows = tab.rows
    return tuple(row[required_run(rows, j):] for j, row in enumerate(rows))


def from_reduced(lie, reduced):
    """Rebuild the full tableau from reduced rows (and validate it)."""
    reduced = [tuple(row) for row in reduced]
    n = nrows(lie)
    if len(reduced) != n:
        raise TableauError([f"expected {n} reduced rows for type {lie}, got {len(reduced)}"])
    rows = [None] * n
    for j in range(n - 1, -1, -1):
        count = len(rows[j + 1]) + 1 if j + 1 < n else 1
        rows[j] = (j + 1,) * count + reduced[j]
    return validate(lie, rows)


def _reading_with_coords(tab):
    rows = tab.rows
    letters_out = []
    coords = []
    for c in range(len(rows[0]) - 1, -1, -1):
        for j, row in enumerate(rows):
            if c >= len(row):
                break
            letters_out.append(row[c])
            coords.append((j, c))
    return letters_out, coords


def far_eastern_reading(tab):
    """Letters column by column, rightmost column first, top to bottom."""
    return tuple(_reading_with_coords(tab)[0])


def crystal_f(tab, i):
    """The Kashiwara lowering operator; total on this crystal."""
    lie = tab.lie
    word, coords = _reading_with_coords(tab)
    pos = word_f_position(lie, i, word)
    if pos is None:
        raise RuntimeError(f"f_{i} undefined on {tab!r}; crystal invariant broken")
    j, c = coords[pos]
    x = word[pos]
    rows = [list(row) for row in tab.rows]
    rows[j][c] = letter_f(lie, i, x)
    if x == j + 1:
        # the forced run of row j+1 lost a box: insert one basic column
        for k in range(j + 1):
            rows[k].insert(0, k + 1)
    return MLTableau(lie, rows)


def crystal_e(tab, i):
    """The Kashiwara raising operator, or None at the top of an i-string."""
    lie = tab.lie
    word, coords = _reading_with_coords(tab)
    pos = word_e_position(lie, i, word)
    if pos is None:
        return None
    j, c = coords[pos]
    y = word[pos]
    new = letter_e(lie, i, y)
    rows = [list(row) for row in tab.rows]
    rows[j][c] = new
    if new == j + 1:
        # the forced run of row j+1 gained a box: delete one basic column
        for k in range(j + 1):
            if rows[k][0] != k + 1:
                raise RuntimeError("basic column deletion hit a non-basic column")
            del rows[k][0]
    return MLTableau(lie, rows)


def eps(tab, i):
    """epsilon_i(T) = max{n : e_i^n T is defined}, via the signature rule."""
    word = _reading_with_coords(tab)[0]
    return len(_survivors(tab.lie, i, word)[0])


def weight(tab):
    """wt(T) in root coordinates (all entries <= 0).

    Computed two ways and cross-checked.  Route one goes through the reading
    word: the sum of its letter weights, normalized by the same sum for the
    all-i filling of the same shape (the image of the highest-weight element
    in the same tensor power).  Route two is minus the total of the Kostant
    partition attached to the tableau.
    """
    lie = tab.lie
    r = lie.rank
    acc = [0] * r
    for x in far_eastern_reading(tab):
        w = letter_weight(lie, x)
        for k in range(r):
            acc[k] += w[k]
    for j, row in enumerate(tab.rows):
        w = letter_weight(lie, j + 1)
        for k in range(r):
            acc[k] -= len(row) * w[k]
    route_a = weight_to_root(lie, tuple(acc))
    if any(x.denominator != 1 for x in route_a):
        raise RuntimeError(f"weight of {tab!r} is not in the root lattice")
    route_a = tuple(int(x) for x in route_a)
    from . import segments  # local import: segments builds on this module

    route_b = segments.pr(lie, segments.xi(tab))
    if route_a != route_b:
        raise RuntimeError(f"weight routes disagree on {tab!r}: {route_a} vs {route_b}")
    return route_a


def phi(tab, i):
    """phi_i(T) = eps_i(T) + <h_i, wt(T)>; may be negative on this crystal."""
    return eps(tab, i) + pairing(tab.lie, i, weight(tab))


# ---------------------------------------------------------------------------
# Bounded enumeration.

_GRAPH_CACHE = {}


def _grow_graph(lie, depth):
    cached = _GRAPH_CACHE.get(lie)
    if cached and cached[0] >= depth:
        return cached
    start = t_infinity(lie)
    node_depth = {start: 0}
    edges = []
    frontier = [start]
    for d in range(1, depth + 1):
        nxt = []
        for tab in frontier:
            for i in lie.index_set:
                child = crystal_f(tab, i)
                edges.append((tab, i, child))
                if child not in node_depth:
                    if len(node_depth) >= ENUMERATION_GUARD:
                        raise DomainError(f"crystal enumeration for {lie} exceeds guard")
                    validate(lie, child.rows)
                    node_depth[child] = d
                    nxt.append(child)
        frontier = nxt
    result = (depth, node_depth, tuple(edges))
    _GRAPH_CACHE[lie] = result
    return result


def enumerate_crystal(lie, depth):
    """All tableaux T with height(-wt(T)) <= depth, in discovery order."""
    if depth < 0:
        raise DomainError("depth must be nonnegative")
    _, node_depth, _ = _grow_graph(lie, depth)
    return [t for t, d in node_depth.items() if d <= depth]


def crystal_graph(lie, depth):
    """(node -> depth map, edge list) for the subgraph of depth <= depth.

    Edges are (source, i, target) triples; every f_i edge between retained
    nodes is present.
    """
    if depth < 0:
        raise DomainError("depth must be nonnegative")
    _, node_depth, edges = _grow_graph(lie, depth)
    nodes = {t: d for t, d in node_depth.items() if d <= depth}
    kept = [(a, i, b) for a, i, b in edges if a in nodes and node_depth[b] <= depth]
    return nodes, kept


# ---------------------------------------------------------------------------
# Text and DOT serialization.


def to_text(tab):
    """One row per line, entries comma-separated, barred letters negative."""
    return "\n".join(",".join(str(x) for x in row) for row in tab.rows)


def reduced_text(tab):
    """Reduced rows joined by '/', '*' for an emptied row."""
    parts = []
    for row in reduced_rows(tab):
        parts.append(",".join(str(x) for x in row) if row else "*")
    return "/".join(parts)


def from_text(lie, text, reduced=False):
    """Parse the one-row-per-line format; '*' or a blank line is an empty row.

    With reduced=True the forced prefixes are reconstructed first.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    n = nrows(lie)
    if len(lines) != n:
        raise TableauError([f"expected {n} rows for type {lie}, got {len(lines)}"])
    rows = []
    for ln, line in enumerate(lines, start=1):
        s = line.strip()
        if s in ("", "*"):
            rows.append(())
            continue
        try:
            rows.append(tuple(int(tok) for tok in s.split(",")))
        except ValueError:
            raise TableauError([f"row {ln}: cannot parse {line!r} as comma-separated integers"]) from None
    if reduced:
        return from_reduced(lie, rows)
    return validate(lie, rows)


def crystal_dot(lie, depth):
    """Graphviz DOT text for the crystal graph down to the given depth."""
    nodes, edges = crystal_graph(lie, depth)
    ids = {tab: f"n{k}" for k, tab in enumerate(nodes)}
    lines = [f'digraph "{lie}_crystal" {{', "  rankdir=TB;", '  node [shape=box];']
    for tab, nid in ids.items():
        lines.append(f'  {nid} [label="{reduced_text(tab)}"];')
    for a, i, b in edges:
        lines.append(f'  {ids[a]} -> {ids[b]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)
