"""The fundamental crystal B(omega_1) for each type, and words over its letters.

Letters are encoded as integers: k for an unbarred box, -k for a barred box,
0 for the zero box of types B and G2.  The crystal structure is a small edge
table per type; epsilon/phi of a letter count steps along i-edges, and letter
weights are propagated down the graph from wt(1) = omega_1.

Words (tuples of letters) carry the tensor-product crystal structure via the
usual signature rule: scan the word, emit eps_i(x) minuses then phi_i(x)
pluses for each letter, cancel each minus against the nearest surviving plus
to its left; f_i acts at the leftmost surviving plus, e_i at the rightmost
surviving minus.
"""

from __future__ import annotations

from functools import lru_cache

from .cartan import DomainError, simple_root_in_weights


@lru_cache(maxsize=None)
def letters(lie):
    """All letters of B(omega_1) in increasing crystal order.

    In type D the letters r and -r are incomparable; r is listed first by
    convention but the order key below ranks them equally.
    """
    r = lie.rank
    if lie.family == "A":
        return tuple(range(1, r + 2))
    if lie.family == "B":
        return tuple(range(1, r + 1)) + (0,) + tuple(range(-r, 0))
    if lie.family == "C":
        return tuple(range(1, r + 1)) + tuple(range(-r, 0))
    if lie.family == "D":
        return tuple(range(1, r + 1)) + tuple(range(-r, 0))
    return (1, 2, 3, 0, -3, -2, -1)


@lru_cache(maxsize=None)
def _order_keys(lie):
    r = lie.rank
    keys = {}
    if lie.family == "A":
        for x in range(1, r + 2):
            keys[x] = x
    elif lie.family == "B":
        for x in range(1, r + 1):
            keys[x] = x
        keys[0] = r + 1
        for x in range(1, r + 1):
            keys[-x] = 2 * r + 2 - x
    elif lie.family == "C":
        for x in range(1, r + 1):
            keys[x] = x
        for x in range(1, r + 1):
            keys[-x] = 2 * r + 1 - x
    elif lie.family == "D":
        # r and -r share a rank: they are incomparable and never stack
        for x in range(1, r + 1):
            keys[x] = x
        keys[-r] = r
        for x in range(1, r):
            keys[-x] = 2 * r - x
    else:
        for rank_, x in enumerate((1, 2, 3, 0, -3, -2, -1), start=1):
            keys[x] = rank_
    return keys


def letter_key(lie, x):
    """Order rank of a letter, for semistandardness comparisons."""
    try:
        return _order_keys(lie)[x]
    except KeyError:
        raise DomainError(f"{x} is not a letter of type {lie}") from None


def is_letter(lie, x):
    return x in _order_keys(lie)


@lru_cache(maxsize=None)
def _f_edges(lie):
    """Edge table {(i, x): y} meaning f_i(x) = y."""
    r = lie.rank
    fam = lie.family
    edges = {}
    if fam == "A":
        for i in range(1, r + 1):
            edges[(i, i)] = i + 1
    elif fam == "B":
        for i in range(1, r):
            edges[(i, i)] = i + 1
            edges[(i, -(i + 1))] = -i
        edges[(r, r)] = 0
        edges[(r, 0)] = -r
    elif fam == "C":
        for i in range(1, r):
            edges[(i, i)] = i + 1
            edges[(i, -(i + 1))] = -i
        edges[(r, r)] = -r
    elif fam == "D":
        for i in range(1, r - 1):
            edges[(i, i)] = i + 1
            edges[(i, -(i + 1))] = -i
        edges[(r - 1, r - 1)] = r
        edges[(r, r - 1)] = -r
        edges[(r, r)] = -(r - 1)
        edges[(r - 1, -r)] = -(r - 1)
    else:
        edges = {(1, 1): 2, (2, 2): 3, (1, 3): 0, (1, 0): -3, (2, -3): -2, (1, -2): -1}
    return edges


@lru_cache(maxsize=None)
def _e_edges(lie):
    return {(i, y): x for (i, x), y in _f_edges(lie).items()}


def letter_f(lie, i, x):
    """f_i on a letter, or None."""
    return _f_edges(lie).get((i, x))


def letter_e(lie, i, x):
    """e_i on a letter, or None."""
    return _e_edges(lie).get((i, x))


@lru_cache(maxsize=None)
def _eps_phi_tables(lie):
    eps = {}
    phi = {}
    for x in letters(lie):
        for i in lie.index_set:
            n, y = 0, x
            while (i, y) in _e_edges(lie):
                y = _e_edges(lie)[(i, y)]
                n += 1
            if n:
                eps[(i, x)] = n
            n, y = 0, x
            while (i, y) in _f_edges(lie):
                y = _f_edges(lie)[(i, y)]
                n += 1
            if n:
                phi[(i, x)] = n
    return eps, phi


def letter_eps(lie, i, x):
    return _eps_phi_tables(lie)[0].get((i, x), 0)


def letter_phi(lie, i, x):
    return _eps_phi_tables(lie)[1].get((i, x), 0)


@lru_cache(maxsize=None)
def letter_weights(lie):
    """Weights of all letters in fundamental-weight coordinates.

    Propagated from wt(1) = omega_1 along wt(f_i x) = wt(x) - alpha_i; the
    propagation is checked for consistency on every edge (the type D diamond
    reaches some letters twice).
    """
    alphas = {i: simple_root_in_weights(lie, i) for i in lie.index_set}
    wts = {1: (1,) + (0,) * (lie.rank - 1)}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for i in lie.index_set:
                y = letter_f(lie, i, x)
                if y is None:
                    continue
                w = tuple(a - b for a, b in zip(wts[x], alphas[i]))
                if y in wts:
                    if wts[y] != w:
                        raise RuntimeError(f"inconsistent letter weights in {lie} at {y}")
                else:
                    wts[y] = w
                    nxt.append(y)
        frontier = nxt
    if set(wts) != set(letters(lie)):
        raise RuntimeError(f"letter weight propagation missed letters in {lie}")
    return wts


def letter_weight(lie, x):
    return letter_weights(lie)[x]


# ---------------------------------------------------------------------------
# Words.


def _survivors(lie, i, word):
    """(surviving minus positions, surviving plus positions) after cancellation."""
    eps_t, phi_t = _eps_phi_tables(lie)
    minuses = []
    pluses = []
    for pos, x in enumerate(word):
        for _ in range(eps_t.get((i, x), 0)):
            if pluses:
                pluses.pop()
            else:
                minuses.append(pos)
        for _ in range(phi_t.get((i, x), 0)):
            pluses.append(pos)
    return minuses, pluses


def word_eps(lie, i, word):
    return len(_survivors(lie, i, word)[0])


def word_phi(lie, i, word):
    return len(_survivors(lie, i, word)[1])


def word_f_position(lie, i, word):
    """Index of the letter f_i acts on, or None."""
    pluses = _survivors(lie, i, word)[1]
    return pluses[0] if pluses else None


def word_e_position(lie, i, word):
    """Index of the letter e_i acts on, or None."""
    minuses = _survivors(lie, i, word)[0]
    return minuses[-1] if minuses else None


def word_f(lie, i, word):
    pos = word_f_position(lie, i, word)
    if pos is None:
        return None
    out = list(word)
    out[pos] = letter_f(lie, i, out[pos])
    return tuple(out)


def word_e(lie, i, word):
    pos = word_e_position(lie, i, word)
    if pos is None:
        return None
    out = list(word)
    out[pos] = letter_e(lie, i, out[pos])
    return tuple(out)
