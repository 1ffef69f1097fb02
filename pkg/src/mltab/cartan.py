"""Cartan data for the finite types A, B, C, D, and G2.

Everything downstream (crystals, tableaux, series) is phrased in terms of the
data here: Cartan matrices in Bourbaki numbering, the positive roots of each
type with their (i, k) labels, simple reflections, Weyl groups as integer
matrices acting on root coordinates, and reduced words for the longest
element.

Root vectors are tuples of integers: the coefficients of a vector in the
simple-root basis (alpha_1, ..., alpha_r).  Weight vectors are tuples of
integers in the fundamental-weight basis (omega_1, ..., omega_r).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .polynomial import IntPoly

# Root and weight coordinate tuples.  Kept as aliases on purpose: all
# arithmetic stays tuple-based and exact.
RootVector = tuple
WeightVector = tuple

_SUPPORTED = {
    "A": range(1, 9),
    "B": range(2, 6),
    "C": range(2, 6),
    "D": range(3, 6),
    "G": range(2, 3),
}

WEYL_ORDER_GUARD = 10**7


class DomainError(ValueError):
    """An input outside the supported domain (bad type, invalid word, ...)."""


@dataclass(frozen=True)
class LieType:
    """A supported finite type, e.g. LieType('B', 3)."""

    family: str
    rank: int

    def __post_init__(self):
        ranks = _SUPPORTED.get(self.family)
        if ranks is None or self.rank not in ranks:
            raise DomainError(
                f"unsupported type {self.family}{self.rank}; supported: "
                "A1..A8, B2..B5, C2..C5, D3..D5, G2"
            )

    @classmethod
    def parse(cls, text):
        s = str(text).strip().upper()
        if len(s) < 2 or s[0] not in "ABCDG" or not s[1:].isdigit():
            raise DomainError(f"cannot parse Lie type from {text!r}")
        return cls(s[0], int(s[1:]))

    @property
    def index_set(self):
        return range(1, self.rank + 1)

    def __str__(self):
        return f"{self.family}{self.rank}"


class PositiveRoot(NamedTuple):
    label: str
    vector: tuple


def height(vector):
    """Sum of simple-root coefficients."""
    return sum(vector)


@lru_cache(maxsize=None)
def cartan_matrix(lie):
    """The Cartan matrix (a_ij) with a_ij = <h_i, alpha_j>, Bourbaki numbering.

    For B_r the last simple root is short (a_{r,r-1} = -2), for C_r it is long
    (a_{r-1,r} = -2), for D_r the last two nodes both attach to node r-2, and
    for G2 the first simple root is short (a_12 = -3).
    """
    r = lie.rank
    if lie.family == "G":
        return ((2, -3), (-1, 2))
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
    if lie.family == "D":
        edges = [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
    else:
        for i in range(r - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if lie.family == "B":
            a[r - 1][r - 2] = -2
        elif lie.family == "C":
            a[r - 2][r - 1] = -2
    return tuple(tuple(row) for row in a)


def _unit_sum(r, pairs):
    """Vector with coefficient c on positions [lo, hi] for each (lo, hi, c)."""
    v = [0] * r
    for lo, hi, c in pairs:
        for j in range(lo, hi + 1):
            v[j - 1] += c
    return tuple(v)


_G2_ROOTS = (
    ("alpha1", (1, 0)),
    ("alpha1+alpha2", (1, 1)),
    ("2alpha1+alpha2", (2, 1)),
    ("3alpha1+alpha2", (3, 1)),
    ("3alpha1+2alpha2", (3, 2)),
    ("alpha2", (0, 1)),
)


@lru_cache(maxsize=None)
def positive_roots(lie):
    """All positive roots with their canonical labels, in canonical order.

    Labels are beta(i,k) / gamma(i,k) following the standard tables; the
    canonical order lists all betas by (i, k) lexicographically, then all
    gammas.  G2 uses the six explicit root names.
    """
    r = lie.rank
    fam = lie.family
    roots = []
    if fam == "A":
        for i in range(1, r + 1):
            for k in range(i, r + 1):
                roots.append(PositiveRoot(f"beta({i},{k})", _unit_sum(r, [(i, k, 1)])))
    elif fam == "B":
        for i in range(1, r + 1):
            for k in range(i, r + 1):
                roots.append(PositiveRoot(f"beta({i},{k})", _unit_sum(r, [(i, k, 1)])))
        for i in range(1, r + 1):
            for k in range(i + 1, r + 1):
                vec = _unit_sum(r, [(i, k - 1, 1), (k, r, 2)])
                roots.append(PositiveRoot(f"gamma({i},{k})", vec))
    elif fam == "C":
        for i in range(1, r):
            for k in range(i, r):
                roots.append(PositiveRoot(f"beta({i},{k})", _unit_sum(r, [(i, k, 1)])))
        for i in range(1, r + 1):
            for k in range(i, r + 1):
                # alpha_i + ... + alpha_{r-1} + alpha_r + alpha_{r-1} + ... + alpha_k
                vec = _unit_sum(r, [(i, r - 1, 1), (k, r - 1, 1), (r, r, 1)])
                roots.append(PositiveRoot(f"gamma({i},{k})", vec))
    elif fam == "D":
        for i in range(1, r):
            for k in range(i, r + 1):
                if k < r:
                    vec = _unit_sum(r, [(i, k, 1)])
                else:
                    # beta(i, r) skips alpha_{r-1}; for i = r-1 it is alpha_r alone
                    vec = _unit_sum(r, [(i, r - 2, 1), (r, r, 1)])
                roots.append(PositiveRoot(f"beta({i},{k})", vec))
        for i in range(1, r - 1):
            for k in range(i + 1, r):
                vec = _unit_sum(r, [(i, r - 1, 1), (r, r, 1), (k, r - 2, 1)])
                roots.append(PositiveRoot(f"gamma({i},{k})", vec))
    else:
        roots = [PositiveRoot(lbl, vec) for lbl, vec in _G2_ROOTS]
    return tuple(roots)


@lru_cache(maxsize=None)
def root_by_label(lie):
    return {root.label: root for root in positive_roots(lie)}


@lru_cache(maxsize=None)
def root_by_vector(lie):
    # distinct roots always have distinct coefficient vectors
    return {root.vector: root for root in positive_roots(lie)}


def num_positive_roots(lie):
    return len(positive_roots(lie))


def pairing(lie, i, vector):
    """<h_i, v> for v in root coordinates."""
    row = cartan_matrix(lie)[i - 1]
    return sum(a * c for a, c in zip(row, vector))


def reflect_root(lie, i, vector):
    """Simple reflection s_i applied to a vector in root coordinates."""
    c = pairing(lie, i, vector)
    out = list(vector)
    out[i - 1] -= c
    return tuple(out)


def simple_root_in_weights(lie, i):
    """alpha_i written in the fundamental-weight basis: column i of the Cartan matrix."""
    a = cartan_matrix(lie)
    return tuple(a[k][i - 1] for k in range(lie.rank))


def reflect_weight(lie, i, weight):
    """Simple reflection s_i applied to a vector in fundamental-weight coordinates."""
    c = weight[i - 1]
    alpha = simple_root_in_weights(lie, i)
    return tuple(w - c * a for w, a in zip(weight, alpha))


def root_to_weight(lie, vector):
    """Convert root coordinates to fundamental-weight coordinates (A * v)."""
    a = cartan_matrix(lie)
    return tuple(sum(a[k][j] * vector[j] for j in range(lie.rank)) for k in range(lie.rank))


@lru_cache(maxsize=None)
def _cartan_inverse(lie):
    """A^{-1} as a tuple matrix of Fractions."""
    r = lie.rank
    a = [[Fraction(x) for x in row] for row in cartan_matrix(lie)]
    inv = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    for col in range(r):
        piv = next(k for k in range(col, r) if a[k][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for k in range(r):
            if k != col and a[k][col]:
                f = a[k][col]
                a[k] = [x - f * y for x, y in zip(a[k], a[col])]
                inv[k] = [x - f * y for x, y in zip(inv[k], inv[col])]
    return tuple(tuple(row) for row in inv)


def weight_to_root(lie, weight):
    """Convert fundamental-weight coordinates to root coordinates (Fractions)."""
    inv = _cartan_inverse(lie)
    return tuple(sum(inv[k][j] * weight[j] for j in range(lie.rank)) for k in range(lie.rank))


def rho(lie):
    """The Weyl vector in fundamental-weight coordinates."""
    return (1,) * lie.rank


# ---------------------------------------------------------------------------
# Weyl group machinery.  Elements are integer matrices acting on root
# coordinates; w maps alpha_j to the j-th column of its matrix.


def identity_matrix(r):
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def simple_reflection_matrix(lie, i):
    a = cartan_matrix(lie)
    r = lie.rank
    return tuple(
        tuple((int(k == j) - a[i - 1][j]) if k == i - 1 else int(k == j) for j in range(r))
        for k in range(r)
    )


def mat_mul(m1, m2):
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(len(m2))) for j in range(len(m2[0])))
        for i in range(len(m1))
    )


def mat_apply(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _column(m, i):
    return tuple(row[i - 1] for row in m)


def _is_negative_root_vec(v):
    return all(c <= 0 for c in v) and any(c < 0 for c in v)


def weyl_order(lie):
    """|W| from the classical product formulas."""
    import math

    r = lie.rank
    if lie.family == "A":
        return math.factorial(r + 1)
    if lie.family in "BC":
        return (2**r) * math.factorial(r)
    if lie.family == "D":
        return (2 ** (r - 1)) * math.factorial(r)
    return 12


class WeylGroup:
    """The full Weyl group, built by breadth-first search over generators.

    Elements are stored as byte-encoded matrices mapped to Coxeter length
    (= BFS depth in the Cayley graph of the simple reflections).
    """

    def __init__(self, lie):
        expected = weyl_order(lie)
        if expected > WEYL_ORDER_GUARD:
            raise DomainError(f"Weyl group of {lie} has order {expected} > guard")
        self.lie = lie
        r = lie.rank
        gens = [simple_reflection_matrix(lie, i) for i in lie.index_set]
        ident = identity_matrix(r)
        lengths = {self._encode(ident): 0}
        frontier = [ident]
        depth = 0
        while frontier:
            depth += 1
            nxt = []
            for m in frontier:
                for g in gens:
                    m2 = mat_mul(m, g)
                    key = self._encode(m2)
                    if key not in lengths:
                        lengths[key] = depth
                        nxt.append(m2)
            frontier = nxt
        if len(lengths) != expected:
            raise RuntimeError(f"Weyl BFS of {lie} found {len(lengths)} elements, expected {expected}")
        self._lengths = lengths
        self.order = expected
        self.max_length = depth - 1
        longest = [k for k, v in lengths.items() if v == self.max_length]
        if len(longest) != 1 or self.max_length != num_positive_roots(lie):
            raise RuntimeError(f"longest element of {lie} is not unique of length N")
        self.longest = self._decode(longest[0])

    def _encode(self, m):
        flat = [c + 128 for row in m for c in row]
        if any(not 0 <= x < 256 for x in flat):
            raise RuntimeError("Weyl matrix entry out of byte range")
        return bytes(flat)

    def _decode(self, key):
        r = self.lie.rank
        vals = [b - 128 for b in key]
        return tuple(tuple(vals[i * r : (i + 1) * r]) for i in range(r))

    def __len__(self):
        return self.order

    def items(self):
        """Yield (matrix, length) pairs."""
        for key, ln in self._lengths.items():
            yield self._decode(key), ln

    def length_of(self, matrix):
        return self._lengths[self._encode(matrix)]

    def __contains__(self, matrix):
        try:
            return self._encode(matrix) in self._lengths
        except RuntimeError:
            return False


@lru_cache(maxsize=None)
def weyl_group(lie):
    return WeylGroup(lie)


def _word_matrix(lie, word):
    m = identity_matrix(lie.rank)
    for i in word:
        if i not in lie.index_set:
            raise DomainError(f"reflection index {i} out of range for {lie}")
        m = mat_mul(m, simple_reflection_matrix(lie, i))
    return m


def validate_long_word(lie, word):
    """True iff word is a reduced word for the longest element.

    Uses the characterization that the longest element is the unique one
    sending every simple root to a negative root; a product of N simple
    reflections equal to it is automatically reduced.
    """
    word = tuple(word)
    if len(word) != num_positive_roots(lie):
        return False
    try:
        m = _word_matrix(lie, word)
    except DomainError:
        return False
    return all(_is_negative_root_vec(_column(m, i)) for i in lie.index_set)


def canonical_long_word(lie):
    """A deterministic reduced word for the longest element.

    Greedy ascent from the identity: repeatedly append the smallest i with
    w(alpha_i) still positive.
    """
    m = identity_matrix(lie.rank)
    word = []
    while True:
        ascent = None
        for i in lie.index_set:
            if not _is_negative_root_vec(_column(m, i)):
                ascent = i
                break
        if ascent is None:
            break
        word.append(ascent)
        m = mat_mul(m, simple_reflection_matrix(lie, ascent))
    return tuple(word)


def random_long_word(lie, rng=None):
    """A random reduced word for the longest element (validated by construction).

    Same greedy ascent as canonical_long_word but chooses uniformly among the
    available ascents; every reduced word of the longest element occurs with
    positive probability.
    """
    rng = rng or random.Random()
    m = identity_matrix(lie.rank)
    word = []
    while True:
        ascents = [i for i in lie.index_set if not _is_negative_root_vec(_column(m, i))]
        if not ascents:
            break
        i = rng.choice(ascents)
        word.append(i)
        m = mat_mul(m, simple_reflection_matrix(lie, i))
    return tuple(word)


def all_long_words(lie):
    """Every reduced word for the longest element.

    Exhaustive enumeration is only allowed where the answer is small: rank at
    most 2, plus A3 and B3.  Use random_long_word elsewhere.
    """
    if lie.rank > 2 and str(lie) not in ("A3", "B3"):
        raise DomainError(f"exhaustive long-word enumeration not supported for {lie}; use the sampler")
    gens = {i: simple_reflection_matrix(lie, i) for i in lie.index_set}
    ident = identity_matrix(lie.rank)
    memo = {ident: ((),)}

    def words_for(m):
        if m in memo:
            return memo[m]
        out = []
        for i in lie.index_set:
            if _is_negative_root_vec(_column(m, i)):
                shorter = mat_mul(m, gens[i])
                out.extend(w + (i,) for w in words_for(shorter))
        memo[m] = tuple(out)
        return memo[m]

    return words_for(weyl_group(lie).longest)


def beta_sequence(lie, word):
    """The positive-root sequence beta_j = s_{i_1}...s_{i_{j-1}}(alpha_{i_j}).

    Requires a reduced word for the longest element; the result is a
    permutation of positive_roots(lie), returned as PositiveRoot entries in
    word order.
    """
    word = tuple(word)
    if not validate_long_word(lie, word):
        raise DomainError(f"{word} is not a reduced word for the longest element of {lie}")
    by_vec = root_by_vector(lie)
    m = identity_matrix(lie.rank)
    betas = []
    for i in word:
        vec = _column(m, i)
        root = by_vec.get(vec)
        if root is None:
            raise RuntimeError(f"beta sequence left the positive-root table at {vec}")
        betas.append(root)
        m = mat_mul(m, simple_reflection_matrix(lie, i))
    if len(set(b.label for b in betas)) != len(betas):
        raise RuntimeError("beta sequence is not a permutation of the positive roots")
    return tuple(betas)


def stabilizer_poly(lie, weight):
    """Poincare polynomial sum_{w mu = mu} q^{l(w)} of the stabilizer of a weight.

    The weight is given in fundamental-weight coordinates.
    """
    x = weight_to_root(lie, tuple(weight))
    coeffs = {}
    for m, ln in weyl_group(lie).items():
        if mat_apply(m, x) == x:
            coeffs[ln] = coeffs.get(ln, 0) + 1
    if not coeffs:
        return IntPoly.zero()
    out = [0] * (max(coeffs) + 1)
    for ln, c in coeffs.items():
        out[ln] = c
    return IntPoly(out)
