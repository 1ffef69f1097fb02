"""Truncated series over the root lattice and the product-identity check.

Everything lives in Z[u] coefficients attached to monomials z^mu with mu in
the positive root cone; u is a stand-in for t^-1.  Series arithmetic is
exact below a fixed height cutoff and discards everything above it.  The
checked identity equates the product over positive roots of
(1 - u z^alpha)/(1 - z^alpha) with the generating sums over tableaux and
over Lusztig data, weighted by (1-u)^seg and (1-u)^nz respectively.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .cartan import DomainError, beta_sequence, canonical_long_word, height, positive_roots
from .lusztig import nz, theta
from .polynomial import IntPoly
from . import segments
from . import tableaux

SERIES_GUARD = 2 * 10**6

ONE_MINUS_U = IntPoly((1, -1))


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class TruncatedSeries:
    """A finite sum of IntPoly coefficients on monomials z^mu, height-truncated."""

    __slots__ = ("rank", "bound", "terms")

    def __init__(self, rank, bound, terms=None):
        if bound < 0:
            raise DomainError("series bound must be nonnegative")
        self.rank = rank
        self.bound = bound
        self.terms = {}
        if terms:
            for mu, p in terms.items():
                if height(mu) <= bound and not p.is_zero():
                    self.terms[mu] = p

    @classmethod
    def one(cls, rank, bound):
        return cls(rank, bound, {(0,) * rank: IntPoly.one()})

    def coefficient(self, mu):
        return self.terms.get(tuple(mu), IntPoly.zero())

    def support(self):
        return sorted(self.terms, key=lambda mu: (height(mu), mu))

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.rank == other.rank
            and self.bound == other.bound
            and self.terms == other.terms
        )

    def __add__(self, other):
        if self.rank != other.rank or self.bound != other.bound:
            raise DomainError("series shape mismatch")
        out = dict(self.terms)
        for mu, p in other.terms.items():
            q = out.get(mu)
            s = p if q is None else q + p
            if s.is_zero():
                out.pop(mu, None)
            else:
                out[mu] = s
        return TruncatedSeries(self.rank, self.bound, out)

    def __mul__(self, other):
        if self.rank != other.rank or self.bound != other.bound:
            raise DomainError("series shape mismatch")
        out = {}
        for mu, p in self.terms.items():
            h = height(mu)
            for nu, q in other.terms.items():
                if h + height(nu) > self.bound:
                    continue
                key = _vec_add(mu, nu)
                r = p * q
                s = out.get(key)
                out[key] = r if s is None else s + r
                if len(out) > SERIES_GUARD:
                    raise DomainError("series term count exceeds guard")
        return TruncatedSeries(self.rank, self.bound, out)

    def substitute(self, value):
        """Series with u evaluated at an integer; coefficients stay IntPoly."""
        out = {}
        for mu, p in self.terms.items():
            out[mu] = IntPoly.constant(p(value))
        return TruncatedSeries(self.rank, self.bound, out)


def lhs_product(lie, bound):
    """Product over positive roots of (1 - u z^alpha) / (1 - z^alpha)."""
    rank = lie.rank
    series = TruncatedSeries.one(rank, bound)
    for root in positive_roots(lie):
        h = height(root.vector)
        factor = {(0,) * rank: IntPoly.one()}
        step = (0,) * rank
        for k in range(1, bound // h + 1):
            step = _vec_add(step, root.vector)
            factor[step] = ONE_MINUS_U
        series = series * TruncatedSeries(rank, bound, factor)
    return series


def rhs_tableau_sum(lie, bound, mode="bfs"):
    """Sum of (1-u)^seg(T) z^(-wt T) over tableaux of weight height <= bound.

    Mode "bfs" walks the crystal graph; mode "upsilon" enumerates Kostant
    partitions and maps them through upsilon.  The two must agree.
    """
    rank = lie.rank
    terms = {}
    if mode == "bfs":
        for tab in tableaux.enumerate_crystal(lie, bound):
            mu = tuple(-c for c in tableaux.weight(tab))
            p = ONE_MINUS_U ** segments.seg(tab)
            q = terms.get(mu)
            terms[mu] = p if q is None else q + p
    elif mode == "upsilon":
        for kp, mu in kostant_partitions_up_to(lie, bound):
            tab = segments.upsilon(lie, kp)
            p = ONE_MINUS_U ** segments.seg(tab)
            q = terms.get(mu)
            terms[mu] = p if q is None else q + p
    else:
        raise DomainError(f"unknown tableau-sum mode {mode!r}")
    return TruncatedSeries(rank, bound, terms)


def rhs_lusztig_sum(lie, bound, word=None):
    """Sum of (1-u)^nz(c) z^(sum c_j beta_j) over coordinate vectors c."""
    if word is None:
        word = canonical_long_word(lie)
    seq = beta_sequence(lie, word)
    rank = lie.rank
    heights = [height(root.vector) for root in seq]
    vectors = [root.vector for root in seq]
    terms = {}

    def walk(j, budget, mu, used):
        if j == len(seq):
            p = ONE_MINUS_U ** used
            q = terms.get(mu)
            terms[mu] = p if q is None else q + p
            return
        walk(j + 1, budget, mu, used)
        h = heights[j]
        step = mu
        left = budget
        while left >= h:
            left -= h
            step = _vec_add(step, vectors[j])
            walk(j + 1, left, step, used + 1)

    walk(0, bound, (0,) * rank, 0)
    return TruncatedSeries(rank, bound, terms)


# ---------------------------------------------------------------------------
# Kostant partition enumeration.


def kostant_partitions_up_to(lie, bound):
    """All (partition dict, total vector) pairs with height(total) <= bound."""
    roots = positive_roots(lie)
    rank = lie.rank
    out = []

    def walk(j, budget, mu, kp):
        if j == len(roots):
            out.append((dict(kp), mu))
            return
        walk(j + 1, budget, mu, kp)
        root = roots[j]
        h = height(root.vector)
        step = mu
        left = budget
        mult = 0
        while left >= h:
            left -= h
            step = _vec_add(step, root.vector)
            mult += 1
            kp[root.label] = mult
            walk(j + 1, left, step, kp)
        kp.pop(root.label, None)
        if len(out) > SERIES_GUARD:
            raise DomainError("partition enumeration exceeds guard")

    walk(0, bound, (0,) * rank, {})
    return out


def kostant_partitions_of(lie, mu):
    """All Kostant partitions of the exact vector mu (root coordinates)."""
    mu = tuple(mu)
    if len(mu) != lie.rank:
        raise DomainError(f"expected {lie.rank} coordinates, got {len(mu)}")
    if any(c < 0 for c in mu):
        return []
    roots = positive_roots(lie)
    out = []

    def walk(j, rest, kp):
        if not any(rest):
            out.append(dict(kp))
            return
        if j == len(roots):
            return
        walk(j + 1, rest, kp)
        root = roots[j]
        step = rest
        mult = 0
        while True:
            step = tuple(a - b for a, b in zip(step, root.vector))
            if any(c < 0 for c in step):
                break
            mult += 1
            kp[root.label] = mult
            walk(j + 1, step, kp)
        kp.pop(root.label, None)

    walk(0, mu, {})
    return out


@lru_cache(maxsize=None)
def _count_from(lie, j, rest):
    if not any(rest):
        return 1
    roots = positive_roots(lie)
    if j == len(roots):
        return 0
    total = _count_from(lie, j + 1, rest)
    step = rest
    while True:
        step = tuple(a - b for a, b in zip(step, roots[j].vector))
        if any(c < 0 for c in step):
            break
        total += _count_from(lie, j + 1, step)
    return total


def kostant_count(lie, mu):
    """Number of Kostant partitions of mu; 0 off the positive cone."""
    mu = tuple(mu)
    if len(mu) != lie.rank:
        raise DomainError(f"expected {lie.rank} coordinates, got {len(mu)}")
    if any(c < 0 for c in mu):
        return 0
    return _count_from(lie, 0, mu)


# ---------------------------------------------------------------------------
# Identity verification and report.


def one_minus_u_basis(p):
    """Coefficients (n_0, n_1, ...) with p = sum of n_d (1-u)^d."""
    return p(ONE_MINUS_U).coeffs


@dataclass
class GKEntry:
    mu: tuple
    height: int
    coeff: IntPoly
    seg_counts: tuple
    ok: bool

    def to_json_dict(self):
        return {
            "mu": list(self.mu),
            "height": self.height,
            "coeff": self.coeff.to_str("u"),
            "seg_counts": list(self.seg_counts),
            "ok": self.ok,
        }


@dataclass
class GKReport:
    lie: object
    bound: int
    word: tuple
    equal: bool
    entries: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)

    def to_json_dict(self):
        return {
            "type": str(self.lie),
            "bound": self.bound,
            "word": list(self.word),
            "equal": self.equal,
            "entries": [e.to_json_dict() for e in self.entries],
            "mismatches": self.mismatches,
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def verify_gk(lie, bound, word=None, threads=1):
    """Compare the product with both tableau sums and the Lusztig sum.

    All four series are computed independently; the report records the
    product coefficient per monomial, its expansion in powers of (1-u), and
    any monomial where a route disagrees.
    """
    if word is None:
        word = canonical_long_word(lie)
    builders = (
        lambda: lhs_product(lie, bound),
        lambda: rhs_tableau_sum(lie, bound, mode="bfs"),
        lambda: rhs_tableau_sum(lie, bound, mode="upsilon"),
        lambda: rhs_lusztig_sum(lie, bound, word),
    )
    if threads > 1:
        with ThreadPoolExecutor(max_workers=min(threads, len(builders))) as pool:
            lhs, via_bfs, via_upsilon, via_lusztig = (
                f.result() for f in [pool.submit(b) for b in builders]
            )
    else:
        lhs, via_bfs, via_upsilon, via_lusztig = (b() for b in builders)
    names = ("tableau-bfs", "tableau-upsilon", "lusztig")
    route_terms = (via_bfs.terms, via_upsilon.terms, via_lusztig.terms)
    support = set(lhs.terms)
    for terms in route_terms:
        support.update(terms)
    zero = IntPoly.zero()
    entries = []
    mismatches = []
    for mu in sorted(support, key=lambda v: (height(v), v)):
        p = lhs.terms.get(mu, zero)
        bad = [
            name
            for name, terms in zip(names, route_terms)
            if terms.get(mu, zero) != p
        ]
        counts = one_minus_u_basis(p)
        ok = not bad and all(c >= 0 for c in counts)
        entries.append(GKEntry(mu, height(mu), p, counts, ok))
        if not ok:
            mismatches.append(
                {
                    "mu": list(mu),
                    "routes": bad,
                    "product": p.to_str("u"),
                    "values": {
                        name: terms.get(mu, zero).to_str("u")
                        for name, terms in zip(names, route_terms)
                    },
                }
            )
    return GKReport(lie, bound, tuple(word), not mismatches, entries, mismatches)
