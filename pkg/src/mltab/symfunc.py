"""q-analogues on the weight lattice.

The q-Kostant function counts Kostant partitions by total multiplicity;
Kostka-Foulkes polynomials are its alternating Weyl sums; Weyl characters
come from an independent Freudenthal recursion; Hall-Littlewood functions
are produced by inverting the unitriangular transition system
chi_lambda = sum K_{lambda,mu}(q) P_mu over dominance-ordered dominant
weights.  Weights are vectors of fundamental-weight coordinates throughout;
the q-Kostant function alone takes root coordinates.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache

from .cartan import (
    DomainError,
    cartan_matrix,
    height,
    mat_apply,
    positive_roots,
    rho,
    root_to_weight,
    stabilizer_poly,
    weight_to_root,
    weyl_group,
)
from .gkseries import kostant_partitions_of
from .polynomial import IntPoly
from .segments import content, upsilon

WEIGHT_GUARD = 10**6

__all__ = [
    "q_kostant",
    "kostka_foulkes",
    "freudenthal_multiplicity",
    "weyl_character",
    "weyl_dim",
    "hall_littlewood",
    "dominance_leq",
    "dominant_weights_below",
    "WeightPoly",
    "stabilizer_poly",
]


def _as_root_lattice_point(lie, mu):
    """mu as a tuple of ints if it lies in the positive root cone, else None."""
    out = []
    for c in mu:
        f = Fraction(c)
        if f.denominator != 1 or f < 0:
            return None
        out.append(int(f))
    if len(out) != lie.rank:
        raise DomainError(f"expected {lie.rank} coordinates, got {len(out)}")
    return tuple(out)


def q_kostant(lie, mu, via="tableau"):
    """Generating polynomial of Kostant partitions of mu by total multiplicity.

    mu is given in root coordinates; anything off the positive cone gives 0.
    Mode "bruteforce" sums q^(sum of multiplicities) over the partitions
    directly; mode "tableau" maps each partition to its tableau and reads the
    exponent off the box count instead.
    """
    point = _as_root_lattice_point(lie, mu)
    if point is None:
        return IntPoly.zero()
    if via == "bruteforce":
        return _q_kostant_direct(lie, point)
    if via != "tableau":
        raise DomainError(f"unknown q_kostant mode {via!r}")
    total = IntPoly.zero()
    for kp in kostant_partitions_of(lie, point):
        total = total + IntPoly.monomial(content(upsilon(lie, kp)))
    return total


@lru_cache(maxsize=None)
def _q_kostant_direct(lie, point):
    total = IntPoly.zero()
    for kp in kostant_partitions_of(lie, point):
        total = total + IntPoly.monomial(sum(kp.values()))
    return total


# ---------------------------------------------------------------------------
# Weyl group acting on fundamental-weight coordinates.


@lru_cache(maxsize=None)
def weyl_weight_action(lie):
    """All (matrix, length) pairs, the matrix acting on weight coordinates."""
    r = lie.rank
    basis = [weight_to_root(lie, tuple(int(k == j) for k in range(r))) for j in range(r)]
    out = []
    for m, length in weyl_group(lie).items():
        cols = []
        for j in range(r):
            w = root_to_weight(lie, mat_apply(m, basis[j]))
            col = []
            for x in w:
                f = Fraction(x)
                if f.denominator != 1:
                    raise RuntimeError(f"Weyl action on weights is not integral for {lie}")
                col.append(int(f))
            cols.append(col)
        mat = tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))
        out.append((mat, length))
    return tuple(out)


def _apply_weight(mat, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in mat)


def is_dominant(lie, weight):
    if len(weight) != lie.rank:
        raise DomainError(f"expected {lie.rank} coordinates, got {len(weight)}")
    return all(isinstance(c, int) and c >= 0 for c in weight)


def _require_dominant(lie, weight, name):
    if not is_dominant(lie, weight):
        raise DomainError(f"{name} must be a dominant weight, got {weight}")


def dominate(lie, weight):
    """The dominant representative of a weight under the Weyl action."""
    v = list(weight)
    while True:
        for i in range(len(v)):
            if v[i] < 0:
                c = v[i]
                a = cartan_matrix(lie)
                for k in range(len(v)):
                    v[k] -= c * a[k][i]
                break
        else:
            return tuple(v)


def dominance_leq(lie, mu, lam):
    """mu <= lam when lam - mu is a nonnegative integer root combination."""
    diff = weight_to_root(lie, tuple(a - b for a, b in zip(lam, mu)))
    return all(x.denominator == 1 and x >= 0 for x in map(Fraction, diff))


def dominant_weights_below(lie, lam):
    """Dominant weights nu with lam - nu in the positive root cone.

    Sorted by the height of lam - nu, so lam itself comes first.
    """
    _require_dominant(lie, lam, "lam")
    low = _longest_weight_image(lie, lam)
    box = weight_to_root(lie, tuple(a - b for a, b in zip(lam, low)))
    bounds = []
    size = 1
    for x in map(Fraction, box):
        if x.denominator != 1 or x < 0:
            raise RuntimeError(f"lam - w0(lam) left the root lattice for {lie}")
        bounds.append(int(x))
        size *= int(x) + 1
        if size > WEIGHT_GUARD:
            raise DomainError(f"weight box for {lam} exceeds guard")
    found = []

    def walk(j, kappa):
        if j == len(bounds):
            nu = tuple(
                a - b for a, b in zip(lam, root_to_weight(lie, tuple(kappa)))
            )
            if all(c >= 0 for c in nu):
                found.append((sum(kappa), tuple(kappa), nu))
            return
        for c in range(bounds[j] + 1):
            kappa.append(c)
            walk(j + 1, kappa)
            kappa.pop()

    walk(0, [])
    found.sort()
    return [nu for _, _, nu in found]


@lru_cache(maxsize=None)
def _longest_weight_image(lie, lam):
    best = None
    for mat, _ in weyl_weight_action(lie):
        v = _apply_weight(mat, lam)
        if best is None or sum(weight_to_root(lie, v)) < sum(weight_to_root(lie, best)):
            best = v
    return best


# ---------------------------------------------------------------------------
# Freudenthal recursion and characters.


@lru_cache(maxsize=None)
def _symmetrized_form(lie):
    """Integer symmetric matrix G with G[i][j] = d_i a_{ij}."""
    r = lie.rank
    a = cartan_matrix(lie)
    d = [None] * r
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(r):
            if i != j and a[i][j] and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                todo.append(j)
    if any(x is None for x in d):
        raise RuntimeError(f"Dynkin diagram of {lie} is not connected")
    scale = 1
    for x in d:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    d = [int(x * scale) for x in d]
    g = tuple(tuple(d[i] * a[i][j] for j in range(r)) for i in range(r))
    for i in range(r):
        for j in range(r):
            if g[i][j] != g[j][i]:
                raise RuntimeError(f"symmetrization failed for {lie}")
    return g


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _form(lie, vw, ww):
    """Invariant bilinear form of two weights (fundamental-weight coordinates)."""
    x = weight_to_root(lie, vw)
    y = weight_to_root(lie, ww)
    g = _symmetrized_form(lie)
    return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))


@lru_cache(maxsize=None)
def _dominant_multiplicities(lie, lam):
    """Freudenthal table: dominant weight of V(lam) -> multiplicity."""
    _require_dominant(lie, lam, "lam")
    dominants = dominant_weights_below(lie, lam)
    rho_w = rho(lie)
    lam_rho = tuple(a + b for a, b in zip(lam, rho_w))
    norm_top = _form(lie, lam_rho, lam_rho)
    table = {}
    roots_w = [
        (root_to_weight(lie, root.vector), root.vector) for root in positive_roots(lie)
    ]
    for nu in dominants:
        if nu == lam:
            table[nu] = 1
            continue
        acc = Fraction(0)
        for alpha_w, _ in roots_w:
            k = 1
            while True:
                xi = tuple(a + k * b for a, b in zip(nu, alpha_w))
                m = table.get(dominate(lie, xi))
                if m is None:
                    break
                acc += m * _form(lie, xi, alpha_w)
                k += 1
        nu_rho = tuple(a + b for a, b in zip(nu, rho_w))
        denom = norm_top - _form(lie, nu_rho, nu_rho)
        if denom <= 0:
            raise RuntimeError(f"Freudenthal denominator vanished at {nu}")
        mult = 2 * acc / denom
        if mult.denominator != 1 or mult <= 0:
            raise RuntimeError(f"Freudenthal recursion broke at {nu}: {mult}")
        table[nu] = int(mult)
    return table


def freudenthal_multiplicity(lie, lam, mu):
    """dim of the mu weight space of the highest-weight module V(lam)."""
    _require_dominant(lie, lam, "lam")
    if len(mu) != lie.rank:
        raise DomainError(f"expected {lie.rank} coordinates, got {len(mu)}")
    return _dominant_multiplicities(lie, lam).get(dominate(lie, mu), 0)


def weyl_dim(lie, lam):
    """dim V(lam) by the product formula."""
    _require_dominant(lie, lam, "lam")
    rho_w = rho(lie)
    num = Fraction(1)
    lam_rho = tuple(a + b for a, b in zip(lam, rho_w))
    for root in positive_roots(lie):
        alpha_w = root_to_weight(lie, root.vector)
        num *= Fraction(_form(lie, lam_rho, alpha_w), _form(lie, rho_w, alpha_w))
    if num.denominator != 1:
        raise RuntimeError(f"Weyl dimension formula returned {num}")
    return int(num)


# ---------------------------------------------------------------------------
# Weight-indexed polynomials, characters, Hall-Littlewood.


class WeightPoly:
    """Finite formal sum of z^weight monomials with IntPoly coefficients in q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, p in terms.items():
                if not isinstance(p, IntPoly):
                    p = IntPoly.constant(p)
                if not p.is_zero():
                    self.terms[tuple(w)] = p

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls, rank):
        return cls({(0,) * rank: IntPoly.one()})

    def coefficient(self, w):
        return self.terms.get(tuple(w), IntPoly.zero())

    def support(self):
        return sorted(self.terms)

    def __eq__(self, other):
        return isinstance(other, WeightPoly) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, p in other.terms.items():
            q = out.get(w)
            s = p if q is None else q + p
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return WeightPoly(out)

    def __sub__(self, other):
        return self + other.scale(IntPoly.constant(-1))

    def scale(self, p):
        if not isinstance(p, IntPoly):
            p = IntPoly.constant(p)
        return WeightPoly({w: c * p for w, c in self.terms.items()})

    def substitute_q(self, value):
        return WeightPoly(
            {w: IntPoly.constant(p(value)) for w, p in self.terms.items()}
        )

    def to_json_dict(self):
        return {
            ",".join(str(c) for c in w): self.terms[w].to_str("q")
            for w in self.support()
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in self.support():
            coeff = self.terms[w].to_str("q")
            if any(w):
                label = "z^(" + ",".join(str(c) for c in w) + ")"
                parts.append(f"({coeff})*{label}" if coeff != "1" else label)
            else:
                parts.append(coeff if self.terms[w].degree == 0 else f"({coeff})")
        return " + ".join(parts)

    def __repr__(self):
        return f"WeightPoly({self.terms!r})"


@lru_cache(maxsize=None)
def weyl_character(lie, lam):
    """chi_lam as a WeightPoly with constant coefficients; W-invariant."""
    table = _dominant_multiplicities(lie, lam)
    action = weyl_weight_action(lie)
    terms = {}
    for nu, mult in table.items():
        orbit = {_apply_weight(mat, nu) for mat, _ in action}
        for w in orbit:
            terms[w] = IntPoly.constant(mult)
        if len(terms) > WEIGHT_GUARD:
            raise DomainError(f"character support for {lam} exceeds guard")
    return WeightPoly(terms)


@lru_cache(maxsize=None)
def kostka_foulkes(lie, lam, mu):
    """K_{lam,mu}(q): alternating Weyl sum of the q-Kostant function."""
    lam = tuple(lam)
    mu = tuple(mu)
    _require_dominant(lie, lam, "lam")
    _require_dominant(lie, mu, "mu")
    rho_w = rho(lie)
    lam_rho = tuple(a + b for a, b in zip(lam, rho_w))
    total = IntPoly.zero()
    for mat, length in weyl_weight_action(lie):
        arg = tuple(
            a - m - r
            for a, m, r in zip(_apply_weight(mat, lam_rho), mu, rho_w)
        )
        point = _as_root_lattice_point(lie, weight_to_root(lie, arg))
        if point is None:
            continue
        p = _q_kostant_direct(lie, point)
        total = total + p if length % 2 == 0 else total - p
    return total


_HL_CACHE = {}


def hall_littlewood(lie, mu):
    """P_mu(z; q) by unitriangular inversion of chi = K * P.

    At q = 0 this degenerates to the Weyl character chi_mu.
    """
    mu = tuple(mu)
    _require_dominant(lie, mu, "mu")
    key = (lie, mu)
    cached = _HL_CACHE.get(key)
    if cached is not None:
        return cached
    result = weyl_character(lie, mu)
    for nu in dominant_weights_below(lie, mu):
        if nu == mu:
            continue
        k = kostka_foulkes(lie, mu, nu)
        if k.is_zero():
            continue
        result = result - hall_littlewood(lie, nu).scale(k)
    _HL_CACHE[key] = result
    return result
