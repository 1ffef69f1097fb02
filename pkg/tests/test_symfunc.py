import json
from fractions import Fraction

import pytest

from mltab.cartan import DomainError, LieType, root_to_weight, weyl_order
from mltab.polynomial import IntPoly
from mltab.symfunc import (
    WeightPoly,
    dominance_leq,
    dominant_weights_below,
    dominate,
    freudenthal_multiplicity,
    hall_littlewood,
    is_dominant,
    kostka_foulkes,
    q_kostant,
    stabilizer_poly,
    weyl_character,
    weyl_dim,
    weyl_weight_action,
)


def lt(name):
    return LieType.parse(name)


class TestQKostant:
    def test_modes_agree(self):
        for name in ["A2", "B2", "G2"]:
            lie = lt(name)
            for a in range(4):
                for b in range(4):
                    mu = (a, b)
                    assert q_kostant(lie, mu) == q_kostant(lie, mu, via="bruteforce")

    def test_simple_values(self):
        a2 = lt("A2")
        assert q_kostant(a2, (0, 0)) == IntPoly.one()
        # alpha1 + alpha2: one partition of one part, one of two parts
        assert q_kostant(a2, (1, 1)) == IntPoly((0, 1, 1))

    def test_off_cone_is_zero(self):
        a2 = lt("A2")
        assert q_kostant(a2, (-1, 2)).is_zero()
        assert q_kostant(a2, (Fraction(1, 2), 1)).is_zero()

    def test_fraction_input_on_lattice(self):
        a2 = lt("A2")
        assert q_kostant(a2, (Fraction(2), Fraction(1))) == q_kostant(a2, (2, 1))

    def test_bad_mode(self):
        with pytest.raises(DomainError):
            q_kostant(lt("A2"), (1, 1), via="nope")


class TestWeylAction:
    def test_size_and_identity(self):
        for name in ["A2", "B2", "G2"]:
            lie = lt(name)
            action = weyl_weight_action(lie)
            assert len(action) == weyl_order(lie)
            identities = [mat for mat, length in action if length == 0]
            assert len(identities) == 1

    def test_dominate(self):
        b2 = lt("B2")
        for w in [(-1, 3), (2, -5), (0, 0), (1, 1)]:
            d = dominate(b2, w)
            assert is_dominant(b2, d)
        assert dominate(b2, (1, 1)) == (1, 1)

    def test_dominance_order(self):
        a2 = lt("A2")
        assert dominance_leq(a2, (0, 0), (1, 1))
        assert not dominance_leq(a2, (1, 1), (0, 0))
        # lam - mu = alpha requires integer nonneg root coefficients
        assert not dominance_leq(a2, (1, 0), (0, 1))

    def test_dominant_weights_below(self):
        a2 = lt("A2")
        below = dominant_weights_below(a2, (1, 1))
        assert below[0] == (1, 1)
        assert set(below) == {(1, 1), (0, 0)}
        for nu in below:
            assert is_dominant(a2, nu)
            assert dominance_leq(a2, nu, (1, 1))


FREUDENTHAL_DIMS = [
    ("A2", (1, 0), 3),
    ("A2", (1, 1), 8),
    ("B2", (1, 0), 5),
    ("C2", (1, 0), 4),
    ("G2", (1, 0), 7),
    ("G2", (0, 1), 14),
]


class TestFreudenthal:
    @pytest.mark.parametrize("name,lam,dim", FREUDENTHAL_DIMS)
    def test_dimensions(self, name, lam, dim):
        lie = lt(name)
        assert weyl_dim(lie, lam) == dim
        # summing multiplicities over full orbits gives the same dimension
        total = 0
        action = weyl_weight_action(lie)
        seen = set()
        for nu in dominant_weights_below(lie, lam):
            m = freudenthal_multiplicity(lie, lam, nu)
            orbit = {tuple(sum(row[k] * nu[k] for k in range(lie.rank)) for row in mat) for mat, _ in action}
            for w in orbit:
                assert w not in seen
                seen.add(w)
            total += m * len(orbit)
        assert total == dim

    def test_adjoint_zero_weight(self):
        assert freudenthal_multiplicity(lt("A2"), (1, 1), (0, 0)) == 2
        assert freudenthal_multiplicity(lt("G2"), (0, 1), (0, 0)) == 2

    def test_highest_weight_multiplicity(self):
        assert freudenthal_multiplicity(lt("B2"), (2, 1), (2, 1)) == 1

    def test_requires_dominant(self):
        with pytest.raises(DomainError):
            freudenthal_multiplicity(lt("A2"), (-1, 0), (0, 0))


class TestCharacters:
    def test_defining_character(self):
        a2 = lt("A2")
        chi = weyl_character(a2, (1, 0))
        assert len(chi.support()) == 3
        assert chi.coefficient((1, 0)) == IntPoly.one()
        assert chi.substitute_q(1) == chi  # constant coefficients

    def test_character_dimension(self):
        g2 = lt("G2")
        chi = weyl_character(g2, (1, 0))
        total = sum(chi.coefficient(w)(1) for w in chi.support())
        assert total == 7


class TestKostkaFoulkes:
    def test_diagonal_is_one(self):
        for name in ["A2", "B2", "G2"]:
            lie = lt(name)
            for lam in [(0, 0), (1, 0), (1, 1), (2, 1)]:
                assert kostka_foulkes(lie, lam, lam) == IntPoly.one()

    def test_adjoint_to_zero(self):
        assert kostka_foulkes(lt("A2"), (1, 1), (0, 0)) == IntPoly((0, 1, 1))

    def test_value_at_one_is_multiplicity(self):
        for name in ["A2", "B2", "G2"]:
            lie = lt(name)
            lam = (1, 1)
            for mu in dominant_weights_below(lie, lam):
                k = kostka_foulkes(lie, lam, mu)
                assert k(1) == freudenthal_multiplicity(lie, lam, mu)
                assert all(c >= 0 for c in k.coeffs)

    def test_zero_when_not_below(self):
        a2 = lt("A2")
        assert kostka_foulkes(a2, (0, 0), (1, 1)).is_zero()

    def test_requires_dominant(self):
        with pytest.raises(DomainError):
            kostka_foulkes(lt("A2"), (1, -1), (0, 0))


class TestHallLittlewood:
    def test_zero_weight(self):
        assert hall_littlewood(lt("A2"), (0, 0)) == WeightPoly.one(2)

    def test_unitriangular_inversion(self):
        # chi_lam = sum over mu of K_{lam,mu}(q) P_mu
        for name in ["A2", "B2"]:
            lie = lt(name)
            lam = (1, 1)
            acc = WeightPoly.zero()
            for mu in dominant_weights_below(lie, lam):
                acc = acc + hall_littlewood(lie, mu).scale(kostka_foulkes(lie, lam, mu))
            assert acc == weyl_character(lie, lam)

    def test_q_zero_degeneration(self):
        for name in ["A2", "G2"]:
            lie = lt(name)
            for mu in [(1, 0), (1, 1)]:
                assert hall_littlewood(lie, mu).substitute_q(0) == weyl_character(lie, mu)

    def test_leading_coefficient(self):
        b2 = lt("B2")
        p = hall_littlewood(b2, (1, 0))
        assert p.coefficient((1, 0)) == IntPoly.one()
        # the zero-weight coefficient carries a genuine q dependence
        z0 = p.coefficient((0, 0))
        assert z0 == IntPoly((1, 0, -1))  # 1 - q^2

    def test_json_and_str(self):
        p = hall_littlewood(lt("B2"), (1, 0))
        d = json.loads(p.to_json())
        assert isinstance(d, dict)
        s = str(p)
        assert "q" in s


def test_stabilizer_poly_reexport():
    b2 = lt("B2")
    assert stabilizer_poly(b2, (0, 0))(1) == weyl_order(b2)
    assert stabilizer_poly(b2, (1, 1)) == IntPoly.one()
