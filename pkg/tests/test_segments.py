import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mltab.cartan import DomainError, LieType, positive_roots
from mltab.segments import (
    check_partition,
    content,
    distinct_parts,
    e_correction_b,
    e_correction_d,
    ell,
    g2_correction,
    partition_text,
    pr,
    seg,
    seg_prime,
    segments,
    sorted_items,
    total_mult,
    upsilon,
    xi,
)
from mltab.tableaux import enumerate_crystal, reduced_text, t_infinity, validate, weight


def lt(name):
    return LieType.parse(name)


# the four worked tableaux used throughout these tests
def tab_a3():
    return validate(lt("A3"), [(1,) * 9 + (2, 2, 3, 3), (2,) * 4 + (3, 3, 4, 4), (3, 4, 4)])


def tab_b3():
    return validate(
        lt("B3"),
        [(1,) * 9 + (2, 2, 0, -3, -1, -1, -1), (2,) * 4 + (3, 3, -2, -2), (3, 0, -3)],
    )


def tab_d4():
    return validate(
        lt("D4"),
        [(1,) * 9 + (2, 2, -3, -1, -1, -1), (2,) * 4 + (3, -4, -3, -3), (3, -4, -3)],
    )


def tab_g2():
    return validate(lt("G2"), [(1,) * 6 + (3, 3, 0, -3, -2, -1, -1), (2, 3, 3, 3, 3)])


class TestSegmentStatistic:
    def test_type_a(self):
        t = tab_a3()
        assert seg_prime(t) == 5
        assert seg(t) == 5
        assert sorted(s[:2] for s in segments(t)) == [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]

    def test_type_b(self):
        t = tab_b3()
        assert seg_prime(t) == 8
        assert e_correction_b(t) == 2
        assert seg(t) == 6

    def test_type_d(self):
        t = tab_d4()
        assert seg_prime(t) == 8
        assert e_correction_d(t) == 1
        assert seg(t) == 9

    def test_type_g2(self):
        t = tab_g2()
        assert seg_prime(t) == 6
        assert g2_correction(t) == 1
        assert seg(t) == 5

    def test_highest_element_has_no_segments(self):
        for name in ["A3", "B3", "C3", "D4", "G2"]:
            top = t_infinity(lt(name))
            assert list(segments(top)) == []
            assert seg(top) == 0

    def test_forced_prefix_not_a_segment(self):
        # the leading run of i in row i never counts; trailing extras do
        t = validate(lt("A2"), [(1, 1), (2,)])
        assert list(segments(t)) == []
        t2 = validate(lt("A2"), [(1, 1, 2), (2,)])
        assert [s[:2] for s in segments(t2)] == [(1, 2)]
        assert ell(t2, 1, 2) == 1
        assert ell(t2, 1, 1) == 0  # forced letter

    def test_segment_lengths(self):
        t = tab_b3()
        assert ell(t, 1, -1) == 3
        assert ell(t, 1, 0) == 1
        assert ell(t, 2, -2) == 2
        assert ell(t, 3, -3) == 1


class TestXi:
    def test_type_b_example(self):
        kp = xi(tab_b3())
        assert kp == {
            "beta(1,1)": 2,
            "beta(1,3)": 7,
            "gamma(1,3)": 1,
            "beta(2,2)": 2,
            "beta(2,3)": 4,
            "beta(3,3)": 3,
        }

    def test_weight_compatible(self):
        # pr(xi(T)) recovers -wt(T) as a sum of positive roots
        for t in (tab_a3(), tab_b3(), tab_d4(), tab_g2()):
            assert pr(t.lie, xi(t)) == weight(t)
        assert weight(tab_b3()) == (-10, -14, -16)
        assert weight(tab_d4()) == (-9, -11, -7, -9)
        assert weight(tab_g2()) == (-18, -14)

    def test_highest_element_maps_to_zero(self):
        for name in ["A2", "B2", "C2", "D4", "G2"]:
            assert xi(t_infinity(lt(name))) == {}

    def test_statistics_match(self):
        for t in (tab_a3(), tab_b3(), tab_d4(), tab_g2()):
            kp = xi(t)
            assert distinct_parts(kp) == seg(t)
            assert total_mult(kp) == content(t)

    def test_content_pins(self):
        assert content(tab_b3()) == 19
        assert content(tab_d4()) == 16
        assert content(tab_g2()) == 13


class TestUpsilon:
    def test_inverts_xi_on_examples(self):
        for t in (tab_a3(), tab_b3(), tab_d4(), tab_g2()):
            assert upsilon(t.lie, xi(t)) == t

    def test_round_trip_over_crystals(self):
        for name, depth in [("A3", 4), ("B3", 4), ("C3", 4), ("D4", 4), ("G2", 6)]:
            lie = lt(name)
            for t in enumerate_crystal(lie, depth):
                kp = xi(t)
                assert upsilon(lie, kp) == t
                assert distinct_parts(kp) == seg(t)
                assert total_mult(kp) == content(t)

    def test_zero_partition(self):
        for name in ["A2", "B2", "G2"]:
            lie = lt(name)
            assert upsilon(lie, {}) == t_infinity(lie)

    def test_rejects_bad_partitions(self):
        lie = lt("B3")
        with pytest.raises(DomainError):
            check_partition(lie, {"beta(9,9)": 1})
        with pytest.raises(DomainError):
            check_partition(lie, {"beta(1,1)": -1})
        with pytest.raises(DomainError):
            upsilon(lie, {"beta(1,1)": "2"})


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_xi_inverts_upsilon_on_random_partitions(data):
    name = data.draw(st.sampled_from(["A2", "B2", "C2", "G2", "B3", "D4"]))
    lie = lt(name)
    labels = [root.label for root in positive_roots(lie)]
    mults = data.draw(st.lists(st.integers(0, 4), min_size=len(labels), max_size=len(labels)))
    kp = {lbl: m for lbl, m in zip(labels, mults) if m}
    t = upsilon(lie, kp)
    assert xi(t) == kp
    assert distinct_parts(kp) == seg(t)


def test_text_helpers():
    lie = lt("B3")
    kp = xi(tab_b3())
    items = sorted_items(lie, kp)
    assert [lbl for lbl, _ in items] == [
        "beta(1,1)",
        "beta(1,3)",
        "beta(2,2)",
        "beta(2,3)",
        "beta(3,3)",
        "gamma(1,3)",
    ]
    text = partition_text(lie, kp)
    assert "7*(beta(1,3))" in text
    assert partition_text(lie, {}) == "0"
    assert reduced_text(tab_d4()) == "2,2,-3,-1,-1,-1/3,-4,-3,-3/-4,-3"
