import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gravershift import (
    InvalidInputError,
    OrthantLabel,
    OutsideScopeError,
    ShiftedFamily,
    Strip,
    TradeSet,
    canonical_rep,
    from_generators,
    in_orthant,
    in_strip,
    length,
    orthant_memberships,
)
from gravershift.core import MAX_SHIFT, TradeSetMode, negate, sort_key
from gravershift.oracle import enumerate_trades


class TestShiftedFamily:
    def test_valid(self):
        fam = ShiftedFamily(2, 3, 1)
        assert fam.rho == 30
        assert fam.homogeneous_trade == (3, -5, 2)
        assert fam.offsets == (-2, 0, 3)

    @pytest.mark.parametrize("a,b,d", [(2, 4, 1), (3, 6, 2), (2, 2, 1)])
    def test_non_coprime_rejected(self, a, b, d):
        with pytest.raises(InvalidInputError):
            ShiftedFamily(a, b, d)

    @pytest.mark.parametrize("a,b,d", [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-1, 2, 1)])
    def test_non_positive_rejected(self, a, b, d):
        with pytest.raises(InvalidInputError):
            ShiftedFamily(a, b, d)

    def test_constants_231(self, fam231):
        c = fam231.constants()
        assert (c.rho, c.b_plus, c.b_plus_minus, c.b_minus, c.b_max) == (30, 4, 6, 5, 6)
        assert c.homogeneous == (3, -5, 2)

    def test_constants_111(self):
        c = ShiftedFamily(1, 1, 1).constants()
        assert c.rho == 2
        assert c.homogeneous == (1, -2, 1)

    def test_homogeneous_has_length_zero(self):
        for a, b, d in [(1, 1, 1), (2, 3, 1), (3, 4, 2), (2, 5, 3)]:
            assert length(ShiftedFamily(a, b, d).homogeneous_trade) == 0


class TestSemigroupInstance:
    def test_generators(self, inst19):
        assert inst19.generators == (17, 19, 22)

    def test_shift_too_small(self, fam231):
        with pytest.raises(InvalidInputError):
            fam231.instance(2)

    def test_shift_too_large(self, fam231):
        with pytest.raises(InvalidInputError):
            fam231.instance(MAX_SHIFT + 1)

    def test_gcd_t_d_rejected(self):
        with pytest.raises(OutsideScopeError):
            ShiftedFamily(1, 1, 2).instance(4)

    def test_evaluate(self, inst19):
        assert inst19.evaluate((3, -5, 2)) == 0
        assert inst19.evaluate((0, 0, 0)) == 0
        assert inst19.evaluate((1, 0, 0)) == 17

    def test_shifted(self, inst19):
        assert inst19.shifted().t == 49
        assert inst19.shifted(2).generators == (77, 79, 82)


class TestFromGenerators:
    def test_worked_example(self):
        inst = from_generators(77, 79, 82)
        fam = inst.family
        assert (inst.t, fam.a, fam.b, fam.d) == (79, 2, 3, 1)

    def test_figure_instance(self):
        inst = from_generators(47, 49, 52)
        assert (inst.t, inst.family.a, inst.family.b, inst.family.d) == (49, 2, 3, 1)

    def test_gcd_violation(self):
        # resolves to t=4, d=2: gcd(t, d) = 2 is outside the covered family
        with pytest.raises(OutsideScopeError):
            from_generators(2, 4, 6)

    @pytest.mark.parametrize("gens", [(5, 5, 7), (7, 5, 9), (0, 1, 2), (-3, 1, 2)])
    def test_bad_generators(self, gens):
        with pytest.raises(InvalidInputError):
            from_generators(*gens)

    @given(
        a=st.integers(1, 6),
        b=st.integers(1, 6),
        d=st.integers(1, 4),
        offset=st.integers(1, 200),
    )
    def test_round_trip(self, a, b, d, offset):
        if math.gcd(a, b) != 1:
            return
        t = d * a + offset
        if math.gcd(t, d) != 1:
            return
        inst = ShiftedFamily(a, b, d).instance(t)
        assert from_generators(*inst.generators) == inst


class TestEvaluateRewrites:
    """The generator pairing agrees with its three length-based rewrites."""

    @given(st.tuples(st.integers(-500, 500), st.integers(-500, 500), st.integers(-500, 500)))
    def test_forms_agree(self, v):
        inst = ShiftedFamily(2, 3, 1).instance(19)
        a, b, d, t = 2, 3, 1, 19
        ell = length(v)
        base = inst.evaluate(v)
        assert base == (t - d * a) * ell + d * a * v[1] + d * (a + b) * v[2]
        assert base == -d * a * v[0] + t * ell + d * b * v[2]
        assert base == -d * (a + b) * v[0] - d * b * v[1] + (t + d * b) * ell


class TestLatticeLengthFacts:
    """Coordinate sums of trades are multiples of d; sum-zero trades are
    multiples of the homogeneous trade."""

    @pytest.mark.parametrize("a,b,d,t", [(2, 3, 1, 19), (3, 4, 2, 25), (2, 5, 3, 31), (1, 3, 2, 7)])
    def test_enumerated_lattice(self, a, b, d, t):
        fam = ShiftedFamily(a, b, d)
        inst = fam.instance(t)
        h = fam.homogeneous_trade
        for v in enumerate_trades(inst, inst.generators[2]):
            assert length(v) % d == 0
            if length(v) == 0:
                k = v[0] // h[0] if h[0] else v[2] // h[2]
                assert (k * h[0], k * h[1], k * h[2]) == v


class TestCanonicalRep:
    def test_examples(self):
        assert canonical_rep((0, 22, -19)) == (0, -22, 19)
        assert canonical_rep((-19, 17, 0)) == (-19, 17, 0)
        assert canonical_rep((3, -5, 2)) == (3, -5, 2)

    def test_zero_rejected(self):
        with pytest.raises(InvalidInputError):
            canonical_rep((0, 0, 0))

    @given(st.tuples(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50)))
    def test_pair_partition(self, v):
        if v == (0, 0, 0):
            return
        rep = canonical_rep(v)
        assert rep in (v, negate(v))
        assert canonical_rep(negate(v)) == rep
        assert canonical_rep(rep) == rep


class TestOrthants:
    def test_full_sign_pattern(self):
        assert orthant_memberships((3, -5, 2)) == {(OrthantLabel.PNP, +1)}

    def test_zero_coordinate_double_membership(self):
        assert orthant_memberships((0, -22, 19)) == {
            (OrthantLabel.PNP, +1),
            (OrthantLabel.PPN, -1),
        }

    def test_alpha_single_membership(self):
        # (2,4,-5) has full sign pattern (+,+,-): exactly one orthant, positively
        assert orthant_memberships((2, 4, -5)) == {(OrthantLabel.PPN, +1)}

    def test_zero_vector_rejected(self):
        with pytest.raises(InvalidInputError):
            orthant_memberships((0, 0, 0))

    @given(st.tuples(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30)))
    def test_mirror_property(self, v):
        if v == (0, 0, 0):
            return
        flipped = {(label, -sign) for label, sign in orthant_memberships(v)}
        assert orthant_memberships(negate(v)) == flipped

    def test_every_lattice_element_labelled(self, inst19):
        for v in enumerate_trades(inst19, 22):
            assert orthant_memberships(v)


class TestStrips:
    def test_pnp_strip(self, inst19):
        assert in_strip(inst19, (0, -22, 19), Strip.PNP_V0)
        assert not in_strip(inst19, (0, -22, 19), Strip.PNP_V2)

    def test_ppn_strips(self, inst19):
        assert in_strip(inst19, (2, 4, -5), Strip.PPN_V0)  # 2 < b = 3
        assert not in_strip(inst19, (22, 0, -17), Strip.PPN_V0)
        assert in_strip(inst19, (22, 0, -17), Strip.PPN_V1)

    def test_npp_strips(self, inst19):
        assert in_strip(inst19, (-8, 6, 1), Strip.NPP_V2)  # 1 < a = 2
        assert not in_strip(inst19, (-8, 6, 1), Strip.NPP_V1)
        assert in_strip(inst19, (-5, 1, 3), Strip.NPP_V1)

    def test_boundary_closed_vs_open(self, inst19):
        # PNP strips include the boundary, PPN/NPP strips exclude it
        assert in_strip(inst19, (3, -5, 2), Strip.PNP_V0)
        assert in_strip(inst19, (3, -5, 2), Strip.PNP_V2)
        assert not in_strip(inst19, (3, 4, -6), Strip.PPN_V0)

    def test_wrong_orthant_rejected(self, inst19):
        with pytest.raises(InvalidInputError):
            in_strip(inst19, (2, 4, -5), Strip.PNP_V0)

    def test_strip_orthants(self):
        assert Strip.PPN_V0.orthant is OrthantLabel.PPN
        assert Strip.NPP_V2.orthant is OrthantLabel.NPP


class TestTradeSet:
    def test_canonical_mode(self):
        ts = TradeSet.canonical([(0, 22, -19), (0, -22, 19), (3, -5, 2)])
        assert ts.mode is TradeSetMode.CANONICAL
        assert ts.trades == ((3, -5, 2), (0, -22, 19))
        assert all(canonical_rep(v) == v for v in ts)

    def test_full_mode_sorted_dedup(self):
        ts = TradeSet.full([(3, -5, 2), (0, -22, 19), (3, -5, 2)])
        assert ts.trades == tuple(sorted(ts.trades, key=sort_key))
        assert len(ts) == 2

    def test_with_negations(self):
        ts = TradeSet.canonical([(3, -5, 2)]).with_negations()
        assert ts.as_set() == {(3, -5, 2), (-3, 5, -2)}

    def test_membership_and_iteration(self):
        ts = TradeSet.full([(1, 0, 0)])
        assert (1, 0, 0) in ts
        assert list(ts) == [(1, 0, 0)]


def test_in_orthant_boundaries():
    assert in_orthant((0, 0, 1), OrthantLabel.PNP)
    assert in_orthant((0, 0, 1), OrthantLabel.NPP)
    assert not in_orthant((-1, 2, 3), OrthantLabel.PNP)
