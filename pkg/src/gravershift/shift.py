"""Period transport: the fast route to Graver bases at large shifts.

The trade lattices at shifts t and t + rho are linked by length-weighted
linear maps that fix one coordinate and move the other two.  Each orthant's
Hilbert basis is carried along by the map that fixes its strip's bounded
coordinate; the trades of extremal coordinate sum (+d in the PPN orthant,
-d in the NPP orthant) instead form a line segment, stepped by the
homogeneous trade, that is re-solved directly at the target shift and grows
by d*a (resp. d*b) elements per period.  Iterating from an oracle-computed
base case below the transport threshold yields the Graver basis at any
shift without ever enumerating a large lattice.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .core import (
    InternalConsistencyError,
    InvalidInputError,
    NoLengthTradeError,
    OrthantLabel,
    SemigroupInstance,
    ShiftedFamily,
    Trade,
    TradeSet,
    add,
    length,
    scale,
    sub,
)
from .oracle import graver_oracle, hilbert_oracle

logger = logging.getLogger(__name__)


def period_multiplier(fam: ShiftedFamily, i: int, j: int) -> int:
    """Signed coefficient m such that one period adds m * length(v) * (e_i - e_j).

    Concretely m = rho / (d * (r_j - r_i)) for offsets r = (-a, 0, b):
    b*(a+b) for (0,1), a*b for (0,2), a*(a+b) for (1,2); negated when the
    indices are swapped.
    """
    if i == j or not {i, j} <= {0, 1, 2}:
        raise InvalidInputError(f"indices must be distinct and in {{0,1,2}}, got ({i}, {j})")
    r = fam.offsets
    den = fam.d * (r[j] - r[i])
    m, rem = divmod(fam.rho, den)
    if rem:
        raise InternalConsistencyError(f"period {fam.rho} not divisible by {den}")
    return m


def period_map(fam: ShiftedFamily, i: int, j: int, v: Trade, periods: int = 1) -> Trade:
    """Transport v from the lattice at shift t to the one at t + periods*rho.

    Length-preserving and bijective; trades of length 0 are fixed.
    """
    delta = periods * period_multiplier(fam, i, j) * length(v)
    w = list(v)
    w[i] += delta
    w[j] -= delta
    return (w[0], w[1], w[2])


def period_map_inverse(fam: ShiftedFamily, i: int, j: int, v: Trade, periods: int = 1) -> Trade:
    """Exact inverse of period_map (transport back by periods*rho)."""
    return period_map(fam, i, j, v, -periods)


def frobenius_two_gen(m: int, n: int) -> int:
    """Frobenius number of <m, n> for coprime m, n: m*n - m - n (or -1 if either is 1)."""
    if m < 1 or n < 1:
        raise InvalidInputError(f"generators must be positive, got ({m}, {n})")
    if m == 1 or n == 1:
        return -1
    if math.gcd(m, n) != 1:
        raise InvalidInputError(f"generators must be coprime, got ({m}, {n})")
    return m * n - m - n


@dataclass(frozen=True)
class SegmentEndpoints:
    """An arithmetic progression of trades: start, start+step, ..., end.

    All members share one coordinate sum; step is the homogeneous trade.
    """

    start: Trade
    end: Trade
    step: Trade
    count: int

    def __post_init__(self) -> None:
        if self.count < 1:
            raise InternalConsistencyError(f"segment count must be >= 1, got {self.count}")
        if sub(self.end, self.start) != scale(self.count - 1, self.step):
            raise InternalConsistencyError(
                f"segment endpoints {self.start}..{self.end} do not differ by "
                f"{self.count - 1} steps of {self.step}"
            )

    def trades(self) -> list[Trade]:
        return [add(self.start, scale(k, self.step)) for k in range(self.count)]


def _h_multiple(delta: Trade, h: Trade) -> int:
    """The integer q with delta == q*h, or raise if there is none."""
    pivot = next(i for i in range(3) if h[i] != 0)
    q, rem = divmod(delta[pivot], h[pivot])
    if rem or scale(q, h) != delta:
        raise InternalConsistencyError(f"{delta} is not an integer multiple of {h}")
    return q


def positive_segment(inst: SemigroupInstance) -> SegmentEndpoints:
    """Endpoints of the line of coordinate-sum-d trades in the PPN orthant.

    Both endpoints solve b*v1 + (a+b)*v0 = t + d*b over non-negative
    integers: the start minimizes v0 (so v0 < b), the end minimizes v1
    (so v1 < a+b).  Raises NoLengthTradeError when the equation has no
    non-negative solution, which is guaranteed not to happen above the
    b_plus threshold and guaranteed to happen at it.
    """
    a, b, d = inst.family.a, inst.family.b, inst.family.d
    target = inst.t + d * b
    v0 = (target * pow(a % b, -1, b)) % b if b > 1 else 0
    v1, rem = divmod(target - (a + b) * v0, b)
    if rem:
        raise InternalConsistencyError("modular solution failed to divide")
    if v1 < 0:
        raise NoLengthTradeError(
            f"no trade of coordinate sum {d} in the ppn orthant at t={inst.t}"
        )
    start = (v0, v1, -(v0 + v1 - d))
    w1 = (target * pow(b % (a + b), -1, a + b)) % (a + b)
    w0, rem = divmod(target - b * w1, a + b)
    if rem:
        raise InternalConsistencyError("modular solution failed to divide")
    if w0 < 0:
        raise NoLengthTradeError(
            f"no trade of coordinate sum {d} in the ppn orthant at t={inst.t}"
        )
    end = (w0, w1, -(w0 + w1 - d))
    return _checked_segment(inst, start, end, expected_sum=d)


def negative_segment(inst: SemigroupInstance) -> SegmentEndpoints:
    """Endpoints of the line of coordinate-sum-(-d) trades in the NPP orthant.

    Mirror of positive_segment: solve a*v1 + (a+b)*v2 = t - d*a, the start
    minimizing v2 (so v2 < a), the end minimizing v1 (so v1 < a+b); the
    trade is (-(v1+v2+d), v1, v2).
    """
    a, b, d = inst.family.a, inst.family.b, inst.family.d
    target = inst.t - d * a
    v2 = (target * pow(b % a, -1, a)) % a if a > 1 else 0
    v1, rem = divmod(target - (a + b) * v2, a)
    if rem:
        raise InternalConsistencyError("modular solution failed to divide")
    if v1 < 0:
        raise NoLengthTradeError(
            f"no trade of coordinate sum {-d} in the npp orthant at t={inst.t}"
        )
    start = (-(v1 + v2 + d), v1, v2)
    w1 = (target * pow(a % (a + b), -1, a + b)) % (a + b)
    w2, rem = divmod(target - a * w1, a + b)
    if rem:
        raise InternalConsistencyError("modular solution failed to divide")
    if w2 < 0:
        raise NoLengthTradeError(
            f"no trade of coordinate sum {-d} in the npp orthant at t={inst.t}"
        )
    end = (-(w1 + w2 + d), w1, w2)
    return _checked_segment(inst, start, end, expected_sum=-d)


def _checked_segment(
    inst: SemigroupInstance, start: Trade, end: Trade, expected_sum: int
) -> SegmentEndpoints:
    h = inst.family.homogeneous_trade
    for v in (start, end):
        if inst.evaluate(v) != 0 or length(v) != expected_sum:
            raise InternalConsistencyError(f"segment endpoint {v} invalid at t={inst.t}")
    q = _h_multiple(sub(end, start), h)
    if q < 0:
        raise InternalConsistencyError(
            f"segment endpoints {start}..{end} reversed at t={inst.t}"
        )
    return SegmentEndpoints(start=start, end=end, step=h, count=q + 1)


def _pnp_image(inst: SemigroupInstance, v: Trade, periods: int) -> Trade:
    fam = inst.family
    if v[0] <= fam.b:
        return period_map(fam, 1, 2, v, periods)
    if v[2] <= fam.a:
        return period_map(fam, 0, 1, v, periods)
    raise InternalConsistencyError(
        f"pnp element {v} lies outside both strips at t={inst.t}"
    )


def advance_pnp(inst: SemigroupInstance, basis: TradeSet) -> TradeSet:
    """Hilbert basis of the PNP orthant one period later; cardinality is preserved."""
    _require_above(inst, inst.family.constants().b_plus_minus, "pnp")
    out = TradeSet.full(_pnp_image(inst, v, 1) for v in basis)
    if len(out) != len(basis):
        raise InternalConsistencyError(
            f"pnp transport changed cardinality at t={inst.t}: {len(basis)} -> {len(out)}"
        )
    return out


def advance_ppn(inst: SemigroupInstance, basis: TradeSet) -> TradeSet:
    """Hilbert basis of the PPN orthant one period later; grows by d*a elements.

    Strip members ride their period maps; the coordinate-sum-d segment is
    rebuilt between the images of the current endpoints.  A trade in both
    strips (only possible when the segment is a single point) is carried by
    both maps, landing on the two ends of the new segment.
    """
    fam = inst.family
    _require_above(inst, fam.constants().b_plus, "ppn")
    a, b, d = fam.a, fam.b, fam.d
    seg = positive_segment(inst)
    out = set()
    for v in basis:
        carried = False
        if v[0] < b:
            out.add(period_map(fam, 1, 2, v, 1))
            carried = True
        if v[1] < a + b:
            out.add(period_map(fam, 0, 2, v, 1))
            carried = True
        if not carried and length(v) != d:
            raise InternalConsistencyError(
                f"ppn element {v} outside both strips has coordinate sum != {d}"
            )
    new_seg = _checked_segment(
        inst.shifted(),
        period_map(fam, 1, 2, seg.start, 1),
        period_map(fam, 0, 2, seg.end, 1),
        expected_sum=d,
    )
    out.update(new_seg.trades())
    result = TradeSet.full(out)
    if len(result) != len(basis) + d * a:
        raise InternalConsistencyError(
            f"ppn transport at t={inst.t}: expected growth {d * a}, "
            f"got {len(basis)} -> {len(result)}"
        )
    return result


def advance_npp(inst: SemigroupInstance, basis: TradeSet) -> TradeSet:
    """Hilbert basis of the NPP orthant one period later; grows by d*b elements."""
    fam = inst.family
    _require_above(inst, fam.constants().b_minus, "npp")
    a, b, d = fam.a, fam.b, fam.d
    seg = negative_segment(inst)
    out = set()
    for v in basis:
        carried = False
        if v[2] < a:
            out.add(period_map(fam, 0, 1, v, 1))
            carried = True
        if v[1] < a + b:
            out.add(period_map(fam, 0, 2, v, 1))
            carried = True
        if not carried and length(v) != -d:
            raise InternalConsistencyError(
                f"npp element {v} outside both strips has coordinate sum != {-d}"
            )
    new_seg = _checked_segment(
        inst.shifted(),
        period_map(fam, 0, 1, seg.start, 1),
        period_map(fam, 0, 2, seg.end, 1),
        expected_sum=-d,
    )
    out.update(new_seg.trades())
    result = TradeSet.full(out)
    if len(result) != len(basis) + d * b:
        raise InternalConsistencyError(
            f"npp transport at t={inst.t}: expected growth {d * b}, "
            f"got {len(basis)} -> {len(result)}"
        )
    return result


def _require_above(inst: SemigroupInstance, bound: int, name: str) -> None:
    if inst.t <= bound:
        raise InvalidInputError(
            f"{name} transport needs t > {bound}, got t={inst.t}"
        )


def npp_existence_bound(fam: ShiftedFamily) -> int:
    """Shift above which the NPP segment endpoints always exist.

    Derived from the Frobenius number of <a, a+b>: t - d*a must be
    representable, which holds for every t > (a-1)(a+b) + a(d-1).  Note the
    b_minus formula in DerivedConstants flips the sign of the a(d-1) term;
    the two agree for d = 1 but b_minus undershoots for d >= 2, so the base
    case selection uses this bound instead.
    """
    a, b, d = fam.a, fam.b, fam.d
    return (a - 1) * (a + b) + a * (d - 1)


def effective_base_bound(fam: ShiftedFamily) -> int:
    """Largest shift that must be handled by the oracle rather than transport."""
    return max(fam.constants().b_max, npp_existence_bound(fam))


def base_decomposition(inst: SemigroupInstance) -> tuple[SemigroupInstance, int]:
    """Write t = t0 + k*rho with t0 maximal such that t0 <= bound, i.e. k maximal
    with t - k*rho above the transport threshold.  Returns (base instance, k)."""
    bound = effective_base_bound(inst.family)
    if inst.t <= bound:
        return inst, 0
    k = (inst.t - bound - 1) // inst.family.rho
    base = SemigroupInstance(inst.family, inst.t - k * inst.family.rho)
    return base, k


_ADVANCE = {
    OrthantLabel.PNP: advance_pnp,
    OrthantLabel.PPN: advance_ppn,
    OrthantLabel.NPP: advance_npp,
}


def _transport_closed(
    base: SemigroupInstance, orthant: OrthantLabel, basis: TradeSet, k: int
) -> TradeSet:
    """Jump k periods in one step.

    Strip members transport linearly (the per-period correction just picks
    up a factor of k because the maps fix the strip's bounded coordinate),
    and the extremal segment is re-solved directly at the target shift.
    """
    fam = base.family
    a, b, d = fam.a, fam.b, fam.d
    target = base.shifted(k)
    if orthant is OrthantLabel.PNP:
        out = TradeSet.full(_pnp_image(base, v, k) for v in basis)
        if len(out) != len(basis):
            raise InternalConsistencyError("pnp closed transport changed cardinality")
        return out
    if orthant is OrthantLabel.PPN:
        expected_sum, growth = d, k * d * a
        seg = positive_segment(target)
        carries = [(0, b, (1, 2)), (1, a + b, (0, 2))]
    else:
        expected_sum, growth = -d, k * d * b
        seg = negative_segment(target)
        carries = [(2, a, (0, 1)), (1, a + b, (0, 2))]
    out = set(seg.trades())
    for v in basis:
        carried = False
        for coord, bound, (i, j) in carries:
            if v[coord] < bound:
                out.add(period_map(fam, i, j, v, k))
                carried = True
        if not carried and length(v) != expected_sum:
            raise InternalConsistencyError(
                f"{orthant.value} element {v} outside both strips has unexpected sum"
            )
    result = TradeSet.full(out)
    if len(result) != len(basis) + growth:
        raise InternalConsistencyError(
            f"{orthant.value} closed transport: expected {len(basis) + growth} "
            f"elements, got {len(result)}"
        )
    return result


def hilbert_shift(
    inst: SemigroupInstance, orthant: OrthantLabel, transport: str = "closed"
) -> TradeSet:
    """Hilbert basis of one orthant via transport from an oracle base case.

    transport="closed" jumps all periods at once; "iterative" applies the
    single-period step repeatedly (slower, used as a cross-check).
    """
    base, k = base_decomposition(inst)
    basis = hilbert_oracle(base, orthant)
    if k == 0:
        return basis
    if transport == "closed":
        return _transport_closed(base, orthant, basis, k)
    if transport == "iterative":
        step = _ADVANCE[orthant]
        current = base
        for _ in range(k):
            basis = step(current, basis)
            current = current.shifted()
        return basis
    raise InvalidInputError(f"unknown transport {transport!r}")


def assemble_graver(h_pnp: TradeSet, h_ppn: TradeSet, h_npp: TradeSet) -> TradeSet:
    """Union of the three Hilbert bases and their negations, canonicalized.

    The bases overlap only in the three primitive two-coordinate trades
    (one per coordinate plane, each shared by two orthants); a different
    overlap count is logged as a warning but not fatal.
    """
    parts = (h_pnp, h_ppn, h_npp)
    if any(len(p) == 0 for p in parts):
        raise InvalidInputError("orthant Hilbert bases are never empty for a valid instance")
    merged = TradeSet.canonical(v for part in parts for v in part)
    overlap = sum(len(p) for p in parts) - len(merged)
    if overlap != 3:
        logger.warning("expected 3 shared boundary trades, measured %d", overlap)
    logger.info("assembled %d canonical trades (overlap %d)", len(merged), overlap)
    return merged


def graver_shift(inst: SemigroupInstance, transport: str = "closed") -> TradeSet:
    """Graver basis of inst, canonical mode, via the transport recursion.

    Above the transport threshold this always goes through the three
    orthant Hilbert bases (zero transport steps within the first period),
    so it stays an independent route from the direct conformal filter;
    at or below the threshold it delegates to the oracle.
    """
    if inst.t <= effective_base_bound(inst.family):
        return graver_oracle(inst)
    return assemble_graver(
        hilbert_shift(inst, OrthantLabel.PNP, transport),
        hilbert_shift(inst, OrthantLabel.PPN, transport),
        hilbert_shift(inst, OrthantLabel.NPP, transport),
    )
