"""Domain types for shifted 3-generated numerical semigroups.

A family is a triple of positive offsets (a, b, d) with gcd(a, b) = 1; its
member at shift t is the numerical semigroup generated by

    (t - d*a,  t,  t + d*b).

Trades are integer 3-vectors in the kernel of the generator pairing.  They
are classified by sign orthant (exactly two coordinates share a sign) and,
within an orthant, by nearness to a coordinate plane (strips).  Everything
in this module is an immutable value and every operation is a pure
function, so instances can be shared freely between workers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

Trade = tuple[int, int, int]

# Shifts above this are rejected up front: it keeps every product formed by
# the bounded enumeration (coordinates times generators) inside 64-bit
# range, which the oracle's vectorized inner loops rely on.
MAX_SHIFT = 10**9


class InvalidInputError(ValueError):
    """Caller-supplied data violates a documented precondition."""


class OutsideScopeError(InvalidInputError):
    """Structurally valid input outside the supported theory (gcd(t, d) != 1)."""


class NoLengthTradeError(InvalidInputError):
    """No trade of the requested coordinate sum exists at this shift."""


class InternalConsistencyError(RuntimeError):
    """A certified invariant failed; the computation cannot be trusted."""


def length(v: Trade) -> int:
    """Coordinate sum of a vector (trades of length 0 are homogeneous)."""
    return v[0] + v[1] + v[2]


def negate(v: Trade) -> Trade:
    return (-v[0], -v[1], -v[2])


def add(u: Trade, v: Trade) -> Trade:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub(u: Trade, v: Trade) -> Trade:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def scale(k: int, v: Trade) -> Trade:
    return (k * v[0], k * v[1], k * v[2])


def canonical_rep(v: Trade) -> Trade:
    """Pick one of {v, -v}: the one whose last nonzero coordinate is positive.

    Idempotent, and canonical_rep(v) == canonical_rep(-v).  This matches the
    usual one-column-per-sign-pair listing convention for Graver matrices.
    """
    for x in (v[2], v[1], v[0]):
        if x > 0:
            return v
        if x < 0:
            return negate(v)
    raise InvalidInputError("the zero vector has no canonical representative")


def sort_key(v: Trade) -> tuple[int, int, int]:
    """Total order used for all serialized listings: lexicographic (v2, v1, v0)."""
    return (v[2], v[1], v[0])


@dataclass(frozen=True)
class ShiftedFamily:
    """Fixed offsets (a, b, d) defining the family t -> <t - d*a, t, t + d*b>."""

    a: int
    b: int
    d: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "d"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise InvalidInputError(f"{name} must be a positive integer, got {value!r}")
        if math.gcd(self.a, self.b) != 1:
            raise InvalidInputError(f"a={self.a} and b={self.b} must be coprime")

    @property
    def offsets(self) -> Trade:
        """Generator offsets relative to the shift: (-a, 0, b) before scaling by d."""
        return (-self.a, 0, self.b)

    @property
    def rho(self) -> int:
        """Period of the shift recursion: d*a*b*(a+b)."""
        return self.d * self.a * self.b * (self.a + self.b)

    @property
    def homogeneous_trade(self) -> Trade:
        """Primitive trade of length 0, shared by every member of the family."""
        return (self.b, -(self.a + self.b), self.a)

    def constants(self) -> DerivedConstants:
        a, b, d = self.a, self.b, self.d
        b_plus = (b - 1) * (a + b) - b * (d + 1)
        b_plus_minus = d * a * b
        b_minus = (a - 1) * (a + b) - a * (d - 1)
        return DerivedConstants(
            rho=self.rho,
            b_plus=b_plus,
            b_plus_minus=b_plus_minus,
            b_minus=b_minus,
            b_max=max(b_plus, b_plus_minus, b_minus),
            homogeneous=self.homogeneous_trade,
        )

    def instance(self, t: int) -> SemigroupInstance:
        return SemigroupInstance(self, t)


@dataclass(frozen=True)
class DerivedConstants:
    """Per-family thresholds and the homogeneous trade.

    b_plus / b_plus_minus / b_minus bound, orthant by orthant, where the
    period-transport structure is guaranteed; b_max is their maximum.
    """

    rho: int
    b_plus: int
    b_plus_minus: int
    b_minus: int
    b_max: int
    homogeneous: Trade


@dataclass(frozen=True)
class SemigroupInstance:
    """One member of a shifted family: the semigroup <t - d*a, t, t + d*b>."""

    family: ShiftedFamily
    t: int

    def __post_init__(self) -> None:
        fam = self.family
        if not isinstance(self.t, int):
            raise InvalidInputError(f"shift must be an integer, got {self.t!r}")
        if self.t <= fam.d * fam.a:
            raise InvalidInputError(
                f"shift t={self.t} must exceed d*a={fam.d * fam.a} so the smallest generator is positive"
            )
        if self.t > MAX_SHIFT:
            raise InvalidInputError(f"shift t={self.t} exceeds the supported bound {MAX_SHIFT}")
        if math.gcd(self.t, fam.d) != 1:
            raise OutsideScopeError(
                f"gcd(t, d) = gcd({self.t}, {fam.d}) != 1: this shift is outside the supported family"
            )

    @property
    def generators(self) -> Trade:
        fam = self.family
        return (self.t - fam.d * fam.a, self.t, self.t + fam.d * fam.b)

    def evaluate(self, v: Trade) -> int:
        """Generator pairing n1*v0 + n2*v1 + n3*v2; trades are its kernel."""
        n1, n2, n3 = self.generators
        return n1 * v[0] + n2 * v[1] + n3 * v[2]

    def is_trade(self, v: Trade) -> bool:
        return self.evaluate(v) == 0

    def shifted(self, periods: int = 1) -> SemigroupInstance:
        """The instance `periods` periods later (or earlier, if negative)."""
        return SemigroupInstance(self.family, self.t + periods * self.family.rho)


def from_generators(n1: int, n2: int, n3: int) -> SemigroupInstance:
    """Recover (a, b, d, t) from explicit generators 0 < n1 < n2 < n3."""
    for n in (n1, n2, n3):
        if not isinstance(n, int) or n < 1:
            raise InvalidInputError(f"generators must be positive integers, got {(n1, n2, n3)}")
    if not n1 < n2 < n3:
        raise InvalidInputError(f"generators must be strictly increasing, got {(n1, n2, n3)}")
    d = math.gcd(n2 - n1, n3 - n2)
    a = (n2 - n1) // d
    b = (n3 - n2) // d
    inst = ShiftedFamily(a, b, d).instance(n2)
    if inst.generators != (n1, n2, n3):
        raise InternalConsistencyError(f"generator round-trip failed for {(n1, n2, n3)}")
    return inst


class OrthantLabel(enum.Enum):
    """The three sign orthants a nonzero trade can occupy (up to negation).

    The letters give the sign pattern of the coordinates; membership only
    constrains the two coordinates that share a sign (the third is forced
    for genuine trades since the generators are positive).
    """

    PNP = "pnp"
    PPN = "ppn"
    NPP = "npp"

    @property
    def nonneg_coords(self) -> tuple[int, int]:
        return _NONNEG[self]


_NONNEG = {
    OrthantLabel.PNP: (0, 2),
    OrthantLabel.PPN: (0, 1),
    OrthantLabel.NPP: (1, 2),
}


def in_orthant(v: Trade, label: OrthantLabel) -> bool:
    i, j = label.nonneg_coords
    return v[i] >= 0 and v[j] >= 0


def orthant_memberships(v: Trade) -> frozenset[tuple[OrthantLabel, int]]:
    """All (label, orientation) pairs v satisfies; orientation +1 for v, -1 for -v.

    A vector with a zero coordinate belongs to two orthants (in opposite
    orientations); a vector with full sign pattern belongs to exactly one.
    """
    if v == (0, 0, 0):
        raise InvalidInputError("the zero vector belongs to every orthant; refusing to classify")
    w = negate(v)
    out = set()
    for label in OrthantLabel:
        if in_orthant(v, label):
            out.add((label, +1))
        if in_orthant(w, label):
            out.add((label, -1))
    return frozenset(out)


class Strip(enum.Enum):
    """Neighborhoods of the coordinate planes within each orthant.

    Named by the orthant and the coordinate the strip bounds.  The bounded
    coordinate is exactly the one the strip's transport map leaves fixed:
    PNP strips are closed (<=), the others open (<).
    """

    PNP_V0 = "pnp_v0"  # v0 <= b
    PNP_V2 = "pnp_v2"  # v2 <= a
    PPN_V0 = "ppn_v0"  # v0 < b
    PPN_V1 = "ppn_v1"  # v1 < a + b
    NPP_V1 = "npp_v1"  # v1 < a + b
    NPP_V2 = "npp_v2"  # v2 < a

    @property
    def orthant(self) -> OrthantLabel:
        return OrthantLabel[self.name.split("_")[0]]


def in_strip(inst: SemigroupInstance, v: Trade, strip: Strip) -> bool:
    """Strip membership for a vector already in the strip's orthant."""
    if not in_orthant(v, strip.orthant):
        raise InvalidInputError(f"{v} is not in the {strip.orthant.value} orthant")
    a, b = inst.family.a, inst.family.b
    if strip is Strip.PNP_V0:
        return v[0] <= b
    if strip is Strip.PNP_V2:
        return v[2] <= a
    if strip is Strip.PPN_V0:
        return v[0] < b
    if strip is Strip.PPN_V1:
        return v[1] < a + b
    if strip is Strip.NPP_V1:
        return v[1] < a + b
    return v[2] < a  # NPP_V2


class TradeSetMode(enum.Enum):
    FULL = "full"
    CANONICAL = "canonical"


@dataclass(frozen=True)
class TradeSet:
    """A deduplicated, deterministically ordered collection of trades.

    FULL mode stores vectors exactly as produced (e.g. an orthant's Hilbert
    basis in its positive orientation, or a negation-closed enumeration);
    CANONICAL mode keeps one representative per {v, -v} pair.  Ordering is
    always ascending lexicographic on (v2, v1, v0).
    """

    trades: tuple[Trade, ...]
    mode: TradeSetMode

    @staticmethod
    def full(trades: Iterable[Trade]) -> TradeSet:
        return TradeSet(tuple(sorted(set(trades), key=sort_key)), TradeSetMode.FULL)

    @staticmethod
    def canonical(trades: Iterable[Trade]) -> TradeSet:
        reps = {canonical_rep(v) for v in trades}
        return TradeSet(tuple(sorted(reps, key=sort_key)), TradeSetMode.CANONICAL)

    def with_negations(self) -> TradeSet:
        both = set(self.trades)
        both.update(negate(v) for v in self.trades)
        return TradeSet.full(both)

    def canonicalized(self) -> TradeSet:
        return TradeSet.canonical(self.trades)

    def as_set(self) -> frozenset[Trade]:
        return frozenset(self.trades)

    def __len__(self) -> int:
        return len(self.trades)

    def __iter__(self) -> Iterator[Trade]:
        return iter(self.trades)

    def __contains__(self, v: object) -> bool:
        return v in self.trades
