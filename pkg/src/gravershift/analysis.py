"""Quantitative verification: count tables, period-law checks, bound scans,
differential testing, and Graver-augmented optimization over factorizations.

All scans skip shifts the family does not cover (t <= d*a or gcd(t, d) != 1)
rather than erroring, since ranges are swept wholesale.  Everything is exact
integer or rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, TextIO

from .core import (
    InvalidInputError,
    OrthantLabel,
    SemigroupInstance,
    ShiftedFamily,
    Trade,
    add,
    in_orthant,
    length,
    negate,
)
from .oracle import enumerate_trades, factorizations, graver_oracle, hilbert_oracle
from .shift import effective_base_bound, graver_shift, hilbert_shift

CSV_HEADER = "t,graver,h_pnp,h_ppn,h_npp,method"


def valid_shifts(fam: ShiftedFamily, t_lo: int, t_hi: int) -> list[int]:
    """Shifts in [t_lo, t_hi] the family actually covers."""
    return [
        t
        for t in range(max(t_lo, fam.d * fam.a + 1), t_hi + 1)
        if math.gcd(t, fam.d) == 1
    ]


@dataclass(frozen=True)
class CountRow:
    t: int
    graver: int  # full count, both signs
    h_pnp: int
    h_ppn: int
    h_npp: int
    method: str

    def csv(self) -> str:
        return f"{self.t},{self.graver},{self.h_pnp},{self.h_ppn},{self.h_npp},{self.method}"


@dataclass(frozen=True)
class CountTable:
    family: ShiftedFamily
    rows: tuple[CountRow, ...]

    def write_csv(self, fh: TextIO) -> None:
        fh.write(CSV_HEADER + "\n")
        for row in self.rows:
            fh.write(row.csv() + "\n")

    def row_for(self, t: int) -> CountRow:
        for row in self.rows:
            if row.t == t:
                return row
        raise KeyError(t)


def count_row(inst: SemigroupInstance, method: str = "auto") -> CountRow:
    """Graver and per-orthant Hilbert cardinalities at one shift."""
    if method == "auto":
        method = "oracle" if inst.t <= effective_base_bound(inst.family) else "fast"
    if method == "oracle":
        hp = hilbert_oracle(inst, OrthantLabel.PNP)
        hq = hilbert_oracle(inst, OrthantLabel.PPN)
        hr = hilbert_oracle(inst, OrthantLabel.NPP)
        graver = 2 * len(graver_oracle(inst))
    elif method == "fast":
        hp = hilbert_shift(inst, OrthantLabel.PNP)
        hq = hilbert_shift(inst, OrthantLabel.PPN)
        hr = hilbert_shift(inst, OrthantLabel.NPP)
        graver = 2 * len(graver_shift(inst))
    else:
        raise InvalidInputError(f"unknown count method {method!r}")
    return CountRow(inst.t, graver, len(hp), len(hq), len(hr), method)


def count_scan(fam: ShiftedFamily, t_lo: int, t_hi: int, method: str = "auto") -> CountTable:
    if t_lo > t_hi:
        raise InvalidInputError(f"empty range {t_lo}..{t_hi}")
    rows = tuple(count_row(fam.instance(t), method) for t in valid_shifts(fam, t_lo, t_hi))
    return CountTable(fam, rows)


@dataclass(frozen=True)
class PeriodLawRow:
    t: int
    graver_increment: int
    pnp_increment: int
    ppn_increment: int
    npp_increment: int
    ok: bool


@dataclass(frozen=True)
class PeriodLawReport:
    """Per-shift increments over one period, against the expected law.

    Expected: the full Graver count grows by 2*d*(a+b) and the orthant
    Hilbert counts by (0, d*a, d*b) whenever both shifts are above the
    transport threshold.
    """

    family: ShiftedFamily
    t_lo: int
    t_hi: int
    expected_increment: int
    rows: tuple[PeriodLawRow, ...]

    @property
    def violations(self) -> tuple[PeriodLawRow, ...]:
        return tuple(row for row in self.rows if not row.ok)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def leading_coefficient(self) -> Fraction:
        """Increment per period over the period length, as an exact rational."""
        return Fraction(self.expected_increment, self.family.rho)


def verify_period_law(fam: ShiftedFamily, t_lo: int, t_hi: int, method: str = "oracle") -> PeriodLawReport:
    """Check the one-period count increments for every covered shift in range.

    Counts at t + rho are computed even when they fall beyond t_hi.
    """
    a, b, d = fam.a, fam.b, fam.d
    bound = effective_base_bound(fam)
    expected = 2 * d * (a + b)
    cache: dict[int, CountRow] = {}

    def row_at(t: int) -> CountRow:
        if t not in cache:
            cache[t] = count_row(fam.instance(t), method)
        return cache[t]

    rows = []
    for t in valid_shifts(fam, t_lo, t_hi):
        if t <= bound:
            continue
        now, later = row_at(t), row_at(t + fam.rho)
        increments = (
            later.graver - now.graver,
            later.h_pnp - now.h_pnp,
            later.h_ppn - now.h_ppn,
            later.h_npp - now.h_npp,
        )
        ok = increments == (expected, 0, d * a, d * b)
        rows.append(PeriodLawRow(t, *increments, ok))
    return PeriodLawReport(fam, t_lo, t_hi, expected, tuple(rows))


@dataclass(frozen=True)
class BoundsReport:
    """Empirical sharpness scan for the per-orthant thresholds.

    Each `last_*` field is the largest covered shift (up to t_max) at which
    the property still fails: homogeneous-trade irreducibility in the PNP
    orthant, existence of a coordinate-sum d trade in the PPN orthant,
    existence of a coordinate-sum -d trade in the NPP orthant.  None means
    the property never failed in the scanned range.
    """

    family: ShiftedFamily
    t_max: int
    formula_plus: int
    formula_plus_minus: int
    formula_minus: int
    last_without_ppn_trade: int | None
    last_reducible_homogeneous: int | None
    last_without_npp_trade: int | None
    homogeneous_reducible_at_dab: bool | None


def empirical_bounds(fam: ShiftedFamily, t_max: int) -> BoundsReport:
    a, b, d = fam.a, fam.b, fam.d
    consts = fam.constants()
    h = fam.homogeneous_trade
    last_red = last_no_ppn = last_no_npp = None
    reducible_at_dab = None
    for t in valid_shifts(fam, fam.d * fam.a + 1, t_max):
        inst = fam.instance(t)
        hilbert_pnp = hilbert_oracle(inst, OrthantLabel.PNP)
        h_irreducible = h in hilbert_pnp
        if not h_irreducible:
            last_red = t
        if t == d * a * b:
            reducible_at_dab = not h_irreducible
        trades = enumerate_trades(inst, inst.generators[2])
        if not any(in_orthant(v, OrthantLabel.PPN) and length(v) == d for v in trades):
            last_no_ppn = t
        if not any(in_orthant(v, OrthantLabel.NPP) and length(v) == -d for v in trades):
            last_no_npp = t
    return BoundsReport(
        family=fam,
        t_max=t_max,
        formula_plus=consts.b_plus,
        formula_plus_minus=consts.b_plus_minus,
        formula_minus=consts.b_minus,
        last_without_ppn_trade=last_no_ppn,
        last_reducible_homogeneous=last_red,
        last_without_npp_trade=last_no_npp,
        homogeneous_reducible_at_dab=reducible_at_dab,
    )


@dataclass(frozen=True)
class DifferentialRow:
    family: ShiftedFamily
    t: int
    fast_count: int
    oracle_count: int
    equal: bool


@dataclass(frozen=True)
class DifferentialReport:
    periods: int
    rows: tuple[DifferentialRow, ...]

    @property
    def mismatches(self) -> tuple[DifferentialRow, ...]:
        return tuple(row for row in self.rows if not row.equal)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def differential_test(
    families: Sequence[ShiftedFamily], periods: int, transport: str = "closed"
) -> DifferentialReport:
    """Compare the transported Graver basis against the oracle, set-exactly,
    for every covered shift in (bound, bound + periods*rho] of each family."""
    rows = []
    for fam in families:
        bound = effective_base_bound(fam)
        for t in valid_shifts(fam, bound + 1, bound + periods * fam.rho):
            inst = fam.instance(t)
            fast = graver_shift(inst, transport)
            oracle = graver_oracle(inst)
            rows.append(
                DifferentialRow(fam, t, len(fast), len(oracle), fast.trades == oracle.trades)
            )
    return DifferentialReport(periods, tuple(rows))


Weights = tuple[Fraction, Fraction, Fraction]


def objective_value(weights: Sequence[Fraction | int], z: tuple[int, int, int]) -> Fraction:
    return Fraction(weights[0]) * z[0] + Fraction(weights[1]) * z[1] + Fraction(weights[2]) * z[2]


def augment(
    inst: SemigroupInstance,
    start: tuple[int, int, int],
    weights: Sequence[Fraction | int],
    sense: str = "min",
) -> tuple[int, int, int]:
    """Optimize a linear objective over the factorizations of one element.

    Greedy first-improving-move search: walk the canonical Graver list in
    sorted order, trying each trade and its negation, and restart after any
    strict improvement that keeps all coordinates non-negative.  For linear
    objectives the terminal point is a global optimum regardless of pivot
    order, so the fixed order is only for determinism.
    """
    if len(start) != 3 or any(z < 0 for z in start):
        raise InvalidInputError(f"start must be a non-negative 3-vector, got {start}")
    if sense not in ("min", "max"):
        raise InvalidInputError(f"sense must be 'min' or 'max', got {sense!r}")
    w: Weights = tuple(Fraction(c) for c in weights)  # type: ignore[assignment]
    if len(w) != 3:
        raise InvalidInputError("objective must have 3 components")
    moves: list[Trade] = []
    for g in graver_shift(inst):
        moves.append(g)
        moves.append(negate(g))
    better = (lambda x, y: x < y) if sense == "min" else (lambda x, y: x > y)
    current = (int(start[0]), int(start[1]), int(start[2]))
    value = objective_value(w, current)
    improved = True
    while improved:
        improved = False
        for g in moves:
            candidate = add(current, g)
            if candidate[0] < 0 or candidate[1] < 0 or candidate[2] < 0:
                continue
            candidate_value = objective_value(w, candidate)
            if better(candidate_value, value):
                current, value = candidate, candidate_value
                improved = True
                break
    return current


def exhaustive_optimum(
    inst: SemigroupInstance, n: int, weights: Sequence[Fraction | int], sense: str = "min"
) -> Fraction:
    """Best objective value over all factorizations of n, by full enumeration."""
    w: Weights = tuple(Fraction(c) for c in weights)  # type: ignore[assignment]
    values = [objective_value(w, z) for z in factorizations(inst, n)]
    if not values:
        raise InvalidInputError(f"{n} has no factorization in {inst.generators}")
    return min(values) if sense == "min" else max(values)
