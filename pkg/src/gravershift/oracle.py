"""Brute-force ground truth for Graver and orthant Hilbert bases.

Everything here works by bounded kernel enumeration followed by
conformal-minimality filtering, with a doubling fixpoint certificate on the
enumeration radius.  It is deliberately free of the period-transport
machinery so the two routes stay independent.
"""

from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from .core import (
    InternalConsistencyError,
    InvalidInputError,
    OrthantLabel,
    SemigroupInstance,
    Trade,
    TradeSet,
    TradeSetMode,
    in_orthant,
    sort_key,
)

logger = logging.getLogger(__name__)

# Hard cap on enumeration grid cells ((2C+1)^2); beyond this the oracle is
# out of its intended desk scale and int64 products could stop being safe.
_MAX_GRID_CELLS = 2**31
_CHUNK_CELLS = 2**21
_MAX_DOUBLINGS = 4


def enumerate_trades(inst: SemigroupInstance, box: int) -> TradeSet:
    """All nonzero trades with every coordinate in [-box, box], both signs.

    Scans (v0, v2) over the square grid; v1 is forced by the kernel
    condition and kept only when integral and inside the box.
    """
    if box < 1:
        raise InvalidInputError(f"enumeration box must be >= 1, got {box}")
    # the cached tuple is already deduplicated and sorted
    return TradeSet(_enumerate_cached(inst, box), TradeSetMode.FULL)


@lru_cache(maxsize=128)
def _enumerate_cached(inst: SemigroupInstance, box: int) -> tuple[Trade, ...]:
    side = 2 * box + 1
    if side * side > _MAX_GRID_CELLS:
        raise InvalidInputError(
            f"enumeration box {box} needs {side * side} grid cells; beyond oracle scale"
        )
    n1, t, n3 = inst.generators
    v2_row = np.arange(-box, box + 1, dtype=np.int64)
    chunk_rows = max(1, _CHUNK_CELLS // side)
    found: list[Trade] = []
    for lo in range(-box, box + 1, chunk_rows):
        v0_col = np.arange(lo, min(lo + chunk_rows, box + 1), dtype=np.int64)
        s = n1 * v0_col[:, None] + n3 * v2_row[None, :]
        q, r = np.divmod(s, t)
        mask = (r == 0) & (np.abs(q) <= box)
        mask &= ~((v0_col[:, None] == 0) & (v2_row[None, :] == 0))
        ii, jj = np.nonzero(mask)
        if ii.size:
            picked_v0 = v0_col[ii]
            picked_v2 = v2_row[jj]
            picked_v1 = -q[ii, jj]
            found.extend(
                (int(x), int(y), int(z))
                for x, y, z in zip(picked_v0, picked_v1, picked_v2)
            )
    found.sort(key=sort_key)
    return tuple(found)


def is_conformal(u: Trade, v: Trade) -> bool:
    """True iff u lies below v in the conformal order: same signs, no larger magnitudes."""
    return all(ui * vi >= 0 and abs(ui) <= abs(vi) for ui, vi in zip(u, v))


def _conformal_minima(candidates: list[Trade]) -> frozenset[Trade]:
    """Elements of `candidates` with no other candidate conformally below them.

    Candidates are scanned in ascending 1-norm order; any conformal reducer
    of v has strictly smaller 1-norm and is itself dominated by an already
    kept minimum, so checking against kept minima alone is exact.
    """
    if not candidates:
        return frozenset()
    ordered = sorted(candidates, key=lambda v: (abs(v[0]) + abs(v[1]) + abs(v[2]),) + sort_key(v))
    arr = np.array(ordered, dtype=np.int64)
    kept = np.empty_like(arr)
    n_kept = 0
    for row in arr:
        if n_kept:
            k = kept[:n_kept]
            dominated = bool(
                np.any(np.all((k * row >= 0) & (np.abs(k) <= np.abs(row)), axis=1))
            )
            if dominated:
                continue
        kept[n_kept] = row
        n_kept += 1
    return frozenset((int(x), int(y), int(z)) for x, y, z in kept[:n_kept])


@lru_cache(maxsize=512)
def _stable_minima(inst: SemigroupInstance, orthant: OrthantLabel | None) -> frozenset[Trade]:
    """Run the doubling protocol until the minimal set is radius-stable.

    Certificate: two consecutive radii yield the same set and every minimal
    element fits in half the final radius (all its potential reducers are
    then inside the box, so minimality is exact).
    """
    box = inst.generators[2]
    prev: frozenset[Trade] | None = None
    for _ in range(_MAX_DOUBLINGS + 1):
        trades = _enumerate_cached(inst, box)
        if orthant is not None:
            candidates = [v for v in trades if in_orthant(v, orthant)]
        else:
            candidates = list(trades)
        current = _conformal_minima(candidates)
        if not current:
            raise InternalConsistencyError(
                f"no minimal trades found in box {box} for {inst.generators}"
            )
        if prev is not None:
            if current == prev:
                max_norm = max(max(abs(x) for x in v) for v in current)
                if 2 * max_norm <= box:
                    return current
            else:
                logger.warning(
                    "minimal set changed when doubling to box %d for %s (%s)",
                    box,
                    inst.generators,
                    "full lattice" if orthant is None else orthant.value,
                )
        prev = current
        box *= 2
    raise InternalConsistencyError(
        f"no enumeration fixpoint within {_MAX_DOUBLINGS} doublings for {inst.generators}"
    )


def graver_oracle(inst: SemigroupInstance) -> TradeSet:
    """Graver basis by exhaustive conformal filtering, one canonical rep per pair."""
    return TradeSet.canonical(_stable_minima(inst, None))


def hilbert_oracle(inst: SemigroupInstance, orthant: OrthantLabel) -> TradeSet:
    """Hilbert basis of one orthant, as full vectors in its positive orientation.

    Within a single orthant the conformal order is plain componentwise
    magnitude order, so the same filter applies to the restricted candidates.
    """
    return TradeSet.full(_stable_minima(inst, orthant))


def factorizations(inst: SemigroupInstance, n: int) -> list[tuple[int, int, int]]:
    """All non-negative (z0, z1, z2) with z . generators == n, by triple enumeration."""
    if n < 0:
        raise InvalidInputError(f"element must be non-negative, got {n}")
    n1, n2, n3 = inst.generators
    out = []
    for z0 in range(n // n1 + 1):
        rest0 = n - z0 * n1
        for z1 in range(rest0 // n2 + 1):
            rest1 = rest0 - z1 * n2
            if rest1 % n3 == 0:
                out.append((z0, z1, rest1 // n3))
    return out
