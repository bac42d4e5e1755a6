"""Boundary slopes of the essential surfaces carried by each expansion."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .cf import KnotParams, euclid_expansion, even_expansion
from .subtuples import NotAllowableError, enumerate_allowable, expand, is_allowable, shortlex

__all__ = [
    "SignCounts",
    "SlopeContext",
    "SlopeEntry",
    "KnotSlopeReport",
    "ConnectednessProfile",
    "sign_counts",
    "signed_sum",
    "slope_context",
    "boundary_slope",
    "collision_dp",
    "knot_report",
    "has_repeated_slope",
    "is_superincreasing",
    "connectedness_profile",
]


class SignCounts(NamedTuple):
    n_plus: int
    n_minus: int

    @property
    def diff(self) -> int:
        return self.n_plus - self.n_minus


@dataclass(frozen=True)
class SlopeContext:
    delta: int
    n0_diff: int


@dataclass(frozen=True)
class SlopeEntry:
    subtuple: tuple[int, ...]
    signed_diff: int
    slope: int
    expansion: tuple[int, ...] | None = None


@dataclass(frozen=True)
class KnotSlopeReport:
    knot: KnotParams
    m: tuple[int, ...]
    even: tuple[int, ...]
    context: SlopeContext
    entries: tuple[SlopeEntry, ...]
    collisions: dict[int, list[tuple[int, ...]]] = field(default_factory=dict)

    def slope_multiset(self) -> list[int]:
        return sorted(e.slope for e in self.entries)

    def slope_counts(self) -> list[tuple[int, int]]:
        counts: dict[int, int] = defaultdict(int)
        for e in self.entries:
            counts[e.slope] += 1
        return sorted(counts.items())


class ConnectednessProfile(NamedTuple):
    odd_count: int
    connected_at_1: bool
    connected_at_2: bool
    connected_above_2: bool


def sign_counts(n: Sequence[int]) -> SignCounts:
    """Count entries by the sign of ``(-1)**(i+1) * n_i`` (1-based ``i``)."""
    plus = minus = 0
    for i, x in enumerate(n):
        # 0-based i: weight is +1 on even i
        if (x > 0) == (i % 2 == 0):
            plus += 1
        else:
            minus += 1
    return SignCounts(plus, minus)


def signed_sum(m: Sequence[int], indices: Sequence[int]) -> int:
    """``n+ - n-`` of ``expand(m, indices)`` computed from ``m`` alone."""
    if not is_allowable(m, indices):
        raise NotAllowableError(f"{tuple(indices)} is not allowable for {list(m)}")
    return len(m) % 2 + sum(m[i - 1] if i % 2 == 0 else -m[i - 1] for i in indices)


def slope_context(knot: KnotParams) -> SlopeContext:
    return SlopeContext(
        delta=len(euclid_expansion(knot)) % 2,
        n0_diff=sign_counts(even_expansion(knot)).diff,
    )


def boundary_slope(ctx: SlopeContext, signed_diff: int) -> int:
    return 2 * (signed_diff - ctx.n0_diff)


def _merge(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for s, c in b.items():
        out[s] = out.get(s, 0) + c
    return out


def collision_dp(m: Sequence[int]) -> dict[int, int]:
    """Histogram of ``sum((-1)**i * m_i for i in I)`` over allowable ``I``.

    Dynamic programme over positions.  The state is whether the previous and
    current positions are chosen, which is enough to enforce the gap and the
    coverage of every entry equal to 1; (chosen, chosen) is unreachable.
    The parity term delta is not added.
    """
    k = len(m)
    if k == 0:
        return {}
    # histograms for states (prev, cur) = (0,0), (0,1), (1,0)
    s00: dict[int, int] = {0: 1}
    s01: dict[int, int] = {-m[0]: 1}
    s10: dict[int, int] = {}
    for p in range(1, k):
        w = m[p] if p % 2 else -m[p]
        free = _merge(s00, s10)
        chosen = {s + w: c for s, c in free.items()}
        # leaving p unchosen with p-1 unchosen needs m_p != 1 covered by p+1
        s00, s01, s10 = (s10 if m[p - 1] == 1 else free), chosen, s01
    out = _merge(s01, s10)
    return out if m[-1] == 1 else _merge(out, s00)


def _collisions(entries) -> dict[int, list[tuple[int, ...]]]:
    groups: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for e in entries:
        groups[e.slope].append(e.subtuple)
    return {s: sorted(ts, key=shortlex) for s, ts in sorted(groups.items()) if len(ts) >= 2}


def knot_report(knot: KnotParams, mode: str = "fast", limit: int | None = None) -> KnotSlopeReport:
    """Every allowable sub-tuple with its signed difference and slope.

    ``mode="full"`` materialises each expansion and counts signs directly;
    ``mode="fast"`` uses the closed-form signed sum.
    """
    if mode not in ("full", "fast"):
        raise ValueError(f"unknown mode {mode!r}")
    m = euclid_expansion(knot)
    even = even_expansion(knot)
    ctx = SlopeContext(len(m) % 2, sign_counts(even).diff)
    kwargs = {} if limit is None else {"limit": limit}
    entries = []
    for t in enumerate_allowable(m, **kwargs):
        if mode == "full":
            n = expand(m, t)
            d = sign_counts(n).diff
        else:
            n = None
            d = signed_sum(m, t)
        entries.append(SlopeEntry(t, d, boundary_slope(ctx, d), n))
    return KnotSlopeReport(knot, m, even, ctx, tuple(entries), _collisions(entries))


def has_repeated_slope(knot: KnotParams) -> bool:
    return any(c >= 2 for c in collision_dp(euclid_expansion(knot)).values())


def is_superincreasing(m: Sequence[int]) -> bool:
    total = 0
    for x in m:
        if x <= total:
            return False
        total += x
    return True


def connectedness_profile(n: Sequence[int]) -> ConnectednessProfile:
    """Which sheet counts give connected surfaces on this expansion's branched surface."""
    odd = sum(1 for x in n if x % 2)
    return ConnectednessProfile(odd, True, odd >= 1, odd >= 2)
