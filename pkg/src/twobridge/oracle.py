"""Brute-force enumeration of every expansion with all |n_i| >= 2.

This is the independent referee for the sub-tuple construction: it never
looks at the positive expansion or at sub-tuples, only at exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cf import KnotParams, euclid_expansion, even_expansion
from .slopes import sign_counts, signed_sum
from .subtuples import _reduce, enumerate_allowable, expand

__all__ = ["enumerate_all_expansions", "BijectionCheck", "verify_bijection", "verify_knot"]


def _search(p: int, q: int, out: list[tuple[int, ...]]) -> None:
    """Depth-first search from target p/q (q > 0, 0 < |p| < q).

    Choosing entry n leaves the tail q/p - n, which must be 0 or lie strictly
    inside (-1, 1), so n is the floor or ceiling of q/p.  Partial expansions
    are linked lists (entry, parent) so deep chains stay linear.
    """
    stack = [(p, q, None)]
    while stack:
        p, q, node = stack.pop()
        if p < 0:
            p, q = -p, -q
        fl = q // p
        for n in (fl, fl + 1) if q % p else (fl,):
            if -1 <= n <= 1:
                continue
            r = q - n * p  # tail is r/p
            if r == 0:
                entries, link = [n], node
                while link is not None:
                    entries.append(link[0])
                    link = link[1]
                out.append(tuple(reversed(entries)))
            elif abs(r) < p:
                assert p < abs(q), "denominator failed to decrease"
                stack.append((r, p, (n, node)))


def enumerate_all_expansions(knot: KnotParams) -> list[tuple[int, ...]]:
    """All expansions of beta/alpha or beta/alpha - 1, sorted lexicographically."""
    out: list[tuple[int, ...]] = []
    _search(knot.beta, knot.alpha, out)
    _search(knot.beta - knot.alpha, knot.alpha, out)
    return sorted(set(out))


@dataclass
class BijectionCheck:
    """Outcome of comparing oracle expansions with the sub-tuple construction.

    Truthy iff both sets agree; ``missing`` holds oracle expansions no
    sub-tuple produced, ``extra`` the converse.
    """

    knot: KnotParams
    missing: list[tuple[int, ...]] = field(default_factory=list)
    extra: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra

    def __bool__(self) -> bool:
        return self.ok


def verify_bijection(knot: KnotParams, limit: int | None = None) -> BijectionCheck:
    m = euclid_expansion(knot)
    kwargs = {} if limit is None else {"limit": limit}
    built = {expand(m, t) for t in enumerate_allowable(m, **kwargs)}
    found = set(enumerate_all_expansions(knot))
    return BijectionCheck(knot, sorted(found - built), sorted(built - found))


def verify_knot(knot: KnotParams) -> tuple[int, str | None]:
    """Run every consistency check on one knot.

    Checks the oracle bijection, uniqueness of the all-even expansion, the
    signed-sum shortcut against direct sign counts, and that reduction
    inverts expansion.  Returns (number of expansions checked, first failure).
    """
    m = euclid_expansion(knot)
    tuples = enumerate_allowable(m)
    built = {}
    for t in tuples:
        n = expand(m, t)
        built[n] = t
        if signed_sum(m, t) != sign_counts(n).diff:
            return len(tuples), f"K({knot.alpha},{knot.beta}) I={t}: signed sum disagrees with sign counts of {n}"
        back = _reduce(n)
        if back != (m, t):
            return len(tuples), f"K({knot.alpha},{knot.beta}) I={t}: reduce gave {back}"
    found = enumerate_all_expansions(knot)
    if set(found) != set(built) or len(built) != len(tuples):
        check = BijectionCheck(knot, sorted(set(found) - set(built)), sorted(set(built) - set(found)))
        return len(tuples), (
            f"K({knot.alpha},{knot.beta}): bijection fails, missing={check.missing[:3]} "
            f"extra={check.extra[:3]}"
        )
    evens = [n for n in found if all(x % 2 == 0 for x in n)]
    if evens != [even_expansion(knot)]:
        return len(tuples), f"K({knot.alpha},{knot.beta}): all-even expansions {evens} != {[even_expansion(knot)]}"
    return len(tuples), None
