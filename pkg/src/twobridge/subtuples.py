"""Allowable sub-tuples of the positive expansion and the expansions they index.

Sub-tuples are strictly increasing tuples of 1-based positions into the
positive expansion ``m``.  Every expansion of beta/alpha with all entries of
absolute value at least 2 is ``expand(m, I)`` for exactly one allowable ``I``.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from .cf import KnotParams, NotAnExpansionError, euclid_expansion, evaluate_with_shift

__all__ = [
    "NotAllowableError",
    "EnumerationLimitError",
    "DEFAULT_LIMIT",
    "is_allowable",
    "shortlex",
    "iter_allowable",
    "enumerate_allowable",
    "expand",
    "reduce_expansion",
    "dual",
    "is_symmetric",
]

DEFAULT_LIMIT = 2**24


class NotAllowableError(ValueError):
    pass


class EnumerationLimitError(RuntimeError):
    """Raised when enumeration would exceed the configured tuple ceiling."""


def is_allowable(m: Sequence[int], indices: Sequence[int]) -> bool:
    k = len(m)
    prev = None
    for i in indices:
        if not 1 <= i <= k:
            return False
        if prev is not None and i - prev < 2:
            return False
        prev = i
    chosen = set(indices)
    for p, mp in enumerate(m, start=1):
        if mp == 1 and not ({p - 1, p, p + 1} & chosen):
            return False
    return True


def shortlex(t: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key: shorter sub-tuples first, then lexicographic."""
    return len(t), tuple(t)


def iter_allowable(m: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Stream allowable sub-tuples in plain lexicographic order, empty tuple first."""
    k = len(m)
    ones = [p for p, mp in enumerate(m, start=1) if mp == 1]

    def uncovered_between(lo: int, hi: int) -> bool:
        # a 1 at p with lo < p - 1 and p + 1 < hi has no chosen neighbour
        return any(lo + 1 < p < hi - 1 for p in ones)

    def rec(prefix: tuple[int, ...], last: int):
        # the tuple may stop here iff no 1 after `last` is left uncovered
        if not uncovered_between(last, k + 2):
            yield prefix
        for j in range(last + 2, k + 1):
            if uncovered_between(last, j):
                break
            yield from rec(prefix + (j,), j)

    # a virtual choice at position -1 covers nothing
    yield from rec((), -1)


def enumerate_allowable(m: Sequence[int], limit: int | None = DEFAULT_LIMIT) -> list[tuple[int, ...]]:
    """All allowable sub-tuples, shortest first and lexicographic within a length."""
    out = []
    for t in iter_allowable(m):
        out.append(t)
        if limit is not None and len(out) > limit:
            raise EnumerationLimitError(
                f"more than {limit} allowable sub-tuples for expansion of length {len(m)}"
            )
    out.sort(key=shortlex)
    return out


def expand(m: Sequence[int], indices: Sequence[int]) -> tuple[int, ...]:
    """Build the expansion ``M_I`` indexed by an allowable sub-tuple.

    >>> expand([2, 1, 4, 5], (2, 4))
    (3, -6, 2, -2, 2, -2)
    """
    if not is_allowable(m, indices):
        raise NotAllowableError(f"{tuple(indices)} is not allowable for {list(m)}")
    chosen = set(indices)
    out: list[int] = []
    sign = 1
    for p, mp in enumerate(m, start=1):
        if p in chosen:
            out.extend(sign * (2 if t % 2 else -2) for t in range(mp - 1))
            if mp % 2:
                sign = -sign
        else:
            out.append(sign * (mp + (p - 1 in chosen) + (p + 1 in chosen)))
    return tuple(out)


def _lift_once(n: list[int], i: int) -> list[int]:
    """Undo one block replacement whose first negative entry is at 0-based ``i``."""
    out = n[:i]
    if i > 0:
        out[-1] -= 1
    j = i
    last = len(n) - 1
    # find the end of the alternating run of +-2
    while abs(n[j]) == 2 and j < last and (n[j] > 0) != (n[j + 1] > 0):
        j += 1
    a = j - i + 1
    out.append(a)
    out.append(abs(n[j]) - 1)
    flip = -1 if a % 2 else 1
    out.extend(flip * x for x in n[j + 1:])
    return out


def _reduce(n: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    p = list(n)
    recorded: list[int] = []
    while True:
        neg = next((i for i, x in enumerate(p) if x < 0), None)
        if neg is None:
            break
        recorded.append(neg + 1)
        p = _lift_once(p, neg)
    if len(p) > 1 and p[-1] == 1:
        p[-2] += 1
        p.pop()
        if recorded and recorded[-1] > len(p):
            recorded.pop()
    return tuple(p), tuple(recorded)


def reduce_expansion(n: Sequence[int], knot: KnotParams) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recover ``(m, I)`` with ``expand(m, I) == n``.

    Repeatedly locates the first negative entry, collapses the alternating
    run of 2s starting there back into one positive entry, and records its
    position.  A trailing 1 left by the last step is folded into its
    predecessor.
    """
    n = tuple(n)
    if not n or any(abs(x) < 2 for x in n):
        raise NotAnExpansionError("every entry must have absolute value at least 2")
    evaluate_with_shift(knot, n)
    m, indices = _reduce(n)
    if any(x < 1 for x in m) or m != euclid_expansion(knot) or not is_allowable(m, indices) \
            or expand(m, indices) != n:
        raise NotAnExpansionError(f"{list(n)} is not an expansion of {knot.beta}/{knot.alpha}")
    return m, indices


def dual(indices: Sequence[int], k: int) -> tuple[int, ...]:
    return tuple(k + 1 - i for i in reversed(indices))


def is_symmetric(m: Sequence[int]) -> bool:
    return len(m) % 2 == 1 and list(m) == list(m)[::-1]
