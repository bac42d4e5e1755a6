"""Exact continued fractions for 2-bridge knots.

Expansions are plain tuples of Python ints, read as the nested fraction
``1/(n1 + 1/(n2 + ... + 1/nk))``.  Values are :class:`fractions.Fraction`.
No floating point is used anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

__all__ = [
    "InvalidKnotError",
    "NotAnExpansionError",
    "KnotParams",
    "ExpansionValue",
    "evaluate",
    "evaluate_with_shift",
    "euclid_expansion",
    "even_expansion",
    "fold",
    "normalize_knot",
    "is_knot_expansion",
]


class InvalidKnotError(ValueError):
    """(alpha, beta) does not describe a 2-bridge knot."""


class NotAnExpansionError(ValueError):
    """An expansion does not evaluate to beta/alpha or beta/alpha - 1."""


def _check_knot(alpha: int, beta: int) -> None:
    if alpha % 2 == 0:
        raise InvalidKnotError("alpha must be odd")
    if alpha < 3:
        raise InvalidKnotError("alpha must be at least 3")
    if gcd(alpha, beta) != 1:
        raise InvalidKnotError("alpha and beta must be coprime")


@dataclass(frozen=True, order=True)
class KnotParams:
    """Canonical parameters of K(alpha, beta) with 0 < beta < alpha/2."""

    alpha: int
    beta: int

    def __post_init__(self):
        _check_knot(self.alpha, self.beta)
        if not 0 < 2 * self.beta < self.alpha:
            raise InvalidKnotError("beta must satisfy 0 < beta < alpha/2")

    @property
    def value(self) -> Fraction:
        return Fraction(self.beta, self.alpha)


class ExpansionValue(NamedTuple):
    value: Fraction
    shift: int


def _fold_ints(entries: Sequence[int]) -> tuple[int, int]:
    """Right-to-left fold returning (p, q), q > 0, for the nested fraction.

    When every |n| >= 2 each partial tail is asserted to lie in (-1, 1).
    """
    if len(entries) == 0:
        raise ValueError("cannot evaluate an empty expansion")
    hts = all(abs(n) >= 2 for n in entries)
    p, q = 0, 1
    for n in reversed(entries):
        if n == 0:
            raise ValueError("continued fraction entries must be nonzero")
        den = n * q + p
        if den == 0:
            raise ZeroDivisionError(f"partial denominator vanishes at entry {n}")
        p, q = q, den
        if q < 0:
            p, q = -p, -q
        if hts:
            assert abs(p) < q, "tail escaped (-1, 1)"
    return p, q


def evaluate(entries: Sequence[int]) -> Fraction:
    """Exact value of ``[n1, ..., nk]``.

    >>> evaluate([2, 1, 4, 5])
    Fraction(26, 73)
    """
    p, q = _fold_ints(entries)
    return Fraction(p, q)


def evaluate_with_shift(knot: KnotParams, entries: Sequence[int]) -> ExpansionValue:
    value = evaluate(entries)
    target = knot.value
    if value == target:
        return ExpansionValue(value, 0)
    if value == target - 1:
        return ExpansionValue(value, 1)
    raise NotAnExpansionError(
        f"{list(entries)} evaluates to {value}, not an expansion of "
        f"{knot.beta}/{knot.alpha}"
    )


def _euclid(alpha: int, beta: int) -> list[int]:
    out = []
    p, q = alpha, beta
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    if len(out) > 1 and out[-1] == 1:
        out[-2] += 1
        out.pop()
    return out


def euclid_expansion(knot: KnotParams) -> tuple[int, ...]:
    """The unique all-positive expansion of beta/alpha with last entry >= 2."""
    return tuple(_euclid(knot.alpha, knot.beta))


def _even_steps(alpha: int, beta: int):
    """Yield the entries of the all-even expansion.

    Starts from beta (or beta - alpha, whichever is even) over alpha and
    repeatedly takes the even integer nearest to the reciprocal.
    """
    p = beta if beta % 2 == 0 else beta - alpha
    q = alpha
    while p:
        # reciprocal is q/p; make the denominator positive
        if p < 0:
            p, q = -p, -q
        lo = 2 * (q // (2 * p))
        below = q - lo * p
        above = (lo + 2) * p - q
        assert below != above, "nearest even integer is a tie"
        n = lo if below < above else lo + 2
        yield n
        p, q = q - n * p, p


def even_sign_diff(alpha: int, beta: int) -> int:
    """n+ - n- of the all-even expansion, without building it."""
    d = 0
    for i, n in enumerate(_even_steps(alpha, beta)):
        d += 1 if (n > 0) == (i % 2 == 0) else -1
    return d


def even_expansion(knot: KnotParams) -> tuple[int, ...]:
    """The unique expansion with every entry even (value beta/alpha or beta/alpha - 1)."""
    return tuple(_even_steps(knot.alpha, knot.beta))


def fold(alpha: int, x: int) -> int:
    """Mirror-fold a residue into (0, alpha/2)."""
    x %= alpha
    return x if 2 * x < alpha else alpha - x


def normalize_knot(alpha: int, beta: int) -> KnotParams:
    """Canonical representative of the class of K(alpha, beta).

    Knots related by beta -> beta^-1 (mod alpha) or by mirroring
    beta -> -beta map to the same result.
    """
    _check_knot(alpha, beta)
    b = beta % alpha
    if b == 0:
        raise InvalidKnotError("alpha and beta must be coprime")
    return KnotParams(alpha, min(fold(alpha, b), fold(alpha, pow(b, -1, alpha))))


def is_knot_expansion(entries: Sequence[int]) -> bool:
    """True when the expansion's value has odd reduced denominator."""
    _, q = _fold_ints(entries)
    return q % 2 == 1
