"""Independent brute-force references shared by the tests.

Nothing here calls into the code paths it is used to check.
"""
from fractions import Fraction
from itertools import combinations
from math import gcd


def nested_value(entries):
    """Value of [n1, ..., nk] by literal Fraction nesting."""
    x = Fraction(0)
    for n in reversed(entries):
        x = 1 / (n + x)
    return x


def allowable_by_definition(m, t):
    k = len(m)
    if any(b - a < 2 for a, b in zip(t, t[1:])):
        return False
    return all(any(j in t for j in (p - 1, p, p + 1)) for p in range(1, k + 1) if m[p - 1] == 1)


def all_allowable(m):
    """Filter every subset of positions through the two clauses."""
    k = len(m)
    out = []
    for r in range(k + 1):
        for t in combinations(range(1, k + 1), r):
            if allowable_by_definition(m, t):
                out.append(t)
    return out


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def knot_class(alpha, beta):
    """Every residue equivalent to beta under inverse and mirror."""
    b = beta % alpha
    inv = pow(b, -1, alpha)
    return {b, inv, (-b) % alpha, (-inv) % alpha}


def canonical_by_classes(alpha):
    seen, reps = set(), []
    for b in range(1, alpha):
        if gcd(b, alpha) != 1 or b in seen:
            continue
        cls = knot_class(alpha, b)
        seen |= cls
        reps.append(min(x for x in cls if 2 * x < alpha))
    return sorted(reps)
