"""Independent brute-force references.

Nothing here imports the enumerators or reductions under test; shapes are
plain tuples and every filling of a small diagram is generated with
``itertools.product`` and filtered afterwards.
"""
from __future__ import annotations

from collections import Counter
from itertools import product


def pad(p, n):
    return tuple(p) + (0,) * (n - len(p))


def cells(lam, mu):
    mu = pad(mu, len(lam))
    return [(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])]


def all_partitions(n, max_part=None):
    """Partitions of n as tuples, by plain recursion."""
    max_part = n if max_part is None else max_part
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in all_partitions(n - first, first))
    return out


def is_ballot_word(word):
    counts = Counter()
    for a in word:
        counts[a] += 1
        if a > 1 and counts[a] > counts[a - 1]:
            return False
    return True


def semistandard(filling):
    for (r, c), v in filling.items():
        if (r, c + 1) in filling and filling[(r, c + 1)] < v:
            return False
        if (r + 1, c) in filling and filling[(r + 1, c)] <= v:
            return False
    return True


def reverse_reading(filling, lam):
    return [filling[(r, c)] for r in range(len(lam)) for c in range(lam[r] - 1, -1, -1) if (r, c) in filling]


def all_ssyt(lam, mu, max_letter):
    """Every semistandard filling of lam/mu with letters up to max_letter."""
    cs = cells(lam, mu)
    for vals in product(range(1, max_letter + 1), repeat=len(cs)):
        filling = dict(zip(cs, vals))
        if semistandard(filling):
            yield filling


def content_of(filling):
    c = Counter(filling.values())
    top = max(c, default=0)
    return tuple(c[i] for i in range(1, top + 1))


def lr(lam, mu, nu):
    """Count ballot tableaux of shape lam/mu with content nu."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    total = 0
    for filling in all_ssyt(lam, mu, max(len(nu), 1)):
        if content_of(filling) == nu and is_ballot_word(reverse_reading(filling, lam)):
            total += 1
    return total


def skew_expansion(lam, mu, n):
    """Schur coefficients of s_{lam/mu}(x_1..x_n), keyed by partition tuple."""
    out = Counter()
    for filling in all_ssyt(lam, mu, n):
        if is_ballot_word(reverse_reading(filling, lam)):
            out[content_of(filling)] += 1
    return dict(out)


def monomials(lam, mu, n):
    """Exponent vectors of s_{lam/mu}(x_1..x_n) with multiplicities."""
    out = Counter()
    for filling in all_ssyt(lam, mu, n):
        c = Counter(filling.values())
        out[tuple(c[i] for i in range(1, n + 1))] += 1
    return dict(out)


def complement(p, a, b):
    p = pad(p, b)
    return tuple(x for x in (a - p[b - 1 - i] for i in range(b)) if x)


def shortness(p, a, b):
    """Walk the boundary one unit step at a time, south-west to north-east."""
    p = pad(p, b)
    steps = []
    x = 0
    for row in range(b - 1, -1, -1):
        steps += ["E"] * (p[row] - x)
        x = p[row]
        steps.append("N")
    steps += ["E"] * (a - x)
    runs, prev = [], None
    for s in steps:
        if s == prev:
            runs[-1] += 1
        else:
            runs.append(1)
        prev = s
    return min(runs)


def column_sizes(lam, mu):
    mu = pad(mu, len(lam))
    width = lam[0] if lam else 0
    return [sum(1 for r in range(len(lam)) if mu[r] <= c < lam[r]) for c in range(width)]
