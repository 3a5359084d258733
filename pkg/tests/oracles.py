"""Brute-force reference computations used to check the library.

Nothing here imports from ``rmi``: each oracle works from raw exponent tuples.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, product
from math import comb


def all_monomials(n, D):
    return [e for e in product(range(D + 1), repeat=n) if 1 <= sum(e) <= D]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mingens(mons):
    """Minimal elements under divisibility, by pairwise comparison."""
    mons = set(mons)
    return {m for m in mons if not any(o != m and _divides(o, m) for o in mons)}


def in_ideal(gens, m):
    return any(_divides(g, m) for g in gens)


def min_cover_by_subsets(gens, n):
    """Smallest variable subset meeting every generator support, by exhaustion."""
    supports = [{i for i, e in enumerate(g) if e} for g in gens]
    for k in range(n + 1):
        for S in combinations(range(n), k):
            if all(set(S) & s for s in supports):
                return k
    raise AssertionError("no cover found")


def krull_dim(gens, n):
    return n - min_cover_by_subsets(gens, n) if gens else n


def taylor_numerator(gens):
    """K(t) = sum over generator subsets S of (-1)^|S| t^deg(lcm S)."""
    gens = list(gens)
    coeffs = Counter({0: 1})
    for k in range(1, len(gens) + 1):
        for S in combinations(gens, k):
            d = sum(max(col) for col in zip(*S))
            coeffs[d] += (-1) ** k
    top = max((d for d, c in coeffs.items() if c), default=0)
    return [coeffs[d] for d in range(top + 1)]


def standard_monomial_counts(gens, n, up_to):
    """dim_k (S/I)_d for d = 0..up_to by counting monomials outside I."""
    counts = [0] * (up_to + 1)
    for e in product(range(up_to + 1), repeat=n):
        if sum(e) <= up_to and not in_ideal(gens, e):
            counts[sum(e)] += 1
    return counts


def series_from_numerator(K, n, up_to):
    """Coefficients of K(t)/(1-t)^n through degree up_to."""
    out = []
    for d in range(up_to + 1):
        out.append(sum(c * comb(d - i + n - 1, n - 1) for i, c in enumerate(K) if i <= d))
    return out


def eliahou_kervaire_totals(gens, n):
    """beta_i(I) = sum_g C(m(g) - 1, i) for strongly stable I, m(g) = largest variable index (1-based)."""
    totals = [0] * n
    for g in gens:
        top = max(i for i, e in enumerate(g) if e) + 1
        for i in range(n):
            totals[i] += comb(top - 1, i)
    return totals


def is_strongly_stable(gens):
    for g in gens:
        for j, e in enumerate(g):
            if not e:
                continue
            for i in range(j):
                m = list(g)
                m[j] -= 1
                m[i] += 1
                if not in_ideal(gens, m):
                    return False
    return True


def exact_er_distribution(n, D, p, statistic):
    """Exact law of statistic(mingens) under B(n, D, p), enumerating all subsets of the universe."""
    universe = all_monomials(n, D)
    p = Fraction(p)
    law = Counter()
    for bits in product((0, 1), repeat=len(universe)):
        chosen = [m for m, b in zip(universe, bits) if b]
        k = len(chosen)
        law[statistic(mingens(chosen))] += p**k * (1 - p) ** (len(universe) - k)
    return dict(law)


def exact_dim_distribution(n, D, p):
    """Exact law of the Krull dimension under I(n, D, p).

    The dimension only depends on which supports occur among the chosen
    monomials, so it is enough to enumerate presence patterns of the 2^n - 1
    support types, each absent with probability (1-p)^(#monomials with that support).
    """
    counts = Counter(frozenset(i for i, e in enumerate(m) if e) for m in all_monomials(n, D))
    types = list(counts)
    law = Counter()
    for bits in product((0, 1), repeat=len(types)):
        prob = 1.0
        present = []
        for b, t in zip(bits, types):
            absent = (1 - p) ** counts[t]
            prob *= (1 - absent) if b else absent
            if b:
                present.append(t)
        cover = next(
            k for k in range(n + 1)
            for S in combinations(range(n), k) if all(set(S) & t for t in present)
        )
        law[n - cover] += prob
    return dict(law)
