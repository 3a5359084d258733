"""Algebraic invariants of S/I for a monomial ideal I in S = k[x1..xn].

All computations are exact and characteristic-free except Betti numbers,
which are taken over Q.  Zero-ideal conventions: dim n, degree 1, pd 0,
reg 0, Cohen-Macaulay and Borel-fixed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import SimplicialComplexRanks, reduced_homology
from .monomials import Monomial, MonomialIdeal, contains, lcm, support

R_MAX = 22


class ResolutionTooLarge(ValueError):
    def __init__(self, r: int, r_max: int = R_MAX):
        super().__init__(
            f"resolution too large: ideal has {r} minimal generators, limit is r_max={r_max}"
        )
        self.r = r
        self.r_max = r_max


# Krull dimension ---------------------------------------------------------

def _has_cover(edges: list[frozenset[int]], k: int) -> bool:
    if not edges:
        return True
    if k == 0:
        return False
    # branch on the vertices of a smallest uncovered edge
    e = min(edges, key=len)
    for v in sorted(e):
        if _has_cover([f for f in edges if v not in f], k - 1):
            return True
    return False


def min_vertex_cover(edges, n: int) -> int:
    """Size of a smallest vertex set meeting every edge (edges nonempty)."""
    edges = sorted({frozenset(e) for e in edges}, key=len)
    minimal: list[frozenset[int]] = []
    for e in edges:
        if not any(f <= e for f in minimal):
            minimal.append(e)
    for k in range(n + 1):
        if _has_cover(minimal, k):
            return k
    raise ValueError("edge with no vertices cannot be covered")


def codim(ideal: MonomialIdeal, n: int | None = None) -> int:
    n = ideal.n if n is None else n
    if ideal.is_zero():
        return 0
    return min_vertex_cover([support(g) for g in ideal.gens], n)


def krull_dim(ideal: MonomialIdeal, n: int | None = None) -> int:
    n = ideal.n if n is None else n
    return n - codim(ideal, n)


# Hilbert series ----------------------------------------------------------

def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _minimal(gens) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for m in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(all(x <= y for x, y in zip(g, m)) for g in kept):
            kept.append(m)
    return tuple(kept)


def _numerator(gens: tuple[Monomial, ...], memo: dict) -> list[int]:
    if gens in memo:
        return memo[gens]
    if any(sum(g) == 0 for g in gens):
        return [0]
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    if not mixed:
        poly = [1]
        for g in gens:
            a = sum(g)
            factor = [0] * (a + 1)
            factor[0], factor[a] = 1, -1
            poly = _poly_mul(poly, factor)
        memo[gens] = poly
        return poly
    n = len(gens[0])
    counts = [sum(1 for g in mixed if g[i]) for i in range(n)]
    i = max(range(n), key=lambda v: (counts[v], -v))
    e = min(g[i] for g in gens if g[i])
    pivot = tuple(e if v == i else 0 for v in range(n))
    added = _minimal(gens + (pivot,))
    quotient = _minimal(tuple(g[:i] + (max(g[i] - e, 0),) + g[i + 1:] for g in gens))
    shifted = [0] * e + _numerator(quotient, memo)
    poly = _trim(_poly_add(_numerator(added, memo), shifted))
    memo[gens] = poly
    return poly


def hilbert_numerator(ideal: MonomialIdeal, n: int | None = None) -> list[int]:
    """Coefficients of K(t), where the Hilbert series of S/I is K(t)/(1-t)^n."""
    if ideal.is_zero():
        return [1]
    return list(_numerator(ideal.gens, {}))


def _divide_one_minus_t(p: list[int]) -> list[int]:
    q, acc = [], 0
    for c in p:
        acc += c
        q.append(acc)
    if q[-1] != 0:
        raise ArithmeticError("polynomial is not divisible by (1 - t)")
    return _trim(q[:-1]) if len(q) > 1 else [0]


def degree(ideal: MonomialIdeal, n: int | None = None) -> int:
    """Multiplicity of S/I: K(t) = (1-t)^codim Q(t), returns Q(1)."""
    q = hilbert_numerator(ideal, n)
    for _ in range(codim(ideal, n)):
        q = _divide_one_minus_t(q)
    return sum(q)


# Betti numbers -----------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of S/I as sorted ``((i, j), rank)`` pairs."""

    entries: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, d: dict) -> "BettiTable":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.as_dict().get(key, 0)

    def shape(self) -> frozenset[tuple[int, int]]:
        return frozenset(k for k, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries if a == i)

    def projective_dimension(self) -> int:
        return max(i for (i, _), _ in self.entries)

    def regularity(self) -> int:
        return max(j - i for (i, j), _ in self.entries)

    def render(self) -> str:
        return "\n".join(f"{i} {j} {r}" for (i, j), r in self.entries)

    def __str__(self) -> str:
        return "; ".join(f"{i} {j} {r}" for (i, j), r in self.entries)


def lcm_lattice(gens) -> set[Monomial]:
    """All lcms of nonempty subsets of ``gens``."""
    gens = list(gens)
    lattice = set(gens)
    frontier = list(gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                m = lcm(a, g)
                if m not in lattice:
                    new.add(m)
        lattice |= new
        frontier = list(new)
    return lattice


def upper_koszul_complex(ideal: MonomialIdeal, b: Monomial) -> SimplicialComplexRanks:
    """Complex of squarefree tau <= b (over supp b) with x^(b - tau) in I, with homology."""
    vars_ = sorted(support(b))
    faces = []
    for mask in range(1 << len(vars_)):
        m = list(b)
        for k, v in enumerate(vars_):
            if mask >> k & 1:
                m[v] -= 1
        if contains(ideal, tuple(m)):
            faces.append(mask)
    return reduced_homology(len(vars_), faces)


def multigraded_betti(ideal: MonomialIdeal) -> dict[Monomial, tuple[int, ...]]:
    """Map lcm-lattice multidegree b to (beta_{0,b}(I), beta_{1,b}(I), ...), nonzero only."""
    r = len(ideal.gens)
    if r > R_MAX:
        raise ResolutionTooLarge(r)
    out = {}
    for b in lcm_lattice(ideal.gens):
        h = upper_koszul_complex(ideal, b).homology
        if any(h):
            out[b] = h
    return out


def betti_table(ideal: MonomialIdeal, n: int | None = None) -> BettiTable:
    table = {(0, 0): 1}
    for b, h in multigraded_betti(ideal).items():
        j = sum(b)
        for i, rank in enumerate(h):
            if rank:
                table[(i + 1, j)] = table.get((i + 1, j), 0) + rank
    return BettiTable.from_dict(table)


def betti_shape(ideal: MonomialIdeal, n: int | None = None) -> frozenset[tuple[int, int]]:
    return betti_table(ideal, n).shape()


def projective_dimension(ideal: MonomialIdeal, n: int | None = None) -> int:
    return betti_table(ideal, n).projective_dimension()


def regularity(ideal: MonomialIdeal, n: int | None = None) -> int:
    return betti_table(ideal, n).regularity()


# Properties --------------------------------------------------------------

def is_borel_fixed(ideal: MonomialIdeal, n: int | None = None) -> bool:
    """Strong stability: x_i * g / x_j stays in I for every generator g, x_j | g, i < j."""
    for g in ideal.gens:
        for j in support(g):
            for i in range(j):
                m = list(g)
                m[j] -= 1
                m[i] += 1
                if not contains(ideal, tuple(m)):
                    return False
    return True


def is_cohen_macaulay(ideal: MonomialIdeal, n: int | None = None) -> bool:
    return projective_dimension(ideal, n) == codim(ideal, n)


def num_mingens(ideal: MonomialIdeal, n: int | None = None) -> int:
    return len(ideal.gens)
