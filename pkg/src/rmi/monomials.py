"""Exponent-vector monomials, monomial sets and minimal generating sets.

A monomial in ``n`` variables is a plain tuple of ``n`` nonnegative ints.
Canonical order everywhere is ``(total degree, exponent tuple)`` ascending.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Monomial = tuple[int, ...]


class ParseError(ValueError):
    """Malformed monomial text; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def degree(m: Monomial) -> int:
    return sum(m)


def _check_lengths(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise ValueError(f"monomials in different numbers of variables: {len(a)} vs {len(b)}")


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b`` (componentwise <=)."""
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e > 0)


def canonical_key(m: Monomial) -> tuple[int, Monomial]:
    return (sum(m), m)


@lru_cache(maxsize=None)
def _compositions(n: int, d: int) -> tuple[Monomial, ...]:
    # exponent tuples of total degree d, ascending lexicographic
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d + 1):
        for rest in _compositions(n - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_monomials(n: int, d: int) -> tuple[Monomial, ...]:
    """All C(n+d-1, d) monomials of total degree exactly ``d`` in lex order."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    return _compositions(n, d)


@lru_cache(maxsize=None)
def monomials_up_to(n: int, D: int) -> tuple[Monomial, ...]:
    """Monomials of degree 1..D in canonical order (the sampling universe)."""
    out: list[Monomial] = []
    for d in range(1, D + 1):
        out.extend(enumerate_monomials(n, d))
    return tuple(out)


@dataclass(frozen=True)
class MonomialSet:
    """Ordered collection of distinct monomials in ``n`` variables."""

    n: int
    monomials: tuple[Monomial, ...] = ()

    def __post_init__(self):
        mons = tuple(tuple(int(e) for e in m) for m in self.monomials)
        for m in mons:
            if len(m) != self.n or any(e < 0 for e in m):
                raise ValueError(f"{m} is not a monomial in {self.n} variables")
        if len(set(mons)) != len(mons):
            raise ValueError("duplicate monomials in MonomialSet")
        object.__setattr__(self, "monomials", mons)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal held by its minimal generators in canonical order.

    Constructing directly requires ``gens`` to already be an antichain; use
    :func:`minimalize` or :meth:`from_generators` for arbitrary input.
    An empty ``gens`` is the zero ideal.
    """

    n: int
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        gens = tuple(sorted({tuple(int(e) for e in g) for g in self.gens}, key=canonical_key))
        for g in gens:
            if len(g) != self.n or any(e < 0 for e in g):
                raise ValueError(f"{g} is not a monomial in {self.n} variables")
            if sum(g) == 0:
                raise ValueError("the unit ideal is not a supported monomial ideal")
        for a, b in combinations(gens, 2):
            if divides(a, b) or divides(b, a):
                raise ValueError(f"generators {a} and {b} are not an antichain")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        return minimalize(MonomialSet(n, tuple(set(map(tuple, gens)))))

    def is_zero(self) -> bool:
        return not self.gens

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, m) -> bool:
        return contains(self, m)


def _minimal_elements(mons: Iterable[Monomial]) -> list[Monomial]:
    kept: list[Monomial] = []
    for m in sorted(set(mons), key=canonical_key):
        # a proper divisor has strictly smaller degree, so it is already in kept
        if not any(all(x <= y for x, y in zip(g, m)) for g in kept):
            kept.append(m)
    return kept


def minimalize(s: MonomialSet | Sequence[Monomial], n: int | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``s``."""
    if isinstance(s, MonomialSet):
        n, mons = s.n, s.monomials
    else:
        mons = tuple(tuple(m) for m in s)
        if n is None:
            if not mons:
                raise ValueError("cannot infer n from an empty sequence")
            n = len(mons[0])
    if any(sum(m) == 0 for m in mons):
        raise ValueError("set contains the unit monomial; the unit ideal is not supported")
    return MonomialIdeal(n, tuple(_minimal_elements(mons)))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Ideal membership: ``m`` is divisible by some minimal generator."""
    if len(m) != ideal.n:
        raise ValueError(f"monomial {m} is not in {ideal.n} variables")
    return any(all(x <= y for x, y in zip(g, m)) for g in ideal.gens)


# text form ---------------------------------------------------------------

def render_monomial(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "1"


def render(obj: Monomial | MonomialSet | MonomialIdeal) -> str:
    """Text form: ``x1^2*x2`` for monomials, comma-separated list (or ``0``) for sets and ideals."""
    if isinstance(obj, MonomialIdeal):
        mons = obj.gens
    elif isinstance(obj, MonomialSet):
        mons = obj.monomials
    else:
        return render_monomial(obj)
    return ",".join(render_monomial(m) for m in mons) if mons else "0"


_FACTOR = re.compile(r"x([0-9]+)(?:\^([0-9]+))?")


def _parse_monomial_at(text: str, start: int, end: int, n: int) -> Monomial:
    exps = [0] * n
    pos = start
    last = 0
    if start == end:
        raise ParseError("empty monomial", text, start)
    if text[start:end] == "1":
        return tuple(exps)
    while True:
        mt = _FACTOR.match(text, pos, end)
        if mt is None:
            raise ParseError("expected factor x<k> or x<k>^<e>", text, pos)
        k = int(mt.group(1))
        if not 1 <= k <= n:
            raise ParseError(f"variable index {k} outside 1..{n}", text, pos)
        if k <= last:
            raise ParseError("variables must appear in increasing index order", text, pos)
        e = int(mt.group(2)) if mt.group(2) is not None else 1
        if e < 1 or (mt.group(2) is not None and e == 1):
            raise ParseError("exponent must be >= 2 when written", text, mt.start(2))
        exps[k - 1] = e
        last = k
        pos = mt.end()
        if pos == end:
            return tuple(exps)
        if text[pos] != "*":
            raise ParseError("expected '*'", text, pos)
        pos += 1


def parse_monomial(text: str, n: int) -> Monomial:
    return _parse_monomial_at(text, 0, len(text), n)


def parse_monomials(text: str, n: int) -> tuple[Monomial, ...]:
    """Parse a comma-separated generator list; ``0`` is the empty list."""
    if text == "0":
        return ()
    out = []
    start = 0
    while True:
        comma = text.find(",", start)
        end = len(text) if comma < 0 else comma
        out.append(_parse_monomial_at(text, start, end, n))
        if comma < 0:
            return tuple(out)
        start = comma + 1


def parse_set(text: str, n: int) -> MonomialSet:
    mons = parse_monomials(text, n)
    if len(set(mons)) != len(mons):
        raise ParseError("duplicate monomial", text, 0)
    return MonomialSet(n, mons)


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    """Parse a rendered ideal; the generators must already form an antichain."""
    return MonomialIdeal(n, parse_monomials(text, n))
