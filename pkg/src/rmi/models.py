"""Erdos-Renyi-type random monomial models and seeded sampling.

Reproducibility contract
------------------------
Every draw owns an independent PCG64 stream.  Draw ``k`` of a sample with
master seed ``s`` uses the 64-bit seed::

    mix(s, k) = SeedSequence(entropy=s, spawn_key=(k,)).generate_state(1, uint64)[0]

and the generator ``numpy.random.Generator(PCG64(mix(s, k)))``.  Variates are
consumed in a fixed order:

* ``er_draw``: one ``random()`` per monomial of degree 1..D, canonical order,
  drawn as a single vector; a monomial is kept iff its variate is ``< p_d``.
* ``fixed_count_draw``: a partial Fisher-Yates shuffle of the universe indices,
  step ``i`` swapping position ``i`` with ``integers(i, T)``; for per-degree
  counts the degrees are processed 1..D, each over its own universe.
* ``minimal_draw``: for d = 1..D, one ``random()`` per degree-d monomial not
  already in the ideal of earlier picks, canonical order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence, Union

import numpy as np

from .monomials import (
    MonomialIdeal,
    MonomialSet,
    canonical_key,
    contains,
    enumerate_monomials,
    minimalize,
    monomials_up_to,
)

MAX_N_TIMES_D = 10_000
ER_NAME = "Erdos-Renyi"

Draw = Union[MonomialSet, MonomialIdeal]


class Strategy(enum.Enum):
    PLAIN = "plain"
    MINIMAL = "minimal"


class Output(enum.Enum):
    SETS = "sets"
    IDEALS = "ideals"


def _as_tuple(v):
    if isinstance(v, (list, tuple)):
        return tuple(v)
    return v


@dataclass(frozen=True)
class ModelParams:
    """Parameters of a built-in model.

    Exactly one of ``p`` (probability, scalar or per-degree tuple) and ``M``
    (count, scalar or per-degree tuple) is set.
    """

    n: int
    D: int
    p: float | tuple[float, ...] | None = None
    M: int | tuple[int, ...] | None = None
    strategy: Strategy = Strategy.PLAIN
    output: Output = Output.SETS

    def __post_init__(self):
        object.__setattr__(self, "p", _as_tuple(self.p))
        object.__setattr__(self, "M", _as_tuple(self.M))
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        object.__setattr__(self, "output", Output(self.output))
        n, D = self.n, self.D
        if not (isinstance(n, int) and n >= 1 and isinstance(D, int) and D >= 1):
            raise ValueError(f"need integers n >= 1 and D >= 1, got n={n!r}, D={D!r}")
        if n * D > MAX_N_TIMES_D:
            raise ValueError(f"n*D = {n * D} exceeds the supported bound {MAX_N_TIMES_D}")
        if (self.p is None) == (self.M is None):
            raise ValueError("give exactly one of a probability spec p or a count spec M")
        if self.p is not None:
            vals = self.p if isinstance(self.p, tuple) else (self.p,)
            if isinstance(self.p, tuple) and len(vals) != D:
                raise ValueError(f"probability list has length {len(vals)}, expected D={D}")
            for v in vals:
                if isinstance(v, bool) or not isinstance(v, (int, float, Fraction)):
                    raise ValueError(f"probability {v!r} is not a number")
                if not 0 <= v <= 1:
                    raise ValueError(f"probability {v!r} outside [0, 1]")
        else:
            vals = self.M if isinstance(self.M, tuple) else (self.M,)
            if isinstance(self.M, tuple) and len(vals) != D:
                raise ValueError(f"count list has length {len(vals)}, expected D={D}")
            for v in vals:
                if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                    raise ValueError(f"count {v!r} is not a nonnegative integer")
            if self.strategy is Strategy.MINIMAL:
                raise ValueError("the Minimal strategy is only defined for probability specs")

    @property
    def spec_kind(self) -> str:
        return "p" if self.p is not None else "M"

    def degree_probabilities(self) -> tuple[float, ...]:
        """Scalar p expanded to (p, ..., p)."""
        if self.p is None:
            raise ValueError("model has a count spec, not a probability spec")
        if isinstance(self.p, tuple):
            return tuple(float(v) for v in self.p)
        return (float(self.p),) * self.D

    def __str__(self) -> str:
        spec = self.p if self.p is not None else self.M
        if isinstance(spec, tuple):
            spec_txt = "{" + ", ".join(str(v) for v in spec) + "}"
        else:
            spec_txt = str(spec)
        s = f"(n={self.n}, D={self.D}, {self.spec_kind}={spec_txt}"
        if self.strategy is Strategy.MINIMAL:
            s += ", Strategy=Minimal"
        return s + ")"


def mix(seed: int, index: int) -> int:
    """Per-draw seed derived from the master seed and the draw index."""
    if not 0 <= int(seed) < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    ss =np.random.SeedSequence(entropy=int(seed), spawn_key=(int(index),))
    return int(ss.generate_state(1, np.uint64)[0])


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed)))


def _probability_vector(params: ModelParams) -> np.ndarray:
    probs = params.degree_probabilities()
    per_mon = []
    for d in range(1, params.D + 1):
        per_mon.extend([probs[d - 1]] * len(enumerate_monomials(params.n, d)))
    return np.asarray(per_mon, dtype=float)


def er_draw(params: ModelParams, seed: int) -> MonomialSet:
    """Include each monomial of degree d <= D independently with probability p_d."""
    universe = monomials_up_to(params.n, params.D)
    u = rng_for(seed).random(len(universe))
    keep = np.flatnonzero(u < _probability_vector(params))
    return MonomialSet(params.n, tuple(universe[i] for i in keep))


def _partial_shuffle(rng: np.random.Generator, total: int, k: int) -> list[int]:
    idx = list(range(total))
    for i in range(k):
        j = int(rng.integers(i, total))
        idx[i], idx[j] = idx[j], idx[i]
    return idx[:k]


def fixed_count_draw(params: ModelParams, seed: int) -> MonomialSet:
    """Uniform sample without replacement of min(M, T) monomials (or per degree)."""
    rng = rng_for(seed)
    n, D, M = params.n, params.D, params.M
    if M is None:
        raise ValueError("fixed-count draw needs a count spec M")
    picked = []
    if isinstance(M, tuple):
        for d in range(1, D + 1):
            layer = enumerate_monomials(n, d)
            picked.extend(layer[i] for i in _partial_shuffle(rng, len(layer), min(M[d - 1], len(layer))))
    else:
        universe = monomials_up_to(n, D)
        picked.extend(universe[i] for i in _partial_shuffle(rng, len(universe), min(M, len(universe))))
    return MonomialSet(n, tuple(sorted(picked, key=canonical_key)))


def minimal_draw(params: ModelParams, seed: int) -> MonomialIdeal:
    """Degree-by-degree draw that only flips coins for monomials outside the current ideal."""
    if params.p is None:
        raise ValueError("the Minimal strategy is only defined for probability specs")
    rng = rng_for(seed)
    probs = params.degree_probabilities()
    n = params.n
    gens: list = []
    for d in range(1, params.D + 1):
        current = MonomialIdeal(n, tuple(gens))
        candidates = [m for m in enumerate_monomials(n, d) if not contains(current, m)]
        if not candidates:
            continue
        u = rng.random(len(candidates))
        gens.extend(m for m, x in zip(candidates, u) if x < probs[d - 1])
    return MonomialIdeal(n, tuple(gens))


def draw_set(params: ModelParams, seed: int) -> MonomialSet:
    if params.strategy is Strategy.MINIMAL:
        return MonomialSet(params.n, minimal_draw(params, seed).gens)
    if params.p is not None:
        return er_draw(params, seed)
    return fixed_count_draw(params, seed)


def draw_ideal(params: ModelParams, seed: int) -> MonomialIdeal:
    if params.strategy is Strategy.MINIMAL:
        return minimal_draw(params, seed)
    return minimalize(draw_set(params, seed))


def _check_N(N: int) -> None:
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise ValueError(f"sample size must be a positive integer, got {N!r}")


def random_monomial_sets(params: ModelParams, N: int, seed: int) -> list[MonomialSet]:
    _check_N(N)
    return [draw_set(params, mix(seed, k)) for k in range(N)]


def random_monomial_ideals(params: ModelParams, N: int, seed: int) -> list[MonomialIdeal]:
    _check_N(N)
    return [draw_ideal(params, mix(seed, k)) for k in range(N)]


@dataclass(frozen=True)
class Model:
    """A named, parameterized generator ``(parameters, seed) -> draw``."""

    name: str
    parameters: Any
    generate: Callable[[Any, int], Draw] = field(compare=False)
    builtin: bool = False


def _er_generate(params: ModelParams, seed: int) -> Draw:
    if params.output is Output.IDEALS:
        return draw_ideal(params, seed)
    return draw_set(params, seed)


def er_model(
    n: int,
    D: int,
    p: float | Sequence[float] | None = None,
    *,
    M: int | Sequence[int] | None = None,
    strategy: Strategy | str = Strategy.PLAIN,
    output: Output | str = Output.SETS,
) -> Model:
    params = ModelParams(n, D, p=p, M=M, strategy=strategy, output=output)
    return Model(ER_NAME, params, _er_generate, builtin=True)


def model_from_params(params: ModelParams) -> Model:
    return Model(ER_NAME, params, _er_generate, builtin=True)


def custom_model(parameters: Any, generate: Callable[[Any, int], Draw], name: str) -> Model:
    """Wrap a user generator; it must be a pure function of (parameters, seed)."""
    return Model(name, parameters, generate)


@dataclass(frozen=True)
class Sample:
    model_name: str
    parameters: Any
    sample_size: int
    seed: int
    data: tuple[Draw, ...]

    def __post_init__(self):
        object.__setattr__(self, "data", tuple(self.data))
        if len(self.data) != self.sample_size:
            raise ValueError(f"sample holds {len(self.data)} draws but sample_size={self.sample_size}")

    @property
    def size(self) -> int:
        return self.sample_size


class DrawError(RuntimeError):
    def __init__(self, index: int, cause: BaseException):
        super().__init__(f"generator failed on draw {index}: {cause}")
        self.index = index


def sample(model: Model, N: int, seed: int) -> Sample:
    _check_N(N)
    data = []
    for k in range(N):
        try:
            d = model.generate(model.parameters, mix(seed, k))
        except Exception as exc:
            raise DrawError(k, exc) from exc
        if not isinstance(d, (MonomialSet, MonomialIdeal)):
            raise DrawError(k, TypeError(f"generator returned {type(d).__name__}"))
        data.append(d)
    return Sample(model.name, model.parameters, N, int(seed), tuple(data))


def get_data(s: Sample) -> list[Draw]:
    return list(s.data)
