"""Summary statistics of invariants over samples or plain lists."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from . import invariants as inv
from .models import Sample
from .monomials import MonomialIdeal, MonomialSet, minimalize


def as_ideal(obj) -> MonomialIdeal:
    """Ideal generated by a draw (sets are minimalized, ideals pass through)."""
    if isinstance(obj, MonomialIdeal):
        return obj
    if isinstance(obj, MonomialSet):
        return minimalize(obj)
    raise TypeError(f"cannot make a monomial ideal from {type(obj).__name__}")


def _on_ideal(fn):
    return lambda obj: fn(as_ideal(obj))


SELECTORS: dict[str, Callable[[Any], Any]] = {
    "krull-dim": _on_ideal(inv.krull_dim),
    "codim": _on_ideal(inv.codim),
    "degree": _on_ideal(inv.degree),
    "pdim": _on_ideal(inv.projective_dimension),
    "regularity": _on_ideal(inv.regularity),
    "betti-table": _on_ideal(inv.betti_table),
    "betti-shape": _on_ideal(inv.betti_shape),
    "num-mingens": _on_ideal(inv.num_mingens),
    "borel": _on_ideal(inv.is_borel_fixed),
    "cohen-macaulay": _on_ideal(inv.is_cohen_macaulay),
}


def render_value(v) -> str:
    """Canonical histogram key for an invariant value."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (frozenset, set)):
        return "{" + ", ".join(str(x) for x in sorted(v)) + "}"
    return str(v)


def _sort_key(v):
    if isinstance(v, bool):
        return (0, int(v), "")
    if isinstance(v, (int, Fraction)):
        return (1, v, "")
    return (2, 0, render_value(v))


def _is_number(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


@dataclass(frozen=True)
class StatsSummary:
    """Histogram over canonical value keys, plus mean/std_dev for numeric values.

    ``std_dev`` is the population standard deviation (divide by N).
    ``proportion`` is set for boolean-valued invariants (fraction of ``True``).
    """

    sample_size: int
    histogram: dict[str, int]
    mean: Fraction | None = None
    std_dev: float | None = None
    variance: Fraction | None = None
    proportion: Fraction | None = None
    show_tally: bool = field(default=True, compare=False)

    def render(self) -> str:
        lines = []
        if self.mean is not None:
            lines.append(f"Mean: {self.mean} (~{float(self.mean):.6f})")
            lines.append(f"StdDev: {self.std_dev:.6f}")
        if self.proportion is not None:
            lines.append(f"Proportion true: {self.proportion} (~{float(self.proportion):.6f})")
        if self.show_tally:
            lines.append("Histogram:")
            lines.extend(f"  {k} => {c}" for k, c in self.histogram.items())
        return "\n".join(lines)


def _elements(data) -> list:
    items = list(data.data) if isinstance(data, Sample) else list(data)
    if not items:
        raise ValueError("statistics of an empty collection are undefined")
    return items


def _evaluate(items: list, f: Callable) -> list:
    values = []
    for k, x in enumerate(items):
        try:
            values.append(f(x))
        except Exception as exc:
            raise ValueError(f"invariant failed on element {k}: {exc}") from exc
    return values


def summarize(values: Iterable, show_tally: bool = True) -> StatsSummary:
    """Tally already-computed values."""
    values = list(values)
    if not values:
        raise ValueError("statistics of an empty collection are undefined")
    N = len(values)
    counts: dict[str, int] = {}
    representative: dict[str, Any] = {}
    for v in values:
        key = render_value(v)
        counts[key] = counts.get(key, 0) + 1
        representative.setdefault(key, v)
    order = sorted(counts, key=lambda k: _sort_key(representative[k]))
    histogram = {k: counts[k] for k in order}

    mean = std = var = prop = None
    if all(_is_number(v) for v in values):
        mean = Fraction(sum(Fraction(v) for v in values), N)
        var = sum((Fraction(v) - mean) ** 2 for v in values) / N
        std = math.sqrt(var)
    elif all(isinstance(v, bool) for v in values):
        prop = Fraction(sum(values), N)
    return StatsSummary(N, histogram, mean, std, var, prop, show_tally)


def from_tally(tally: dict, show_tally: bool = True) -> StatsSummary:
    """Summary of a histogram given as ``{value: count}``."""
    values = [v for v, c in tally.items() for _ in range(c)]
    return summarize(values, show_tally)


def statistics(data, f: str | Callable[[Any], Any], show_tally: bool = True) -> StatsSummary:
    """Apply ``f`` (a selector name or any callable) to every element and summarize."""
    if isinstance(f, str):
        try:
            f = SELECTORS[f]
        except KeyError:
            raise ValueError(f"unknown invariant {f!r}; choose from {', '.join(SELECTORS)}") from None
    return summarize(_evaluate(_elements(data), f), show_tally)


def dim_stats(data, show_tally: bool = False) -> StatsSummary:
    return statistics(data, "krull-dim", show_tally)


def degree_stats(data, show_tally: bool = False) -> StatsSummary:
    return statistics(data, "degree", show_tally)


def pdim_stats(data, show_tally: bool = False) -> StatsSummary:
    return statistics(data, "pdim", show_tally)


def reg_stats(data, show_tally: bool = False) -> StatsSummary:
    return statistics(data, "regularity", show_tally)


@dataclass(frozen=True)
class ProportionReport:
    proportion: Fraction
    count: int
    total: int
    zero_ideals: int

    def render(self, verbose: bool = False) -> str:
        out = f"Proportion: {self.proportion} (~{float(self.proportion):.6f})"
        if verbose:
            out = (
                f"{self.count} out of {self.total} ideals in the given sample satisfy the property.\n"
                f"There are {self.total} ideals in this sample. Of those, {self.zero_ideals} are the zero ideal.\n"
                f"They are included in the reported count.\n" + out
            )
        return out


def proportion_stats(data, prop: str) -> ProportionReport:
    """Exact fraction of elements that are Borel-fixed (``borel``) or Cohen-Macaulay."""
    if prop not in ("borel", "cohen-macaulay"):
        raise ValueError(f"unknown property {prop!r}; expected 'borel' or 'cohen-macaulay'")
    items = _elements(data)
    flags = _evaluate(items, SELECTORS[prop])
    zeros = sum(1 for x in items if as_ideal(x).is_zero())
    count = sum(flags)
    return ProportionReport(Fraction(count, len(items)), count, len(items), zeros)


def borel_stats(data) -> ProportionReport:
    return proportion_stats(data, "borel")


def cm_stats(data) -> ProportionReport:
    return proportion_stats(data, "cohen-macaulay")


def mean_betti(data) -> tuple[dict[tuple[int, int], Fraction], dict[tuple[int, int], Fraction]]:
    """Entrywise mean Betti table and entrywise nonzero frequency (mean shape)."""
    tables = _evaluate(_elements(data), SELECTORS["betti-table"])
    N = len(tables)
    sums: dict[tuple[int, int], int] = {}
    hits: dict[tuple[int, int], int] = {}
    for t in tables:
        for key, rank in t.entries:
            sums[key] = sums.get(key, 0) + rank
            hits[key] = hits.get(key, 0) + 1
    keys = sorted(sums)
    return (
        {k: Fraction(sums[k], N) for k in keys},
        {k: Fraction(hits[k], N) for k in keys},
    )


def render_mean_betti(mean_table: dict, mean_shape: dict) -> str:
    lines = ["Mean Betti table (i j mean nonzero-frequency):"]
    for (i, j), v in mean_table.items():
        lines.append(f"  {i} {j} {v} {mean_shape[(i, j)]}")
    return "\n".join(lines)
