"""Random monomial ideals: Erdos-Renyi-type models, algebraic invariants, sample statistics."""

from .invariants import (
    BettiTable,
    ResolutionTooLarge,
    betti_shape,
    betti_table,
    codim,
    degree,
    hilbert_numerator,
    is_borel_fixed,
    is_cohen_macaulay,
    krull_dim,
    projective_dimension,
    regularity,
)
from .models import (
    Model,
    ModelParams,
    Output,
    Sample,
    Strategy,
    custom_model,
    er_draw,
    er_model,
    fixed_count_draw,
    get_data,
    minimal_draw,
    random_monomial_ideals,
    random_monomial_sets,
    sample,
)
from .monomials import MonomialIdeal, MonomialSet, minimalize, parse_ideal, render
from .stats import (
    StatsSummary,
    cm_stats,
    borel_stats,
    degree_stats,
    dim_stats,
    mean_betti,
    pdim_stats,
    proportion_stats,
    reg_stats,
    statistics,
)
from .store import read_sample, write_sample

__version__ = "0.1.0"
