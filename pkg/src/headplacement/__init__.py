"""Head placement under online memory cost, with brute-force checks.

Submodules:

``cost_core``
    cost functions, the total-cost landscape and its extremes
``mla_oracle``
    exhaustive linear arrangements of small trees
``permutation_space``
    S/V/O orders, the adjacent-swap ring, language counts
``stats``
    Spearman and Pearson correlation tests
``constituent_calculus``
    head-to-head lengths of S, V and O constituents
"""
from .cost_core import (
    Affine,
    CostFunction,
    Exponential,
    Identity,
    Landscape,
    Power,
    Table,
    check_quasiconvex,
    discrete_derivative,
    eval_cost,
    landscape,
    optimal_placements,
    parse_cost_spec,
    star_extremes_identity,
    total_cost,
    total_cost_identity,
    worst_placements,
)
from .exceptions import ConservationWarning, DatasetError, DomainError, ValidationError
from .permutation_space import WordOrder

__version__ = "0.1.0"
