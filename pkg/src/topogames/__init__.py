"""Exact checkers and game engines for diagonal Baire properties,
finite topologized groups, and Sorgenfrey-line witnesses."""

from .diagonal_relations import (
    Relation,
    delta_baire_witness,
    is_baire,
    is_delta_baire,
    is_delta_baire_bruteforce,
    minimal_semi_nbhd,
)
from .finite_topology import (
    FiniteSpace,
    chain,
    discrete,
    enumerate_spaces,
    indiscrete,
    partition_space,
    partition_spaces,
    product,
    sierpinski,
)
from .topo_groups import FiniteTopoGroup, classify, inverse_continuity_witness, theorem1_harness

__version__ = "0.1.0"
