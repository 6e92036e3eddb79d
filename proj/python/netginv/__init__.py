"""Group inverses, effective resistances and Kirchhoff indices of networks."""

from ._core import (
    Network,
    NetginvError,
    block_inverse,
    block_inverse_sym,
    composite_group_inverse,
    composite_schrodinger_group_inverse,
    composite_schrodinger_inverse,
    connect_networks,
    effective_resistance,
    format_network,
    group_inverse_block,
    group_inverse_bordered,
    group_inverse_deflation,
    group_inverse_spectral,
    kirchhoff_index,
    laplacian,
    pairwise_resistance,
    parse_connection,
    parse_network,
    potential,
    schrodinger_matrix,
    schur_complement,
    single_edge_group_inverse,
    validate,
    verify_group_inverse,
)

__all__ = [name for name in dir() if not name.startswith("_")]
