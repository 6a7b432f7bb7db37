"""Zero forcing and connected zero forcing."""

from ._core import (
    ColoringTrace,
    Graph,
    GraphError,
    ParseError,
    PreconditionError,
    ZeroForcingError,
    block_decomposition,
    block_graph_zc,
    cactus_zc,
    check_axioms,
    classify_family,
    connected_forcing_number,
    czf_reduction,
    derive,
    derived_set,
    equality_report,
    generate,
    greedy_zc,
    is_connected_forcing_set,
    is_connected_set,
    is_forcing_set,
    solve_connected_forcing,
    spread,
    spread_fixture,
    structural_sets,
    tree_zc,
    unicyclic_zc,
    validate_corpus,
    verify_reduction,
    zero_forcing_number,
)

__all__ = [name for name in dir() if not name.startswith("_")]
