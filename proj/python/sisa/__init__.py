"""Set-centric graph mining with simulated in-memory set operations."""

from ._sisa import (
    Graph,
    MiningResult,
    UsageError,
    bfs,
    cost_pum,
    cost_random,
    cost_streaming,
    csv_header,
    csv_row,
    decode,
    degeneracy,
    encode,
    jarvis_patrick,
    k_clique_count,
    maximal_cliques,
    mnemonic,
    oracle,
    prepare,
    run,
    similarity,
    subgraph_isomorphism,
    triangle_count,
)

__all__ = [
    "Graph",
    "MiningResult",
    "UsageError",
    "bfs",
    "cost_pum",
    "cost_random",
    "cost_streaming",
    "csv_header",
    "csv_row",
    "decode",
    "degeneracy",
    "encode",
    "jarvis_patrick",
    "k_clique_count",
    "maximal_cliques",
    "mnemonic",
    "oracle",
    "prepare",
    "run",
    "similarity",
    "subgraph_isomorphism",
    "triangle_count",
]
